#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "concept_homology/builders.hpp"
#include "concept_homology/errors.hpp"
#include "concept_homology/filtration_io.hpp"
#include "concept_homology/homology.hpp"
#include "concept_homology/indicators.hpp"
#include "concept_homology/persistence.hpp"
#include "concept_homology/pipeline.hpp"
#include "concept_homology/render.hpp"
#include "concept_homology/report_json.hpp"

namespace concept_homology {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2 };

namespace cli_detail {

struct Options {
    std::string input;
    std::string metric = "euclidean";
    int max_dim = 2;
    std::string r_max = "AUTO";
    std::string at = "AUTO";
    bool normalize = false;
    std::string missing = "drop-row";
    std::string format = "auto";
    std::string json_path;
    std::string svg_path;
    double min_persistence = 0.0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::optional<double> parse_auto(const std::string& flag, const std::string& value)
{
    if (value == "AUTO" || value == "auto") return std::nullopt;
    auto v = detail::parse_real(value);
    if (!v) throw UsageError(flag + ": expected AUTO or a number, got '" + value + "'");
    return v;
}

inline void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << content;
    if (!out) throw IoError("failed writing '" + path + "'");
}

inline std::string vertex_label(VertexId v) { return "v" + std::to_string(v.index); }

inline std::string betti_line(double at, const BettiVector& b)
{
    std::string out = "betti at R=" + format_real(at) + ": (";
    for (std::size_t k = 0; k < b.betti.size(); ++k) out += (k ? ", " : "") + std::to_string(b.betti[k]);
    return out + ")\n";
}

inline void print_summary(const AnalysisReport& r, std::ostream& out)
{
    out << "unique points: " << r.unique_point_count << "\n";
    out << "component parameter: " << format_real(r.parameters.at) << "\n";
    out << "components: " << r.components.size() << "\n";
    for (std::size_t c = 0; c < r.components.size(); ++c) {
        const auto& comp = r.components[c];
        out << "component " << c << ": representative=" << comp.representative_label
            << " points=" << comp.member_points.size()
            << " homology_trivial=" << (comp.homology_trivial ? "yes" : "no")
            << " two_cycles=" << comp.two_cycles.size() << "\n";
        for (const auto& shape : comp.two_cycles) {
            out << "  " << shape.shape_name << ":";
            for (const auto& labels : shape.vertex_labels) out << " " << labels.front();
            out << " [" << format_real(shape.interval.birth) << ", " << format_real(shape.interval.death) << ")\n";
        }
    }
}

inline AnalysisConfig make_config(const Options& o)
{
    AnalysisConfig config;
    config.metric = parse_metric(o.metric);
    config.max_dim = o.max_dim;
    config.r_max = parse_auto("--r-max", o.r_max);
    config.at = parse_auto("--at", o.at);
    config.normalize = o.normalize;
    config.min_persistence = o.min_persistence;
    if (config.r_max && !(*config.r_max > 0.0)) throw UsageError("--r-max must be positive");
    if (config.at && !(*config.at >= 0.0)) throw UsageError("--at must be non-negative");
    return config;
}

inline int run_filtration(const std::string& command, const Options& o, const std::string& text,
                          std::ostream& out)
{
    const auto at_flag = parse_auto("--at", o.at);
    const auto complex = parse_filtration_csv(text);
    const auto barcode = compute_persistence(complex, o.max_dim);
    const double at = at_flag.value_or(stable_component_parameter(barcode));
    if (command == "persistence") {
        out << render_barcode_text(barcode);
        if (!o.svg_path.empty()) write_file(o.svg_path, render_barcode_svg(barcode));
    } else if (command == "betti") {
        out << betti_line(at, betti_numbers(complex.snapshot(at), o.max_dim));
    } else if (command == "components") {
        const auto comps = components_at(complex, at);
        out << "components at R=" << format_real(at) << ": " << comps.size() << "\n";
        for (std::size_t c = 0; c < comps.size(); ++c) {
            out << "component " << c << ":";
            for (auto v : comps[c]) out << " " << vertex_label(v);
            out << "\n";
        }
    } else {
        throw ParseError("'" + command + "' needs an indicator table, not a filtration file");
    }
    return kExitOk;
}

inline int run_indicators(const std::string& command, const Options& o, const std::string& text,
                          std::ostream& out)
{
    const auto config = make_config(o);
    const auto table = parse_indicator_csv(text, parse_missing_policy(o.missing));
    const auto analysis = analyze(table, config);
    const auto& report = analysis.report;
    if (command == "analyze") {
        const auto json = emit_report(report);
        if (o.json_path.empty()) {
            out << json;
        } else {
            write_file(o.json_path, json);
            print_summary(report, out);
        }
        if (!o.svg_path.empty()) write_file(o.svg_path, render_barcode_svg(analysis.barcode));
    } else if (command == "persistence") {
        out << render_barcode_text(analysis.barcode);
        if (!o.svg_path.empty()) write_file(o.svg_path, render_barcode_svg(analysis.barcode));
    } else if (command == "betti") {
        out << betti_line(report.parameters.at,
                          betti_numbers(analysis.complex.snapshot(report.parameters.at), config.max_dim));
    } else {
        out << "components at R=" << format_real(report.parameters.at) << ": " << report.components.size() << "\n";
        for (std::size_t c = 0; c < report.components.size(); ++c) {
            const auto& comp = report.components[c];
            out << "component " << c << ": representative=" << comp.representative_label << " members:";
            for (auto p : comp.member_points)
                for (const auto& label : report.groups[p]) out << " " << label;
            out << "\n";
        }
    }
    return kExitOk;
}

} // namespace cli_detail

/**
 * Entry point of the command-line tool. args excludes the program name.
 * Returns 0 on success, 1 on a usage error and 2 on a data error.
 */
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    using cli_detail::Options;
    Options o;
    CLI::App app{"Persistent homology of labeled indicator data", "concept-homology"};
    app.require_subcommand(1);

    auto add_common = [&o](CLI::App* sub) {
        sub->add_option("csv", o.input, "Indicator table or filtration file")->required();
        sub->add_option("--metric", o.metric, "Distance on indicator vectors")
            ->check(CLI::IsMember({"euclidean", "manhattan", "hamming"}));
        sub->add_option("--max-dim", o.max_dim, "Largest simplex dimension")->check(CLI::NonNegativeNumber);
        sub->add_option("--r-max", o.r_max, "Largest filtration parameter, or AUTO");
        sub->add_option("--at", o.at, "Parameter for components and Betti numbers, or AUTO");
        sub->add_flag("--normalize", o.normalize, "Min-max scale each indicator to [0, 1]");
        sub->add_option("--missing", o.missing, "Rows with empty cells")->check(CLI::IsMember({"drop-row", "fail"}));
        sub->add_option("--input", o.format, "Input format")->check(CLI::IsMember({"auto", "indicators", "filtration"}));
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Full pipeline: components, 2-cycles and barcode");
    add_common(analyze_cmd);
    analyze_cmd->add_option("--json", o.json_path, "Write the JSON report here instead of stdout");
    analyze_cmd->add_option("--svg", o.svg_path, "Write the barcode as SVG");
    analyze_cmd->add_option("--min-persistence", o.min_persistence, "Shortest finite 2-cycle bar to report");

    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of the snapshot complex");
    add_common(betti_cmd);

    auto* persistence_cmd = app.add_subcommand("persistence", "Barcode as text");
    add_common(persistence_cmd);
    persistence_cmd->add_option("--svg", o.svg_path, "Also write the barcode as SVG");

    auto* components_cmd = app.add_subcommand("components", "Connected components with representatives");
    add_common(components_cmd);

    std::vector<std::string> argv_storage{"concept-homology"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        cli_detail::make_config(o);
        const auto text = read_text_file(o.input);
        const bool filtration =
            o.format == "filtration" || (o.format == "auto" && looks_like_filtration_csv(text));
        return filtration ? cli_detail::run_filtration(command, o, text, out)
                          : cli_detail::run_indicators(command, o, text, out);
    } catch (const cli_detail::UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    }
}

} // namespace concept_homology
