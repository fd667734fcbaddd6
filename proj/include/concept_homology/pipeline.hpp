#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "concept_homology/builders.hpp"
#include "concept_homology/homology.hpp"
#include "concept_homology/indicators.hpp"
#include "concept_homology/logging.hpp"
#include "concept_homology/persistence.hpp"

namespace concept_homology {

struct AnalysisConfig {
    Metric metric = Metric::euclidean;
    std::optional<double> r_max;  // nullopt: largest pairwise distance
    int max_dim = 2;
    std::optional<double> at;     // nullopt: where the degree-0 barcode stabilizes
    bool normalize = false;
    double min_persistence = 0.0;
};

/// The configuration with every AUTO value resolved, as recorded in a report.
struct AnalysisParameters {
    std::string metric = "euclidean";
    double r_max = 0.0;
    bool r_max_auto = true;
    int max_dim = 2;
    double at = 0.0;
    bool at_auto = true;
    bool normalize = false;
    double min_persistence = 0.0;

    friend bool operator==(const AnalysisParameters&, const AnalysisParameters&) = default;
};

/// A 2-cycle described by its vertices and triangle count.
struct CycleShape {
    std::vector<VertexId> vertices;
    std::vector<std::vector<std::string>> vertex_labels;
    std::size_t triangle_count = 0;
    std::string shape_name;
    PersistenceInterval interval;

    friend bool operator==(const CycleShape&, const CycleShape&) = default;
};

struct ComponentReport {
    std::vector<std::size_t> member_points;
    std::string representative_label;
    bool homology_trivial = true;
    BettiVector betti;
    std::vector<CycleShape> two_cycles;

    friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

/// One visible bar as it appears in a report; a missing death means +inf.
struct Bar {
    int degree = 0;
    double birth = 0.0;
    std::optional<double> death;

    friend bool operator==(const Bar&, const Bar&) = default;
};

struct AnalysisReport {
    AnalysisParameters parameters;
    std::size_t unique_point_count = 0;
    std::vector<std::vector<std::string>> groups;
    std::vector<ComponentReport> components;
    std::vector<Bar> barcode;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Everything analyze() computes; the report is the serializable part.
struct Analysis {
    AnalysisReport report;
    DedupResult data;
    PointCloud points;
    FilteredComplex complex;
    Barcode barcode;
};

/// Smallest parameter at which only the infinite degree-0 bars remain alive.
inline double stable_component_parameter(const Barcode& barcode)
{
    double r = 0.0;
    for (const auto& iv : barcode.intervals)
        if (iv.degree == 0 && !iv.is_infinite()) r = std::max(r, iv.death);
    return r;
}

/**
 * Medoid label of a component: the member with the smallest total distance
 * to the other members, ties going to the lexicographically smaller label.
 * A point's label is the first label of its dedup group.
 */
inline std::string component_representative(std::span<const std::size_t> members,
                                             const std::vector<double>& distances, std::size_t n,
                                             const std::vector<std::vector<std::string>>& groups)
{
    if (members.empty()) throw ArgumentError("component is empty");
    std::optional<std::pair<double, std::string>> best;
    for (auto p : members) {
        double sum = 0.0;
        for (auto q : members) sum += distances[p * n + q];
        std::pair<double, std::string> candidate{sum, groups[p].front()};
        if (!best || candidate < *best) best = std::move(candidate);
    }
    return best->second;
}

/**
 * True when beta_1 .. beta_max_dim all vanish on the given connected complex.
 * This is a necessary condition for contractibility, not a decision of it.
 */
inline bool homology_trivial(const FilteredComplex& component, int max_dim)
{
    if (max_dim < 1) return true;
    const auto b = betti_numbers(component, max_dim);
    return std::all_of(b.betti.begin() + 1, b.betti.end(), [](std::size_t x) { return x == 0; });
}

/// Name for a closed triangulated surface with v vertices and t triangles.
inline std::string shape_name_for(std::size_t vertices, std::size_t triangles)
{
    if (vertices == 4 && triangles == 4) return "tetrahedron";
    if (vertices == 5 && triangles == 6) return "triangular bipyramid";
    if (vertices == 6 && triangles == 8) return "octahedron";
    return "irregular polyhedron with " + std::to_string(triangles) + " triangular faces";
}

/// Counts vertices and triangles of a 2-cycle and names it. Throws ArgumentError for anything but a nonzero 2-cycle.
inline CycleShape name_shape(const Chain& cycle)
{
    if (cycle.empty()) throw ArgumentError("cannot name an empty chain");
    for (const auto& s : cycle)
        if (s.dimension() != 2) throw ArgumentError("not a 2-chain: contains " + to_string(s));
    if (!is_cycle(cycle)) throw ArgumentError("chain has nonzero boundary");
    std::set<VertexId> vs;
    for (const auto& s : cycle) vs.insert(s.vertices.begin(), s.vertices.end());
    CycleShape shape;
    shape.vertices.assign(vs.begin(), vs.end());
    shape.triangle_count = cycle.size();
    shape.shape_name = shape_name_for(shape.vertices.size(), shape.triangle_count);
    shape.interval.degree = 2;
    shape.interval.representative = cycle;
    return shape;
}

/**
 * Runs dedup, the Rips filtration, persistence and the per-component report.
 *
 * Components are those of the snapshot at the component parameter. A
 * degree-2 bar is reported when it is alive at that parameter and either
 * infinite or longer than min_persistence; its cycle is restricted to the
 * component holding its birth triangle.
 */
inline Analysis analyze(const IndicatorTable& table, const AnalysisConfig& config)
{
    if (config.max_dim < 0) throw ArgumentError("max_dim must be non-negative");
    if (config.r_max && !(*config.r_max > 0.0)) throw ArgumentError("r_max must be positive");
    if (config.at && !(*config.at >= 0.0)) throw ArgumentError("component parameter must be non-negative");

    Analysis out;
    auto& report = out.report;
    report.parameters.metric = metric_name(config.metric);
    report.parameters.max_dim = config.max_dim;
    report.parameters.normalize = config.normalize;
    report.parameters.min_persistence = config.min_persistence;
    report.parameters.r_max_auto = !config.r_max.has_value();
    report.parameters.at_auto = !config.at.has_value();

    out.data = dedup(table);
    report.unique_point_count = out.data.unique_points.size();
    report.groups = out.data.groups;
    logger().info("{} rows collapse to {} unique points", table.rows(), report.unique_point_count);
    if (out.data.unique_points.empty()) {
        report.parameters.r_max = config.r_max.value_or(0.0);
        report.parameters.at = config.at.value_or(0.0);
        return out;
    }

    out.points = config.normalize ? min_max_normalize(out.data.unique_points) : out.data.unique_points;
    const std::size_t n = out.points.size();
    const auto distances = pairwise_distances(out.points, config.metric);

    const double r_max = config.r_max.value_or(*std::max_element(distances.begin(), distances.end()));
    report.parameters.r_max = r_max;
    out.complex = rips_filtration(out.points, std::max(r_max, std::numeric_limits<double>::min()), config.max_dim,
                                  config.metric);
    out.barcode = compute_persistence(out.complex, config.max_dim);
    const double at = config.at.value_or(stable_component_parameter(out.barcode));
    report.parameters.at = at;
    logger().info("filtration has {} simplices; components taken at r = {}", out.complex.size(), at);

    const auto components = components_at(out.complex, at);
    const auto snapshot = out.complex.snapshot(at);
    std::vector<std::size_t> component_of(n, 0);
    for (std::size_t c = 0; c < components.size(); ++c) {
        ComponentReport cr;
        for (auto v : components[c]) {
            cr.member_points.push_back(v.index);
            component_of[v.index] = c;
        }
        cr.representative_label = component_representative(cr.member_points, distances, n, out.data.groups);
        const auto sub = snapshot.restricted_to(components[c]);
        cr.betti = betti_numbers(sub, config.max_dim);
        cr.homology_trivial = homology_trivial(sub, config.max_dim);
        report.components.push_back(std::move(cr));
    }

    for (const auto& iv : out.barcode.intervals) {
        if (iv.degree != 2 || iv.is_ephemeral() || !iv.alive_at(at)) continue;
        if (!iv.is_infinite() && !(iv.persistence() > config.min_persistence)) continue;
        const std::size_t c = component_of[iv.birth_simplex.vertices.front().index];
        Chain part;
        for (const auto& s : iv.representative)
            if (component_of[s.vertices.front().index] == c) part.push_back(s);
        auto shape = name_shape(part);
        for (auto v : shape.vertices) shape.vertex_labels.push_back(out.data.groups[v.index]);
        shape.interval = iv;
        shape.interval.representative = std::move(part);
        report.components[c].two_cycles.push_back(std::move(shape));
    }

    for (const auto& iv : out.barcode.visible()) {
        Bar bar{iv.degree, iv.birth, std::nullopt};
        if (!iv.is_infinite()) bar.death = iv.death;
        report.barcode.push_back(bar);
    }
    return out;
}

} // namespace concept_homology
