#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "concept_homology/errors.hpp"
#include "concept_homology/pipeline.hpp"

namespace concept_homology {

using ordered_json = nlohmann::ordered_json;

inline void to_json(ordered_json& j, const VertexId& v) { j = v.index; }
inline void from_json(const ordered_json& j, VertexId& v) { v.index = j.get<std::uint32_t>(); }

inline void to_json(ordered_json& j, const Simplex& s)
{
    j = ordered_json{{"vertices", s.vertices}, {"appearance", s.appearance}};
}
inline void from_json(const ordered_json& j, Simplex& s)
{
    j.at("vertices").get_to(s.vertices);
    j.at("appearance").get_to(s.appearance);
}

namespace detail {

inline ordered_json death_to_json(double death)
{
    return std::isinf(death) ? ordered_json(nullptr) : ordered_json(death);
}

inline double death_from_json(const ordered_json& j) { return j.is_null() ? kInfinity : j.get<double>(); }

} // namespace detail

inline void to_json(ordered_json& j, const PersistenceInterval& iv)
{
    j = ordered_json{{"degree", iv.degree},
                     {"birth", iv.birth},
                     {"death", detail::death_to_json(iv.death)},
                     {"birth_simplex", iv.birth_simplex},
                     {"death_simplex", iv.death_simplex ? ordered_json(*iv.death_simplex) : ordered_json(nullptr)},
                     {"representative", iv.representative}};
}
inline void from_json(const ordered_json& j, PersistenceInterval& iv)
{
    j.at("degree").get_to(iv.degree);
    j.at("birth").get_to(iv.birth);
    iv.death = detail::death_from_json(j.at("death"));
    j.at("birth_simplex").get_to(iv.birth_simplex);
    if (j.at("death_simplex").is_null())
        iv.death_simplex.reset();
    else
        iv.death_simplex = j.at("death_simplex").get<Simplex>();
    j.at("representative").get_to(iv.representative);
}

inline void to_json(ordered_json& j, const AnalysisParameters& p)
{
    j = ordered_json{{"metric", p.metric},       {"r_max", p.r_max},         {"r_max_auto", p.r_max_auto},
                     {"max_dim", p.max_dim},     {"at", p.at},               {"at_auto", p.at_auto},
                     {"normalize", p.normalize}, {"min_persistence", p.min_persistence}};
}
inline void from_json(const ordered_json& j, AnalysisParameters& p)
{
    j.at("metric").get_to(p.metric);
    j.at("r_max").get_to(p.r_max);
    j.at("r_max_auto").get_to(p.r_max_auto);
    j.at("max_dim").get_to(p.max_dim);
    j.at("at").get_to(p.at);
    j.at("at_auto").get_to(p.at_auto);
    j.at("normalize").get_to(p.normalize);
    j.at("min_persistence").get_to(p.min_persistence);
}

inline void to_json(ordered_json& j, const CycleShape& c)
{
    j = ordered_json{{"vertices", c.vertices},
                     {"vertex_labels", c.vertex_labels},
                     {"triangle_count", c.triangle_count},
                     {"shape_name", c.shape_name},
                     {"interval", c.interval}};
}
inline void from_json(const ordered_json& j, CycleShape& c)
{
    j.at("vertices").get_to(c.vertices);
    j.at("vertex_labels").get_to(c.vertex_labels);
    j.at("triangle_count").get_to(c.triangle_count);
    j.at("shape_name").get_to(c.shape_name);
    j.at("interval").get_to(c.interval);
}

inline void to_json(ordered_json& j, const ComponentReport& c)
{
    j = ordered_json{{"members", c.member_points},
                     {"representative", c.representative_label},
                     {"homology_trivial", c.homology_trivial},
                     {"betti", c.betti.betti},
                     {"cycles", c.two_cycles}};
}
inline void from_json(const ordered_json& j, ComponentReport& c)
{
    j.at("members").get_to(c.member_points);
    j.at("representative").get_to(c.representative_label);
    j.at("homology_trivial").get_to(c.homology_trivial);
    j.at("betti").get_to(c.betti.betti);
    j.at("cycles").get_to(c.two_cycles);
}

inline void to_json(ordered_json& j, const Bar& b)
{
    j = ordered_json{{"degree", b.degree},
                     {"birth", b.birth},
                     {"death", b.death ? ordered_json(*b.death) : ordered_json(nullptr)}};
}
inline void from_json(const ordered_json& j, Bar& b)
{
    j.at("degree").get_to(b.degree);
    j.at("birth").get_to(b.birth);
    if (j.at("death").is_null())
        b.death.reset();
    else
        b.death = j.at("death").get<double>();
}

inline void to_json(ordered_json& j, const AnalysisReport& r)
{
    j = ordered_json{{"parameters", r.parameters},
                     {"unique_point_count", r.unique_point_count},
                     {"groups", r.groups},
                     {"components", r.components},
                     {"barcode", r.barcode}};
}
inline void from_json(const ordered_json& j, AnalysisReport& r)
{
    j.at("parameters").get_to(r.parameters);
    j.at("unique_point_count").get_to(r.unique_point_count);
    j.at("groups").get_to(r.groups);
    j.at("components").get_to(r.components);
    j.at("barcode").get_to(r.barcode);
}

/// Report as indented JSON text with a trailing newline.
inline std::string emit_report(const AnalysisReport& report) { return ordered_json(report).dump(2) + "\n"; }

inline AnalysisReport parse_report(const std::string& text)
{
    try {
        return ordered_json::parse(text).get<AnalysisReport>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what());
    }
}

} // namespace concept_homology
