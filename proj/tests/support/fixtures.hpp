#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "concept_homology/builders.hpp"
#include "concept_homology/simplex.hpp"
#include "oracle/gf2_oracle.hpp"

namespace fixtures {

using namespace concept_homology;

inline std::string data_path(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(TEST_GOLDEN_DIR) + "/" + name; }
inline std::string project_data_path(const std::string& name) { return std::string(PROJECT_DATA_DIR) + "/" + name; }

/// Hollow tetrahedron: the four triangles of [v0 v1 v2 v3], all at 0.
inline FilteredComplex hollow_tetrahedron()
{
    return build_complex({make_simplex({0, 1, 2}), make_simplex({0, 1, 3}), make_simplex({0, 2, 3}),
                          make_simplex({1, 2, 3})});
}

/// T_0 .. T_5: vertices at 0, edges at 1, triangles at 2, 3, 4, 5.
inline FilteredComplex tetrahedron_filtration()
{
    std::vector<Simplex> s;
    for (std::uint32_t v = 0; v < 4; ++v) s.push_back(make_simplex({v}, 0.0));
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = a + 1; b < 4; ++b) s.push_back(make_simplex({a, b}, 1.0));
    s.push_back(make_simplex({0, 1, 2}, 2.0));
    s.push_back(make_simplex({0, 1, 3}, 3.0));
    s.push_back(make_simplex({0, 2, 3}, 4.0));
    s.push_back(make_simplex({1, 2, 3}, 5.0));
    return build_complex(s);
}

inline FilteredComplex triangle_boundary()
{
    return build_complex({make_simplex({0, 1}), make_simplex({1, 2}), make_simplex({0, 2})});
}

/// Octahedron surface on poles 0, 5 and equator 1-2-3-4.
inline std::vector<Simplex> octahedron_triangles(double at = 0.0)
{
    std::vector<Simplex> out;
    const std::uint32_t ring[4] = {1, 2, 3, 4};
    for (int k = 0; k < 4; ++k) {
        auto a = ring[k], b = ring[(k + 1) % 4];
        out.push_back(make_simplex({0, a, b}, at));
        out.push_back(make_simplex({5, a, b}, at));
    }
    return out;
}

inline FilteredComplex hollow_octahedron() { return build_complex(octahedron_triangles()); }

/// Same vertex lists as plain integers, for the oracle.
inline oracle::PlainComplex to_plain(const FilteredComplex& k)
{
    std::vector<oracle::VertexList> lists;
    for (const auto& s : k.simplices()) {
        oracle::VertexList l;
        for (auto v : s.vertices) l.push_back(static_cast<int>(v.index));
        lists.push_back(l);
    }
    return oracle::PlainComplex::from(lists);
}

inline PointCloud unit_square() { return PointCloud({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline PointCloud random_cloud(std::mt19937_64& rng, std::size_t max_points, std::size_t dim = 2)
{
    std::uniform_int_distribution<std::size_t> count(1, max_points);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<std::vector<double>> pts(count(rng));
    for (auto& p : pts) {
        p.resize(dim);
        for (auto& x : p) x = coord(rng);
    }
    return PointCloud(std::move(pts));
}

/// Random face-closed complex: a few random top simplices on <= max_vertices vertices, closed.
inline FilteredComplex random_complex(std::mt19937_64& rng, std::uint32_t max_vertices = 8, int max_dim = 3)
{
    std::uniform_int_distribution<std::uint32_t> nv(1, max_vertices);
    const std::uint32_t n = nv(rng);
    std::uniform_int_distribution<int> top_count(1, 10);
    std::uniform_int_distribution<int> dim(0, max_dim);
    std::uniform_real_distribution<double> when(0.0, 4.0);
    std::vector<Simplex> tops;
    const int count = top_count(rng);
    for (int k = 0; k < count; ++k) {
        std::vector<std::uint32_t> ids(n);
        for (std::uint32_t i = 0; i < n; ++i) ids[i] = i;
        std::shuffle(ids.begin(), ids.end(), rng);
        const auto size = std::min<std::size_t>(n, static_cast<std::size_t>(dim(rng)) + 1);
        Simplex s;
        s.appearance = std::round(when(rng) * 4.0) / 4.0;
        for (std::size_t q = 0; q < size; ++q) s.vertices.push_back(VertexId{ids[q]});
        std::sort(s.vertices.begin(), s.vertices.end());
        tops.push_back(s);
    }
    // A listed face may not appear after a listed coface.
    for (auto& s : tops)
        for (const auto& t : tops)
            if (std::includes(t.vertices.begin(), t.vertices.end(), s.vertices.begin(), s.vertices.end()))
                s.appearance = std::min(s.appearance, t.appearance);
    return build_complex(tops);
}

} // namespace fixtures
