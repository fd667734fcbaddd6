#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "concept_homology/errors.hpp"
#include "concept_homology/simplex.hpp"
#include "concept_homology/union_find.hpp"

namespace concept_homology {

/// N points of a common dimension with finite coordinates.
class PointCloud {
public:
    PointCloud() = default;
    explicit PointCloud(std::vector<std::vector<double>> points) : points_(std::move(points))
    {
        if (!points_.empty()) dim_ = points_.front().size();
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (points_[i].size() != dim_)
                throw ArgumentError("point " + std::to_string(i) + " has dimension " +
                                    std::to_string(points_[i].size()) + ", expected " + std::to_string(dim_));
            for (double x : points_[i])
                if (!std::isfinite(x)) throw ArgumentError("point " + std::to_string(i) + " has a non-finite coordinate");
        }
    }

    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] bool empty() const { return points_.empty(); }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<double>& operator[](std::size_t i) const { return points_[i]; }
    [[nodiscard]] const std::vector<std::vector<double>>& points() const { return points_; }

    friend bool operator==(const PointCloud&, const PointCloud&) = default;

private:
    std::vector<std::vector<double>> points_;
    std::size_t dim_ = 0;
};

/// Strictly increasing, nonempty list of landmark point indices.
class LandmarkSet {
public:
    explicit LandmarkSet(std::vector<std::size_t> indices) : indices_(std::move(indices))
    {
        if (indices_.empty()) throw ArgumentError("landmark set is empty");
        for (std::size_t k = 1; k < indices_.size(); ++k)
            if (indices_[k - 1] >= indices_[k]) throw ArgumentError("landmark indices must be strictly increasing");
    }

    /// L = Z.
    static LandmarkSet all(std::size_t n)
    {
        if (n == 0) throw ArgumentError("landmark set is empty");
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        return LandmarkSet(std::move(idx));
    }

    [[nodiscard]] std::size_t size() const { return indices_.size(); }
    [[nodiscard]] const std::vector<std::size_t>& indices() const { return indices_; }

private:
    std::vector<std::size_t> indices_;
};

enum class Metric { euclidean, manhattan, hamming };

inline Metric parse_metric(std::string_view name)
{
    if (name == "euclidean") return Metric::euclidean;
    if (name == "manhattan") return Metric::manhattan;
    if (name == "hamming") return Metric::hamming;
    throw ArgumentError("unknown metric: " + std::string(name));
}

inline std::string metric_name(Metric m)
{
    switch (m) {
    case Metric::euclidean: return "euclidean";
    case Metric::manhattan: return "manhattan";
    case Metric::hamming: return "hamming";
    }
    return "unknown";
}

inline double distance(const std::vector<double>& a, const std::vector<double>& b, Metric metric)
{
    double acc = 0.0;
    switch (metric) {
    case Metric::euclidean:
        for (std::size_t k = 0; k < a.size(); ++k) acc += (a[k] - b[k]) * (a[k] - b[k]);
        return std::sqrt(acc);
    case Metric::manhattan:
        for (std::size_t k = 0; k < a.size(); ++k) acc += std::abs(a[k] - b[k]);
        return acc;
    case Metric::hamming:
        for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] != b[k] ? 1.0 : 0.0;
        return acc;
    }
    return acc;
}

/// The n x N matrix of distances between landmarks (rows) and data points (columns).
struct DistanceMatrix {
    std::size_t landmarks = 0;
    std::size_t points = 0;
    std::vector<double> entries;
    Metric metric = Metric::euclidean;

    [[nodiscard]] double operator()(std::size_t a, std::size_t i) const { return entries[a * points + i]; }
};

inline DistanceMatrix distance_matrix(const PointCloud& cloud, const LandmarkSet& landmarks, Metric metric)
{
    for (auto idx : landmarks.indices())
        if (idx >= cloud.size())
            throw ArgumentError("landmark index " + std::to_string(idx) + " outside point cloud of size " +
                                std::to_string(cloud.size()));
    DistanceMatrix d;
    d.landmarks = landmarks.size();
    d.points = cloud.size();
    d.metric = metric;
    d.entries.resize(d.landmarks * d.points);
    for (std::size_t a = 0; a < d.landmarks; ++a)
        for (std::size_t i = 0; i < d.points; ++i)
            d.entries[a * d.points + i] = distance(cloud[landmarks.indices()[a]], cloud[i], metric);
    return d;
}

inline DistanceMatrix distance_matrix(const PointCloud& cloud, const LandmarkSet& landmarks, std::string_view metric)
{
    return distance_matrix(cloud, landmarks, parse_metric(metric));
}

namespace detail {

inline void check_filtration_args(double r_max, int max_dim)
{
    if (!(r_max > 0.0) || !std::isfinite(r_max)) throw ArgumentError("r_max must be a finite positive number");
    if (max_dim < 0) throw ArgumentError("max_dim must be non-negative");
}

/**
 * Flag complex on n vertices from a symmetric matrix of edge appearance
 * times. Vertices appear at 0, edges at their matrix entry when that entry
 * is <= r_max, and every higher clique at the latest of its edges.
 */
inline FilteredComplex flag_filtration(std::size_t n, const std::vector<double>& edge_time, double r_max, int max_dim)
{
    std::vector<std::vector<std::uint32_t>> higher(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (edge_time[a * n + b] <= r_max) higher[a].push_back(static_cast<std::uint32_t>(b));

    std::vector<Simplex> out;
    std::vector<VertexId> clique;

    // Extends `clique` by vertices from `cands`, all adjacent to every member.
    auto expand = [&](auto&& self, const std::vector<std::uint32_t>& cands, double appearance) -> void {
        out.push_back(Simplex{clique, appearance});
        if (static_cast<int>(clique.size()) > max_dim) return;
        for (std::size_t k = 0; k < cands.size(); ++k) {
            const auto v = cands[k];
            double t = appearance;
            for (auto u : clique) t = std::max(t, edge_time[u.index * n + v]);
            std::vector<std::uint32_t> next;
            const auto& nv = higher[v];
            std::set_intersection(cands.begin() + static_cast<std::ptrdiff_t>(k) + 1, cands.end(), nv.begin(),
                                  nv.end(), std::back_inserter(next));
            clique.push_back(VertexId{v});
            self(self, next, t);
            clique.pop_back();
        }
    };

    for (std::size_t a = 0; a < n; ++a) {
        clique = {VertexId{static_cast<std::uint32_t>(a)}};
        expand(expand, higher[a], 0.0);
    }
    auto complex = build_complex(out);
    validate(complex);
    return complex;
}

} // namespace detail

/**
 * Filtered witness complex W(D, R) for R up to r_max.
 *
 * Edge [ab] appears at min over data points i of max(D(a,i), D(b,i)) and is
 * kept when that value is <= r_max. Higher simplices follow flag semantics:
 * a simplex is present once all its edges are, at the latest edge time.
 */
inline FilteredComplex witness_filtration(const DistanceMatrix& d, double r_max, int max_dim)
{
    detail::check_filtration_args(r_max, max_dim);
    const std::size_t n = d.landmarks;
    if (n == 0) throw ArgumentError("landmark set is empty");
    std::vector<double> edge_time(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < d.points; ++i) best = std::min(best, std::max(d(a, i), d(b, i)));
            edge_time[a * n + b] = edge_time[b * n + a] = best;
        }
    return detail::flag_filtration(n, edge_time, r_max, max_dim);
}

/// Symmetric N x N pairwise distance matrix, row-major.
inline std::vector<double> pairwise_distances(const PointCloud& cloud, Metric metric)
{
    const std::size_t n = cloud.size();
    std::vector<double> out(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) out[a * n + b] = out[b * n + a] = distance(cloud[a], cloud[b], metric);
    return out;
}

/// Vietoris-Rips filtration: edge [ab] appears at d(a,b), higher simplices at their longest edge.
inline FilteredComplex rips_filtration(const PointCloud& cloud, double r_max, int max_dim, Metric metric)
{
    detail::check_filtration_args(r_max, max_dim);
    if (cloud.empty()) throw ArgumentError("landmark set is empty");
    return detail::flag_filtration(cloud.size(), pairwise_distances(cloud, metric), r_max, max_dim);
}

inline FilteredComplex rips_filtration(const PointCloud& cloud, double r_max, int max_dim, std::string_view metric)
{
    return rips_filtration(cloud, r_max, max_dim, parse_metric(metric));
}

/// Connected components of the snapshot K_r, each sorted, listed by minimum vertex.
inline std::vector<std::vector<VertexId>> components_at(const FilteredComplex& complex, double r)
{
    if (!(r >= 0.0)) throw ArgumentError("component parameter must be non-negative");
    std::vector<VertexId> vertices;
    for (const auto& s : complex.simplices())
        if (s.dimension() == 0 && s.appearance <= r) vertices.push_back(s.vertices[0]);
    std::sort(vertices.begin(), vertices.end());

    std::map<VertexId, std::size_t> slot;
    for (std::size_t k = 0; k < vertices.size(); ++k) slot[vertices[k]] = k;
    UnionFind uf(vertices.size());
    for (const auto& s : complex.simplices())
        if (s.dimension() == 1 && s.appearance <= r) uf.unite(slot.at(s.vertices[0]), slot.at(s.vertices[1]));

    std::map<std::size_t, std::vector<VertexId>> by_root;
    for (std::size_t k = 0; k < vertices.size(); ++k) by_root[uf.find(k)].push_back(vertices[k]);
    std::vector<std::vector<VertexId>> out;
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

} // namespace concept_homology
