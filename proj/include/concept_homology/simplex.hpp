#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "concept_homology/errors.hpp"

namespace concept_homology {

/// Dense index of a vertex. Labels are kept outside the math core.
struct VertexId {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

/// A sorted list of distinct vertices together with its time of appearance.
struct Simplex {
    std::vector<VertexId> vertices;
    double appearance = 0.0;

    [[nodiscard]] int dimension() const { return static_cast<int>(vertices.size()) - 1; }

    friend bool operator==(const Simplex&, const Simplex&) = default;
};

inline std::string to_string(const Simplex& s)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < s.vertices.size(); ++k) {
        if (k > 0) os << ' ';
        os << 'v' << s.vertices[k].index;
    }
    os << "]@" << s.appearance;
    return os.str();
}

/// Builds a simplex from raw indices, sorting them. Throws StructuralError on a repeated vertex.
inline Simplex make_simplex(std::initializer_list<std::uint32_t> ids, double appearance = 0.0)
{
    Simplex s;
    s.appearance = appearance;
    s.vertices.reserve(ids.size());
    for (auto id : ids) s.vertices.push_back(VertexId{id});
    std::sort(s.vertices.begin(), s.vertices.end());
    if (std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end())
        throw StructuralError("simplex has a repeated vertex: " + to_string(s));
    return s;
}

/// Filtration order: appearance, then dimension, then lexicographic vertices.
inline bool filtration_less(const Simplex& a, const Simplex& b)
{
    if (a.appearance != b.appearance) return a.appearance < b.appearance;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
}

/// The p+1 codimension-one faces of a p-simplex, ordered by the index of the omitted vertex.
inline std::vector<Simplex> faces(const Simplex& s)
{
    std::vector<Simplex> out;
    if (s.vertices.size() <= 1) return out;
    out.reserve(s.vertices.size());
    for (std::size_t omit = 0; omit < s.vertices.size(); ++omit) {
        Simplex f;
        f.appearance = s.appearance;
        f.vertices.reserve(s.vertices.size() - 1);
        for (std::size_t k = 0; k < s.vertices.size(); ++k)
            if (k != omit) f.vertices.push_back(s.vertices[k]);
        out.push_back(std::move(f));
    }
    return out;
}

class FilteredComplex;
FilteredComplex build_complex(std::span<const Simplex> simplices);
void validate(const FilteredComplex& complex);

/**
 * A face-closed set of simplices in filtration order.
 *
 * Instances are only produced by build_complex() and the operations derived
 * from it, so every instance satisfies face closure, monotone appearance
 * times and unique vertex lists. The type is immutable after construction.
 */
class FilteredComplex {
public:
    using Key = std::vector<VertexId>;

    FilteredComplex() = default;

    [[nodiscard]] const std::vector<Simplex>& simplices() const { return simplices_; }
    [[nodiscard]] std::size_t size() const { return simplices_.size(); }
    [[nodiscard]] bool empty() const { return simplices_.empty(); }
    [[nodiscard]] const Simplex& operator[](std::size_t k) const { return simplices_[k]; }

    /// Largest simplex dimension, or -1 for the empty complex.
    [[nodiscard]] int max_dim() const { return max_dim_; }

    [[nodiscard]] std::optional<std::size_t> index_of(const Key& vertices) const
    {
        auto it = index_.find(vertices);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] bool contains(const Key& vertices) const { return index_.contains(vertices); }

    /// Number of simplices of dimension d.
    [[nodiscard]] std::size_t count(int d) const
    {
        return static_cast<std::size_t>(std::count_if(simplices_.begin(), simplices_.end(),
                                                      [d](const Simplex& s) { return s.dimension() == d; }));
    }

    /// Filtration indices of the simplices of dimension d, in filtration order.
    [[nodiscard]] std::vector<std::size_t> indices_of_dim(int d) const
    {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < simplices_.size(); ++k)
            if (simplices_[k].dimension() == d) out.push_back(k);
        return out;
    }

    /// Filtration indices of the faces of simplex k, in omitted-vertex order.
    [[nodiscard]] std::vector<std::size_t> face_indices(std::size_t k) const
    {
        std::vector<std::size_t> out;
        for (const auto& f : faces(simplices_[k])) out.push_back(index_.at(f.vertices));
        return out;
    }

    /// Largest appearance value R_p, or 0 for the empty complex.
    [[nodiscard]] double final_parameter() const
    {
        return simplices_.empty() ? 0.0 : simplices_.back().appearance;
    }

    /// Distinct appearance values in increasing order.
    [[nodiscard]] std::vector<double> parameter_values() const
    {
        std::vector<double> out;
        for (const auto& s : simplices_)
            if (out.empty() || out.back() != s.appearance) out.push_back(s.appearance);
        return out;
    }

    /// The snapshot complex K_r: every simplex with appearance <= r.
    [[nodiscard]] FilteredComplex snapshot(double r) const
    {
        auto end = std::find_if(simplices_.begin(), simplices_.end(),
                                [r](const Simplex& s) { return s.appearance > r; });
        return FilteredComplex(std::vector<Simplex>(simplices_.begin(), end));
    }

    /// Subcomplex spanned by the given vertices (simplices whose vertices all lie in the set).
    [[nodiscard]] FilteredComplex restricted_to(std::span<const VertexId> vertex_set) const
    {
        std::set<VertexId> keep(vertex_set.begin(), vertex_set.end());
        std::vector<Simplex> out;
        for (const auto& s : simplices_)
            if (std::all_of(s.vertices.begin(), s.vertices.end(), [&](VertexId v) { return keep.contains(v); }))
                out.push_back(s);
        return FilteredComplex(std::move(out));
    }

    friend bool operator==(const FilteredComplex& a, const FilteredComplex& b)
    {
        return a.simplices_ == b.simplices_;
    }

private:
    friend FilteredComplex build_complex(std::span<const Simplex> simplices);

    // Input must already be closed, deduplicated and in filtration order.
    explicit FilteredComplex(std::vector<Simplex> sorted) : simplices_(std::move(sorted))
    {
        for (std::size_t k = 0; k < simplices_.size(); ++k) {
            index_.emplace(simplices_[k].vertices, k);
            max_dim_ = std::max(max_dim_, simplices_[k].dimension());
        }
    }

    std::vector<Simplex> simplices_;
    std::map<Key, std::size_t> index_;
    int max_dim_ = -1;
};

/**
 * Throws StructuralError unless the complex is in filtration order, has no
 * duplicate vertex lists, is face-closed and has monotone appearance times.
 */
inline void validate(const FilteredComplex& complex)
{
    const auto& ss = complex.simplices();
    for (std::size_t k = 0; k < ss.size(); ++k) {
        const auto& s = ss[k];
        if (s.vertices.empty()) throw StructuralError("empty simplex in complex");
        for (std::size_t q = 1; q < s.vertices.size(); ++q)
            if (!(s.vertices[q - 1] < s.vertices[q]))
                throw StructuralError("simplex vertices not strictly increasing: " + to_string(s));
        if (k > 0 && !filtration_less(ss[k - 1], s))
            throw StructuralError("complex not in filtration order at " + to_string(s));
        for (const auto& f : faces(s)) {
            auto idx = complex.index_of(f.vertices);
            if (!idx) throw StructuralError("missing face of " + to_string(s));
            if (ss[*idx].appearance > s.appearance)
                throw StructuralError("non-monotone filtration: face " + to_string(ss[*idx]) +
                                      " appears after " + to_string(s));
        }
    }
}

/**
 * Closes a list of simplices under taking faces and sorts it into filtration order.
 *
 * Duplicate vertex lists keep their minimum appearance. A face that is
 * missing from the input is synthesized at the minimum appearance of the
 * cofaces that require it. A face given explicitly with a later appearance
 * than one of its cofaces is a StructuralError.
 */
inline FilteredComplex build_complex(std::span<const Simplex> simplices)
{
    struct Entry {
        double appearance;
        bool given;
    };
    std::vector<std::map<FilteredComplex::Key, Entry>> by_dim;

    for (const auto& raw : simplices) {
        if (raw.vertices.empty()) throw StructuralError("simplex with no vertices");
        if (!std::isfinite(raw.appearance) || raw.appearance < 0.0)
            throw ArgumentError("appearance must be finite and non-negative: " + to_string(raw));
        auto key = raw.vertices;
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end())
            throw StructuralError("simplex has a repeated vertex: " + to_string(raw));
        const auto d = key.size() - 1;
        if (by_dim.size() <= d) by_dim.resize(d + 1);
        auto [it, inserted] = by_dim[d].try_emplace(std::move(key), Entry{raw.appearance, true});
        if (!inserted) it->second.appearance = std::min(it->second.appearance, raw.appearance);
    }

    for (std::size_t d = by_dim.size(); d-- > 1;) {
        for (const auto& [key, entry] : by_dim[d]) {
            Simplex s{key, entry.appearance};
            for (auto& f : faces(s)) {
                auto [it, inserted] = by_dim[d - 1].try_emplace(std::move(f.vertices), Entry{entry.appearance, false});
                if (inserted) continue;
                if (it->second.given) {
                    if (it->second.appearance > entry.appearance)
                        throw StructuralError("non-monotone filtration: face " +
                                              to_string(Simplex{it->first, it->second.appearance}) +
                                              " appears after " + to_string(s));
                } else {
                    it->second.appearance = std::min(it->second.appearance, entry.appearance);
                }
            }
        }
    }

    std::vector<Simplex> out;
    for (const auto& level : by_dim)
        for (const auto& [key, entry] : level) out.push_back(Simplex{key, entry.appearance});
    std::sort(out.begin(), out.end(), filtration_less);
    return FilteredComplex(std::move(out));
}

inline FilteredComplex build_complex(std::initializer_list<Simplex> simplices)
{
    return build_complex(std::span<const Simplex>(simplices.begin(), simplices.size()));
}

/// All simplices of dimension <= d.
inline FilteredComplex skeleton(const FilteredComplex& complex, int d)
{
    if (d < 0) throw ArgumentError("skeleton dimension must be non-negative");
    std::vector<Simplex> keep;
    for (const auto& s : complex.simplices())
        if (s.dimension() <= d) keep.push_back(s);
    return build_complex(keep);
}

} // namespace concept_homology
