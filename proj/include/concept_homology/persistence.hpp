#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "concept_homology/gf2.hpp"
#include "concept_homology/homology.hpp"
#include "concept_homology/simplex.hpp"

namespace concept_homology {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/**
 * One bar of a barcode: a class of the given degree alive on [birth, death).
 *
 * A class killed by a simplex appearing at R_t is not alive at R_t. The
 * representative is a cycle present at the birth parameter.
 */
struct PersistenceInterval {
    int degree = 0;
    double birth = 0.0;
    double death = kInfinity;
    Simplex birth_simplex;
    std::optional<Simplex> death_simplex;
    Chain representative;

    [[nodiscard]] bool is_infinite() const { return !death_simplex.has_value(); }
    /// Zero-length bar: created and destroyed at the same parameter.
    [[nodiscard]] bool is_ephemeral() const { return death == birth; }
    [[nodiscard]] double persistence() const { return death - birth; }
    [[nodiscard]] bool alive_at(double r) const { return birth <= r && r < death; }

    friend bool operator==(const PersistenceInterval&, const PersistenceInterval&) = default;
};

/// Orders bars by (degree, birth, death), infinite deaths last.
inline bool bar_less(const PersistenceInterval& a, const PersistenceInterval& b)
{
    return std::tie(a.degree, a.birth, a.death) < std::tie(b.degree, b.birth, b.death);
}

struct Barcode {
    std::vector<PersistenceInterval> intervals;
    int max_degree = -1;
    double final_parameter = 0.0;

    /// Bars with positive length, in (degree, birth, death) order.
    [[nodiscard]] std::vector<PersistenceInterval> visible() const
    {
        std::vector<PersistenceInterval> out;
        for (const auto& iv : intervals)
            if (!iv.is_ephemeral()) out.push_back(iv);
        return out;
    }

    [[nodiscard]] std::size_t count_infinite(int degree) const
    {
        return static_cast<std::size_t>(std::count_if(intervals.begin(), intervals.end(), [degree](const auto& iv) {
            return iv.degree == degree && iv.is_infinite();
        }));
    }

    friend bool operator==(const Barcode&, const Barcode&) = default;
};

/**
 * Persistent homology of a filtered complex in degrees 0..max_degree by the
 * standard boundary-matrix reduction in filtration order.
 *
 * Simplices up to dimension max_degree + 1 take part. A column that reduces
 * to zero creates a class; a column whose lowest one lands on row i kills
 * the class created by simplex i. Zero-length intervals are kept and can be
 * filtered with Barcode::visible().
 */
inline Barcode compute_persistence(const FilteredComplex& complex, int max_degree)
{
    if (max_degree < 0) throw ArgumentError("max_degree must be non-negative");
    validate(complex);

    const std::size_t m = complex.size();
    const int top = max_degree + 1;

    // Columns are indexed by filtration position; simplices above `top` get an
    // empty placeholder so positions stay aligned.
    ColumnReducer<SparseColumn> reducer(m);
    std::vector<SparseColumn> combination;
    combination.reserve(m);
    std::vector<std::optional<std::size_t>> killer(m);
    std::vector<bool> creator(m, false);

    for (std::size_t j = 0; j < m; ++j) {
        const auto& s = complex[j];
        SparseColumn v({static_cast<std::uint32_t>(j)});
        if (s.dimension() > top) {
            reducer.push(SparseColumn{});
            combination.push_back(std::move(v));
            continue;
        }
        std::vector<std::uint32_t> rows;
        for (auto f : complex.face_indices(j)) rows.push_back(static_cast<std::uint32_t>(f));
        std::sort(rows.begin(), rows.end());
        auto low = reducer.push(SparseColumn(std::move(rows)), [&](std::size_t k) { v.add(combination[k]); });
        if (low)
            killer[*low] = j;
        else
            creator[j] = true;
        combination.push_back(std::move(v));
    }

    Barcode barcode;
    barcode.max_degree = max_degree;
    barcode.final_parameter = complex.final_parameter();
    for (std::size_t i = 0; i < m; ++i) {
        if (!creator[i] || complex[i].dimension() > max_degree) continue;
        PersistenceInterval iv;
        iv.degree = complex[i].dimension();
        iv.birth = complex[i].appearance;
        iv.birth_simplex = complex[i];
        if (killer[i]) {
            iv.death = complex[*killer[i]].appearance;
            iv.death_simplex = complex[*killer[i]];
        }
        for (auto r : combination[i].rows()) iv.representative.push_back(complex[r]);
        barcode.intervals.push_back(std::move(iv));
    }
    std::stable_sort(barcode.intervals.begin(), barcode.intervals.end(), bar_less);
    return barcode;
}

/// Number of bars of the given degree with birth <= r < death.
inline std::size_t persistent_betti(const Barcode& barcode, int degree, double r)
{
    if (!(r >= 0.0)) throw ArgumentError("query parameter must be non-negative");
    return static_cast<std::size_t>(std::count_if(barcode.intervals.begin(), barcode.intervals.end(),
                                                  [&](const auto& iv) { return iv.degree == degree && iv.alive_at(r); }));
}

/// The stored cycle of an interval of the barcode. Throws LookupError if the interval is not in it.
inline const Chain& representative_cycle(const Barcode& barcode, const PersistenceInterval& interval)
{
    for (const auto& iv : barcode.intervals)
        if (iv.degree == interval.degree && iv.birth == interval.birth && iv.death == interval.death &&
            iv.birth_simplex == interval.birth_simplex)
            return iv.representative;
    throw LookupError("interval not found in barcode: degree " + std::to_string(interval.degree) + " born at " +
                      to_string(interval.birth_simplex));
}

} // namespace concept_homology
