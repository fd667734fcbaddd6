#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "concept_homology/gf2.hpp"
#include "concept_homology/simplex.hpp"

namespace concept_homology {

/// A GF(2) chain: the simplices carrying coefficient 1, in filtration order.
using Chain = std::vector<Simplex>;

/// Basis of C_i(K): the i-simplices of K in filtration order.
struct ChainBasis {
    int degree = 0;
    std::vector<Simplex> simplices;
    std::vector<std::size_t> complex_indices;

    [[nodiscard]] std::size_t dimension() const { return simplices.size(); }
};

struct BettiVector {
    std::vector<std::size_t> betti;

    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

inline ChainBasis chain_basis(const FilteredComplex& complex, int degree)
{
    ChainBasis basis;
    basis.degree = degree;
    basis.complex_indices = complex.indices_of_dim(degree);
    for (auto k : basis.complex_indices) basis.simplices.push_back(complex[k]);
    return basis;
}

namespace detail {

// Columns of the boundary map of the given degree, as row positions in the
// basis one degree down.
inline std::vector<std::vector<std::uint32_t>> boundary_columns(const FilteredComplex& complex, int degree,
                                                                std::size_t& rows)
{
    std::vector<std::uint32_t> position(complex.size(), 0);
    rows = 0;
    if (degree > 0) {
        for (auto k : complex.indices_of_dim(degree - 1)) position[k] = static_cast<std::uint32_t>(rows++);
    }
    std::vector<std::vector<std::uint32_t>> columns;
    for (auto k : complex.indices_of_dim(degree)) {
        std::vector<std::uint32_t> col;
        if (degree > 0)
            for (auto f : complex.face_indices(k)) col.push_back(position[f]);
        columns.push_back(std::move(col));
    }
    return columns;
}

} // namespace detail

/**
 * Matrix of the boundary map from degree i to degree i-1 in the canonical
 * bases. Degree 0 gives the 0 x |V| zero map. Throws ArgumentError unless
 * 0 <= i <= max_dim.
 */
inline GF2Matrix boundary_matrix(const FilteredComplex& complex, int degree)
{
    if (degree < 0 || degree > complex.max_dim())
        throw ArgumentError("boundary degree " + std::to_string(degree) + " outside 0.." +
                            std::to_string(complex.max_dim()));
    std::size_t rows = 0;
    auto columns = detail::boundary_columns(complex, degree, rows);
    return GF2Matrix(rows, std::move(columns));
}

namespace detail {

inline std::size_t boundary_rank(const FilteredComplex& complex, int degree)
{
    if (degree <= 0 || degree > complex.max_dim()) return 0;
    return rank_gf2(boundary_matrix(complex, degree));
}

} // namespace detail

/// beta_i = dim C_i - rank d_i - rank d_{i+1}, for i = 0..max_dim.
inline BettiVector betti_numbers(const FilteredComplex& complex, int max_dim)
{
    if (max_dim < 0) throw ArgumentError("max_dim must be non-negative");
    std::vector<std::size_t> ranks(static_cast<std::size_t>(max_dim) + 2);
    for (int i = 0; i <= max_dim + 1; ++i) ranks[i] = detail::boundary_rank(complex, i);
    BettiVector out;
    for (int i = 0; i <= max_dim; ++i) out.betti.push_back(complex.count(i) - ranks[i] - ranks[i + 1]);
    return out;
}

/// Boundary of a chain over GF(2); faces with an even count cancel.
inline Chain boundary_of(const Chain& chain)
{
    std::map<std::vector<VertexId>, std::pair<int, double>> parity;
    for (const auto& s : chain)
        for (auto& f : faces(s)) {
            auto& [count, appearance] = parity[f.vertices];
            if (count == 0 || f.appearance < appearance) appearance = f.appearance;
            count ^= 1;
        }
    Chain out;
    for (auto& [key, entry] : parity)
        if (entry.first == 1) out.push_back(Simplex{key, entry.second});
    return out;
}

inline bool is_cycle(const Chain& chain) { return boundary_of(chain).empty(); }

/// Basis of Z_i = null(d_i). Size is dim C_i - rank d_i.
inline std::vector<Chain> cycle_space_basis(const FilteredComplex& complex, int degree)
{
    if (degree < 0 || degree > complex.max_dim())
        throw ArgumentError("cycle degree " + std::to_string(degree) + " outside 0.." +
                            std::to_string(complex.max_dim()));
    const auto basis = chain_basis(complex, degree);
    const auto boundary = boundary_matrix(complex, degree);

    ColumnReducer<SparseColumn> reducer(boundary.rows());
    std::vector<SparseColumn> combination;
    std::vector<Chain> cycles;
    for (std::size_t j = 0; j < boundary.cols(); ++j) {
        SparseColumn v({static_cast<std::uint32_t>(j)});
        auto low = reducer.push(boundary.column(j), [&](std::size_t k) { v.add(combination[k]); });
        if (!low) {
            Chain z;
            for (auto r : v.rows()) z.push_back(basis.simplices[r]);
            cycles.push_back(std::move(z));
        }
        combination.push_back(std::move(v));
    }
    return cycles;
}

} // namespace concept_homology
