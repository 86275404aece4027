#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "monores/ideal.hpp"
#include "monores/matrix.hpp"

namespace monores {

/// A complex of free modules with multidegree-labelled bases. Basis
/// elements in homological degree d are generator subsets of size d,
/// listed in colex (ascending mask) order; labels are their lcms.
/// Differential entries are the signed unit coefficients; the monomial
/// part of each map is implied by the basis labels.
struct ChainComplex {
    std::vector<std::vector<std::uint64_t>> basis;  // [degree][k] generator mask
    std::vector<std::vector<Monomial>> labels;      // lcm per basis element
    std::vector<SparseIntMat> diff;                 // diff[d] : degree d -> d-1 (d >= 1)

    std::vector<std::size_t> ranks() const {
        std::vector<std::size_t> r;
        for (const auto& b : basis) r.push_back(b.size());
        return r;
    }
};

namespace detail {

inline int taylor_sign(std::uint64_t mask, std::uint64_t bit) {
    // (-1)^{j+1} where the removed index is the j-th smallest (1-based)
    const int j = std::popcount(mask & (bit - 1)) + 1;
    return (j % 2 == 1) ? 1 : -1;
}

/// Assembles the subcomplex of the Taylor complex spanned by the given
/// masks (all subsets for Taylor itself, the Scarf faces for Scarf), and
/// verifies d compose d = 0 on the built matrices.
inline ChainComplex build_subset_complex(const MonomialIdeal& I,
                                         const std::vector<std::vector<std::uint64_t>>& by_card,
                                         const std::vector<Monomial>& lcms) {
    ChainComplex cx;
    cx.basis = by_card;
    cx.labels.resize(by_card.size());
    for (std::size_t d = 0; d < by_card.size(); ++d)
        for (const auto mask : by_card[d]) cx.labels[d].push_back(lcms[mask]);

    cx.diff.resize(by_card.size());
    for (std::size_t d = 1; d < by_card.size(); ++d) {
        const auto& lower = by_card[d - 1];
        const auto& upper = by_card[d];
        SparseIntMat m(lower.size(), upper.size());
        for (std::size_t col = 0; col < upper.size(); ++col) {
            std::uint64_t rest = upper[col];
            while (rest) {
                const std::uint64_t bit = rest & (~rest + 1);
                const std::uint64_t sub = upper[col] ^ bit;
                const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
                if (it == lower.end() || *it != sub)
                    throw InvariantError("complex basis is not closed under subsets");
                m.row_idx.push_back(static_cast<std::size_t>(it - lower.begin()));
                m.val.push_back(taylor_sign(upper[col], bit));
                rest ^= bit;
            }
            m.col_ptr[col + 1] = m.row_idx.size();
        }
        cx.diff[d] = std::move(m);
    }

    // d(d(e_sigma)) must cancel pairwise
    for (std::size_t d = 2; d < by_card.size(); ++d) {
        const auto& upper = by_card[d];
        for (const auto mask : upper) {
            std::uint64_t rest = mask;
            while (rest) {
                const std::uint64_t a = rest & (~rest + 1);
                std::uint64_t rest2 = rest ^ a;
                while (rest2) {
                    const std::uint64_t b = rest2 & (~rest2 + 1);
                    const int path1 = taylor_sign(mask, a) * taylor_sign(mask ^ a, b);
                    const int path2 = taylor_sign(mask, b) * taylor_sign(mask ^ b, a);
                    if (path1 + path2 != 0)
                        throw InvariantError("differential does not square to zero");
                    rest2 ^= b;
                }
                rest ^= a;
            }
        }
    }
    return cx;
}

}  // namespace detail

/// Full Taylor complex of R/I on all subsets of G(I).
inline ChainComplex taylor_complex(const MonomialIdeal& I, std::size_t max_gens = 20) {
    const std::size_t q = I.num_gens();
    if (q > max_gens)
        throw ResourceError("Taylor complex capped at " + std::to_string(max_gens) +
                            " generators");
    const auto lcms = subset_lcms(I.gens());
    std::vector<std::vector<std::uint64_t>> by_card(q + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask)
        by_card[std::popcount(mask)].push_back(mask);
    return detail::build_subset_complex(I, by_card, lcms);
}

/// The Taylor resolution is minimal iff no differential entry is a unit,
/// i.e. no subset's lcm survives the removal of one of its elements.
inline bool is_taylor_minimal(const MonomialIdeal& I, std::size_t max_gens = 20) {
    const std::size_t q = I.num_gens();
    if (q > max_gens)
        throw ResourceError("Taylor scan capped at " + std::to_string(max_gens) + " generators");
    const auto lcms = subset_lcms(I.gens());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << q); ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::uint64_t rest = mask;
        while (rest) {
            const std::uint64_t bit = rest & (~rest + 1);
            if (lcms[mask] == lcms[mask ^ bit]) return false;
            rest ^= bit;
        }
    }
    return true;
}

}  // namespace monores
