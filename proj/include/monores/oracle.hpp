#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "monores/betti_table.hpp"
#include "monores/ideal.hpp"
#include "monores/simplicial.hpp"

namespace monores {

struct OracleCaps {
    std::size_t max_gens = 12;
    std::size_t max_vars = 12;
};

namespace detail {

/// Critical sets for the upper Koszul complex K^b over the vertex list
/// verts = supp(b): a squarefree tau <= b is a face iff x^b / x^tau lies
/// in I, i.e. tau avoids the variables where some generator dividing b
/// has its exponent equal to b's.
inline std::vector<FaceMask> koszul_critical_masks(const MonomialIdeal& I, const Monomial& b,
                                                   const std::vector<VarId>& verts) {
    std::vector<FaceMask> crit;
    for (const auto& g : I.gens()) {
        if (!g.divides(b)) continue;
        FaceMask mask = 0;
        for (std::size_t k = 0; k < verts.size(); ++k)
            if (g.exponent(verts[k]) > 0 && g.exponent(verts[k]) == b.exponent(verts[k]))
                mask |= FaceMask{1} << k;
        crit.push_back(mask);
    }
    return crit;
}

inline std::vector<std::vector<FaceMask>> koszul_faces(const std::vector<FaceMask>& crit,
                                                       std::size_t n_verts,
                                                       std::size_t max_card) {
    const std::size_t top = std::min(max_card, n_verts);
    std::vector<std::vector<FaceMask>> by_card(top + 1);
    for (FaceMask tau = 0; tau < (FaceMask{1} << n_verts); ++tau) {
        const std::size_t c = static_cast<std::size_t>(std::popcount(tau));
        if (c > top) continue;
        for (const FaceMask m : crit)
            if ((tau & m) == 0) {
                by_card[c].push_back(tau);
                break;
            }
    }
    for (auto& bucket : by_card) std::sort(bucket.begin(), bucket.end());
    return by_card;
}

}  // namespace detail

/// Exact multigraded Betti numbers of R/I. For every candidate
/// multidegree b in the lcm lattice, beta_{i,b}(R/I) = dim H~_{i-2}(K^b),
/// computed over a characteristic-zero field from exact integer
/// boundary-matrix ranks. beta_0 = 1 sits at multidegree 0.
inline BettiTable oracle_betti(const MonomialIdeal& I, OracleCaps caps = {}) {
    const std::size_t q = I.num_gens();
    if (q > caps.max_gens)
        throw ResourceError("Betti oracle capped at " + std::to_string(caps.max_gens) +
                            " generators");
    std::set<VarId> used;
    for (const auto& g : I.gens())
        for (const auto& [v, e] : g.factors()) used.insert(v);
    if (used.size() > caps.max_vars)
        throw ResourceError("Betti oracle capped at " + std::to_string(caps.max_vars) +
                            " variables");

    const auto lcms = subset_lcms(I.gens());
    const std::set<Monomial> candidates(lcms.begin() + 1, lcms.end());

    BettiTable table;
    table.add(0, Monomial{}, 1);
    for (const Monomial& b : candidates) {
        std::vector<VarId> verts = b.support();
        std::sort(verts.begin(), verts.end(),
                  [&I](VarId x, VarId y) { return I.var_rank(x) < I.var_rank(y); });
        const auto crit = detail::koszul_critical_masks(I, b, verts);
        if (std::find(crit.begin(), crit.end(), FaceMask{0}) != crit.end())
            continue;  // K^b is the full simplex
        const std::size_t card_max = std::min(verts.size(), q);
        const auto by_card = detail::koszul_faces(crit, verts.size(), card_max);
        if (detail::has_cone_apex(by_card, static_cast<int>(verts.size()))) continue;
        const auto h =
            detail::homology_by_card(by_card, card_max > 0 ? card_max - 1 : 0);
        for (std::size_t c = 0; c < h.size(); ++c)
            if (h[c] != 0) table.add(static_cast<int>(c) + 1, b, h[c]);
    }
    table.trim();
    return table;
}

/// Largest i with beta_i(R/I) nonzero.
inline int projective_dimension(const MonomialIdeal& I, OracleCaps caps = {}) {
    return oracle_betti(I, caps).pd();
}

/// #L_i = number of i-subsets of the complete-intersection part whose lcm
/// is not divisible by v, for i = 0..q. #L_0 is always 1.
inline std::vector<long long> l_counts(std::span<const Monomial> ci_part, const Monomial& v) {
    for (std::size_t i = 0; i < ci_part.size(); ++i)
        for (std::size_t j = i + 1; j < ci_part.size(); ++j)
            if (ci_part[i].shares_support(ci_part[j]))
                throw DomainError("l_counts requires support-disjoint generators");
    if (v.is_unit()) throw DomainError("l_counts requires a non-unit v");
    const auto lcms = subset_lcms(ci_part);
    std::vector<long long> counts(ci_part.size() + 1, 0);
    for (std::uint64_t mask = 0; mask < lcms.size(); ++mask)
        if (!v.divides(lcms[mask])) ++counts[std::popcount(mask)];
    return counts;
}

}  // namespace monores
