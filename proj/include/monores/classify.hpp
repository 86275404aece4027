#pragma once

#include <optional>
#include <span>
#include <vector>

#include "monores/primes.hpp"

namespace monores {

inline bool supports_pairwise_disjoint(std::span<const Monomial> ms) {
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (ms[i].shares_support(ms[j])) return false;
    return true;
}

/// Monomials form a regular sequence iff their supports are pairwise
/// disjoint.
inline bool is_regular_sequence(std::span<const Monomial> ms) {
    if (ms.empty()) throw InputError("empty sequence");
    for (const auto& m : ms)
        if (m.is_unit()) throw InputError("unit in a candidate regular sequence");
    return supports_pairwise_disjoint(ms);
}

inline bool is_complete_intersection(const MonomialIdeal& I) {
    return supports_pairwise_disjoint(I.gens());
}

/// height(I) = |G(I)| - 1.
inline bool is_almost_complete_intersection(const MonomialIdeal& I) {
    return height(I) == static_cast<int>(I.num_gens()) - 1;
}

struct AciSplit {
    std::vector<Monomial> ci_part;
    Monomial v;
    std::size_t v_index;  // index into the canonical generator list
};

/// For an almost complete intersection, finds a generator v whose removal
/// leaves a complete intersection. Returns nothing for the triangle-shaped
/// forms where every generator pair shares support. When several
/// candidates exist, the canonically last generator wins.
inline std::optional<AciSplit> aci_decompose(const MonomialIdeal& I) {
    if (!is_almost_complete_intersection(I))
        throw DomainError("aci_decompose requires an almost complete intersection");
    const auto& gens = I.gens();
    for (std::size_t k = gens.size(); k-- > 0;) {
        std::vector<Monomial> rest;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != k) rest.push_back(gens[j]);
        if (supports_pairwise_disjoint(rest))
            return AciSplit{std::move(rest), gens[k], k};
    }
    return std::nullopt;
}

/// u is dominant in G(I) iff some variable's exponent in u strictly
/// exceeds that variable's exponent in every other generator.
inline bool is_dominant_generator(const Monomial& u, const MonomialIdeal& I) {
    if (!I.is_generator(u)) throw InputError("monomial is not a minimal generator");
    for (const auto& [v, e] : u.factors()) {
        bool beaten = false;
        for (const auto& w : I.gens()) {
            if (w == u) continue;
            if (w.exponent(v) >= e) {
                beaten = true;
                break;
            }
        }
        if (!beaten) return true;
    }
    return false;
}

inline std::vector<bool> dominant_flags(const MonomialIdeal& I) {
    std::vector<bool> flags;
    flags.reserve(I.num_gens());
    for (const auto& g : I.gens()) flags.push_back(is_dominant_generator(g, I));
    return flags;
}

inline bool is_dominant(const MonomialIdeal& I) {
    const auto flags = dominant_flags(I);
    return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
}

/// At most one generator fails to be dominant.
inline bool is_semidominant(const MonomialIdeal& I) {
    const auto flags = dominant_flags(I);
    return std::count(flags.begin(), flags.end(), false) <= 1;
}

}  // namespace monores
