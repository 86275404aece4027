#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "monores/ideal.hpp"

namespace monores {

/// Minimal generators of the colon ideal (prefix) : u.
inline std::vector<Monomial> colon_ideal_gens(std::span<const Monomial> prefix,
                                              const Monomial& u) {
    std::vector<Monomial> gens;
    gens.reserve(prefix.size());
    for (const auto& p : prefix) gens.push_back(p.colon(u));
    return antichain(std::move(gens));
}

namespace detail {

inline bool all_variables(const std::vector<Monomial>& gens) {
    return std::all_of(gens.begin(), gens.end(),
                       [](const Monomial& g) { return g.degree() == 1; });
}

}  // namespace detail

/// Searches for an ordering of G(I) whose successive colon ideals are all
/// generated by variables. Exhaustive DFS with prefix pruning: a full
/// order is valid iff every prefix step is, so pruning loses nothing.
/// Returns the generator indices of the first valid order found.
inline std::optional<std::vector<std::size_t>> has_linear_quotients(const MonomialIdeal& I,
                                                                    std::size_t max_gens = 8) {
    const std::size_t q = I.num_gens();
    if (q > max_gens)
        throw ResourceError("linear-quotients search capped at " + std::to_string(max_gens) +
                            " generators");
    std::vector<std::size_t> order;
    std::vector<bool> used(q, false);
    std::vector<Monomial> prefix;

    auto rec = [&](auto&& self) -> bool {
        if (order.size() == q) return true;
        for (std::size_t k = 0; k < q; ++k) {
            if (used[k]) continue;
            if (!prefix.empty() && !detail::all_variables(colon_ideal_gens(prefix, I.gens()[k])))
                continue;
            used[k] = true;
            order.push_back(k);
            prefix.push_back(I.gens()[k]);
            if (self(self)) return true;
            prefix.pop_back();
            order.pop_back();
            used[k] = false;
        }
        return false;
    };
    if (rec(rec)) return order;
    return std::nullopt;
}

/// Weak polymatroidality with respect to a variable order: whenever two
/// generators agree on the first t-1 variables and deg_t(u) > deg_t(v),
/// some j > t with x_j | v must satisfy x_t * (v / x_j) in I.
inline bool is_weakly_polymatroidal(const MonomialIdeal& I, std::span<const VarId> order) {
    for (VarId v : I.vars())
        if (std::find(order.begin(), order.end(), v) == order.end())
            throw InputError("variable order must cover all ring variables");

    const auto& gens = I.gens();
    for (const auto& u : gens) {
        for (const auto& w : gens) {
            if (u == w) continue;
            std::size_t t = order.size();
            for (std::size_t k = 0; k < order.size(); ++k)
                if (u.exponent(order[k]) != w.exponent(order[k])) {
                    t = k;
                    break;
                }
            if (t == order.size()) continue;
            if (u.exponent(order[t]) < w.exponent(order[t])) continue;
            bool exchanged = false;
            for (std::size_t j = t + 1; j < order.size() && !exchanged; ++j) {
                if (w.exponent(order[j]) == 0) continue;
                const Monomial swapped =
                    w.divide_exact(Monomial::variable(order[j])) * Monomial::variable(order[t]);
                if (I.contains(swapped)) exchanged = true;
            }
            if (!exchanged) return false;
        }
    }
    return true;
}

/// Exhaustive search for a witnessing order; capped since the search is
/// factorial in the number of variables.
inline std::optional<std::vector<VarId>> find_weakly_polymatroidal_order(
    const MonomialIdeal& I, std::size_t max_vars = 8) {
    if (I.num_vars() > max_vars)
        throw ResourceError("weakly-polymatroidal order search capped at " +
                            std::to_string(max_vars) + " variables");
    std::vector<VarId> order = I.vars();
    std::sort(order.begin(), order.end());
    do {
        if (is_weakly_polymatroidal(I, order)) return order;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

}  // namespace monores
