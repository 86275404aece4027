#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "monores/ideal.hpp"
#include "monores/polarize.hpp"

namespace monores {

/// A monomial prime ideal: the ideal generated by a set of variables.
struct MonomialPrime {
    std::vector<VarId> vars;  // sorted by VarId

    std::size_t height() const { return vars.size(); }
    bool contains(const MonomialPrime& other) const {
        return std::includes(vars.begin(), vars.end(), other.vars.begin(), other.vars.end());
    }
    bool operator==(const MonomialPrime& other) const { return vars == other.vars; }
    bool operator<(const MonomialPrime& other) const {
        if (vars.size() != other.vars.size()) return vars.size() < other.vars.size();
        return vars < other.vars;
    }
};

namespace detail {

inline std::vector<std::vector<VarId>> generator_supports(const MonomialIdeal& I) {
    std::vector<std::vector<VarId>> edges;
    edges.reserve(I.num_gens());
    for (const auto& g : I.gens()) edges.push_back(g.support());
    return edges;
}

inline bool hits_all(const std::set<VarId>& cover, const std::vector<std::vector<VarId>>& edges) {
    for (const auto& e : edges) {
        bool hit = false;
        for (VarId v : e)
            if (cover.count(v)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

inline std::vector<MonomialPrime> minimal_filter(std::set<std::vector<VarId>> covers) {
    std::vector<std::vector<VarId>> sorted(covers.begin(), covers.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<MonomialPrime> out;
    for (auto& c : sorted) {
        bool dominated = false;
        for (const auto& kept : out)
            if (std::includes(c.begin(), c.end(), kept.vars.begin(), kept.vars.end())) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(MonomialPrime{std::move(c)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Minimal primes of I: the inclusion-minimal transversals of the
/// hypergraph of generator supports, found by branching on the first
/// uncovered edge. Every minimal transversal is reached; non-minimal
/// leaves are filtered afterwards.
inline std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I) {
    const auto edges = detail::generator_supports(I);
    std::set<std::vector<VarId>> found;
    std::set<VarId> cur;

    auto first_uncovered = [&]() -> const std::vector<VarId>* {
        for (const auto& e : edges) {
            bool hit = false;
            for (VarId v : e)
                if (cur.count(v)) {
                    hit = true;
                    break;
                }
            if (!hit) return &e;
        }
        return nullptr;
    };

    auto rec = [&](auto&& self) -> void {
        const auto* e = first_uncovered();
        if (!e) {
            found.emplace(cur.begin(), cur.end());
            return;
        }
        for (VarId v : *e) {
            cur.insert(v);
            self(self);
            cur.erase(v);
        }
    };
    rec(rec);
    return detail::minimal_filter(std::move(found));
}

/// Reference implementation over all variable subsets; usable up to 20
/// variables. A monotone family's inclusion-minimal members are exactly
/// the covers for which removing any single variable breaks coverage.
inline std::vector<MonomialPrime> minimal_primes_exhaustive(const MonomialIdeal& I) {
    if (I.num_vars() > 20) throw ResourceError("exhaustive transversal scan capped at 20 variables");
    const auto edges = detail::generator_supports(I);
    const auto& vars = I.vars();
    std::set<std::vector<VarId>> covers;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << vars.size()); ++mask) {
        std::set<VarId> cand;
        for (std::size_t k = 0; k < vars.size(); ++k)
            if (mask >> k & 1) cand.insert(vars[k]);
        if (!detail::hits_all(cand, edges)) continue;
        bool minimal = true;
        for (VarId v : cand) {
            std::set<VarId> smaller = cand;
            smaller.erase(v);
            if (detail::hits_all(smaller, edges)) {
                minimal = false;
                break;
            }
        }
        if (minimal) covers.emplace(cand.begin(), cand.end());
    }
    return detail::minimal_filter(std::move(covers));
}

/// Minimum cardinality of a minimal prime.
inline int height(const MonomialIdeal& I) {
    int h = -1;
    for (const auto& p : minimal_primes(I))
        if (h < 0 || static_cast<int>(p.height()) < h) h = static_cast<int>(p.height());
    return h;
}

/// Associated primes, computed as the depolarizations of the minimal
/// primes of the polarization.
inline std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I) {
    if (I.is_squarefree()) return minimal_primes(I);
    const Polarized pol = polarize(I);
    std::set<MonomialPrime> out;
    for (const auto& p : minimal_primes(pol.ideal))
        out.insert(MonomialPrime{depolarize_vars(p.vars, pol.map)});
    return {out.begin(), out.end()};
}

/// True iff every associated prime has height equal to height(I).
inline bool is_unmixed(const MonomialIdeal& I) {
    const int h = height(I);
    for (const auto& p : associated_primes(I))
        if (static_cast<int>(p.height()) != h) return false;
    return true;
}

}  // namespace monores
