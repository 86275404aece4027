#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monores/classify.hpp"
#include "monores/kty.hpp"
#include "monores/matrix.hpp"
#include "monores/polarize.hpp"

namespace monores {

/// Binomial coefficient; 0 whenever the lower index is negative or
/// exceeds the upper one.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt acc = 1;
    for (long long j = 1; j <= k; ++j) {
        acc *= n - k + j;
        acc /= j;
    }
    return acc;
}

enum class BettiRule { CiKoszul, P1, T1, T2a, T2b, T2c, EnPower };

inline std::string betti_rule_name(BettiRule r) {
    switch (r) {
        case BettiRule::CiKoszul: return "CI-Koszul";
        case BettiRule::P1: return "P1";
        case BettiRule::T1: return "T1";
        case BettiRule::T2a: return "T2a";
        case BettiRule::T2b: return "T2b";
        case BettiRule::T2c: return "T2c";
        case BettiRule::EnPower: return "EN-power";
    }
    return "?";
}

/// Closed-form Betti numbers together with the rule that produced them.
/// Totals are beta_i(R/I) for i = 0..pd unless stated otherwise by the
/// rule (the Eagon-Northcott rule reports beta_i of the ideal I^s).
struct FormulaResult {
    std::vector<BigInt> totals;
    BettiRule rule;
    bool via_polarization = false;
    long long q = 0;
    std::optional<long long> s;
    std::optional<KtyTag> form;
    std::vector<std::string> notes;

    std::string rule_name() const {
        std::string name = betti_rule_name(rule);
        if (via_polarization) name += " via T3";
        return name;
    }

    void trim() {
        while (!totals.empty() && totals.back() == 0) totals.pop_back();
    }
};

/// Complete intersection with q generators: the Koszul complex is the
/// minimal resolution, beta_i(R/I) = C(q, i).
inline FormulaResult betti_ci(long long q) {
    if (q < 1) throw InputError("betti_ci requires q >= 1");
    FormulaResult res;
    res.rule = BettiRule::CiKoszul;
    res.q = q;
    for (long long i = 0; i <= q; ++i) res.totals.push_back(binomial(q, i));
    return res;
}

/// Smallest cardinality s of a subset of the complete-intersection part
/// whose lcm is divisible by v, found by increasing-cardinality search.
/// Because the parts are support-disjoint, s also equals the number of
/// parts sharing support with v; the two computations are cross-checked.
inline long long smallest_s(std::span<const Monomial> ci_part, const Monomial& v) {
    if (ci_part.empty()) throw DomainError("smallest_s requires a nonempty CI part");
    if (v.is_unit()) throw DomainError("smallest_s requires a non-unit v");
    if (!supports_pairwise_disjoint(ci_part))
        throw DomainError("smallest_s requires support-disjoint generators");
    for (const auto& u : ci_part)
        if (v.divides(u))
            throw DomainError("v divides a generator; the set is not minimal");

    const auto lcms = subset_lcms(ci_part);
    long long s = -1;
    for (std::size_t target = 1; target <= ci_part.size() && s < 0; ++target)
        for (std::uint64_t mask = 1; mask < lcms.size(); ++mask)
            if (static_cast<std::size_t>(std::popcount(mask)) == target &&
                v.divides(lcms[mask])) {
                s = static_cast<long long>(target);
                break;
            }
    if (s < 0)
        throw DomainError("v divides no subset lcm; the ideal is not of the (u_1..u_q, v) shape");

    long long sharing = 0;
    for (const auto& u : ci_part)
        if (u.shares_support(v)) ++sharing;
    if (sharing != s)
        throw InvariantError("smallest_s fast path disagrees with exhaustive search");
    return s;
}

/// beta_i(R/I) for I = (u_1,...,u_q, v) with s as in smallest_s:
/// C(q+1, i) - C(q+1-s, i-s), which matches C(q+1, i) below s.
inline FormulaResult betti_aci_general(long long q, long long s) {
    if (s < 2 || s > q) throw InputError("betti_aci_general requires 2 <= s <= q");
    FormulaResult res;
    res.rule = BettiRule::T1;
    res.q = q;
    res.s = s;
    for (long long i = 0; i <= q; ++i)
        res.totals.push_back(binomial(q + 1, i) - binomial(q + 1 - s, i - s));
    res.trim();
    return res;
}

/// The s = 2 specialization, kept as its own entry point.
inline FormulaResult betti_aci_pair(long long q) {
    if (q < 2) throw InputError("betti_aci_pair requires q >= 2");
    FormulaResult res = betti_aci_general(q, 2);
    res.rule = BettiRule::P1;
    return res;
}

/// Betti numbers by structural form, for an ideal with total_gens = q+1
/// generators. Star form (i) reduces to the general shape with s = r;
/// forms (ii) and (vi) are dominant, so the Taylor bound is attained
/// (including beta_{q+1} = 1); forms (iii)-(v) share one closed form.
inline FormulaResult betti_kty(const KtyForm& form, long long total_gens) {
    if (total_gens < 3) throw InputError("betti_kty requires at least 3 generators");
    const long long q = total_gens - 1;
    FormulaResult res;
    res.q = q;
    res.form = form.tag;
    switch (form.tag) {
        case KtyTag::i: {
            if (!form.r) throw InputError("form (i) carries the star size r");
            res = betti_aci_general(q, *form.r);
            res.rule = BettiRule::T2a;
            res.form = form.tag;
            res.s = *form.r;
            res.notes.push_back("p read as r");
            break;
        }
        case KtyTag::ii:
        case KtyTag::vi: {
            res.rule = BettiRule::T2b;
            for (long long i = 0; i <= q + 1; ++i) res.totals.push_back(binomial(q + 1, i));
            res.notes.push_back("range extended to i = q+1 by Taylor minimality");
            break;
        }
        case KtyTag::iii:
        case KtyTag::iv:
        case KtyTag::v: {
            res.rule = BettiRule::T2c;
            for (long long i = 0; i <= q + 1; ++i)
                res.totals.push_back(binomial(q + 1, i) - binomial(q - 1, i - 2));
            res.trim();
            break;
        }
    }
    return res;
}

/// Eagon-Northcott: beta_i(I^s) for a complete intersection ideal with q
/// generators. Note the ideal indexing: beta_{i+1}(R/I^s) = beta_i(I^s).
inline FormulaResult betti_ci_power(long long q, long long s) {
    if (q < 1 || s < 1) throw InputError("betti_ci_power requires q >= 1 and s >= 1");
    FormulaResult res;
    res.rule = BettiRule::EnPower;
    res.q = q;
    res.s = s;
    for (long long i = 0; i <= q - 1; ++i)
        res.totals.push_back(binomial(q + s - 1, s + i) * binomial(s + i - 1, i));
    res.trim();
    return res;
}

/// Shifts an ideal-indexed result to cyclic-module indexing.
inline std::vector<BigInt> shift_to_quotient(const std::vector<BigInt>& ideal_totals) {
    std::vector<BigInt> out{1};
    out.insert(out.end(), ideal_totals.begin(), ideal_totals.end());
    return out;
}

/// Routes an ideal to the applicable closed form: complete intersections
/// to the Koszul rule; almost complete intersections through polarization
/// (when needed) and the structural form match. Anything else raises
/// FormulaNotApplicable and callers fall back to the homology oracle.
inline FormulaResult betti_formula_dispatch(const MonomialIdeal& I) {
    if (is_complete_intersection(I)) return betti_ci(static_cast<long long>(I.num_gens()));
    if (!is_almost_complete_intersection(I))
        throw FormulaNotApplicable("no closed form: the ideal is neither CI nor ACI");

    const bool squarefree = I.is_squarefree();
    const MonomialIdeal J = squarefree ? I : polarize(I).ideal;
    if (height(J) < 2)
        throw FormulaNotApplicable("no closed form for almost complete intersections of height 1");

    const KtyForm form = kty_form(J);
    const long long q = static_cast<long long>(J.num_gens()) - 1;
    FormulaResult res;
    if (form.tag == KtyTag::i) {
        const auto split = aci_decompose(J);
        if (!split) throw InvariantError("star-shaped ideal failed to decompose");
        const long long s = smallest_s(split->ci_part, split->v);
        if (s != *form.r)
            throw InvariantError("smallest_s disagrees with the star size of form (i)");
        res = betti_kty(form, q + 1);
    } else {
        res = betti_kty(form, q + 1);
    }
    res.via_polarization = !squarefree;
    return res;
}

}  // namespace monores
