#pragma once

#include <optional>

#include "monores/classify.hpp"
#include "monores/kty.hpp"
#include "monores/oracle.hpp"

namespace monores {

struct Classification {
    bool is_ci = false;
    bool is_aci = false;
    std::optional<AciSplit> aci_split;
    std::vector<bool> dominant_flags;
    bool is_dominant = false;
    bool is_semidominant = false;
    std::optional<KtyForm> kty;  // squarefree ACI of height >= 2 only
};

inline Classification classify(const MonomialIdeal& I) {
    Classification c;
    c.is_ci = is_complete_intersection(I);
    c.is_aci = is_almost_complete_intersection(I);
    c.dominant_flags = dominant_flags(I);
    c.is_dominant =
        std::all_of(c.dominant_flags.begin(), c.dominant_flags.end(), [](bool b) { return b; });
    c.is_semidominant =
        std::count(c.dominant_flags.begin(), c.dominant_flags.end(), false) <= 1;
    if (c.is_aci) {
        c.aci_split = aci_decompose(I);
        if (I.is_squarefree() && height(I) >= 2) c.kty = kty_form(I);
    }
    return c;
}

/// Cohen-Macaulay decision for an almost complete intersection of shape
/// (u_1,...,u_q, v): R/I is CM iff I is non-dominant. The oracle's
/// projective dimension and the height are returned as evidence and must
/// agree with the verdict through pd = height.
struct CmDecision {
    bool cohen_macaulay = false;
    int height = 0;
    int oracle_pd = 0;
};

inline CmDecision cohen_macaulay_aci(const MonomialIdeal& I, OracleCaps caps = {}) {
    if (!is_almost_complete_intersection(I))
        throw DomainError("cohen_macaulay_aci requires an almost complete intersection");
    if (!aci_decompose(I))
        throw DomainError(
            "cohen_macaulay_aci requires the (u_1..u_q, v) shape; use pd-versus-height directly");
    CmDecision d;
    d.cohen_macaulay = !is_dominant(I);
    d.height = height(I);
    d.oracle_pd = projective_dimension(I, caps);
    if ((d.oracle_pd == d.height) != d.cohen_macaulay)
        throw InvariantError("dominance verdict contradicts pd-versus-height evidence");
    return d;
}

/// The equivalent conditions for an almost complete intersection:
/// Cohen-Macaulay (pd = height), unmixed, and clean. Cleanness is decided
/// through its decidable consequences, Ass = Min together with CM. The
/// three verdicts must agree.
struct AciEquivalence {
    bool cohen_macaulay = false;
    bool unmixed = false;
    bool ass_eq_min = false;
    bool clean = false;
    int height = 0;
    int oracle_pd = 0;
};

inline AciEquivalence aci_equivalence_report(const MonomialIdeal& I, OracleCaps caps = {}) {
    if (!is_almost_complete_intersection(I))
        throw DomainError("aci_equivalence_report requires an almost complete intersection");
    AciEquivalence rep;
    rep.height = height(I);
    rep.oracle_pd = projective_dimension(I, caps);
    rep.cohen_macaulay = rep.oracle_pd == rep.height;
    rep.unmixed = is_unmixed(I);
    const auto min_p = minimal_primes(I);
    const auto ass_p = associated_primes(I);
    rep.ass_eq_min = min_p == ass_p;
    rep.clean = rep.ass_eq_min && rep.cohen_macaulay;
    if (rep.cohen_macaulay != rep.unmixed || rep.clean != rep.cohen_macaulay)
        throw InvariantError("CM / unmixed / clean verdicts disagree on an ACI ideal");
    return rep;
}

}  // namespace monores
