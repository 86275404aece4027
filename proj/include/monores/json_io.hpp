#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "monores/classification.hpp"
#include "monores/duality.hpp"
#include "monores/formulas.hpp"
#include "monores/oracle.hpp"
#include "monores/parse.hpp"
#include "monores/scarf.hpp"
#include "monores/taylor.hpp"

namespace monores {

using njson = nlohmann::json;

/// Values that can exceed 2^53 are emitted as decimal strings so JSON
/// consumers never lose precision.
inline njson json_big(const BigInt& v) {
    static const BigInt bound = BigInt(1) << 53;
    if (v >= -bound && v <= bound) return static_cast<std::int64_t>(v);
    return v.str();
}

inline njson to_json(const MonomialIdeal& I) {
    njson j;
    j["vars"] = njson::array();
    for (VarId v : I.vars()) j["vars"].push_back(VarPool::name(v));
    j["generators"] = njson::array();
    for (const auto& g : I.gens()) j["generators"].push_back(g.str(I.vars()));
    return j;
}

inline njson to_json(const BettiTable& t, const MonomialIdeal& I) {
    njson j;
    j["totals"] = t.totals;
    j["projective_dimension"] = t.pd();
    j["entries"] = njson::array();
    for (const auto& [key, dim] : t.entries) {
        njson e;
        e["i"] = key.first;
        e["multidegree"] = key.second.str(I.vars());
        e["value"] = dim;
        j["entries"].push_back(e);
    }
    return j;
}

inline njson to_json(const FormulaResult& f) {
    njson j;
    j["rule"] = f.rule_name();
    j["q"] = f.q;
    j["s"] = f.s ? njson(*f.s) : njson(nullptr);
    j["form"] = f.form ? njson(std::string(kty_tag_name(*f.form))) : njson(nullptr);
    j["notes"] = f.notes;
    j["totals"] = njson::array();
    for (const auto& b : f.totals) j["totals"].push_back(json_big(b));
    return j;
}

inline njson to_json(const KtyForm& form, const MonomialIdeal& I) {
    njson j;
    j["form"] = std::string(kty_tag_name(form.tag));
    j["r"] = form.r ? njson(*form.r) : njson(nullptr);
    j["u_parts"] = njson::array();
    for (const auto& u : form.u_parts) j["u_parts"].push_back(u.str(I.vars()));
    j["v_parts"] = njson::array();
    for (const auto& v : form.v_parts) j["v_parts"].push_back(v.str(I.vars()));
    return j;
}

inline njson to_json(const std::vector<MonomialPrime>& primes, const MonomialIdeal& I) {
    njson arr = njson::array();
    for (const auto& p : primes) {
        std::vector<VarId> vars = p.vars;
        std::sort(vars.begin(), vars.end(),
                  [&I](VarId a, VarId b) { return I.var_rank(a) < I.var_rank(b); });
        njson prime = njson::array();
        for (VarId v : vars) prime.push_back(VarPool::name(v));
        arr.push_back(prime);
    }
    return arr;
}

inline njson to_json(const ChainComplex& cx, const MonomialIdeal& I) {
    njson j;
    j["degrees"] = njson::array();
    for (std::size_t d = 0; d < cx.basis.size(); ++d) {
        njson deg;
        deg["i"] = d;
        deg["rank"] = cx.basis[d].size();
        deg["basis"] = njson::array();
        for (std::size_t k = 0; k < cx.basis[d].size(); ++k) {
            njson e;
            e["generators"] = njson::array();
            std::uint64_t rest = cx.basis[d][k];
            while (rest) {
                e["generators"].push_back(std::countr_zero(rest));
                rest &= rest - 1;
            }
            e["lcm"] = cx.labels[d][k].str(I.vars());
            deg["basis"].push_back(e);
        }
        j["degrees"].push_back(deg);
    }
    j["differentials"] = njson::array();
    for (std::size_t d = 1; d < cx.diff.size(); ++d) {
        const auto& m = cx.diff[d];
        njson mj;
        mj["from"] = d;
        mj["rows"] = m.rows;
        mj["cols"] = m.cols;
        mj["entries"] = njson::array();
        for (std::size_t c = 0; c < m.cols; ++c)
            for (std::size_t k = m.col_ptr[c]; k < m.col_ptr[c + 1]; ++k)
                mj["entries"].push_back(njson::array({m.row_idx[k], c, m.val[k]}));
        j["differentials"].push_back(mj);
    }
    return j;
}

// ---------------------------------------------------------------------
// Command-level payloads shared by the CLI and the test suite.

struct Caps {
    std::size_t complex_gens = 20;  // Taylor / Scarf subset enumeration
    OracleCaps oracle;
};

inline njson cli_classify_json(const MonomialIdeal& I, const Caps& caps) {
    const Classification c = classify(I);
    njson j;
    j["schema"] = "monores/classify/1";
    j["ideal"] = to_json(I);
    j["is_complete_intersection"] = c.is_ci;
    j["is_almost_complete_intersection"] = c.is_aci;
    if (c.aci_split) {
        njson split;
        split["ci_part"] = njson::array();
        for (const auto& u : c.aci_split->ci_part) split["ci_part"].push_back(u.str(I.vars()));
        split["v"] = c.aci_split->v.str(I.vars());
        j["aci_split"] = split;
    } else {
        j["aci_split"] = nullptr;
    }
    j["dominant_flags"] = c.dominant_flags;
    j["is_dominant"] = c.is_dominant;
    j["is_semidominant"] = c.is_semidominant;
    j["kty"] = c.kty ? to_json(*c.kty, I) : njson(nullptr);

    j["cohen_macaulay"] = nullptr;
    if (c.is_aci) {
        njson cm;
        cm["height"] = height(I);
        if (c.aci_split) {
            try {
                const CmDecision d = cohen_macaulay_aci(I, caps.oracle);
                cm["value"] = d.cohen_macaulay;
                cm["projective_dimension"] = d.oracle_pd;
                cm["evidence"] = "dominance and oracle";
            } catch (const ResourceError&) {
                cm["value"] = !c.is_dominant;
                cm["projective_dimension"] = nullptr;
                cm["evidence"] = "dominance only; oracle above caps";
            }
        } else {
            try {
                const int pd = projective_dimension(I, caps.oracle);
                cm["value"] = pd == height(I);
                cm["projective_dimension"] = pd;
                cm["evidence"] = "pd versus height";
            } catch (const ResourceError&) {
                cm["value"] = nullptr;
                cm["projective_dimension"] = nullptr;
                cm["evidence"] = "oracle above caps";
            }
        }
        j["cohen_macaulay"] = cm;
    }
    return j;
}

inline njson cli_betti_json(const MonomialIdeal& I, const std::string& method, const Caps& caps) {
    njson j;
    j["schema"] = "monores/betti/1";
    j["ideal"] = to_json(I);
    j["method"] = method;
    njson methods;
    methods["formula"] = nullptr;
    methods["oracle"] = nullptr;
    methods["scarf"] = nullptr;

    std::optional<FormulaResult> formula;
    std::optional<BettiTable> oracle, scarf;

    if (method == "formula" || method == "all") {
        try {
            formula = betti_formula_dispatch(I);
            methods["formula"] = to_json(*formula);
        } catch (const FormulaNotApplicable& e) {
            if (method == "formula") throw;
            methods["formula"] = nullptr;
        }
    }
    if (method == "oracle" || method == "all") {
        oracle = oracle_betti(I, caps.oracle);
        methods["oracle"] = to_json(*oracle, I);
    }
    if (method == "scarf" || method == "all") {
        if (method == "all" && !is_semidominant(I)) {
            methods["scarf"] = nullptr;
        } else {
            scarf = scarf_betti(I, caps.complex_gens);
            methods["scarf"] = to_json(*scarf, I);
        }
    }
    j["methods"] = methods;

    njson agree(nullptr);
    if (method == "all") {
        bool ok = true;
        if (formula && oracle) {
            const auto& t = oracle->totals;
            ok = ok && formula->totals.size() == t.size();
            if (ok)
                for (std::size_t i = 0; i < t.size(); ++i)
                    ok = ok && formula->totals[i] == t[i];
        }
        if (oracle && scarf) ok = ok && oracle->totals == scarf->totals;
        if (!ok)
            throw InvariantError("Betti methods disagree on " + I.str());
        agree = ok;
    }
    j["agree"] = agree;
    return j;
}

inline njson cli_resolution_json(const MonomialIdeal& I, const std::string& kind,
                                 const Caps& caps) {
    njson j;
    j["schema"] = "monores/resolution/1";
    j["ideal"] = to_json(I);
    j["kind"] = kind;
    const ChainComplex cx = kind == "scarf" ? scarf_chain_complex(I, caps.complex_gens)
                                            : taylor_complex(I, caps.complex_gens);
    j["complex"] = to_json(cx, I);
    return j;
}

inline njson cli_primes_json(const MonomialIdeal& I, bool with_associated) {
    njson j;
    j["schema"] = with_associated ? "monores/ass/1" : "monores/primes/1";
    j["ideal"] = to_json(I);
    j["height"] = height(I);
    j["minimal_primes"] = to_json(minimal_primes(I), I);
    if (with_associated) {
        j["associated_primes"] = to_json(associated_primes(I), I);
        j["unmixed"] = is_unmixed(I);
    }
    return j;
}

inline njson cli_dual_json(const MonomialIdeal& I) {
    njson j;
    j["schema"] = "monores/dual/1";
    j["ideal"] = to_json(I);
    j["dual"] = to_json(alexander_dual(I));
    return j;
}

inline njson cli_polarize_json(const MonomialIdeal& I) {
    const Polarized pol = polarize(I);
    njson j;
    j["schema"] = "monores/polarize/1";
    j["ideal"] = to_json(I);
    j["polarization"] = to_json(pol.ideal);
    j["slots"] = njson::array();
    for (const auto& [key, fresh] : pol.map.forward) {
        njson s;
        s["var"] = VarPool::name(key.first);
        s["slot"] = key.second;
        s["fresh"] = VarPool::name(fresh);
        j["slots"].push_back(s);
    }
    return j;
}

inline njson cli_power_json(const MonomialIdeal& I, int s, bool with_betti, const Caps& caps) {
    njson j;
    j["schema"] = "monores/power/1";
    j["ideal"] = to_json(I);
    j["s"] = s;
    const MonomialIdeal P = ideal_power(I, s);
    j["power"] = to_json(P);
    j["betti"] = with_betti ? to_json(oracle_betti(P, caps.oracle), P) : njson(nullptr);
    return j;
}

}  // namespace monores
