#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "monores/classification.hpp"
#include "monores/corpus.hpp"
#include "monores/duality.hpp"
#include "monores/formulas.hpp"
#include "monores/json_io.hpp"
#include "monores/quotients.hpp"
#include "monores/scarf.hpp"
#include "monores/taylor.hpp"

namespace monores {

struct CheckResult {
    std::string name;
    long long instances = 0;
    long long violations = 0;
    std::vector<std::string> examples;  // first few offending ideals
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::size_t generated = 0;
    std::size_t from_file = 0;
    std::vector<CheckResult> checks;
    bool passed = true;
};

namespace detail {

class VerifyRunner {
public:
    explicit VerifyRunner(const Caps& caps) : caps_(caps) {}

    /// Runs one named check; a ResourceError skips the instance, any
    /// other failure (or a false return) records a violation.
    void run(const std::string& name, const MonomialIdeal& I,
             const std::function<bool()>& check) {
        CheckResult& slot = find(name);
        try {
            const bool ok = check();
            ++slot.instances;
            if (!ok) record(slot, I, "");
        } catch (const ResourceError&) {
            // instance above caps for this check; not counted
        } catch (const std::exception& e) {
            ++slot.instances;
            record(slot, I, e.what());
        }
    }

    std::vector<CheckResult> results() const { return checks_; }
    const Caps& caps() const { return caps_; }

private:
    CheckResult& find(const std::string& name) {
        for (auto& c : checks_)
            if (c.name == name) return c;
        checks_.push_back(CheckResult{name, 0, 0, {}});
        return checks_.back();
    }

    static void record(CheckResult& slot, const MonomialIdeal& I, const std::string& why) {
        ++slot.violations;
        if (slot.examples.size() < 5)
            slot.examples.push_back(I.str() + (why.empty() ? "" : " [" + why + "]"));
    }

    Caps caps_;
    std::vector<CheckResult> checks_;
};

inline bool totals_match(const std::vector<BigInt>& formula, const std::vector<long long>& oracle) {
    if (formula.size() != oracle.size()) return false;
    for (std::size_t i = 0; i < oracle.size(); ++i)
        if (formula[i] != oracle[i]) return false;
    return true;
}

inline void verify_one(VerifyRunner& r, const MonomialIdeal& I) {
    const std::size_t q = I.num_gens();

    r.run("minimalize-idempotent-canonical", I, [&] {
        std::vector<Monomial> padded(I.gens().rbegin(), I.gens().rend());
        for (const auto& g : I.gens()) padded.push_back(g * I.gens().front());
        return MonomialIdeal::make(I.vars(), padded) == I;
    });

    r.run("minimal-primes-inside-associated", I, [&] {
        const auto min_p = minimal_primes(I);
        const auto ass_p = associated_primes(I);
        for (const auto& p : min_p)
            if (std::find(ass_p.begin(), ass_p.end(), p) == ass_p.end()) return false;
        for (const auto& p : ass_p) {
            bool over_min = false;
            for (const auto& m : min_p)
                if (p.contains(m)) over_min = true;
            if (!over_min) return false;
        }
        return true;
    });

    r.run("height-vs-complete-intersection", I, [&] {
        const int h = height(I);
        if (h > static_cast<int>(q)) return false;
        return (h == static_cast<int>(q)) == is_complete_intersection(I);
    });

    if (I.is_squarefree()) {
        r.run("alexander-dual-involution", I, [&] {
            const auto dual = alexander_dual(I);
            if (dual.num_gens() != minimal_primes(I).size()) return false;
            return alexander_dual(dual) == I;
        });
    }

    r.run("polarization-shape", I, [&] {
        const auto pol = polarize(I);
        if (pol.ideal.num_gens() != q || !pol.ideal.is_squarefree()) return false;
        std::vector<Monomial> back;
        for (const auto& g : pol.ideal.gens()) back.push_back(depolarize(g, pol.map));
        return MonomialIdeal::make(I.vars(), back) == I;
    });

    BettiTable betti;
    try {
        betti = oracle_betti(I, r.caps().oracle);
    } catch (const ResourceError&) {
        return;  // remaining checks all need the oracle
    }

    r.run("betti-alternating-sum-zero", I, [&] {
        long long acc = 0;
        for (std::size_t i = 0; i < betti.totals.size(); ++i)
            acc += (i % 2 == 0 ? 1 : -1) * betti.totals[i];
        return acc == 0;
    });

    r.run("betti-degree-zero-and-one", I, [&] {
        if (betti.total(0) != 1 || betti.entries.count({0, Monomial{}}) == 0) return false;
        if (betti.total(1) != static_cast<long long>(q)) return false;
        for (const auto& g : I.gens()) {
            const auto it = betti.entries.find({1, g});
            if (it == betti.entries.end() || it->second != 1) return false;
        }
        return true;
    });

    r.run("taylor-and-brun-romer-bounds", I, [&] {
        const int pd = betti.pd();
        for (int i = 0; i <= pd; ++i) {
            const BigInt upper = binomial(static_cast<long long>(q), i);
            const BigInt lower = binomial(pd, i);
            if (betti.total(i) > upper || betti.total(i) < lower) return false;
        }
        return true;
    });

    r.run("betti-multidegrees-in-lcm-lattice", I, [&] {
        const auto lcms = subset_lcms(I.gens());
        const std::set<Monomial> lattice(lcms.begin(), lcms.end());
        for (const auto& [key, dim] : betti.entries)
            if (!lattice.count(key.second)) return false;
        return true;
    });

    r.run("hhmy-truncation", I, [&] {
        int top = -1;
        for (int i = 0; i <= betti.pd(); ++i)
            if (betti.total(i) == binomial(static_cast<long long>(q), i)) top = i;
        for (int j = 0; j <= top; ++j)
            if (betti.total(j) != binomial(static_cast<long long>(q), j)) return false;
        return true;
    });

    r.run("dominant-taylor-minimal-binomial", I, [&] {
        const bool dominant = is_dominant(I);
        const bool taylor_min = is_taylor_minimal(I, r.caps().complex_gens);
        bool binomial_betti = betti.pd() == static_cast<int>(q);
        for (int i = 0; i <= betti.pd() && binomial_betti; ++i)
            binomial_betti = betti.total(i) == binomial(static_cast<long long>(q), i);
        return dominant == taylor_min && taylor_min == binomial_betti;
    });

    r.run("scarf-closure-and-semidominant-betti", I, [&] {
        scarf_complex(I, r.caps().complex_gens);  // verifies closure internally
        if (!is_semidominant(I)) return true;
        return scarf_betti(I, r.caps().complex_gens) == betti;
    });

    r.run("polarization-preserves-betti", I, [&] {
        const auto pol = polarize(I);
        return oracle_betti(pol.ideal, r.caps().oracle).totals == betti.totals;
    });

    r.run("power-product-identity", I, [&] {
        if (q > 8) return true;
        const auto I2 = ideal_power(I, 2);
        std::vector<Monomial> products;
        for (const auto& a : I.gens())
            for (const auto& b : I2.gens()) products.push_back(a * b);
        return MonomialIdeal::make(I.vars(), products) == ideal_power(I, 3);
    });

    if (!is_almost_complete_intersection(I)) return;

    r.run("formula-matches-oracle-on-aci", I, [&] {
        try {
            const FormulaResult f = betti_formula_dispatch(I);
            return totals_match(f.totals, betti.totals);
        } catch (const FormulaNotApplicable&) {
            return height(I) < 2;  // only height-1 ACIs lack a closed form
        }
    });

    r.run("cm-unmixed-clean-equivalence", I, [&] {
        const AciEquivalence rep = aci_equivalence_report(I, r.caps().oracle);
        return rep.cohen_macaulay == rep.unmixed;
    });

    const auto split = aci_decompose(I);
    if (split) {
        r.run("betti-from-l-counts", I, [&] {
            const auto counts = l_counts(split->ci_part, split->v);
            for (int i = 0; i <= betti.pd(); ++i) {
                const long long li = i <= static_cast<int>(counts.size()) - 1 ? counts[i] : 0;
                const long long lprev = (i >= 1) ? counts[i - 1] : 0;
                if (betti.total(i) != li + lprev) return false;
            }
            return true;
        });

        r.run("cm-iff-nondominant", I, [&] {
            const CmDecision d = cohen_macaulay_aci(I, r.caps().oracle);
            return d.cohen_macaulay == !is_dominant(I) &&
                   (d.oracle_pd == d.height) == d.cohen_macaulay;
        });

        if (I.is_squarefree()) {
            r.run("dual-of-aci-has-linear-quotients", I, [&] {
                const auto dual = alexander_dual(I);
                if (dual.num_gens() > 8) return true;
                return has_linear_quotients(dual).has_value();
            });
            r.run("dual-of-aci-weakly-polymatroidal", I, [&] {
                const auto dual = alexander_dual(I);
                if (dual.num_vars() > 6 || dual.num_gens() > 10) return true;
                return find_weakly_polymatroidal_order(dual).has_value();
            });
        }
    }
}

}  // namespace detail

/// Runs the invariant battery over file-provided ideals plus a generated
/// corpus (random ideals, star ACIs and one instance of each structural
/// form per round). Deterministic for a fixed seed and count.
inline VerifyReport run_verify(const std::vector<MonomialIdeal>& file_ideals, std::uint64_t seed,
                               std::size_t count, const Caps& caps = {}) {
    detail::VerifyRunner runner(caps);
    VerifyReport report;
    report.seed = seed;
    report.from_file = file_ideals.size();

    for (const auto& I : file_ideals) detail::verify_one(runner, I);

    CorpusRng rng(seed);
    std::vector<MonomialIdeal> generated;
    const std::size_t rounds = std::max<std::size_t>(1, count / 5);
    for (std::size_t k = 0; k < count; ++k)
        generated.push_back(random_monomial_ideal(rng, 5, 8, 3));
    for (std::size_t k = 0; k < count; ++k)
        generated.push_back(random_star_aci(rng, 5, 10).ideal);
    for (std::size_t k = 0; k < rounds; ++k)
        for (const KtyTag tag : {KtyTag::i, KtyTag::ii, KtyTag::iii, KtyTag::iv, KtyTag::v,
                                 KtyTag::vi})
            generated.push_back(random_kty_instance(rng, tag, 10));
    report.generated = generated.size();
    for (const auto& I : generated) detail::verify_one(runner, I);

    report.checks = runner.results();
    for (const auto& c : report.checks)
        if (c.violations > 0) report.passed = false;
    return report;
}

inline njson to_json(const VerifyReport& r) {
    njson j;
    j["schema"] = "monores/verify/1";
    j["seed"] = r.seed;
    j["generated"] = r.generated;
    j["from_file"] = r.from_file;
    j["passed"] = r.passed;
    j["checks"] = njson::array();
    for (const auto& c : r.checks) {
        njson cj;
        cj["name"] = c.name;
        cj["instances"] = c.instances;
        cj["violations"] = c.violations;
        cj["examples"] = c.examples;
        j["checks"].push_back(cj);
    }
    return j;
}

inline std::string verify_text(const VerifyReport& r) {
    std::string out;
    out += "verify: seed=" + std::to_string(r.seed) +
           " generated=" + std::to_string(r.generated) +
           " from_file=" + std::to_string(r.from_file) + "\n";
    for (const auto& c : r.checks) {
        out += (c.violations ? "FAIL " : "ok   ");
        out += c.name + "  (" + std::to_string(c.instances) + " instances";
        if (c.violations) out += ", " + std::to_string(c.violations) + " violations";
        out += ")\n";
        for (const auto& e : c.examples) out += "       e.g. " + e + "\n";
    }
    out += r.passed ? "all checks passed\n" : "violations found\n";
    return out;
}

}  // namespace monores
