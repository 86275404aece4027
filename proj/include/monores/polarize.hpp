#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monores/ideal.hpp"

namespace monores {

/// Bookkeeping for the polarization I -> I^pol: (original variable, slot)
/// pairs map injectively to fresh variables.
struct PolarizationMap {
    std::map<std::pair<VarId, int>, VarId> forward;  // (base, slot >= 1) -> fresh
    std::map<VarId, std::pair<VarId, int>> backward;

    VarId fresh(VarId base, int slot) const {
        auto it = forward.find({base, slot});
        if (it == forward.end()) throw InputError("no polarization slot for variable");
        return it->second;
    }
};

struct Polarized {
    MonomialIdeal ideal;
    PolarizationMap map;
};

/// Standard polarization: x^a in a generator becomes x_1 x_2 ... x_a over
/// slot variables shared across generators. The result is squarefree with
/// the same number of minimal generators.
inline Polarized polarize(const MonomialIdeal& I) {
    std::set<std::string> taken;
    for (VarId v : I.vars()) taken.insert(VarPool::name(v));

    PolarizationMap pm;
    std::vector<VarId> new_vars;
    for (VarId v : I.vars()) {
        int max_exp = 0;
        for (const auto& g : I.gens()) max_exp = std::max(max_exp, g.exponent(v));
        if (max_exp == 0) continue;  // variable unused by the generators
        std::string sep = "_";
        auto collides = [&](const std::string& s) {
            for (int j = 1; j <= max_exp; ++j)
                if (taken.count(VarPool::name(v) + s + std::to_string(j))) return true;
            return false;
        };
        while (collides(sep)) sep += "_";
        for (int j = 1; j <= max_exp; ++j) {
            const VarId slot = VarPool::intern(VarPool::name(v) + sep + std::to_string(j));
            pm.forward[{v, j}] = slot;
            pm.backward[slot] = {v, j};
            new_vars.push_back(slot);
            taken.insert(VarPool::name(slot));
        }
    }

    std::vector<Monomial> new_gens;
    for (const auto& g : I.gens()) {
        std::vector<Monomial::Factor> fs;
        for (const auto& [v, e] : g.factors())
            for (int j = 1; j <= e; ++j) fs.emplace_back(pm.fresh(v, j), 1);
        new_gens.push_back(Monomial::make(std::move(fs)));
    }
    return Polarized{MonomialIdeal::make(std::move(new_vars), std::move(new_gens)), std::move(pm)};
}

/// Collapses slot variables back to their base variables, summing exponents.
inline Monomial depolarize(const Monomial& m, const PolarizationMap& pm) {
    std::vector<Monomial::Factor> fs;
    for (const auto& [v, e] : m.factors()) {
        auto it = pm.backward.find(v);
        if (it == pm.backward.end()) throw InputError("monomial not in the polarized ring");
        fs.emplace_back(it->second.first, e);
    }
    return Monomial::make(std::move(fs));
}

/// Collapses a set of slot variables to base variables (deduplicated).
inline std::vector<VarId> depolarize_vars(const std::vector<VarId>& vars,
                                          const PolarizationMap& pm) {
    std::set<VarId> base;
    for (VarId v : vars) {
        auto it = pm.backward.find(v);
        if (it == pm.backward.end()) throw InputError("variable not in the polarized ring");
        base.insert(it->second.first);
    }
    return {base.begin(), base.end()};
}

}  // namespace monores
