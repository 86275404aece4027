#pragma once

#include <string>
#include <vector>

#include "monores/parse.hpp"

namespace testutil {

inline monores::MonomialIdeal ideal(const std::string& text) {
    return monores::parse_ideal(text);
}

inline monores::Monomial mono(const std::string& text) {
    // parse via a one-generator ideal
    return monores::parse_ideal(text).gens().at(0);
}

inline monores::VarId var(const std::string& name) { return monores::VarPool::intern(name); }

/// Deterministic split-mix generator for hand-rolled property tests.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

/// Random monomial ideal over variables t0..t{nvars-1}.
inline monores::MonomialIdeal random_ideal(Rng& rng, int nvars, int max_gens, int max_exp) {
    using namespace monores;
    std::vector<VarId> vars;
    for (int k = 0; k < nvars; ++k) vars.push_back(VarPool::intern("t" + std::to_string(k)));
    for (;;) {
        std::vector<Monomial> gens;
        const int count = 1 + static_cast<int>(rng.below(max_gens));
        for (int g = 0; g < count; ++g) {
            std::vector<Monomial::Factor> fs;
            for (int k = 0; k < nvars; ++k)
                if (rng.below(3) == 0) {
                    const int e = 1 + static_cast<int>(rng.below(max_exp));
                    fs.emplace_back(vars[k], e);
                }
            if (!fs.empty()) gens.push_back(Monomial::make(std::move(fs)));
        }
        if (gens.empty()) continue;
        return MonomialIdeal::make(vars, std::move(gens));
    }
}

}  // namespace testutil
