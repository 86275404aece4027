#pragma once

#include <vector>

#include "monores/primes.hpp"

namespace monores {

/// Alexander dual of a squarefree ideal: one generator per minimal prime,
/// the product of its variables.
inline MonomialIdeal alexander_dual(const MonomialIdeal& I) {
    if (!I.is_squarefree()) throw DomainError("Alexander dual requires a squarefree ideal");
    std::vector<Monomial> gens;
    for (const auto& p : minimal_primes(I)) {
        std::vector<Monomial::Factor> fs;
        for (VarId v : p.vars) fs.emplace_back(v, 1);
        gens.push_back(Monomial::make(std::move(fs)));
    }
    return MonomialIdeal::make(I.vars(), std::move(gens));
}

}  // namespace monores
