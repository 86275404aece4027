#pragma once

#include <map>
#include <vector>

#include "monores/betti_table.hpp"
#include "monores/classify.hpp"
#include "monores/simplicial.hpp"
#include "monores/taylor.hpp"

namespace monores {

/// Scarf complex of I: subsets of G(I) whose lcm is unique among all
/// subset lcms. Vertices are generator indices in canonical order. The
/// result is checked to be closed under subsets.
inline SimplicialComplex scarf_complex(const MonomialIdeal& I, std::size_t max_gens = 20) {
    const std::size_t q = I.num_gens();
    if (q > max_gens)
        throw ResourceError("Scarf complex capped at " + std::to_string(max_gens) +
                            " generators");
    const auto lcms = subset_lcms(I.gens());
    std::map<Monomial, int> multiplicity;
    for (const auto& m : lcms) ++multiplicity[m];
    std::vector<FaceMask> faces;
    for (std::uint64_t mask = 0; mask < lcms.size(); ++mask)
        if (multiplicity[lcms[mask]] == 1) faces.push_back(mask);
    return SimplicialComplex::from_faces(static_cast<int>(q), faces);  // verifies closure
}

/// The Scarf faces as a labelled chain complex (the restriction of the
/// Taylor differential).
inline ChainComplex scarf_chain_complex(const MonomialIdeal& I, std::size_t max_gens = 20) {
    const auto K = scarf_complex(I, max_gens);
    const auto lcms = subset_lcms(I.gens());
    auto by_card = K.faces_by_card();
    std::vector<std::vector<std::uint64_t>> basis(by_card.begin(), by_card.end());
    return detail::build_subset_complex(I, basis, lcms);
}

/// Betti numbers read off the Scarf complex; valid precisely when the
/// Scarf complex supports a minimal resolution, which semidominance
/// guarantees. beta_i(R/I) counts faces of cardinality i, graded by lcm.
inline BettiTable scarf_betti(const MonomialIdeal& I, std::size_t max_gens = 20) {
    if (!is_semidominant(I))
        throw DomainError(
            "Scarf Betti numbers require a semidominant ideal; the face counts of a "
            "non-semidominant ideal are only a lower bound");
    const auto K = scarf_complex(I, max_gens);
    const auto lcms = subset_lcms(I.gens());
    BettiTable table;
    for (const auto& bucket : K.faces_by_card())
        for (const FaceMask f : bucket)
            table.add(std::popcount(f), lcms[f], 1);
    table.trim();
    return table;
}

}  // namespace monores
