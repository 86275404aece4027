#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "monores/matrix.hpp"

namespace monores {

/// Faces are vertex subsets encoded as bitmasks; at most 64 vertices.
using FaceMask = std::uint64_t;

namespace detail {

/// Boundary matrix from faces of cardinality c to cardinality c-1, both
/// lists sorted ascending as masks. Removing the j-th smallest vertex
/// contributes sign (-1)^j.
inline IntMat boundary_matrix(const std::vector<FaceMask>& lower,
                              const std::vector<FaceMask>& upper) {
    IntMat m(lower.size(), upper.size());
    for (std::size_t col = 0; col < upper.size(); ++col) {
        FaceMask rest = upper[col];
        int j = 0;
        while (rest) {
            const FaceMask bit = rest & (~rest + 1);
            const FaceMask sub = upper[col] ^ bit;
            const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
            if (it == lower.end() || *it != sub)
                throw InvariantError("face set is not closed under subsets");
            m.at(static_cast<std::size_t>(it - lower.begin()), col) = (j % 2 == 0) ? 1 : -1;
            rest ^= bit;
            ++j;
        }
    }
    return m;
}

/// Reduced homology dimensions from faces bucketed by cardinality
/// (bucket 0 holds the empty face). Entry c of the result is
/// dim H~_{c-1}. Ranks above max_card are not computed.
inline std::vector<long long> homology_by_card(const std::vector<std::vector<FaceMask>>& by_card,
                                               std::size_t max_card) {
    std::vector<long long> h;
    if (by_card.empty() || by_card[0].empty()) return h;  // void complex
    const std::size_t top = std::min(max_card, by_card.size() - 1);
    std::vector<std::size_t> rank(top + 2, 0);
    for (std::size_t c = 1; c <= top + 1 && c < by_card.size(); ++c)
        rank[c] = exact_rank(boundary_matrix(by_card[c - 1], by_card[c]));
    h.resize(top + 1, 0);
    for (std::size_t c = 0; c <= top; ++c) {
        const long long faces = static_cast<long long>(c < by_card.size() ? by_card[c].size() : 0);
        h[c] = faces - static_cast<long long>(rank[c]) - static_cast<long long>(rank[c + 1]);
    }
    return h;
}

/// A cone has vanishing reduced homology: look for an apex vertex whose
/// insertion maps every face to a face.
inline bool has_cone_apex(const std::vector<std::vector<FaceMask>>& by_card, int n_vertices) {
    std::set<FaceMask> all;
    std::size_t total = 0;
    FaceMask vertex_union = 0;
    for (const auto& bucket : by_card)
        for (FaceMask f : bucket) {
            all.insert(f);
            vertex_union |= f;
            ++total;
        }
    if (total == 0) return false;
    for (int v = 0; v < n_vertices; ++v) {
        const FaceMask bit = FaceMask{1} << v;
        if (!(vertex_union & bit) && total > 1) continue;
        bool apex = true;
        for (FaceMask f : all)
            if (!all.count(f | bit)) {
                apex = false;
                break;
            }
        if (apex) return true;
    }
    return false;
}

}  // namespace detail

/// A finite simplicial complex stored by its facets. Construction from an
/// explicit face list verifies closure under subsets.
class SimplicialComplex {
public:
    static SimplicialComplex from_facets(int n_vertices, std::vector<FaceMask> facets) {
        SimplicialComplex K;
        K.n_ = n_vertices;
        std::sort(facets.begin(), facets.end());
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
        for (FaceMask f : facets) {
            bool dominated = false;
            for (FaceMask g : facets)
                if (g != f && (f & g) == f) {
                    dominated = true;
                    break;
                }
            if (!dominated) K.facets_.push_back(f);
        }
        return K;
    }

    static SimplicialComplex from_faces(int n_vertices, const std::vector<FaceMask>& faces) {
        std::set<FaceMask> set(faces.begin(), faces.end());
        if (!set.empty() && !set.count(0))
            throw InvariantError("nonempty complex must contain the empty face");
        for (FaceMask f : set) {
            FaceMask rest = f;
            while (rest) {
                const FaceMask bit = rest & (~rest + 1);
                if (!set.count(f ^ bit))
                    throw InvariantError("face set is not closed under subsets");
                rest ^= bit;
            }
        }
        std::vector<FaceMask> facets;
        for (FaceMask f : set) {
            bool maximal = true;
            for (FaceMask g : set)
                if (g != f && (f & g) == f) {
                    maximal = false;
                    break;
                }
            if (maximal) facets.push_back(f);
        }
        SimplicialComplex K;
        K.n_ = n_vertices;
        K.facets_ = std::move(facets);
        std::sort(K.facets_.begin(), K.facets_.end());
        return K;
    }

    int n_vertices() const { return n_; }
    const std::vector<FaceMask>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }

    /// -1 for {empty face} alone; faces of dim d have d+1 vertices.
    int dim() const {
        int d = -1;
        for (FaceMask f : facets_) d = std::max(d, std::popcount(f) - 1);
        return facets_.empty() ? -2 : d;
    }

    bool contains(FaceMask f) const {
        for (FaceMask g : facets_)
            if ((f & g) == f) return true;
        return false;
    }

    /// Downward closure of the facets, bucketed by cardinality up to
    /// max_card (all of them when max_card < 0), each bucket sorted.
    std::vector<std::vector<FaceMask>> faces_by_card(int max_card = -1) const {
        std::set<FaceMask> all;
        for (FaceMask f : facets_) {
            // enumerate submasks
            FaceMask sub = f;
            for (;;) {
                all.insert(sub);
                if (sub == 0) break;
                sub = (sub - 1) & f;
            }
        }
        std::size_t top = 0;
        for (FaceMask f : all) top = std::max<std::size_t>(top, std::popcount(f));
        if (max_card >= 0) top = std::min<std::size_t>(top, static_cast<std::size_t>(max_card));
        std::vector<std::vector<FaceMask>> by_card(facets_.empty() ? 0 : top + 1);
        for (FaceMask f : all) {
            const std::size_t c = std::popcount(f);
            if (c < by_card.size()) by_card[c].push_back(f);
        }
        for (auto& bucket : by_card) std::sort(bucket.begin(), bucket.end());
        return by_card;
    }

private:
    int n_ = 0;
    std::vector<FaceMask> facets_;
};

/// dim H~_i(K) over a characteristic-zero field, via exact ranks of the
/// reduced boundary matrices: nullity(d_i) - rank(d_{i+1}).
inline long long simplicial_homology_dim(const SimplicialComplex& K, int i) {
    if (K.is_void()) return 0;
    const std::size_t card = static_cast<std::size_t>(i + 1);  // dim i <-> i+1 vertices
    const auto by_card = K.faces_by_card(static_cast<int>(card) + 1);
    const auto h = detail::homology_by_card(by_card, card);
    return card < h.size() ? h[card] : 0;
}

}  // namespace monores
