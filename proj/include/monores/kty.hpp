#pragma once

#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "monores/classify.hpp"

namespace monores {

// Structural forms of a squarefree almost complete intersection of height
// >= 2. Star shapes (i)/(ii): one generator shares support with r others,
// which are pairwise disjoint. Triangle shapes (iii)-(vi): three
// generators pairwise share support; the tag counts their leftover
// factors. Remaining generators are support-disjoint from everything.
enum class KtyTag { i, ii, iii, iv, v, vi };

inline std::string_view kty_tag_name(KtyTag t) {
    switch (t) {
        case KtyTag::i: return "i";
        case KtyTag::ii: return "ii";
        case KtyTag::iii: return "iii";
        case KtyTag::iv: return "iv";
        case KtyTag::v: return "v";
        case KtyTag::vi: return "vi";
    }
    return "?";
}

struct KtyForm {
    KtyTag tag;
    std::vector<Monomial> u_parts;  // triangle forms carry u1,u2,u3 (possibly trivial)
    std::vector<Monomial> v_parts;
    std::optional<int> r;  // star forms only
};

namespace detail {

inline void kty_check_reassembly(const MonomialIdeal& I, const std::vector<Monomial>& rebuilt) {
    std::set<Monomial> a(I.gens().begin(), I.gens().end());
    std::set<Monomial> b(rebuilt.begin(), rebuilt.end());
    if (a != b || rebuilt.size() != I.num_gens())
        throw InvariantError("KTY decomposition does not reassemble to G(I)");
}

}  // namespace detail

/// Matches a squarefree almost complete intersection of height >= 2
/// against the six structural forms via its support-sharing graph.
inline KtyForm kty_form(const MonomialIdeal& I) {
    if (!I.is_squarefree()) throw ClassificationError("KTY forms require a squarefree ideal");
    if (!is_almost_complete_intersection(I))
        throw ClassificationError("KTY forms require an almost complete intersection");
    if (height(I) < 2) throw ClassificationError("KTY forms require height >= 2");

    const auto& gens = I.gens();
    const std::size_t n = gens.size();
    std::vector<std::vector<std::size_t>> adj(n);
    std::size_t edge_count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gens[i].shares_support(gens[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
                ++edge_count;
            }

    std::vector<std::size_t> shared;  // non-isolated vertices
    std::vector<std::size_t> tail;
    for (std::size_t i = 0; i < n; ++i)
        (adj[i].empty() ? tail : shared).push_back(i);

    std::vector<Monomial> tail_gens;
    for (std::size_t i : tail) tail_gens.push_back(gens[i]);

    if (shared.size() == 3 && edge_count == 3) {
        // triangle: order the three so generators with a leftover factor
        // come first, matching the form templates
        std::vector<std::size_t> tri = shared;
        auto leftover = [&](std::size_t a, std::size_t b, std::size_t c) {
            return gens[a].divide_exact(Monomial::gcd(gens[a], gens[b]) *
                                        Monomial::gcd(gens[a], gens[c]));
        };
        const Monomial triple =
            Monomial::gcd(Monomial::gcd(gens[tri[0]], gens[tri[1]]), gens[tri[2]]);
        if (!triple.is_unit())
            throw ClassificationError("triangle generators share a common variable");
        std::stable_sort(tri.begin(), tri.end(), [&](std::size_t a, std::size_t b) {
            auto others = [&](std::size_t x) {
                std::vector<std::size_t> o;
                for (std::size_t y : shared)
                    if (y != x) o.push_back(y);
                return o;
            };
            const auto oa = others(a), ob = others(b);
            const bool ua = !leftover(a, oa[0], oa[1]).is_unit();
            const bool ub = !leftover(b, ob[0], ob[1]).is_unit();
            return ua && !ub;
        });
        const Monomial v1 = Monomial::gcd(gens[tri[0]], gens[tri[1]]);
        const Monomial v2 = Monomial::gcd(gens[tri[0]], gens[tri[2]]);
        const Monomial v3 = Monomial::gcd(gens[tri[1]], gens[tri[2]]);
        const Monomial u1 = gens[tri[0]].divide_exact(v1 * v2);
        const Monomial u2 = gens[tri[1]].divide_exact(v1 * v3);
        const Monomial u3 = gens[tri[2]].divide_exact(v2 * v3);
        const int nontrivial = !u1.is_unit() + !u2.is_unit() + !u3.is_unit();

        KtyForm form;
        switch (nontrivial) {
            case 0: form.tag = KtyTag::iii; break;
            case 1: form.tag = KtyTag::iv; break;
            case 2: form.tag = KtyTag::v; break;
            default: form.tag = KtyTag::vi; break;
        }
        form.u_parts = {u1, u2, u3};
        form.u_parts.insert(form.u_parts.end(), tail_gens.begin(), tail_gens.end());
        form.v_parts = {v1, v2, v3};

        std::vector<Monomial> rebuilt = {u1 * v1 * v2, u2 * v1 * v3, u3 * v2 * v3};
        rebuilt.insert(rebuilt.end(), tail_gens.begin(), tail_gens.end());
        detail::kty_check_reassembly(I, rebuilt);
        return form;
    }

    if (shared.size() >= 2) {
        // star: one center adjacent to every other shared vertex, which
        // are pairwise non-adjacent
        std::size_t center = shared[0];
        for (std::size_t i : shared)
            if (adj[i].size() > adj[center].size()) center = i;
        if (adj[center].size() != shared.size() - 1 || edge_count != shared.size() - 1)
            throw ClassificationError("support-sharing graph is neither a star nor a triangle");

        std::vector<std::size_t> neighbors;
        for (std::size_t i : shared)
            if (i != center) neighbors.push_back(i);

        std::vector<Monomial> us, vs;
        Monomial product;  // of the v parts
        for (std::size_t i : neighbors) {
            const Monomial vi = Monomial::gcd(gens[center], gens[i]);
            const Monomial ui = gens[i].divide_exact(vi);
            if (ui.is_unit())
                throw InvariantError("star neighbor divides the center generator");
            vs.push_back(vi);
            us.push_back(ui);
            product = product * vi;
        }

        KtyForm form;
        form.r = static_cast<int>(neighbors.size());
        form.v_parts = vs;
        form.u_parts = us;
        form.u_parts.insert(form.u_parts.end(), tail_gens.begin(), tail_gens.end());

        std::vector<Monomial> rebuilt;
        for (std::size_t k = 0; k < us.size(); ++k) rebuilt.push_back(us[k] * vs[k]);
        rebuilt.insert(rebuilt.end(), tail_gens.begin(), tail_gens.end());

        if (product == gens[center]) {
            form.tag = KtyTag::i;
            rebuilt.push_back(product);
        } else {
            form.tag = KtyTag::ii;
            const Monomial u_extra = gens[center].divide_exact(product);
            form.u_parts.push_back(u_extra);
            rebuilt.push_back(u_extra * product);
        }
        detail::kty_check_reassembly(I, rebuilt);
        return form;
    }

    throw ClassificationError("support-sharing graph is neither a star nor a triangle");
}

}  // namespace monores
