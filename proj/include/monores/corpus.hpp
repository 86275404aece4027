#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monores/classify.hpp"
#include "monores/kty.hpp"
#include "monores/parse.hpp"

namespace monores {

/// Split-mix generator; fully deterministic across platforms, which the
/// verify report relies on.
struct CorpusRng {
    std::uint64_t state;
    explicit CorpusRng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool coin() { return below(2) == 0; }
};

namespace detail {

inline std::vector<VarId> corpus_vars(std::size_t n) {
    std::vector<VarId> vars;
    for (std::size_t k = 1; k <= n; ++k) vars.push_back(VarPool::intern("x" + std::to_string(k)));
    return vars;
}

}  // namespace detail

/// A generated almost complete intersection of shape (u_1,...,u_q, v):
/// support-disjoint u_i plus one v that reaches into s of their blocks.
struct StarInstance {
    MonomialIdeal ideal;
    int q = 0;
    int s = 0;
};

/// Random star-shaped ACI with q in [2, max_q], at most max_vars
/// variables, mixed squarefree and non-squarefree. The construction
/// guarantees height = q and that v divides the lcm of exactly s blocks.
inline StarInstance random_star_aci(CorpusRng& rng, int max_q = 6, int max_vars = 12) {
    const int q = static_cast<int>(rng.range(2, max_q));
    const bool squarefree = rng.coin();
    const int max_exp = squarefree ? 1 : 3;
    const int s = static_cast<int>(rng.range(2, q));

    for (;;) {
        // partition a variable budget into q disjoint blocks
        std::vector<int> block_size(q, 1);
        int used = q;
        if (squarefree)  // v needs a proper subset of each chosen block
            for (int k = 0; k < s; ++k) {
                ++block_size[k];
                ++used;
            }
        while (used < max_vars && rng.coin()) {
            ++block_size[rng.below(q)];
            ++used;
        }
        const auto vars = detail::corpus_vars(used);

        std::vector<std::vector<VarId>> blocks(q);
        std::size_t next_var = 0;
        for (int k = 0; k < q; ++k)
            for (int j = 0; j < block_size[k]; ++j) blocks[k].push_back(vars[next_var++]);

        std::vector<Monomial> gens;
        std::vector<std::vector<int>> exps(q);
        for (int k = 0; k < q; ++k) {
            std::vector<Monomial::Factor> fs;
            for (VarId v : blocks[k]) {
                int e = 1 + static_cast<int>(rng.below(max_exp));
                if (!squarefree && block_size[k] == 1 && k < s)
                    e = std::max(e, 2);  // leave room for a strictly smaller v exponent
                exps[k].push_back(e);
                fs.emplace_back(v, e);
            }
            gens.push_back(Monomial::make(std::move(fs)));
        }

        // v: a nonzero sub-exponent vector inside each of the first s
        // blocks, never matching the whole block exponent vector
        std::vector<Monomial::Factor> vf;
        bool ok = true;
        for (int k = 0; k < s && ok; ++k) {
            std::vector<Monomial::Factor> picked;
            bool full = true;
            for (std::size_t j = 0; j < blocks[k].size(); ++j) {
                const int cap = exps[k][j];
                const int e = static_cast<int>(rng.below(cap + 1));  // 0..cap
                if (e > 0) picked.emplace_back(blocks[k][j], e);
                if (e < cap) full = false;
            }
            if (picked.empty()) {
                const std::size_t j = rng.below(blocks[k].size());
                const int e = 1 + static_cast<int>(rng.below(exps[k][j]));
                picked.emplace_back(blocks[k][j], e);
                full = static_cast<int>(blocks[k].size()) == 1 && e == exps[k][0];
            }
            if (full) {
                // avoid u_k | v: shrink one exponent, or drop a variable
                if (picked.size() > 1 && rng.coin()) {
                    picked.erase(picked.begin() + rng.below(picked.size()));
                } else {
                    auto& f = picked[rng.below(picked.size())];
                    if (f.second > 1)
                        --f.second;
                    else if (picked.size() > 1)
                        picked.erase(picked.begin() + rng.below(picked.size()));
                    else
                        ok = false;  // single squarefree variable block; redraw
                }
            }
            vf.insert(vf.end(), picked.begin(), picked.end());
        }
        if (!ok) continue;
        gens.push_back(Monomial::make(std::move(vf)));

        MonomialIdeal I = MonomialIdeal::make(vars, gens);
        if (I.num_gens() != static_cast<std::size_t>(q) + 1) continue;
        return StarInstance{std::move(I), q, s};
    }
}

/// Random squarefree instance of a prescribed structural form over at
/// most max_vars variables.
inline MonomialIdeal random_kty_instance(CorpusRng& rng, KtyTag tag, int max_vars = 12) {
    const bool star = tag == KtyTag::i || tag == KtyTag::ii;
    for (;;) {
        std::vector<int> part_sizes;
        int r = 0, tails = 0, u_count = 0;
        if (star) {
            r = static_cast<int>(rng.range(tag == KtyTag::i ? 2 : 1, 3));
            tails = static_cast<int>(rng.below(3));
            u_count = r + (tag == KtyTag::ii ? 1 : 0);
            part_sizes.assign(u_count + r + tails, 1);
        } else {
            u_count = tag == KtyTag::iii ? 0 : (tag == KtyTag::iv ? 1 : (tag == KtyTag::v ? 2 : 3));
            tails = static_cast<int>(rng.below(3));
            part_sizes.assign(u_count + 3 + tails, 1);
        }
        if (static_cast<int>(part_sizes.size()) > max_vars) continue;
        int budget = max_vars - static_cast<int>(part_sizes.size());
        for (auto& sz : part_sizes)
            if (budget > 0 && rng.coin()) {
                ++sz;
                --budget;
            }

        int total = 0;
        for (int sz : part_sizes) total += sz;
        const auto vars = detail::corpus_vars(total);
        std::size_t next_var = 0;
        auto take = [&](int size) {
            std::vector<Monomial::Factor> fs;
            for (int k = 0; k < size; ++k) fs.emplace_back(vars[next_var++], 1);
            return Monomial::make(std::move(fs));
        };

        std::vector<Monomial> gens;
        std::size_t part_at = 0;
        if (star) {
            std::vector<Monomial> us, vs;
            for (int k = 0; k < r; ++k) us.push_back(take(part_sizes[part_at++]));
            Monomial extra;
            if (tag == KtyTag::ii) extra = take(part_sizes[part_at++]);
            for (int k = 0; k < r; ++k) vs.push_back(take(part_sizes[part_at++]));
            for (int k = 0; k < r; ++k) gens.push_back(us[k] * vs[k]);
            Monomial center = extra;
            for (const auto& v : vs) center = center * v;
            gens.push_back(center);
        } else {
            std::vector<Monomial> us(3);
            for (int k = 0; k < u_count; ++k) us[k] = take(part_sizes[part_at++]);
            const Monomial v1 = take(part_sizes[part_at++]);
            const Monomial v2 = take(part_sizes[part_at++]);
            const Monomial v3 = take(part_sizes[part_at++]);
            gens.push_back(us[0] * v1 * v2);
            gens.push_back(us[1] * v1 * v3);
            gens.push_back(us[2] * v2 * v3);
        }
        for (int k = 0; k < tails; ++k) gens.push_back(take(part_sizes[part_at++]));

        MonomialIdeal I = MonomialIdeal::make(vars, gens);
        if (I.num_gens() != gens.size()) continue;
        return I;
    }
}

/// Random minimal monomial ideal with at most max_gens generators over at
/// most max_vars variables.
inline MonomialIdeal random_monomial_ideal(CorpusRng& rng, int max_gens = 6, int max_vars = 8,
                                           int max_exp = 3) {
    for (;;) {
        const int nvars = static_cast<int>(rng.range(2, max_vars));
        const auto vars = detail::corpus_vars(nvars);
        std::vector<Monomial> gens;
        const int draws = static_cast<int>(rng.range(1, max_gens + 2));
        for (int g = 0; g < draws; ++g) {
            std::vector<Monomial::Factor> fs;
            for (int k = 0; k < nvars; ++k)
                if (rng.below(3) == 0)
                    fs.emplace_back(vars[k], 1 + static_cast<int>(rng.below(max_exp)));
            if (!fs.empty()) gens.push_back(Monomial::make(std::move(fs)));
        }
        if (gens.empty()) continue;
        MonomialIdeal I = MonomialIdeal::make(vars, gens);
        if (I.num_gens() <= static_cast<std::size_t>(max_gens)) return I;
    }
}

/// Corpus file format: one ideal per line in the input grammar; blank
/// lines and '#' comments are skipped.
inline std::vector<MonomialIdeal> parse_corpus(const std::string& text) {
    std::vector<MonomialIdeal> out;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string line = text.substr(pos, end - pos);
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const bool blank =
            line.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank) {
            try {
                out.push_back(parse_ideal(line));
            } catch (const ParseError& e) {
                throw ParseError(lineno, e.column, "in corpus line: " + std::string(e.what()));
            }
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

}  // namespace monores
