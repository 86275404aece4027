#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "monores/errors.hpp"
#include "monores/monomial.hpp"

namespace monores {

/// Keeps only the divisibility-minimal elements of a monomial list
/// (deduplicated antichain). No canonical ordering is applied here.
inline std::vector<Monomial> antichain(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> keep;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& k : keep)
            if (k.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) keep.push_back(g);
    }
    return keep;
}

/// A proper nonzero monomial ideal, held as its unique minimal generating
/// set in canonical order (descending graded-lex over the declared
/// variable order). Immutable after construction. The unit and zero
/// ideals are not representable; constructors reject them.
class MonomialIdeal {
public:
    static MonomialIdeal make(std::vector<VarId> vars, std::vector<Monomial> gens) {
        MonomialIdeal I;
        I.vars_ = std::move(vars);
        for (std::size_t k = 0; k < I.vars_.size(); ++k) {
            if (I.rank_.count(I.vars_[k])) throw InputError("duplicate variable in ring");
            I.rank_[I.vars_[k]] = k;
        }
        if (gens.empty()) throw DomainError("the zero ideal is not representable");
        for (const auto& g : gens) {
            if (g.is_unit()) throw DomainError("the unit ideal is not representable");
            for (const auto& [v, e] : g.factors())
                if (!I.rank_.count(v))
                    throw InputError("generator uses unknown variable " + VarPool::name(v));
        }
        I.gens_ = antichain(std::move(gens));
        std::sort(I.gens_.begin(), I.gens_.end(),
                  [&I](const Monomial& a, const Monomial& b) { return I.grlex_greater(a, b); });
        I.gens_.erase(std::unique(I.gens_.begin(), I.gens_.end()), I.gens_.end());
        return I;
    }

    const std::vector<VarId>& vars() const { return vars_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::size_t num_gens() const { return gens_.size(); }
    std::size_t num_vars() const { return vars_.size(); }

    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(),
                           [](const Monomial& g) { return g.is_squarefree(); });
    }

    /// Ideal membership: some minimal generator divides m.
    bool contains(const Monomial& m) const {
        return std::any_of(gens_.begin(), gens_.end(),
                           [&m](const Monomial& g) { return g.divides(m); });
    }

    bool is_generator(const Monomial& m) const {
        return std::find(gens_.begin(), gens_.end(), m) != gens_.end();
    }

    std::size_t var_rank(VarId v) const {
        auto it = rank_.find(v);
        if (it == rank_.end()) throw InputError("variable not in ring: " + VarPool::name(v));
        return it->second;
    }

    /// Descending graded-lex: higher total degree first; ties broken by
    /// the first variable (in declared order) with differing exponent,
    /// larger exponent first.
    bool grlex_greater(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        for (VarId v : vars_) {
            const int ea = a.exponent(v), eb = b.exponent(v);
            if (ea != eb) return ea > eb;
        }
        return false;
    }

    std::string str() const {
        std::string out;
        for (std::size_t k = 0; k < gens_.size(); ++k) {
            if (k) out += ", ";
            out += gens_[k].str(vars_);
        }
        return out;
    }

    bool operator==(const MonomialIdeal& other) const {
        return vars_ == other.vars_ && gens_ == other.gens_;
    }
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

private:
    std::vector<VarId> vars_;
    std::vector<Monomial> gens_;
    std::unordered_map<VarId, std::size_t> rank_;
};

/// Divisibility antichain of gens over the given ring, canonically ordered.
inline MonomialIdeal minimalize(std::vector<Monomial> gens, std::vector<VarId> vars) {
    return MonomialIdeal::make(std::move(vars), std::move(gens));
}

/// I^s: minimalization of all s-fold products of generators.
inline MonomialIdeal ideal_power(const MonomialIdeal& I, int s) {
    if (s < 1) throw InputError("ideal power requires s >= 1");
    std::vector<Monomial> products;
    std::vector<Monomial> stack;
    // multisets of generators, nondecreasing index order
    auto rec = [&](auto&& self, std::size_t from, int remaining, const Monomial& acc) -> void {
        if (remaining == 0) {
            products.push_back(acc);
            return;
        }
        for (std::size_t j = from; j < I.num_gens(); ++j)
            self(self, j, remaining - 1, acc * I.gens()[j]);
    };
    rec(rec, 0, s, Monomial{});
    return MonomialIdeal::make(I.vars(), std::move(products));
}

/// lcm(sigma) for every subset mask of the generator list; index = mask.
inline std::vector<Monomial> subset_lcms(std::span<const Monomial> gens) {
    if (gens.size() > 25) throw ResourceError("too many generators for subset enumeration");
    std::vector<Monomial> lcms(std::size_t{1} << gens.size());
    for (std::uint64_t mask = 1; mask < lcms.size(); ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        lcms[mask] = Monomial::lcm(lcms[mask & (mask - 1)], gens[low]);
    }
    return lcms;
}

}  // namespace monores
