#pragma once

#include <map>
#include <utility>
#include <vector>

#include "monores/monomial.hpp"

namespace monores {

/// Multigraded Betti numbers of R/I: entries beta_{i,b} keyed by
/// (homological degree, multidegree), plus per-degree totals.
struct BettiTable {
    std::map<std::pair<int, Monomial>, long long> entries;
    std::vector<long long> totals;

    void add(int i, const Monomial& b, long long dim) {
        if (dim == 0) return;
        entries[{i, b}] += dim;
        if (static_cast<std::size_t>(i) >= totals.size()) totals.resize(i + 1, 0);
        totals[i] += dim;
    }

    void trim() {
        while (!totals.empty() && totals.back() == 0) totals.pop_back();
    }

    int pd() const { return static_cast<int>(totals.size()) - 1; }

    long long total(int i) const {
        return (i >= 0 && static_cast<std::size_t>(i) < totals.size()) ? totals[i] : 0;
    }

    bool operator==(const BettiTable& other) const {
        return entries == other.entries && totals == other.totals;
    }
};

}  // namespace monores
