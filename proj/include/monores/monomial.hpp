#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monores/errors.hpp"

namespace monores {

using VarId = std::uint32_t;

/// Global registry of variable names. Identifiers are interned once; all
/// other code passes VarId values around. Thread-safe.
class VarPool {
public:
    static VarId intern(std::string_view name) {
        std::lock_guard<std::mutex> lock(mutex_());
        auto& ids = ids_();
        auto it = ids.find(std::string(name));
        if (it != ids.end()) return it->second;
        const VarId id = static_cast<VarId>(names_().size());
        names_().emplace_back(name);
        ids.emplace(std::string(name), id);
        return id;
    }

    static std::string name(VarId id) {
        std::lock_guard<std::mutex> lock(mutex_());
        if (id >= names_().size()) throw InputError("unknown variable id");
        return names_()[id];
    }

private:
    static std::mutex& mutex_() {
        static std::mutex m;
        return m;
    }
    static std::vector<std::string>& names_() {
        static std::vector<std::string> n;
        return n;
    }
    static std::unordered_map<std::string, VarId>& ids_() {
        static std::unordered_map<std::string, VarId> m;
        return m;
    }
};

/// A monomial as a sparse exponent vector. Stored exponents are >= 1 and
/// sorted by VarId; the monomial 1 is the empty vector. Immutable after
/// construction.
class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;

    static Monomial variable(VarId v, int exp = 1) {
        if (exp < 0) throw InputError("negative exponent");
        Monomial m;
        if (exp > 0) m.factors_.emplace_back(v, exp);
        return m;
    }

    /// Builds from an arbitrary factor list: repeated variables are
    /// combined, zero exponents dropped, negatives rejected.
    static Monomial make(std::vector<Factor> factors) {
        std::sort(factors.begin(), factors.end());
        Monomial m;
        for (const auto& [v, e] : factors) {
            if (e < 0) throw InputError("negative exponent");
            if (e == 0) continue;
            if (!m.factors_.empty() && m.factors_.back().first == v)
                m.factors_.back().second += e;
            else
                m.factors_.emplace_back(v, e);
        }
        return m;
    }

    bool is_unit() const { return factors_.empty(); }

    bool is_squarefree() const {
        return std::all_of(factors_.begin(), factors_.end(),
                           [](const Factor& f) { return f.second == 1; });
    }

    int exponent(VarId v) const {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                                   [](const Factor& f, VarId x) { return f.first < x; });
        return (it != factors_.end() && it->first == v) ? it->second : 0;
    }

    int degree() const {
        int d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    const std::vector<Factor>& factors() const { return factors_; }

    std::vector<VarId> support() const {
        std::vector<VarId> s;
        s.reserve(factors_.size());
        for (const auto& f : factors_) s.push_back(f.first);
        return s;
    }

    bool shares_support(const Monomial& other) const {
        auto a = factors_.begin();
        auto b = other.factors_.begin();
        while (a != factors_.end() && b != other.factors_.end()) {
            if (a->first == b->first) return true;
            if (a->first < b->first)
                ++a;
            else
                ++b;
        }
        return false;
    }

    bool divides(const Monomial& other) const {
        auto b = other.factors_.begin();
        for (const auto& f : factors_) {
            while (b != other.factors_.end() && b->first < f.first) ++b;
            if (b == other.factors_.end() || b->first != f.first || b->second < f.second)
                return false;
        }
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        return merge(other, [](int a, int b) { return a + b; });
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        return a.merge(b, [](int x, int y) { return std::max(x, y); });
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial m;
        auto i = a.factors_.begin();
        auto j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->first == j->first) {
                m.factors_.emplace_back(i->first, std::min(i->second, j->second));
                ++i, ++j;
            } else if (i->first < j->first)
                ++i;
            else
                ++j;
        }
        return m;
    }

    /// Exact quotient; requires d | this.
    Monomial divide_exact(const Monomial& d) const {
        if (!d.divides(*this)) throw DomainError("monomial division is not exact");
        Monomial m;
        auto j = d.factors_.begin();
        for (const auto& f : factors_) {
            int e = f.second;
            while (j != d.factors_.end() && j->first < f.first) ++j;
            if (j != d.factors_.end() && j->first == f.first) e -= j->second;
            if (e > 0) m.factors_.emplace_back(f.first, e);
        }
        return m;
    }

    /// this / gcd(this, d): the generator of the colon (this) : (d).
    Monomial colon(const Monomial& d) const { return divide_exact(gcd(*this, d)); }

    /// Restriction to a set of variables (keeps only exponents on vars).
    Monomial restrict_to(std::span<const VarId> vars) const {
        std::vector<Factor> kept;
        for (const auto& f : factors_)
            if (std::find(vars.begin(), vars.end(), f.first) != vars.end())
                kept.push_back(f);
        return make(std::move(kept));
    }

    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    /// Arbitrary but stable total order; used for map keys only.
    bool operator<(const Monomial& other) const { return factors_ < other.factors_; }

    /// Renders e.g. "x^2*y"; the unit monomial renders as "1". When an
    /// order is given, variables are listed in that order.
    std::string str(std::span<const VarId> order = {}) const {
        if (factors_.empty()) return "1";
        std::vector<Factor> fs = factors_;
        if (!order.empty()) {
            auto rank = [&](VarId v) {
                auto it = std::find(order.begin(), order.end(), v);
                return it == order.end() ? order.size() : static_cast<std::size_t>(it - order.begin());
            };
            std::stable_sort(fs.begin(), fs.end(), [&](const Factor& a, const Factor& b) {
                return rank(a.first) < rank(b.first);
            });
        }
        std::string out;
        for (std::size_t k = 0; k < fs.size(); ++k) {
            if (k) out += "*";
            out += VarPool::name(fs[k].first);
            if (fs[k].second != 1) out += "^" + std::to_string(fs[k].second);
        }
        return out;
    }

private:
    template <typename Op>
    Monomial merge(const Monomial& other, Op op) const {
        Monomial m;
        auto i = factors_.begin();
        auto j = other.factors_.begin();
        while (i != factors_.end() || j != other.factors_.end()) {
            if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
                int e = op(i->second, 0);
                if (e > 0) m.factors_.emplace_back(i->first, e);
                ++i;
            } else if (i == factors_.end() || j->first < i->first) {
                int e = op(0, j->second);
                if (e > 0) m.factors_.emplace_back(j->first, e);
                ++j;
            } else {
                int e = op(i->second, j->second);
                if (e > 0) m.factors_.emplace_back(i->first, e);
                ++i, ++j;
            }
        }
        return m;
    }

    std::vector<Factor> factors_;
};

/// Componentwise maximum of a nonempty list.
inline Monomial lcm_of(std::span<const Monomial> ms) {
    if (ms.empty()) throw InputError("lcm of an empty list");
    Monomial acc = ms[0];
    for (std::size_t k = 1; k < ms.size(); ++k) acc = Monomial::lcm(acc, ms[k]);
    return acc;
}

inline bool divides(const Monomial& a, const Monomial& b) { return a.divides(b); }

inline std::vector<VarId> support(const Monomial& m) { return m.support(); }

}  // namespace monores
