#pragma once

#include <map>
#include <string>
#include <string_view>

namespace cubiq {

/// Power product of named variables, e.g. x1^2*x2.
///
/// Zero exponents are never stored, so equal products compare equal as maps.
/// Ordering is graded lexicographic: total degree first, ties broken on the
/// lexicographically smallest variable name with differing exponent (larger
/// exponent wins). This makes polynomial printing deterministic and gives
/// the division algorithm its leading term.
class Monomial {
public:
    using ExponentMap = std::map<std::string, unsigned, std::less<>>;

    Monomial() = default;  // the empty product (constant 1)

    static Monomial var(std::string name, unsigned exp = 1) {
        Monomial m;
        if (exp > 0) m.exp_.emplace(std::move(name), exp);
        return m;
    }

    bool is_one() const { return exp_.empty(); }

    unsigned exponent(std::string_view name) const {
        auto it = exp_.find(name);
        return it == exp_.end() ? 0u : it->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [_, e] : exp_) d += e;
        return d;
    }

    const ExponentMap& exponents() const { return exp_; }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (const auto& [name, e] : o.exp_) r.exp_[name] += e;
        return r;
    }

    /// True when every exponent of *this is <= the matching exponent of m.
    bool divides(const Monomial& m) const {
        for (const auto& [name, e] : exp_)
            if (m.exponent(name) < e) return false;
        return true;
    }

    /// *this / divisor; caller must ensure divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const {
        Monomial r;
        for (const auto& [name, e] : exp_) {
            const unsigned d = divisor.exponent(name);
            if (e > d) r.exp_.emplace(name, e - d);
        }
        return r;
    }

    /// Graded-lex comparison: negative when a < b, zero when equal.
    static int compare(const Monomial& a, const Monomial& b) {
        const unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        auto ia = a.exp_.begin(), ib = b.exp_.begin();
        while (ia != a.exp_.end() && ib != b.exp_.end()) {
            if (ia->first != ib->first) {
                // Whichever monomial owns the earlier variable name has
                // positive exponent there; the other has zero.
                return ia->first < ib->first ? 1 : -1;
            }
            if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
            ++ia;
            ++ib;
        }
        if (ia != a.exp_.end()) return 1;
        if (ib != b.exp_.end()) return -1;
        return 0;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    /// "x1^2*x2", "1" for the empty product.
    std::string str() const {
        if (exp_.empty()) return "1";
        std::string out;
        for (const auto& [name, e] : exp_) {
            if (!out.empty()) out += '*';
            out += name;
            if (e > 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
        return out;
    }

private:
    ExponentMap exp_;
};

/// Map comparator placing the graded-lex largest monomial first, so that a
/// term map iterates in canonical printing order and begin() is the leading
/// term.
struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};

}  // namespace cubiq
