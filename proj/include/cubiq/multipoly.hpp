#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cubiq/monomial.hpp"
#include "cubiq/rational.hpp"

namespace cubiq {

/// Error raised by the polynomial and map-file parsers. `line` is 1-based
/// when the input came from a multi-line source, 0 otherwise.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : std::move(message)),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Sparse multivariate polynomial over Rational in named variables.
///
/// Canonical form: no zero-coefficient terms are stored and terms are kept
/// in graded-lex descending order, so equal polynomials have equal term
/// maps and printing is deterministic.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDescending>;

    MultiPoly() = default;  // zero polynomial

    explicit MultiPoly(Rational c) {
        if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
    }
    explicit MultiPoly(long n) : MultiPoly(Rational(n)) {}

    static MultiPoly variable(std::string name) {
        MultiPoly p;
        p.terms_.emplace(Monomial::var(std::move(name)), Rational(1));
        return p;
    }

    static MultiPoly term(Monomial m, Rational c) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    /// Value of a constant polynomial; throws std::logic_error otherwise.
    Rational constant_value() const {
        if (is_zero()) return Rational(0);
        if (!is_constant()) throw std::logic_error("MultiPoly: not a constant: " + str());
        return terms_.begin()->second;
    }

    /// Total degree; 0 for the zero polynomial.
    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [m, _] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    const TermMap& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::set<std::string> variables() const {
        std::set<std::string> vars;
        for (const auto& [m, _] : terms_)
            for (const auto& [name, __] : m.exponents()) vars.insert(name);
        return vars;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly operator*(const Rational& s) const {
        MultiPoly r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    MultiPoly pow(unsigned k) const {
        MultiPoly r(Rational(1));
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    /// Replaces every variable by its image under `subst` and expands.
    /// Every variable occurring in *this must have an entry; throws
    /// std::invalid_argument otherwise. Images may be arbitrary polynomials.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& subst) const;

    /// Exact multivariate division: returns q with *this == q * divisor, or
    /// nullopt when the division leaves a remainder. Graded-lex division
    /// algorithm; any nonzero remainder means inexactness.
    std::optional<MultiPoly> divided_exactly_by(const MultiPoly& divisor) const;

    /// Canonical text: graded-lex descending, e.g. "x1^3 + 3*x1^2*x2 - 1/2".
    /// parse(str()) is the identity on canonical forms.
    std::string str() const;

    /// Parses the polynomial grammar: terms joined by +/-, each term an
    /// optional rational coefficient followed by variable factors `v` or
    /// `v^k`, with `*` or whitespace as separators. Variables outside
    /// `allowed_vars` are rejected.
    static MultiPoly parse(std::string_view text, const std::set<std::string>& allowed_vars);

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline MultiPoly operator*(const Rational& s, const MultiPoly& p) { return p * s; }

}  // namespace cubiq
