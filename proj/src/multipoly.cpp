#include "cubiq/multipoly.hpp"

#include <cctype>
#include <sstream>

namespace cubiq {

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& subst) const {
    MultiPoly result;
    for (const auto& [mono, coeff] : terms_) {
        MultiPoly product{coeff};
        for (const auto& [name, exp] : mono.exponents()) {
            auto it = subst.find(name);
            if (it == subst.end())
                throw std::invalid_argument("substitute: no image for variable " + name);
            product *= it->second.pow(exp);
        }
        result += product;
    }
    return result;
}

std::optional<MultiPoly> MultiPoly::divided_exactly_by(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("divided_exactly_by: zero divisor");
    MultiPoly quotient;
    MultiPoly rest = *this;
    const auto& [dmono, dcoeff] = *divisor.terms_.begin();
    while (!rest.is_zero()) {
        const auto& [rmono, rcoeff] = *rest.terms_.begin();
        // Once the leading term is not reducible the division algorithm would
        // park it in the remainder for good, so the division cannot be exact.
        if (!dmono.divides(rmono)) return std::nullopt;
        MultiPoly t = term(rmono.quotient(dmono), rcoeff / dcoeff);
        quotient += t;
        rest -= t * divisor;
    }
    return quotient;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        const bool negative = coeff.sign() < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = coeff.abs();
        if (mono.is_one()) {
            os << mag.str();
        } else if (mag == Rational(1)) {
            os << mono.str();
        } else {
            os << mag.str() << '*' << mono.str();
        }
    }
    return os.str();
}

namespace {

/// Cursor over the polynomial text. Whitespace is insignificant everywhere.
struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char ch) {
        if (peek() != ch) return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message + " at position " + std::to_string(pos));
    }

    std::string integer_digits() {
        skip_ws();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits.push_back(text[pos++]);
        if (digits.empty()) fail("expected digits");
        return digits;
    }

    Rational rational() {
        std::string s = integer_digits();
        if (eat('/')) s += "/" + integer_digits();
        return Rational::parse(s);
    }

    std::string identifier() {
        skip_ws();
        std::string name;
        auto head = [](char ch) {
            return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
        };
        auto tail = [&](char ch) {
            return head(ch) || std::isdigit(static_cast<unsigned char>(ch));
        };
        if (pos >= text.size() || !head(text[pos])) fail("expected variable name");
        name.push_back(text[pos++]);
        while (pos < text.size() && tail(text[pos])) name.push_back(text[pos++]);
        return name;
    }

    unsigned exponent() {
        const std::string digits = integer_digits();
        if (digits.size() > 9) fail("exponent too large");
        return static_cast<unsigned>(std::stoul(digits));
    }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, const std::set<std::string>& allowed_vars) {
    Cursor cur{text};
    MultiPoly result;
    bool first_term = true;
    if (cur.done()) cur.fail("empty polynomial");
    while (!cur.done()) {
        // Term joiner: first term may carry one optional sign, later terms
        // need exactly one '+' or '-'.
        bool negative = false;
        const char sign = cur.peek();
        if (sign == '+' || sign == '-') {
            cur.eat(sign);
            negative = sign == '-';
        } else if (!first_term) {
            cur.fail("expected '+' or '-' between terms");
        }
        first_term = false;

        Rational coeff(1);
        Monomial mono;
        bool saw_factor = false;
        bool expect_factor = false;  // a '*' was just consumed

        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = cur.rational();
            saw_factor = true;
            expect_factor = cur.eat('*');
        }
        for (;;) {
            const char ch = cur.peek();
            const bool at_var =
                std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
            if (!at_var) {
                if (expect_factor) cur.fail("expected variable after '*'");
                break;
            }
            const std::string name = cur.identifier();
            if (!allowed_vars.contains(name)) cur.fail("unknown variable '" + name + "'");
            unsigned exp = 1;
            if (cur.eat('^')) exp = cur.exponent();
            mono = mono * Monomial::var(name, exp);
            saw_factor = true;
            expect_factor = cur.eat('*');
        }
        if (!saw_factor) cur.fail("expected term");
        if (negative) coeff = -coeff;
        result += term(std::move(mono), std::move(coeff));
    }
    return result;
}

}  // namespace cubiq
