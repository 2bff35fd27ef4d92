#include "cubiq/rational.hpp"

#include <cctype>
#include <ostream>

namespace cubiq {

Rational Rational::parse(std::string_view text) {
    // Accepted forms: "12", "-12", "3/4", "-3/4". GMP accepts these via
    // mpq_class(string) but is lenient about stray characters, so validate
    // the shape here first.
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("Rational: empty string");

    auto check_digits = [](std::string_view part, std::string_view what) {
        if (part.empty()) throw std::invalid_argument(std::string("Rational: missing ") + std::string(what));
        for (char ch : part)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("Rational: bad character in " + std::string(what));
    };

    std::string_view rest = s;
    bool negative = false;
    if (rest.front() == '+' || rest.front() == '-') {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    const auto slash = rest.find('/');
    std::string_view num = rest.substr(0, slash);
    check_digits(num, "numerator");
    mpq_class v;
    if (slash == std::string_view::npos) {
        v = mpq_class(mpz_class(std::string(num)));
    } else {
        std::string_view den = rest.substr(slash + 1);
        check_digits(den, "denominator");
        mpz_class d{std::string(den)};
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v = mpq_class(mpz_class(std::string(num)), d);
        v.canonicalize();
    }
    if (negative) v = -v;
    return Rational(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace cubiq
