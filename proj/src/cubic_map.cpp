#include "cubiq/cubic_map.hpp"

#include <sstream>
#include <vector>

namespace cubiq {

namespace {

const std::set<std::string> kMapVars{"x1", "x2"};

struct Line {
    int number;
    std::string text;
};

/// Non-empty lines with comments stripped; numbers are 1-based positions in
/// the original input.
std::vector<Line> content_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto begin = raw.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = raw.find_last_not_of(" \t\r");
        lines.push_back({number, raw.substr(begin, end - begin + 1)});
    }
    return lines;
}

/// Splits "lhs = rhs" around the first '='; returns false if there is none.
bool split_assignment(const std::string& text, std::string& lhs, std::string& rhs) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) return false;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    lhs = trim(text.substr(0, eq));
    rhs = trim(text.substr(eq + 1));
    return true;
}

std::vector<Rational> rational_tokens(const std::string& text, int line) {
    std::istringstream is(text);
    std::vector<Rational> values;
    std::string token;
    while (is >> token) {
        try {
            values.push_back(Rational::parse(token));
        } catch (const std::exception& e) {
            throw ParseError(std::string(e.what()), line);
        }
    }
    return values;
}

}  // namespace

CubicMap make_cubic_map(MultiPoly y1, MultiPoly y2) {
    for (const auto* component : {&y1, &y2}) {
        if (component->degree() > 3)
            throw std::invalid_argument("cubic map: degree exceeds 3: " + component->str());
        for (const auto& name : component->variables())
            if (!kMapVars.contains(name))
                throw std::invalid_argument("cubic map: unexpected variable " + name);
    }
    return CubicMap{std::move(y1), std::move(y2)};
}

CubicMap parse_cubic_map(std::istream& in) {
    std::optional<MultiPoly> y1, y2;
    for (const auto& [number, text] : content_lines(in)) {
        std::string lhs, rhs;
        if (!split_assignment(text, lhs, rhs))
            throw ParseError("expected 'y1 = <poly>' or 'y2 = <poly>'", number);
        std::optional<MultiPoly>* slot = nullptr;
        if (lhs == "y1") slot = &y1;
        else if (lhs == "y2") slot = &y2;
        else throw ParseError("unknown component '" + lhs + "'", number);
        if (slot->has_value()) throw ParseError("duplicate component '" + lhs + "'", number);
        try {
            *slot = MultiPoly::parse(rhs, kMapVars);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()), number);
        }
        if ((*slot)->degree() > 3)
            throw ParseError("degree exceeds 3: " + (*slot)->str(), number);
    }
    if (!y1 || !y2) throw ParseError(std::string("missing component ") + (!y1 ? "y1" : "y2"));
    try {
        return make_cubic_map(std::move(*y1), std::move(*y2));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

CubicMap parse_cubic_map(std::string_view text) {
    std::istringstream is{std::string(text)};
    return parse_cubic_map(is);
}

std::string map_to_text(const CubicMap& f) {
    return "y1 = " + f.y1.str() + "\ny2 = " + f.y2.str() + "\n";
}

AffineMap parse_affine_map(std::istream& in) {
    AffineMap phi;
    int rows_seen = 0;
    bool shift_seen = false;
    for (const auto& [number, text] : content_lines(in)) {
        std::string lhs, rhs;
        if (split_assignment(text, lhs, rhs)) {
            if (lhs != "a") throw ParseError("unknown assignment '" + lhs + "'", number);
            if (shift_seen) throw ParseError("duplicate shift line", number);
            const auto values = rational_tokens(rhs, number);
            if (values.size() != 2) throw ParseError("shift needs exactly two rationals", number);
            phi.shift = {values[0], values[1]};
            shift_seen = true;
            continue;
        }
        if (rows_seen == 2) throw ParseError("unexpected extra line", number);
        const auto values = rational_tokens(text, number);
        if (values.size() != 2) throw ParseError("matrix row needs exactly two rationals", number);
        ++rows_seen;
        phi.linear.at(rows_seen, 1) = values[0];
        phi.linear.at(rows_seen, 2) = values[1];
    }
    if (rows_seen != 2) throw ParseError("matrix needs two rows");
    return phi;
}

AffineMap parse_affine_map(std::string_view text) {
    std::istringstream is{std::string(text)};
    return parse_affine_map(is);
}

CoeffTensor coeff_tensor(const CubicMap& f) {
    CoeffTensor tensor;
    const Rational third(1, 3);
    for (int i = 1; i <= 2; ++i) {
        const MultiPoly& y = f.component(i);
        tensor.set_sym(i, 1, 1, 1, y.coeff(Monomial::var("x1", 3)));
        tensor.set_sym(i, 1, 1, 2, y.coeff(Monomial::var("x1", 2) * Monomial::var("x2")) * third);
        tensor.set_sym(i, 1, 2, 2, y.coeff(Monomial::var("x1") * Monomial::var("x2", 2)) * third);
        tensor.set_sym(i, 2, 2, 2, y.coeff(Monomial::var("x2", 3)));
    }
    return tensor;
}

CubicMap compose_right(const CubicMap& ftilde, const AffineMap& phi) {
    std::map<std::string, MultiPoly> images;
    for (int i = 1; i <= 2; ++i) {
        MultiPoly image = MultiPoly::variable("x1") * phi.linear.at(i, 1) +
                          MultiPoly::variable("x2") * phi.linear.at(i, 2) +
                          MultiPoly(phi.shift[static_cast<size_t>(i - 1)]);
        images.emplace("x" + std::to_string(i), std::move(image));
    }
    return CubicMap{ftilde.y1.substitute(images), ftilde.y2.substitute(images)};
}

CubicMap compose_left(const CubicMap& ftilde, const AffineMap& phi) {
    const Matrix2 s = inverse(phi.linear);
    const MultiPoly u1 = ftilde.y1 - MultiPoly(phi.shift[0]);
    const MultiPoly u2 = ftilde.y2 - MultiPoly(phi.shift[1]);
    return CubicMap{u1 * s.at(1, 1) + u2 * s.at(1, 2), u1 * s.at(2, 1) + u2 * s.at(2, 2)};
}

CoeffTensor change_coordinates(const CoeffTensor& f, const Matrix2& s) {
    const Matrix2 t = inverse(s);
    CoeffTensor r;
    for (int i = 1; i <= 2; ++i)
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                for (int p = 1; p <= 2; ++p) {
                    Rational sum;
                    for (int ii = 1; ii <= 2; ++ii)
                        for (int mm = 1; mm <= 2; ++mm)
                            for (int nn = 1; nn <= 2; ++nn)
                                for (int pp = 1; pp <= 2; ++pp)
                                    sum += f.at(ii, mm, nn, pp) * t.at(i, ii) * s.at(mm, m) *
                                           s.at(nn, n) * s.at(pp, p);
                    r.set(i, m, n, p, std::move(sum));
                }
    return r;
}

CoeffTensor change_coordinates_inverse(const CoeffTensor& ft, const Matrix2& s) {
    const Matrix2 t = inverse(s);
    CoeffTensor r;
    for (int i = 1; i <= 2; ++i)
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                for (int p = 1; p <= 2; ++p) {
                    Rational sum;
                    for (int ii = 1; ii <= 2; ++ii)
                        for (int mm = 1; mm <= 2; ++mm)
                            for (int nn = 1; nn <= 2; ++nn)
                                for (int pp = 1; pp <= 2; ++pp)
                                    sum += ft.at(ii, mm, nn, pp) * s.at(i, ii) * t.at(mm, m) *
                                           t.at(nn, n) * t.at(pp, p);
                    r.set(i, m, n, p, std::move(sum));
                }
    return r;
}

CoeffTensorT<MultiPoly> lift(const CoeffTensor& f) {
    CoeffTensorT<MultiPoly> r;
    for (int i = 1; i <= 2; ++i)
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                for (int p = 1; p <= 2; ++p) r.set(i, m, n, p, MultiPoly(f.at(i, m, n, p)));
    return r;
}

}  // namespace cubiq
