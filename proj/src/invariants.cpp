#include "cubiq/invariants.hpp"

#include <sstream>

#include "json.hpp"

namespace cubiq {

namespace {

const std::set<std::string>& z_names() {
    static const std::set<std::string> names{"z1", "z2", "z3", "z4"};
    return names;
}

Monomial monomial_from_exponents(const std::array<unsigned, 4>& gexp) {
    Monomial m;
    for (size_t k = 0; k < 4; ++k)
        if (gexp[k] > 0) m = m * Monomial::var("z" + std::to_string(k + 1), gexp[k]);
    return m;
}

}  // namespace

Mat2<MultiPoly> symbolic_t_matrix() {
    Mat2<MultiPoly> t;
    t.at(1, 1) = MultiPoly::variable("z1");
    t.at(2, 1) = MultiPoly::variable("z2");
    t.at(1, 2) = MultiPoly::variable("z3");
    t.at(2, 2) = MultiPoly::variable("z4");
    return t;
}

MultiPoly symbolic_t_det() { return symbolic_t_matrix().det(); }

CoeffTensorT<MultiPoly> symbolic_coeff_tensor() {
    CoeffTensorT<MultiPoly> f;
    for (int i = 1; i <= 2; ++i) {
        const std::string stem = "F" + std::to_string(i) + "_";
        f.set_sym(i, 1, 1, 1, MultiPoly::variable(stem + "111"));
        f.set_sym(i, 1, 1, 2, MultiPoly::variable(stem + "112"));
        f.set_sym(i, 1, 2, 2, MultiPoly::variable(stem + "122"));
        f.set_sym(i, 2, 2, 2, MultiPoly::variable(stem + "222"));
    }
    return f;
}

SymTensor4T<MultiPoly> omega_derived(int q, const CoeffTensorT<MultiPoly>& ftilde) {
    if (q < 1 || q > 6) throw std::out_of_range("omega_derived: q");
    for (int i = 1; i <= 2; ++i)
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                for (int p = 1; p <= 2; ++p)
                    for (const auto& name : ftilde.at(i, m, n, p).variables())
                        if (z_names().contains(name))
                            throw std::invalid_argument(
                                "omega_derived: input tensor mentions reserved variable " + name);

    const auto composed = compose_right_tensor(ftilde, symbolic_t_matrix());
    const MultiPoly numerator = g_determinants(composed).by_index(q);
    const auto quotient = numerator.divided_exactly_by(symbolic_t_det());
    if (!quotient)
        throw std::logic_error("omega_derived: determinant is not divisible by det T");

    const int dim = (q == 1 || q == 6) ? 2 : 4;
    const int offset = q == 6 ? 2 : 0;
    SymTensor4T<MultiPoly> r(dim, offset);
    std::map<std::array<unsigned, 4>, MultiPoly> buckets;
    for (const auto& [mono, coeff] : quotient->terms()) {
        std::array<unsigned, 4> zexp{};
        Monomial rest;
        unsigned zdeg = 0;
        for (const auto& [name, e] : mono.exponents()) {
            if (z_names().contains(name)) {
                zexp[static_cast<size_t>(name[1] - '1')] = e;
                zdeg += e;
            } else {
                rest = rest * Monomial::var(name, e);
            }
        }
        if (zdeg != 4)
            throw std::logic_error("omega_derived: quotient monomial of z-degree " +
                                   std::to_string(zdeg));
        buckets[zexp] += MultiPoly::term(rest, coeff);
    }
    for (const auto& [zexp, poly] : buckets) r.set_monomial_coefficient(zexp, poly);
    return r;
}

SymTensor4T<Rational> omega_derived(int q, const CoeffTensor& ftilde) {
    const auto sym = omega_derived(q, lift(ftilde));
    SymTensor4T<Rational> r(sym.dim(), sym.var_offset());
    for (const auto& [key, comp] : sym.components()) r.set_component(key, comp.constant_value());
    return r;
}

Rational omega_eval(const SymTensor4& form, std::span<const Rational> z) {
    return form.evaluate(z);
}

MultiPoly form_polynomial(const SymTensor4T<Rational>& form) {
    MultiPoly out;
    for (const auto& [key, comp] : form.components()) {
        if (comp.is_zero()) continue;
        Monomial mono;
        for (int v : key) mono = mono * Monomial::var("z" + std::to_string(v + form.var_offset()));
        out += MultiPoly::term(mono, comp * Rational(static_cast<long>(SymTensor4::multiplicity(key))));
    }
    return out;
}

MultiPoly form_polynomial(const SymTensor4T<MultiPoly>& form) {
    MultiPoly out;
    for (const auto& [key, comp] : form.components()) {
        if (comp.is_zero()) continue;
        Monomial mono;
        for (int v : key) mono = mono * Monomial::var("z" + std::to_string(v + form.var_offset()));
        out += comp * Rational(static_cast<long>(SymTensor4T<MultiPoly>::multiplicity(key))) *
               MultiPoly::term(mono, Rational(1));
    }
    return out;
}

std::string DiscrepancyReport::text() const {
    std::ostringstream os;
    if (rows.empty()) {
        os << "all three constructions agree on every monomial\n";
        return os.str();
    }
    os << rows.size() << (rows.size() == 1 ? " discrepancy\n" : " discrepancies\n");
    for (const auto& row : rows) {
        os << "q=" << row.q << "  " << monomial_from_exponents(row.monomial).str() << "\n";
        os << "  printed:   " << row.printed << "\n";
        os << "  derived:   " << row.derived << "\n";
        os << "  theorem3:  " << row.theorem3 << "\n";
    }
    return os.str();
}

std::string DiscrepancyReport::to_json_text() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        arr.push_back({{"q", row.q},
                       {"monomial", row.monomial},
                       {"printed", row.printed},
                       {"derived", row.derived},
                       {"theorem3", row.theorem3}});
    }
    return arr.dump(2) + "\n";
}

DiscrepancyReport discrepancy_report(const CoeffTensorT<MultiPoly>& f) {
    DiscrepancyReport report;
    const auto gsym = g_determinants(f);
    for (int q = 1; q <= 6; ++q) {
        const auto printed = omega_printed(q, gsym);
        const auto derived = omega_derived(q, f);
        const auto built = theorem3_form(q, f);
        for (const auto& [key, _] : printed.components()) {
            const Rational mult(static_cast<long>(SymTensor4T<MultiPoly>::multiplicity(key)));
            const MultiPoly cp = printed.component(key) * mult;
            const MultiPoly cd = derived.component(key) * mult;
            const MultiPoly cb = built.component(key) * mult;
            if (cp == cd && cd == cb) continue;
            report.rows.push_back(
                {q, printed.global_exponents(key), cp.str(), cd.str(), cb.str()});
        }
    }
    return report;
}

DiscrepancyReport discrepancy_report() { return discrepancy_report(symbolic_coeff_tensor()); }

}  // namespace cubiq
