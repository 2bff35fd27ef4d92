#include "cubiq/transforms.hpp"

namespace cubiq {

namespace {

/// Advances a 1-based multi-index; returns false after the last tuple.
bool next_index(std::vector<int>& idx, int dim) {
    for (size_t k = idx.size(); k-- > 0;) {
        if (idx[k] < dim) {
            ++idx[k];
            std::fill(idx.begin() + static_cast<long>(k) + 1, idx.end(), 1);
            return true;
        }
    }
    return false;
}

Rational det_power(const Rational& det, int weight) {
    Rational r(1);
    for (int k = 0; k < std::abs(weight); ++k) r *= det;
    if (weight < 0) r = Rational(1) / r;
    return r;
}

/// Entry accessors letting one transform loop serve both dimensions.
struct Frame {
    const Matrix2* block2 = nullptr;
    const Matrix2* t2 = nullptr;

    Rational s_at(int i, int j, int dim) const {
        return dim == 2 ? block2->at(i, j) : block_diag_at(*block2, i, j);
    }
    Rational t_at(int i, int j, int dim) const {
        return dim == 2 ? t2->at(i, j) : block_diag_at(*t2, i, j);
    }
};

PseudoArray transform_with(const PseudoArray& a, const Matrix2& s_block) {
    const Matrix2 t_block = inverse(s_block);
    const Frame frame{&s_block, &t_block};
    const auto& spec = a.spec();
    const Rational prefactor = det_power(t_block.det(), spec.weight);
    const int r = spec.contravariant, s = spec.covariant, dim = spec.dim;

    PseudoArray out(spec);
    std::vector<int> target(static_cast<size_t>(r + s), 1);
    if (r + s == 0) {
        out.set({}, prefactor * a.at({}));
        return out;
    }
    do {
        Rational sum;
        std::vector<int> source(static_cast<size_t>(r + s), 1);
        do {
            Rational coeff(1);
            for (int k = 0; k < r; ++k)
                coeff *= frame.s_at(target[static_cast<size_t>(k)],
                                    source[static_cast<size_t>(k)], dim);
            for (int k = r; k < r + s; ++k)
                coeff *= frame.t_at(source[static_cast<size_t>(k)],
                                    target[static_cast<size_t>(k)], dim);
            if (!coeff.is_zero()) sum += coeff * a.at(source);
        } while (next_index(source, dim));
        out.set(target, prefactor * sum);
    } while (next_index(target, dim));
    return out;
}

/// Window-local entry of the block-diagonal lift of `block` for a form:
/// plain block entries for the dim-2 forms, hatted entries for dim 4.
Rational window_entry(const Matrix2& block, int dim, int a, int b) {
    return dim == 2 ? block.at(a, b) : block_diag_at(block, a, b);
}

/// scale x pullback of all four indices by `block`:
/// out_{i'm'n'p'} = scale * sum form_{imnp} M(i,i') M(m,m') M(n,n') M(p,p').
SymTensor4 pullback_form(const SymTensor4& form, const Matrix2& block, const Rational& scale) {
    const int dim = form.dim();
    SymTensor4 out(dim, form.var_offset());
    for (const auto& [target, _] : form.components()) {
        Rational sum;
        std::vector<int> source(4, 1);
        do {
            Rational coeff = scale;
            for (size_t k = 0; k < 4; ++k)
                coeff *= window_entry(block, dim, source[k], target[k]);
            if (!coeff.is_zero())
                sum += coeff * form.component({source[0], source[1], source[2], source[3]});
        } while (next_index(source, dim));
        out.set_component(target, std::move(sum));
    }
    return out;
}

std::string form_component_label(int q, const SymTensor4& form, const SymTensor4::Key& key) {
    Monomial mono;
    for (int v : key) mono = mono * Monomial::var("z" + std::to_string(v + form.var_offset()));
    return "omega[" + std::to_string(q) + "] " + mono.str();
}

void compare_forms(CheckResult& result, int q, const SymTensor4& lhs, const SymTensor4& rhs) {
    for (const auto& [key, value] : lhs.components())
        result.record(form_component_label(q, lhs, key), value - rhs.component(key));
}

}  // namespace

PseudoArray::PseudoArray(PseudoSpec spec) : spec_(spec) {
    if (spec.contravariant < 0 || spec.covariant < 0)
        throw std::invalid_argument("PseudoArray: negative rank");
    if (spec.dim != 2 && spec.dim != 4) throw std::invalid_argument("PseudoArray: dim");
    size_t n = 1;
    for (int k = 0; k < rank(); ++k) n *= static_cast<size_t>(spec.dim);
    e_.resize(n);
}

size_t PseudoArray::flat(std::span<const int> idx) const {
    if (idx.size() != static_cast<size_t>(rank()))
        throw std::invalid_argument("PseudoArray: index rank mismatch");
    size_t f = 0;
    for (int v : idx) {
        if (v < 1 || v > spec_.dim) throw std::out_of_range("PseudoArray: index");
        f = f * static_cast<size_t>(spec_.dim) + static_cast<size_t>(v - 1);
    }
    return f;
}

PseudoArray PseudoArray::fundamental_lower() {
    PseudoArray d(PseudoSpec{0, 2, -1, 2});
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const std::array<int, 2> idx = {i, j};
            d.set(idx, Rational(PseudoD::lower(i, j)));
        }
    return d;
}

PseudoArray PseudoArray::fundamental_upper() {
    PseudoArray d(PseudoSpec{2, 0, 1, 2});
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const std::array<int, 2> idx = {i, j};
            d.set(idx, Rational(PseudoD::upper(i, j)));
        }
    return d;
}

PseudoArray pseudo_transform(const PseudoArray& a, const Matrix2& s) {
    if (a.spec().dim != 2) throw std::invalid_argument("pseudo_transform: array is not dim 2");
    return transform_with(a, s);
}

PseudoArray pseudo_transform(const PseudoArray& a, const Matrix4Block& s) {
    if (a.spec().dim != 4) throw std::invalid_argument("pseudo_transform: array is not dim 4");
    return transform_with(a, s.block());
}

PseudoArray outer_product(const PseudoArray& a, const PseudoArray& b) {
    if (a.spec().dim != b.spec().dim) throw std::invalid_argument("outer_product: dim mismatch");
    const PseudoSpec spec{a.spec().contravariant + b.spec().contravariant,
                          a.spec().covariant + b.spec().covariant,
                          a.spec().weight + b.spec().weight, a.spec().dim};
    PseudoArray out(spec);
    const int dim = spec.dim;
    const auto ra = a.spec().contravariant, sa = a.spec().covariant;
    const auto rb = b.spec().contravariant, sb = b.spec().covariant;
    std::vector<int> idx(static_cast<size_t>(spec.contravariant + spec.covariant), 1);
    if (idx.empty()) {
        out.set({}, a.at({}) * b.at({}));
        return out;
    }
    do {
        // Split target layout [ua ub | la lb] back into a's and b's tuples.
        std::vector<int> ia, ib;
        for (int k = 0; k < ra; ++k) ia.push_back(idx[static_cast<size_t>(k)]);
        for (int k = ra; k < ra + rb; ++k) ib.push_back(idx[static_cast<size_t>(k)]);
        for (int k = ra + rb; k < ra + rb + sa; ++k) ia.push_back(idx[static_cast<size_t>(k)]);
        for (int k = ra + rb + sa; k < ra + rb + sa + sb; ++k)
            ib.push_back(idx[static_cast<size_t>(k)]);
        out.set(idx, a.at(ia) * b.at(ib));
    } while (next_index(idx, dim));
    return out;
}

CheckResult check_tensoriality(const CoeffTensor& f, const Matrix2& s) {
    const CoeffTensor ftilde = change_coordinates(f, s);
    CheckResult result;
    for (int q = 1; q <= 6; ++q) {
        const SymTensor4 lhs = omega_derived(q, ftilde);
        const SymTensor4 rhs = pullback_form(omega_derived(q, f), s, Rational(1));
        compare_forms(result, q, lhs, rhs);
    }
    return result;
}

CheckResult left_law_check(const CoeffTensor& ftilde, const Matrix2& t) {
    const Matrix2 s = inverse(t);
    const Rational det_s = s.det();
    const CoeffTensor f = compose_left_tensor(ftilde, s);
    CheckResult result;
    const GSet lhs_g = g_determinants(f);
    const GSet rhs_g = g_determinants(ftilde);
    const auto lhs_arr = lhs_g.as_array();
    const auto rhs_arr = rhs_g.as_array();
    for (size_t k = 0; k < 6; ++k)
        result.record(GSet::labels[k], lhs_arr[k] - det_s * rhs_arr[k]);
    for (int q = 1; q <= 6; ++q) {
        const SymTensor4 lhs = omega_derived(q, f);
        const SymTensor4 tilded = omega_derived(q, ftilde);
        SymTensor4 rhs(tilded.dim(), tilded.var_offset());
        for (const auto& [key, value] : tilded.components())
            rhs.set_component(key, det_s * value);
        compare_forms(result, q, lhs, rhs);
    }
    return result;
}

CheckResult right_law_check(const CoeffTensor& ftilde, const Matrix2& t) {
    const CoeffTensor f = compose_right_tensor(ftilde, t);
    const Rational det_t = t.det();
    CheckResult result;
    for (int q = 1; q <= 6; ++q) {
        const SymTensor4 lhs = omega_derived(q, f);
        const SymTensor4 rhs = pullback_form(omega_derived(q, ftilde), t, det_t);
        compare_forms(result, q, lhs, rhs);
    }
    return result;
}

CompositionTable theorem43_check(const CoeffTensor& ftilde, const Matrix2& t) {
    const GSet g = g_determinants(compose_right_tensor(ftilde, t));
    const auto lhs = g.as_array();
    const Rational det_t = t.det();
    const std::array<Rational, 4> z = {t.at(1, 1), t.at(2, 1), t.at(1, 2), t.at(2, 2)};

    CompositionTable table;
    for (int q = 1; q <= 6; ++q) {
        const SymTensor4 form = omega_derived(q, ftilde);
        Rational value;
        if (q == 1) {
            const std::array<Rational, 2> zw = {z[0], z[1]};
            value = form.evaluate(zw);
        } else if (q == 6) {
            const std::array<Rational, 2> zw = {z[2], z[3]};
            value = form.evaluate(zw);
        } else {
            value = form.evaluate(z);
        }
        auto& row = table.rows[static_cast<size_t>(q - 1)];
        row.label = GSet::labels[static_cast<size_t>(q - 1)];
        row.lhs = lhs[static_cast<size_t>(q - 1)];
        row.rhs = det_t * value;
        if (row.lhs != row.rhs) table.all_equal = false;
    }
    return table;
}

}  // namespace cubiq
