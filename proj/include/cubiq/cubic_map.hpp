#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cubiq/matrices.hpp"
#include "cubiq/multipoly.hpp"

namespace cubiq {

/// Coefficient tensor of the cubic part of a plane map, one upper index i
/// and three lower indices m, n, p, each running over {1, 2}. Stored with
/// all 16 slots materialized: the contractions in the invariant machinery
/// index it in arbitrary positions, so a compressed symmetric form would
/// only complicate those loops.
template <CoefficientRing R>
class CoeffTensorT {
public:
    CoeffTensorT() = default;

    const R& at(int i, int m, int n, int p) const { return e_[index(i, m, n, p)]; }

    void set(int i, int m, int n, int p, R value) { e_[index(i, m, n, p)] = std::move(value); }

    /// Writes `value` into every permutation of the lower indices m, n, p,
    /// keeping the tensor symmetric by construction.
    void set_sym(int i, int m, int n, int p, const R& value) {
        const std::array<std::array<int, 3>, 6> perms = {{{m, n, p},
                                                          {m, p, n},
                                                          {n, m, p},
                                                          {n, p, m},
                                                          {p, m, n},
                                                          {p, n, m}}};
        for (const auto& [a, b, c] : perms) e_[index(i, a, b, c)] = value;
    }

    bool lower_symmetric() const {
        for (int i = 1; i <= 2; ++i)
            for (int m = 1; m <= 2; ++m)
                for (int n = 1; n <= 2; ++n)
                    for (int p = 1; p <= 2; ++p)
                        if (at(i, m, n, p) != at(i, n, m, p) || at(i, m, n, p) != at(i, m, p, n))
                            return false;
        return true;
    }

    friend CoeffTensorT operator+(const CoeffTensorT& a, const CoeffTensorT& b) {
        CoeffTensorT r;
        for (size_t k = 0; k < 16; ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }

    friend bool operator==(const CoeffTensorT& a, const CoeffTensorT& b) = default;

private:
    static size_t index(int i, int m, int n, int p) {
        if (i < 1 || i > 2 || m < 1 || m > 2 || n < 1 || n > 2 || p < 1 || p > 2)
            throw std::out_of_range("CoeffTensor: index");
        return static_cast<size_t>((i - 1) * 8 + (m - 1) * 4 + (n - 1) * 2 + (p - 1));
    }

    std::array<R, 16> e_{};
};

using CoeffTensor = CoeffTensorT<Rational>;

/// Cubic transformation of the plane: y^i is a polynomial of degree <= 3 in
/// x1, x2. Lower-degree terms are allowed and carried through compositions;
/// the invariants only ever look at the cubic part.
struct CubicMap {
    MultiPoly y1;
    MultiPoly y2;

    const MultiPoly& component(int i) const {
        if (i == 1) return y1;
        if (i == 2) return y2;
        throw std::out_of_range("CubicMap: component");
    }
};

/// Validates degree <= 3 and variables within {x1, x2}; throws
/// std::invalid_argument otherwise.
CubicMap make_cubic_map(MultiPoly y1, MultiPoly y2);

/// Affine transformation y^i = sum_m T^i_m x^m + a^i.
struct AffineMap {
    Matrix2 linear;
    std::array<Rational, 2> shift{};

    static AffineMap identity() { return AffineMap{Matrix2::identity(), {}}; }
};

/// Map file: lines `y1 = <poly>` and `y2 = <poly>`, one of each in either
/// order; `#` starts a comment; blank lines are ignored. Errors carry
/// 1-based line numbers.
CubicMap parse_cubic_map(std::istream& in);
CubicMap parse_cubic_map(std::string_view text);

/// Canonical text form; parse_cubic_map(map_to_text(f)) == f.
std::string map_to_text(const CubicMap& f);

/// Matrix file: two lines of two rationals each (row-major), then an
/// optional line `a = <r> <r>` with the affine shift. Comments and blank
/// lines as in map files.
AffineMap parse_affine_map(std::istream& in);
AffineMap parse_affine_map(std::string_view text);

/// Symmetric coefficient tensor of the cubic part. The mixed monomials of
/// y^i carry multiplicities 3, so those coefficients are divided by 3
/// (exactly, no integrality assumed). Lower-degree terms are ignored.
CoeffTensor coeff_tensor(const CubicMap& f);

/// f~ then phi applied first: returns f = f~ . phi by substituting
/// x^i -> sum T^i_m x^m + a^i. No invertibility needed; singular and even
/// zero matrices are legitimate here.
CubicMap compose_right(const CubicMap& ftilde, const AffineMap& phi);

/// phi^{-1} applied after f~: returns f = phi^{-1} . f~, i.e. S(f~ - a)
/// with S the inverse of phi's matrix. Throws std::domain_error when the
/// matrix is singular.
CubicMap compose_left(const CubicMap& ftilde, const AffineMap& phi);

/// Cubic-part law of right composition:
/// F^i_mnp = sum F~^i_{m'n'p'} T^m'_m T^n'_n T^p'_p.
/// Ring-generic so T may have polynomial entries.
template <CoefficientRing R>
CoeffTensorT<R> compose_right_tensor(const CoeffTensorT<R>& ft, const Mat2<R>& t) {
    CoeffTensorT<R> r;
    for (int i = 1; i <= 2; ++i)
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                for (int p = 1; p <= 2; ++p) {
                    R sum{};
                    for (int mm = 1; mm <= 2; ++mm)
                        for (int nn = 1; nn <= 2; ++nn)
                            for (int pp = 1; pp <= 2; ++pp)
                                sum = sum + ft.at(i, mm, nn, pp) * t.at(mm, m) * t.at(nn, n) *
                                                t.at(pp, p);
                    r.set(i, m, n, p, std::move(sum));
                }
    return r;
}

/// Cubic-part law of left composition: F^i_mnp = sum_i' F~^i'_mnp S^i_i'.
/// The caller passes S itself (the inverse of the composing matrix).
template <CoefficientRing R>
CoeffTensorT<R> compose_left_tensor(const CoeffTensorT<R>& ft, const Mat2<R>& s) {
    CoeffTensorT<R> r;
    for (int i = 1; i <= 2; ++i)
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                for (int p = 1; p <= 2; ++p) {
                    R sum{};
                    for (int ii = 1; ii <= 2; ++ii)
                        sum = sum + ft.at(ii, m, n, p) * s.at(i, ii);
                    r.set(i, m, n, p, std::move(sum));
                }
    return r;
}

/// Tensor change of coordinates with transition matrix S (T = S^{-1}):
/// F~^i_mnp = sum F^i'_{m'n'p'} T^i_i' S^m'_m S^n'_n S^p'_p.
CoeffTensor change_coordinates(const CoeffTensor& f, const Matrix2& s);

/// Inverse change: F^i_mnp = sum F~^i'_{m'n'p'} S^i_i' T^m'_m T^n'_n T^p'_p.
/// change_coordinates_inverse(change_coordinates(F, S), S) == F.
CoeffTensor change_coordinates_inverse(const CoeffTensor& ft, const Matrix2& s);

/// Embeds a rational tensor into the polynomial coefficient ring.
CoeffTensorT<MultiPoly> lift(const CoeffTensor& f);

}  // namespace cubiq
