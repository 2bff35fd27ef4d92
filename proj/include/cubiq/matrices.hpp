#pragma once

#include <array>
#include <stdexcept>

#include "cubiq/ring.hpp"

namespace cubiq {

/// 2x2 matrix over a coefficient ring. Indices are 1-based; the first index
/// is the row (the upper index in tensor notation).
template <CoefficientRing R>
class Mat2 {
public:
    Mat2() : e_{R{}, R{}, R{}, R{}} {}
    Mat2(R a11, R a12, R a21, R a22)
        : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {}

    static Mat2 identity() {
        return Mat2(R(Rational(1)), R{}, R{}, R(Rational(1)));
    }

    R& at(int i, int j) { return e_[index(i, j)]; }
    const R& at(int i, int j) const { return e_[index(i, j)]; }

    R det() const { return at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1); }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        Mat2 r;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                r.at(i, j) = a.at(i, 1) * b.at(1, j) + a.at(i, 2) * b.at(2, j);
        return r;
    }

    friend bool operator==(const Mat2& a, const Mat2& b) = default;

private:
    static size_t index(int i, int j) {
        if (i < 1 || i > 2 || j < 1 || j > 2) throw std::out_of_range("Mat2: index");
        return static_cast<size_t>((i - 1) * 2 + (j - 1));
    }

    std::array<R, 4> e_;
};

using Matrix2 = Mat2<Rational>;

inline Matrix2 inverse(const Matrix2& m) {
    const Rational d = m.det();
    if (d.is_zero()) throw std::domain_error("inverse: singular matrix");
    return Matrix2(m.at(2, 2) / d, -m.at(1, 2) / d, -m.at(2, 1) / d, m.at(1, 1) / d);
}

/// Entry (i, j), 1-based over 1..4, of the block-diagonal 4x4 matrix
/// diag(B, B). Generic so it also serves matrices with polynomial entries.
template <CoefficientRing R>
R block_diag_at(const Mat2<R>& b, int i, int j) {
    if (i < 1 || i > 4 || j < 1 || j > 4) throw std::out_of_range("block_diag_at: index");
    if (i <= 2 && j <= 2) return b.at(i, j);
    if (i >= 3 && j >= 3) return b.at(i - 2, j - 2);
    return R{};
}

/// The 4x4 matrix diag(B, B) acting on (z1, z2, z3, z4); the first block
/// moves (z1, z2), the second (z3, z4).
class Matrix4Block {
public:
    explicit Matrix4Block(Matrix2 block) : block_(std::move(block)) {}

    const Matrix2& block() const { return block_; }

    Rational at(int i, int j) const { return block_diag_at(block_, i, j); }

    Rational det() const {
        const Rational d = block_.det();
        return d * d;
    }

private:
    Matrix2 block_;
};

inline Matrix4Block hat_matrix(const Matrix2& block) { return Matrix4Block(block); }

}  // namespace cubiq
