#pragma once

#include "cubiq/invariants.hpp"

namespace cubiq {

/// Shape of a pseudotensorial array: contravariant rank r, covariant rank
/// s, integer weight m, and the dimension its indices run over (2 or 4).
struct PseudoSpec {
    int contravariant = 0;
    int covariant = 0;
    int weight = 0;
    int dim = 2;

    friend bool operator==(const PseudoSpec&, const PseudoSpec&) = default;
};

/// Dense component array of a pseudotensor. Index tuples list the upper
/// indices first, then the lower ones, each 1-based.
class PseudoArray {
public:
    explicit PseudoArray(PseudoSpec spec);

    const PseudoSpec& spec() const { return spec_; }
    int rank() const { return spec_.contravariant + spec_.covariant; }

    const Rational& at(std::span<const int> idx) const { return e_[flat(idx)]; }
    void set(std::span<const int> idx, Rational value) { e_[flat(idx)] = std::move(value); }

    /// The fundamental skew arrays [[0,1],[-1,0]]: lower-index version of
    /// weight -1 and upper-index version of weight +1. Both are pointwise
    /// invariant under the pseudotensor law, which is what makes the
    /// contraction machinery coordinate-free.
    static PseudoArray fundamental_lower();
    static PseudoArray fundamental_upper();

    friend bool operator==(const PseudoArray&, const PseudoArray&) = default;

private:
    size_t flat(std::span<const int> idx) const;

    PseudoSpec spec_;
    std::vector<Rational> e_;
};

/// The pseudotensor transformation law: given the components in the tilded
/// frame and the transition matrix S (T = S^{-1}), returns
///   (det T)^m  S^{i}_{p} ... T^{q}_{j} ... A~^{p...}_{q...}.
/// The dim-4 overload uses the block-diagonal lifts of S and T entrywise
/// while the det prefactor stays det of the underlying 2x2 T, matching the
/// printed law. Throws std::domain_error on singular input.
PseudoArray pseudo_transform(const PseudoArray& a, const Matrix2& s);
PseudoArray pseudo_transform(const PseudoArray& a, const Matrix4Block& s);

/// Componentwise tensor product; ranks and weights add, dims must agree.
PseudoArray outer_product(const PseudoArray& a, const PseudoArray& b);

/// Exact per-component mismatch of a checked identity.
struct Residual {
    std::string where;
    Rational difference;
};

struct CheckResult {
    bool pass = true;
    std::vector<Residual> residuals;

    void record(std::string where, Rational difference) {
        if (difference.is_zero()) return;
        pass = false;
        residuals.push_back({std::move(where), std::move(difference)});
    }
};

/// Change of coordinates commutes with form construction: builds F~ from F
/// with transition matrix S and checks that each quartic form of F~ equals
/// the S-pullback of the corresponding form of F, componentwise.
CheckResult check_tensoriality(const CoeffTensor& f, const Matrix2& s);

/// Left composition law: F from F~ via S = T^{-1} on the upper index; every
/// determinant and every form component scales by det S.
CheckResult left_law_check(const CoeffTensor& ftilde, const Matrix2& t);

/// Right composition law: F from F~ via T on the lower indices; each form
/// of F equals det T times the T-pullback of the corresponding form of F~.
/// Valid for singular T as well.
CheckResult right_law_check(const CoeffTensor& ftilde, const Matrix2& t);

/// The determinant-versus-form pairing: row q compares the q-th determinant
/// of the right-composed tensor against det T times the q-th form of F~
/// evaluated at z1 = T^1_1, z2 = T^2_1, z3 = T^1_2, z4 = T^2_2.
struct CompositionRow {
    const char* label;
    Rational lhs;
    Rational rhs;
};

struct CompositionTable {
    std::array<CompositionRow, 6> rows;
    bool all_equal = true;
};

CompositionTable theorem43_check(const CoeffTensor& ftilde, const Matrix2& t);

}  // namespace cubiq
