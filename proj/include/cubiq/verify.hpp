#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "cubiq/transforms.hpp"

namespace cubiq {

/// Random rational inputs for property trials. Numerators and denominators
/// stay within |num| <= 9, 1 <= den <= 9 to keep the degree-6 expansions
/// cheap. Values are drawn by modulo mapping from mt19937_64 so a seed
/// yields identical streams on every platform.
class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed) : gen_(seed) {}

    long int_in(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational() { return Rational(int_in(-9, 9), int_in(1, 9)); }

    Matrix2 matrix() {
        Matrix2 m;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) m.at(i, j) = rational();
        return m;
    }

    Matrix2 invertible_matrix() {
        for (;;) {
            Matrix2 m = matrix();
            if (!m.det().is_zero()) return m;
        }
    }

    /// Proportional rows, so det = 0 by construction.
    Matrix2 singular_matrix() {
        const Rational a = rational(), b = rational(), lambda = rational();
        Matrix2 m(a, b, a * lambda, b * lambda);
        if (int_in(0, 1) == 1) std::swap(m.at(1, 1), m.at(2, 1)), std::swap(m.at(1, 2), m.at(2, 2));
        return m;
    }

    CoeffTensor coeff_tensor() {
        CoeffTensor f;
        for (int i = 1; i <= 2; ++i) {
            f.set_sym(i, 1, 1, 1, rational());
            f.set_sym(i, 1, 1, 2, rational());
            f.set_sym(i, 1, 2, 2, rational());
            f.set_sym(i, 2, 2, 2, rational());
        }
        return f;
    }

private:
    std::mt19937_64 gen_;
};

struct VerifyOptions {
    int trials = 100;
    std::uint64_t seed = 0;
    std::optional<CubicMap> map;  // when set, its tensor replaces the random one
};

struct TrialRecord {
    std::string law;
    int trial;
    std::uint64_t seed;  // derived per-trial seed, enough to replay the trial
    bool pass;
    std::string residual;  // empty when the trial passed
};

struct VerifyReport {
    std::vector<TrialRecord> records;
    bool all_pass = true;

    std::string text() const;
    std::string to_json_text() const;
};

/// Runs every transformation-law checker `trials` times with independent
/// deterministic inputs. The laws covered: tensoriality of the forms, the
/// left and right composition laws (the right one also on singular
/// matrices), the determinant-form pairing, invariance of the fundamental
/// arrays, and the coordinate-change round trip.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace cubiq
