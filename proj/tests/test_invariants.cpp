#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubiq/invariants.hpp"

using namespace cubiq;

static const std::set<std::string> kXY = {"x1", "x2"};

static CubicMap map_from(const char* y1, const char* y2) {
    return make_cubic_map(MultiPoly::parse(y1, kXY), MultiPoly::parse(y2, kXY));
}

static CoeffTensor f0_tensor() { return coeff_tensor(map_from("x1^3", "x2^3")); }

static MultiPoly fvar(const char* name) { return MultiPoly::variable(name); }

TEST_CASE("determinants of the canonical map") {
    const GSet g = g_determinants(f0_tensor());
    CHECK(g.g1111 == Rational(0));
    CHECK(g.g1112 == Rational(0));
    CHECK(g.g1122 == Rational(1));
    CHECK(g.g1212 == Rational(0));
    CHECK(g.g1222 == Rational(0));
    CHECK(g.g2222 == Rational(0));
    CHECK(g.by_index(3) == Rational(1));
    CHECK_THROWS_AS(g.by_index(7), std::out_of_range);

    // A map whose two components share the x1^2 column: only the first
    // determinant survives.
    const GSet h = g_determinants(coeff_tensor(map_from("x1^3", "3*x1^2*x2")));
    CHECK(h.g1111 == Rational(1));
    CHECK(h.g1112 == Rational(0));
    CHECK(h.g1122 == Rational(0));
    CHECK(h.g1212 == Rational(0));
    CHECK(h.g1222 == Rational(0));
    CHECK(h.g2222 == Rational(0));
}

TEST_CASE("determinants as polynomials in the tensor entries") {
    const CoeffTensorT<MultiPoly> f = symbolic_coeff_tensor();
    const GSetT<MultiPoly> g = g_determinants(f);
    CHECK(g.g1111 == fvar("F1_111") * fvar("F2_112") - fvar("F1_112") * fvar("F2_111"));
    CHECK(g.g1112 == fvar("F1_111") * fvar("F2_122") - fvar("F1_122") * fvar("F2_111"));
    CHECK(g.g1122 == fvar("F1_111") * fvar("F2_222") - fvar("F1_222") * fvar("F2_111"));
    CHECK(g.g1212 == fvar("F1_112") * fvar("F2_122") - fvar("F1_122") * fvar("F2_112"));
    CHECK(g.g1222 == fvar("F1_112") * fvar("F2_222") - fvar("F1_222") * fvar("F2_112"));
    CHECK(g.g2222 == fvar("F1_122") * fvar("F2_222") - fvar("F1_222") * fvar("F2_122"));
}

TEST_CASE("symmetric form storage bookkeeping") {
    CHECK(SymTensor4::multiplicity({1, 1, 1, 1}) == 1);
    CHECK(SymTensor4::multiplicity({1, 1, 1, 2}) == 4);
    CHECK(SymTensor4::multiplicity({1, 1, 2, 2}) == 6);
    CHECK(SymTensor4::multiplicity({1, 2, 3, 4}) == 24);
    CHECK(SymTensor4::multiplicity({1, 1, 2, 3}) == 12);

    SymTensor4 form(4, 0);
    form.set_monomial_coefficient({0, 1, 1, 2}, Rational(5));
    CHECK(form.component({2, 3, 4, 4}) == Rational(5, 12));
    CHECK(form.component({4, 2, 4, 3}) == Rational(5, 12));  // any ordering
    CHECK(form.monomial_coefficient({0, 1, 1, 2}) == Rational(5));

    // The (z3, z4) window: z1-monomials lie outside it.
    SymTensor4 tail(2, 2);
    tail.set_monomial_coefficient({0, 0, 2, 2}, Rational(1));
    CHECK(tail.monomial_coefficient({0, 0, 2, 2}) == Rational(1));
    CHECK(tail.monomial_coefficient({2, 0, 2, 0}) == Rational(0));
    CHECK_THROWS_AS(tail.set_monomial_coefficient({1, 0, 2, 1}, Rational(1)), std::out_of_range);

    const std::array<Rational, 2> z = {Rational(2), Rational(3)};
    CHECK(tail.evaluate(std::span<const Rational>(z)) == Rational(36));
}

TEST_CASE("derived forms of the canonical map") {
    const CoeffTensor f = f0_tensor();
    const std::array<const char*, 6> expected = {
        "z1^2*z2^2",
        "z1^2*z2*z4 + z1*z2^2*z3",
        "z1^2*z4^2 + z1*z2*z3*z4 + z2^2*z3^2",
        "z1*z2*z3*z4",
        "z1*z3*z4^2 + z2*z3^2*z4",
        "z3^2*z4^2",
    };
    for (int q = 1; q <= 6; ++q)
        CHECK(form_polynomial(omega_derived(q, f)).str() == expected[static_cast<size_t>(q - 1)]);
}

TEST_CASE("printed and derived forms coincide on the canonical map") {
    const CoeffTensor f = f0_tensor();
    const GSet g = g_determinants(f);
    for (int q = 1; q <= 6; ++q) CHECK(omega_printed(q, g) == omega_derived(q, f));
}

TEST_CASE("pairing contraction values on the canonical map") {
    const Tensor4x4 omega = omega_tensor(f0_tensor());
    CHECK(omega.at(1, 1, 2, 2) == Rational(1, 2));
    CHECK(omega.at(2, 2, 1, 1) == Rational(1, 2));
    CHECK(omega.at(1, 2, 1, 2) == Rational(0));
    CHECK(omega.at(1, 1, 1, 1) == Rational(0));

    const Tensor4x4 nothing = omega_tensor(CoeffTensor{});
    for (int i = 1; i <= 2; ++i)
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                for (int p = 1; p <= 2; ++p) CHECK(nothing.at(i, m, n, p) == Rational(0));
}

TEST_CASE("contraction-built forms on the canonical map") {
    const CoeffTensor f = f0_tensor();
    const GSet g = g_determinants(f);
    CHECK(theorem3_form(1, f).component({1, 1, 2, 2}) == Rational(1, 6));
    CHECK(omega_printed(1, g).component({1, 1, 2, 2}) == Rational(1, 6));
    CHECK(form_polynomial(theorem3_form(1, f)).str() == "z1^2*z2^2");
    CHECK(form_polynomial(theorem3_form(6, f)).str() == "z3^2*z4^2");
}

TEST_CASE("pairing contraction has the pair symmetries") {
    const CoeffTensor f = coeff_tensor(map_from("x1^3 - 2*x1^2*x2 + 1/2*x2^3",
                                                "x1*x2^2 + 3*x1^3 - x2^3"));
    const Tensor4x4 omega = omega_tensor(f);
    for (int i = 1; i <= 2; ++i)
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                for (int p = 1; p <= 2; ++p) {
                    CHECK(omega.at(i, m, n, p) == omega.at(m, i, n, p));
                    CHECK(omega.at(i, m, n, p) == omega.at(i, m, p, n));
                    CHECK(omega.at(i, m, n, p) == omega.at(n, p, i, m));
                }
}

TEST_CASE("contraction-built forms equal the derived forms symbolically") {
    // The strongest statement the machinery proves: for fully indeterminate
    // F the symmetrized contraction construction reproduces the derived
    // forms for every q, exactly.
    const CoeffTensorT<MultiPoly> f = symbolic_coeff_tensor();
    for (int q = 1; q <= 6; ++q) CHECK(theorem3_form(q, f) == omega_derived(q, f));

    // For q = 1 the printed coefficients agree with the contraction
    // construction identically as well.
    CHECK(theorem3_form(1, f) == omega_printed(1, g_determinants(f)));
}

TEST_CASE("stored forms are fully symmetric under index permutation") {
    const CoeffTensor f = coeff_tensor(map_from("x1^3 - x1^2*x2 + 2*x2^3", "x1*x2^2 + x1^3"));
    const SymTensor4 form = omega_derived(3, f);
    std::array<int, 4> idx;
    for (idx[0] = 1; idx[0] <= 4; ++idx[0])
        for (idx[1] = 1; idx[1] <= 4; ++idx[1])
            for (idx[2] = 1; idx[2] <= 4; ++idx[2])
                for (idx[3] = 1; idx[3] <= 4; ++idx[3]) {
                    std::array<int, 4> sorted = idx;
                    std::sort(sorted.begin(), sorted.end());
                    CHECK(form.component(idx) == form.component(sorted));
                }
}

TEST_CASE("listed symmetrizations equal full symmetrization") {
    // The middle-q constructions average over 12 listed arrangements (24
    // for q = 3); the result must match the average over all 24 index
    // permutations.
    const CoeffTensorT<MultiPoly> f = symbolic_coeff_tensor();
    for (int q = 2; q <= 5; ++q) {
        const auto full = symmetric_from_full(symmetrize_full(omega_combined(q, f)), 0);
        CHECK(full == theorem3_form(q, f));
    }
}

TEST_CASE("printed forms differ from derived in exactly two monomials") {
    const DiscrepancyReport report = discrepancy_report();
    REQUIRE(report.rows.size() == 2);

    const DiscrepancyRow& first = report.rows[0];
    CHECK(first.q == 2);
    CHECK(first.monomial == std::array<unsigned, 4>{0, 3, 1, 0});
    CHECK(first.printed == "F1_122*F2_222 - F1_222*F2_122");
    CHECK(first.derived == "F1_112*F2_222 - F1_222*F2_112");
    CHECK(first.theorem3 == first.derived);

    const DiscrepancyRow& second = report.rows[1];
    CHECK(second.q == 4);
    CHECK(second.monomial == std::array<unsigned, 4>{0, 2, 0, 2});
    CHECK(second.printed == "F1_112*F2_222 - F1_222*F2_112");
    CHECK(second.derived == "F1_122*F2_222 - F1_222*F2_122");
    CHECK(second.theorem3 == second.derived);
}

TEST_CASE("discrepancy scan of a specific tensor") {
    // On the canonical map all three constructions agree: the suspect
    // coefficients multiply components that vanish there.
    const DiscrepancyReport specific = discrepancy_report(lift(f0_tensor()));
    CHECK(specific.empty());
    CHECK(specific.text() == "all three constructions agree on every monomial\n");

    // The zero-argument overload is the fully symbolic scan.
    CHECK(discrepancy_report().rows.size() == 2);
}

TEST_CASE("form evaluation") {
    const CoeffTensor f = f0_tensor();
    // The point z(T) for the unipotent shear: z1 = 1, z2 = 0, z3 = 1, z4 = 1.
    const std::array<Rational, 4> z = {Rational(1), Rational(0), Rational(1), Rational(1)};
    CHECK(omega_eval(omega_derived(3, f), std::span<const Rational>(z)) == Rational(1));
    CHECK(omega_eval(omega_derived(4, f), std::span<const Rational>(z)) == Rational(0));

    const std::array<Rational, 2> head = {Rational(1), Rational(0)};
    CHECK(omega_eval(omega_derived(1, f), std::span<const Rational>(head)) == Rational(0));

    // Quartic forms have no constant term.
    const std::array<Rational, 4> origin = {};
    CHECK(omega_eval(omega_derived(3, f), std::span<const Rational>(origin)) == Rational(0));
}

TEST_CASE("forms are quartic or zero") {
    const CoeffTensor f = coeff_tensor(map_from("x1^3 + x1*x2^2 - x2", "2*x2^3 + x1^2*x2"));
    for (int q = 1; q <= 6; ++q) {
        const MultiPoly p = form_polynomial(omega_derived(q, f));
        CHECK((p.is_zero() || p.degree() == 4));
    }
}

TEST_CASE("zero determinants give zero forms in every construction") {
    for (int q = 1; q <= 6; ++q) {
        CHECK(omega_printed(q, GSet{}).is_zero());
        CHECK(theorem3_form(q, CoeffTensor{}).is_zero());
    }
}

TEST_CASE("fundamental arrays") {
    CHECK(PseudoD::lower(1, 2) == 1);
    CHECK(PseudoD::lower(2, 1) == -1);
    CHECK(PseudoD::lower(1, 1) == 0);
    CHECK(PseudoD::upper(1, 2) == 1);

    // The exchange operator is an involution pairing the two blocks.
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            int sq = 0;
            for (int k = 1; k <= 4; ++k) sq += Exchange4::at(i, k) * Exchange4::at(k, j);
            CHECK(sq == (i == j ? 1 : 0));
        }
    CHECK(Exchange4::at(1, 3) == 1);
    CHECK(Exchange4::at(2, 4) == 1);
    CHECK(Exchange4::at(1, 2) == 0);
}

TEST_CASE("lower-degree-only maps have zero invariants") {
    const CoeffTensor f = coeff_tensor(map_from("x1 + 2*x2 + 1", "x2^2 - x1"));
    CHECK(g_determinants(f) == GSet{});
    for (int q = 1; q <= 6; ++q) CHECK(omega_derived(q, f).is_zero());
}
