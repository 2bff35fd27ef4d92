#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cubiq/cubic_map.hpp"

using namespace cubiq;

static const std::set<std::string> kXY = {"x1", "x2"};

static CubicMap map_from(const char* y1, const char* y2) {
    return make_cubic_map(MultiPoly::parse(y1, kXY), MultiPoly::parse(y2, kXY));
}

static const char* kF0Text = "y1 = x1^3\ny2 = x2^3\n";

TEST_CASE("make_cubic_map validates degree and variables") {
    CHECK_NOTHROW(map_from("x1^3 + x1*x2 + 1", "x2"));
    CHECK_THROWS_AS(make_cubic_map(MultiPoly::variable("x1").pow(4), MultiPoly()),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_cubic_map(MultiPoly::variable("z1"), MultiPoly()), std::invalid_argument);
}

TEST_CASE("map file parsing") {
    const CubicMap f0 = parse_cubic_map(kF0Text);
    CHECK(f0.y1.str() == "x1^3");
    CHECK(f0.y2.str() == "x2^3");

    // Components in either order, with comments and blank lines.
    const CubicMap g = parse_cubic_map("# comment\n\ny2 = x1\n  y1 = x2 # trailing\n");
    CHECK(g.y1.str() == "x2");
    CHECK(g.y2.str() == "x1");

    CHECK(map_to_text(f0) == kF0Text);
    const CubicMap reparsed = parse_cubic_map(map_to_text(f0));
    CHECK(reparsed.y1 == f0.y1);
    CHECK(reparsed.y2 == f0.y2);

    // Lower-degree terms are legal and kept verbatim.
    const CubicMap mixed = parse_cubic_map("y1 = x1^3 + x1\ny2 = x2^3 + 5\n");
    CHECK(mixed.y1.str() == "x1^3 + x1");
    CHECK(mixed.y2.str() == "x2^3 + 5");
}

TEST_CASE("map file errors carry line numbers") {
    try {
        parse_cubic_map("y1 = x1\ny1 = x2\n");
        FAIL("duplicate y1 accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        parse_cubic_map("y1 = x1\n");
        FAIL("missing y2 accepted");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("y2") != std::string::npos);
    }
    try {
        parse_cubic_map("y1 = x1\ny2 = x9\n");
        FAIL("unknown variable accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_cubic_map("y3 = x1\ny2 = x2\n"), ParseError);
    CHECK_THROWS_AS(parse_cubic_map("y1 = x1^4\ny2 = x2\n"), ParseError);
    CHECK_THROWS_AS(parse_cubic_map("nonsense\n"), ParseError);
}

TEST_CASE("affine file parsing") {
    const AffineMap plain = parse_affine_map("1 1\n0 1\n");
    CHECK(plain.linear.at(1, 1) == Rational(1));
    CHECK(plain.linear.at(1, 2) == Rational(1));
    CHECK(plain.linear.at(2, 1) == Rational(0));
    CHECK(plain.shift[0] == Rational(0));

    const AffineMap shifted = parse_affine_map("# rows\n1/2 0\n0 3\na = -1 2/3\n");
    CHECK(shifted.linear.at(1, 1) == Rational(1, 2));
    CHECK(shifted.shift[0] == Rational(-1));
    CHECK(shifted.shift[1] == Rational(2, 3));

    CHECK_THROWS_AS(parse_affine_map("1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_affine_map("1 1\n0 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_affine_map("1 x\n0 1\n"), ParseError);
}

TEST_CASE("coefficient extraction divides mixed monomials by 3") {
    // (x1 + x2)^3 has printed coefficients 1, 3, 3, 1; the tensor components
    // are all 1.
    const CubicMap f = map_from("x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3", "x2^3");
    const CoeffTensor c = coeff_tensor(f);
    CHECK(c.at(1, 1, 1, 1) == Rational(1));
    CHECK(c.at(1, 1, 1, 2) == Rational(1));
    CHECK(c.at(1, 1, 2, 2) == Rational(1));
    CHECK(c.at(1, 2, 2, 2) == Rational(1));
    CHECK(c.at(2, 2, 2, 2) == Rational(1));
    CHECK(c.at(2, 1, 1, 1) == Rational(0));
    CHECK(c.lower_symmetric());
    // All lower-index orderings hold the same value.
    CHECK(c.at(1, 1, 1, 2) == c.at(1, 1, 2, 1));
    CHECK(c.at(1, 1, 1, 2) == c.at(1, 2, 1, 1));

    // Non-integral coefficients survive exactly.
    const CoeffTensor half = coeff_tensor(map_from("x1^2*x2", "0"));
    CHECK(half.at(1, 1, 1, 2) == Rational(1, 3));

    // The printed coefficient 3 of x1^2*x2 corresponds to component 1.
    const CoeffTensor single = coeff_tensor(map_from("3*x1^2*x2", "0"));
    CHECK(single.at(1, 1, 1, 2) == Rational(1));
    CHECK(single + coeff_tensor(map_from("-3*x1^2*x2", "0")) == CoeffTensor{});

    // Pure cubes sit on the extreme slots.
    const CoeffTensor cube = coeff_tensor(parse_cubic_map(kF0Text));
    CHECK(cube.at(1, 1, 1, 1) == Rational(1));
    CHECK(cube.at(2, 2, 2, 2) == Rational(1));
    CHECK(cube.at(1, 2, 2, 2) == Rational(0));
    CHECK(cube.at(2, 1, 1, 1) == Rational(0));

    // Lower-degree terms contribute nothing.
    const CoeffTensor affine_only = coeff_tensor(map_from("x1 + 1", "x2"));
    CHECK(affine_only == CoeffTensor{});
}

TEST_CASE("coefficient extraction is linear in the map") {
    const CubicMap f = map_from("x1^3 - 2*x1^2*x2 + x1", "x2^3 + 4*x1*x2^2");
    const CubicMap g = map_from("5*x1*x2^2 + 7", "x1^3 - x2^3");
    const CubicMap sum = make_cubic_map(f.y1 + g.y1, f.y2 + g.y2);
    CHECK(coeff_tensor(sum) == coeff_tensor(f) + coeff_tensor(g));
}

TEST_CASE("right composition substitutes the affine map first") {
    const CubicMap f0 = parse_cubic_map(kF0Text);
    AffineMap shear;
    shear.linear = Matrix2(Rational(1), Rational(1), Rational(0), Rational(1));
    const CubicMap composed = compose_right(f0, shear);
    CHECK(composed.y1.str() == "x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3");
    CHECK(composed.y2.str() == "x2^3");

    const CubicMap same = compose_right(f0, AffineMap::identity());
    CHECK(same.y1 == f0.y1);
    CHECK(same.y2 == f0.y2);

    // A shift enters through the lower-degree terms...
    AffineMap shifted = AffineMap::identity();
    shifted.shift = {Rational(1), Rational(0)};
    const CubicMap moved = compose_right(f0, shifted);
    CHECK(moved.y1.str() == "x1^3 + 3*x1^2 + 3*x1 + 1");
    // ...but never through the cubic part.
    CHECK(coeff_tensor(moved) == coeff_tensor(f0));

    // Collapsing everything to a point leaves the constant images.
    AffineMap point;
    point.linear = Matrix2(Rational(0), Rational(0), Rational(0), Rational(0));
    point.shift = {Rational(1), Rational(1)};
    const CubicMap constant = compose_right(f0, point);
    CHECK(constant.y1 == MultiPoly(Rational(1)));
    CHECK(constant.y2 == MultiPoly(Rational(1)));
}

TEST_CASE("left composition applies the inverse afterwards") {
    const CubicMap f0 = parse_cubic_map(kF0Text);
    const CubicMap fixed = compose_left(f0, AffineMap::identity());
    CHECK(fixed.y1 == f0.y1);
    CHECK(fixed.y2 == f0.y2);

    AffineMap stretch;
    stretch.linear = Matrix2(Rational(2), Rational(0), Rational(0), Rational(1));
    const CubicMap composed = compose_left(f0, stretch);
    CHECK(composed.y1.str() == "1/2*x1^3");
    CHECK(composed.y2.str() == "x2^3");

    // Left composition undoes the shift before scaling.
    AffineMap with_shift = stretch;
    with_shift.shift = {Rational(4), Rational(0)};
    const CubicMap moved = compose_left(f0, with_shift);
    CHECK(moved.y1.str() == "1/2*x1^3 - 2");

    AffineMap singular;
    singular.linear = Matrix2(Rational(1), Rational(0), Rational(0), Rational(0));
    CHECK_THROWS_AS(compose_left(f0, singular), std::domain_error);
}

TEST_CASE("tensor-level composition laws agree with map-level composition") {
    const CubicMap f = map_from("x1^3 - 2*x1*x2^2 + x2 - 5", "x1^2*x2 + 1/3*x2^3 + x1");
    AffineMap phi;
    phi.linear = Matrix2(Rational(2), Rational(-1), Rational(1), Rational(3));
    phi.shift = {Rational(1), Rational(-2)};

    CHECK(coeff_tensor(compose_right(f, phi)) ==
          compose_right_tensor(coeff_tensor(f), phi.linear));

    const Matrix2 s = inverse(phi.linear);
    CHECK(coeff_tensor(compose_left(f, phi)) == compose_left_tensor(coeff_tensor(f), s));

    // Singular matrices are fine on the right.
    AffineMap collapse;
    collapse.linear = Matrix2(Rational(1), Rational(2), Rational(2), Rational(4));
    CHECK(coeff_tensor(compose_right(f, collapse)) ==
          compose_right_tensor(coeff_tensor(f), collapse.linear));
}

TEST_CASE("change of coordinates matches conjugation for the swap") {
    // Conjugating y1 = x1^3, y2 = 0 by the coordinate swap gives y1 = 0,
    // y2 = x2^3; the swap is its own inverse, so both index conventions
    // must produce exactly this tensor.
    const Matrix2 swap(Rational(0), Rational(1), Rational(1), Rational(0));
    const CoeffTensor f = coeff_tensor(map_from("x1^3", "0"));
    const CoeffTensor expected = coeff_tensor(map_from("0", "x2^3"));
    CHECK(change_coordinates(f, swap) == expected);
    CHECK(change_coordinates_inverse(expected, swap) == f);

    // y1 = x1^3, y2 = x2^3 commutes with the swap, so its tensor is a
    // fixed point of that change of coordinates.
    const CoeffTensor f0 = coeff_tensor(parse_cubic_map(kF0Text));
    CHECK(change_coordinates(f0, swap) == f0);

    CHECK(change_coordinates(f, Matrix2::identity()) == f);

    const Matrix2 singular(Rational(1), Rational(2), Rational(2), Rational(4));
    CHECK_THROWS_AS(change_coordinates(f, singular), std::domain_error);
}

TEST_CASE("two-sided composition is a change of coordinates") {
    // Conjugating with the same invertible matrix on both sides, in either
    // order, lands on the coordinate-change tensor.
    const CoeffTensor f = coeff_tensor(map_from("x1^3 + 2*x1^2*x2 - x2^3", "x1*x2^2 + 3*x1^3"));
    const Matrix2 m(Rational(2), Rational(-1), Rational(1), Rational(3));
    const Matrix2 m_inv = inverse(m);
    const CoeffTensor conjugated = change_coordinates(f, m);
    CHECK(compose_right_tensor(compose_left_tensor(f, m_inv), m) == conjugated);
    CHECK(compose_left_tensor(compose_right_tensor(f, m), m_inv) == conjugated);
}

TEST_CASE("coordinate changes compose as a group action") {
    const CoeffTensor f = coeff_tensor(map_from("x1^3 + x1*x2^2", "2*x2^3 - x1^2*x2"));
    const Matrix2 s1(Rational(1), Rational(2), Rational(0), Rational(1));
    const Matrix2 s2(Rational(3), Rational(0), Rational(1), Rational(1));
    CHECK(change_coordinates(change_coordinates(f, s1), s2) == change_coordinates(f, s1 * s2));
    CHECK(change_coordinates_inverse(change_coordinates(f, s2), s2) == f);
}

TEST_CASE("lift embeds rational tensors into the polynomial ring") {
    const CoeffTensor f = coeff_tensor(map_from("x1^3", "x2^3"));
    const CoeffTensorT<MultiPoly> lifted = lift(f);
    CHECK(lifted.at(1, 1, 1, 1) == MultiPoly(Rational(1)));
    CHECK(lifted.at(2, 1, 1, 1).is_zero());
}
