#pragma once

#include <concepts>

#include "cubiq/rational.hpp"

namespace cubiq {

/// Commutative ring of coefficients the tensor machinery is generic over.
/// The two instantiations used here are Rational (numeric work) and
/// MultiPoly (symbolic work, e.g. composing with an indeterminate matrix).
template <typename R>
concept CoefficientRing =
    std::regular<R> && std::constructible_from<R, Rational> &&
    requires(R a, R b, Rational s) {
        { a + b } -> std::convertible_to<R>;
        { a - b } -> std::convertible_to<R>;
        { a * b } -> std::convertible_to<R>;
        { -a } -> std::convertible_to<R>;
        { a * s } -> std::convertible_to<R>;
        { a.is_zero() } -> std::convertible_to<bool>;
    };

}  // namespace cubiq
