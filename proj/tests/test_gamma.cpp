#include <doctest.h>

#include <cmath>

#include "hyppl/gamma.hpp"

using namespace hyppl;

namespace {
double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }
}  // namespace

TEST_CASE("gamma at classical points") {
    CHECK(rel(gamma({1.0, 0.0}), {1.0, 0.0}) < 1e-14);
    CHECK(rel(gamma({0.5, 0.0}) * gamma({0.5, 0.0}), {kPi, 0.0}) < 1e-13);
    CHECK(rel(gamma({-0.5, 0.0}), {-2.0 * kSqrtPi, 0.0}) < 1e-13);
    CHECK(rel(gamma({10.0, 0.0}), {362880.0, 0.0}) < 1e-13);
    CHECK(rel(gamma({25.0, 0.0}), {6.204484017332394e23, 0.0}) < 1e-12);
}

TEST_CASE("gamma poles") {
    CHECK_THROWS_AS(gamma({0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(gamma({-3.0, 0.0}), DomainError);
    CHECK(reciprocal_gamma({0.0, 0.0}) == Complex{0.0, 0.0});
    CHECK(reciprocal_gamma({-7.0, 0.0}) == Complex{0.0, 0.0});
    CHECK(rel(reciprocal_gamma({0.5, 0.0}), {1.0 / kSqrtPi, 0.0}) < 1e-13);
}

TEST_CASE("modulus identities on the imaginary direction") {
    // |Gamma(1/2 + it)|^2 = pi / cosh(pi t), |Gamma(1 + it)|^2 = pi t / sinh(pi t)
    for (double t : {0.1, 0.7, 2.0, 5.0, 11.0}) {
        CHECK(std::abs(std::norm(gamma({0.5, t})) - kPi / std::cosh(kPi * t)) <
              1e-12 * kPi / std::cosh(kPi * t));
        CHECK(std::abs(std::norm(gamma({1.0, t})) - kPi * t / std::sinh(kPi * t)) <
              1e-12 * kPi * t / std::sinh(kPi * t));
    }
}

TEST_CASE("reflection and duplication on a grid") {
    for (double re = -6.3; re < 6.0; re += 0.83) {
        for (double im : {-3.0, -0.4, 0.21, 1.7, 4.0}) {
            Complex z{re, im};
            Complex refl = gamma(z) * gamma(1.0 - z) * std::sin(kPi * z) / kPi;
            CHECK(rel(refl, {1.0, 0.0}) < 1e-10);
            Complex dup = gamma(z) * gamma(z + 0.5) * std::pow(Complex(2.0, 0.0), 2.0 * z - 1.0) /
                          kSqrtPi;
            CHECK(rel(dup, gamma(2.0 * z)) < 1e-10);
        }
    }
}

TEST_CASE("recurrence accuracy up to |z| = 50") {
    for (Complex z : {Complex{40.0, 30.0}, Complex{3.0, 49.0}, Complex{-20.5, 12.0},
                      Complex{49.3, 0.2}, Complex{-35.5, -30.0}}) {
        CHECK(rel(gamma(z + 1.0), z * gamma(z)) < 1e-12);
    }
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer({3.7, -2.0}, 0) == Complex{1.0, 0.0});
    CHECK(rel(pochhammer({1.0, 0.0}, 5), {120.0, 0.0}) < 1e-14);
    // Gamma-ratio oracle
    CHECK(rel(pochhammer({2.5, 0.0}, 3), gamma({5.5, 0.0}) / gamma({2.5, 0.0})) < 1e-12);
    CHECK(rel(pochhammer({0.3, 1.2}, 7), gamma(Complex{7.3, 1.2}) / gamma(Complex{0.3, 1.2})) <
          1e-12);
}
