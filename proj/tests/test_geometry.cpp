#include <doctest.h>

#include <cmath>
#include <random>

#include "hyppl/geometry.hpp"

using namespace hyppl;
using namespace hyppl::geometry;
using jacobi::ProfileFamily;
using jacobi::RadialProfile;

TEST_CASE("group factories") {
    for (double th : {0.0, 0.7, 2.9}) CHECK(std::abs(GroupElement::k_theta(th).det() - 1.0) < 1e-14);
    for (double u : {-2.0, 0.0, 1.3}) CHECK(std::abs(GroupElement::b_u(u).det() - 1.0) < 1e-14);
    CHECK(std::abs(GroupElement::nbar(4.2).det() - 1.0) < 1e-14);
    CHECK(std::abs(GroupElement::w0().det() - 1.0) < 1e-14);
    CHECK(std::abs(GroupElement::diag(-2.5).det() - 1.0) < 1e-14);
    CHECK_THROWS_AS(GroupElement::diag(0.0), DomainError);
    // k_theta k_phi = k_{theta+phi}
    GroupElement prod = GroupElement::k_theta(0.6) * GroupElement::k_theta(1.1);
    GroupElement expect = GroupElement::k_theta(1.7);
    CHECK(std::abs(prod.a11 - expect.a11) < 1e-14);
    CHECK(std::abs(prod.a21 - expect.a21) < 1e-14);
    // inverse
    GroupElement g = GroupElement::k_theta(0.3) * GroupElement::b_u(0.8) * GroupElement::nbar(1.5);
    GroupElement id = g * g.inverse();
    CHECK(std::abs(id.a11 - 1.0) + std::abs(id.a12) + std::abs(id.a21) + std::abs(id.a22 - 1.0) <
          1e-13);
}

TEST_CASE("hyperboloid function evaluation") {
    HyperboloidFunction empty{0, 0.0, {}};
    CHECK(empty.eval({1.0, 0.5}) == Complex{0.0, 0.0});

    RadialProfile h{ProfileFamily::gaussian_bump, 0.2, 0.8, 0};
    HyperboloidFunction single{0, 0.0, {{0, h}}};
    CHECK(std::abs(single.eval({0.3, 0.7}) - single.eval({2.9, 0.7})) < 1e-15);

    HyperboloidFunction pair{0, 0.0, {{2, h}, {-2, h}}};
    for (double th : {0.4, 1.9}) {
        Complex v = pair.eval({th, 0.5});
        CHECK(std::abs(v - 2.0 * std::cos(2.0 * th) * h.eval(0.5)) < 1e-14);
    }

    HyperboloidFunction bad{0, 0.0, {{3, h}}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    HyperboloidFunction dup{0, 0.0, {{2, h}, {2, h}}};
    CHECK_THROWS_AS(dup.validate(), DomainError);
}

TEST_CASE("invariant norm: orthogonality and fixed-grid oracle") {
    RadialProfile h1{ProfileFamily::gaussian_bump, 0.3, 0.9, 0};
    RadialProfile h2{ProfileFamily::hermite_gaussian, 0.0, 0.7, 2};
    HyperboloidFunction f1{0, 0.0, {{0, h1}}};
    HyperboloidFunction f2{0, 0.0, {{4, h2}}};
    HyperboloidFunction both{0, 0.0, {{0, h1}, {4, h2}}};
    double n1 = invariant_norm_sq(f1), n2 = invariant_norm_sq(f2), nb = invariant_norm_sq(both);
    CHECK(std::abs(nb - n1 - n2) < 1e-8 * nb);
    CHECK(invariant_norm_sq({0, 0.0, {}}) == 0.0);
    // independent fixed-grid oracle for the single-term norm
    {
        double R = 9.0;
        int n = 40000;
        double hstep = 2.0 * R / n, acc = 0.0;
        for (int i = 0; i <= n; ++i) {
            double u = -R + i * hstep;
            double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            acc += w * h1.eval(u) * h1.eval(u) * std::cosh(2.0 * u);
        }
        acc *= kPi * hstep / 3.0;
        CHECK(std::abs(n1 - acc) < 1e-8 * acc);
    }
}

TEST_CASE("kn coordinates and chart consistency") {
    GroupElement e = kn_coordinates(0.0, 0.0);
    CHECK(std::abs(e.a11 - 1.0) + std::abs(e.a12) + std::abs(e.a21) + std::abs(e.a22 - 1.0) < 1e-15);
    GroupElement k = kn_coordinates(0.8, 0.0);
    GroupElement kexp = GroupElement::k_theta(0.8);
    CHECK(std::abs(k.a11 - kexp.a11) + std::abs(k.a21 - kexp.a21) < 1e-15);

    // kb_decompose recovers sections of k_th b_u diag(t,1/t)
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uth(0.01, kPi - 0.01), uu(-1.5, 1.5), ut(0.2, 3.0);
    for (int i = 0; i < 50; ++i) {
        double th = uth(rng), u = uu(rng), t = ut(rng) * (i % 2 ? 1.0 : -1.0);
        GroupElement g =
            GroupElement::k_theta(th) * GroupElement::b_u(u) * GroupElement::diag(t);
        KBDecomposition d = kb_decompose(g);
        CHECK(std::abs(d.u - u) < 1e-10);
        CHECK(std::abs(d.t - t) < 1e-9 * std::abs(t));
        CHECK(std::abs(std::remainder(d.theta - th, kPi)) < 1e-10);
    }

    // norms agree between the (theta,u) and (theta,y) charts
    RadialProfile h{ProfileFamily::gaussian_bump, 0.25, 0.8, 0};
    RadialProfile ho{ProfileFamily::hermite_gaussian, 0.0, 0.9, 1};
    std::vector<HyperboloidFunction> fs = {
        {0, 0.0, {{0, h}}},      {0, 0.0, {{2, h}}},          {1, 0.0, {{1, ho}}},
        {0, 1.5, {{0, h}}},      {1, -0.7, {{3, h}, {1, ho}}},
    };
    for (const auto& f : fs) {
        QuadratureSpec spec;
        spec.rel_tol = 1e-8;
        spec.abs_tol = 1e-10;
        double a = invariant_norm_sq(f, spec);
        double b = invariant_norm_sq_kn(f, spec);
        CHECK(std::abs(a - b) < 1e-6 * a);
    }
}

TEST_CASE("casimir against 2D finite differences") {
    RadialProfile h{ProfileFamily::gaussian_bump, 0.3, 0.9, 0};
    for (int m : {0, 2, -4}) {
        HyperboloidFunction f{0, 0.0, {{m, h}}};
        for (double u : {-0.8, 0.4, 1.1}) {
            CoordinatePoint p{0.9, u};
            Complex lhs = casimir_apply(f, p);
            // direct finite differences in both variables
            double du = 1e-4, dth = 1e-4;
            auto ev = [&](double th, double uu) { return f.eval({th, uu}); };
            Complex fuu =
                (ev(p.theta, u + du) - 2.0 * ev(p.theta, u) + ev(p.theta, u - du)) / (du * du);
            Complex fu = (ev(p.theta, u + du) - ev(p.theta, u - du)) / (2.0 * du);
            Complex ftt = (ev(p.theta + dth, u) - 2.0 * ev(p.theta, u) + ev(p.theta - dth, u)) /
                          (dth * dth);
            double c2 = std::cosh(2.0 * u), t2 = std::tanh(2.0 * u);
            Complex rhs = 2.0 * t2 * fu + fuu - ftt / (c2 * c2);
            CHECK(std::abs(lhs - rhs) < 1e-5 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("casimir on a flat profile is small at lambda=0, m=0") {
    RadialProfile wide{ProfileFamily::gaussian_bump, 0.0, 40.0, 0};
    HyperboloidFunction f{0, 0.0, {{0, wide}}};
    CHECK(std::abs(casimir_apply(f, {0.7, 0.4})) < 1e-2);
}

TEST_CASE("box_apply closed forms") {
    auto one = [](double) { return Complex{1.0, 0.0}; };
    for (int m : {0, 3, -5}) {
        CHECK(std::abs(box_apply(m, one, -1.3) - Complex(m * (m + 2.0), 0.0)) < 1e-7);
    }
    auto lin = [](double t) { return Complex(t, 0.0); };
    for (int m : {0, 2}) {
        for (double t : {-0.7, -2.0}) {
            Complex expect{-8.0 + (m * m + 10.0 * m + 24.0) * t, 0.0};
            CHECK(std::abs(box_apply(m, lin, t) - expect) < 1e-6 * std::max(1.0, std::abs(expect)));
        }
    }
}

TEST_CASE("box/casimir conjugation identity") {
    RadialProfile h{ProfileFamily::gaussian_bump, 0.0, 0.8, 0};
    for (int m : {0, 2, 6}) {
        HyperboloidFunction f{0, 0.0, {{m, h}}};
        for (double u : {0.2, 0.6, 1.0}) {
            // Delta_0 (cosh^{m/2}(2u) h(-sinh^2 2u)) = cosh^{m/2}(2u) (box_m h)(-sinh^2 2u)
            // realized here by comparing casimir_apply on the profile with the
            // box action on its conjugated t-form
            double t = -std::pow(std::sinh(2.0 * u), 2);
            auto conj_h = [&](double tt) -> Complex {
                double x = 0.5 * std::asinh(std::sqrt(std::max(0.0, -tt)));
                return std::pow(std::cosh(2.0 * x), -0.5 * m) * h.eval(x);
            };
            Complex lhs = casimir_apply(f, {0.0, u});
            Complex rhs = std::pow(std::cosh(2.0 * u), 0.5 * m) * box_apply(m, conj_h, t);
            CHECK(std::abs(lhs - rhs) < 2e-6 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("profile parity tags are consistent with sampling") {
    RadialProfile e{ProfileFamily::gaussian_bump, 0.0, 1.0, 0};
    RadialProfile o{ProfileFamily::hermite_gaussian, 0.0, 1.0, 3};
    RadialProfile n{ProfileFamily::gaussian_bump, 0.5, 1.0, 0};
    CHECK(e.parity() == jacobi::Parity::even);
    CHECK(o.parity() == jacobi::Parity::odd);
    CHECK(n.parity() == jacobi::Parity::none);
    for (double u : {0.3, 1.2}) {
        CHECK(e.eval(-u) == e.eval(u));
        CHECK(o.eval(-u) == -o.eval(u));
    }
    // closed-form derivatives agree with finite differences
    for (const auto& p : {e, o, n}) {
        for (double u : {-0.7, 0.4}) {
            double fd = (p.eval(u + 1e-5) - p.eval(u - 1e-5)) / 2e-5;
            CHECK(std::abs(p.deriv(u) - fd) < 1e-8 * std::max(1.0, std::abs(fd)));
            double fd2 = (p.eval(u + 1e-4) - 2.0 * p.eval(u) + p.eval(u - 1e-4)) / 1e-8;
            CHECK(std::abs(p.deriv2(u) - fd2) < 1e-5 * std::max(1.0, std::abs(fd2)));
        }
    }
}
