#include "hyppl/profiles.hpp"

#include <cmath>

namespace hyppl::jacobi {

namespace {

// physicists' Hermite polynomial and its derivative at x
void hermite(int k, double x, double& h, double& hp) {
    double h0 = 1.0, h1 = 2.0 * x;
    if (k == 0) {
        h = h0;
        hp = 0.0;
        return;
    }
    for (int n = 1; n < k; ++n) {
        double h2 = 2.0 * x * h1 - 2.0 * n * h0;
        h0 = h1;
        h1 = h2;
    }
    h = h1;
    hp = 2.0 * k * h0;  // H_k' = 2k H_{k-1}
}

}  // namespace

double RadialProfile::eval(double u) const {
    double x = (u - center) / width;
    double g = std::exp(-x * x);
    if (family == ProfileFamily::gaussian_bump) return g;
    double h, hp;
    hermite(poly_degree, x, h, hp);
    return h * g;
}

double RadialProfile::deriv(double u) const {
    double x = (u - center) / width;
    double g = std::exp(-x * x);
    if (family == ProfileFamily::gaussian_bump) return -2.0 * x * g / width;
    double h, hp;
    hermite(poly_degree, x, h, hp);
    return (hp - 2.0 * x * h) * g / width;
}

double RadialProfile::deriv2(double u) const {
    double x = (u - center) / width;
    double g = std::exp(-x * x);
    if (family == ProfileFamily::gaussian_bump) return (4.0 * x * x - 2.0) * g / (width * width);
    double h, hp;
    hermite(poly_degree, x, h, hp);
    // H_k'' = 2k H_{k-1}' = 4k(k-1) H_{k-2}; use (hp)' = 2x hp - (hpp... ) via recurrence:
    double hpp = 0.0;
    if (poly_degree >= 2) {
        double hm2, dummy;
        hermite(poly_degree - 2, x, hm2, dummy);
        hpp = 4.0 * poly_degree * (poly_degree - 1) * hm2;
    }
    return (hpp - 4.0 * x * hp + (4.0 * x * x - 2.0) * h) * g / (width * width);
}

Parity RadialProfile::parity() const {
    if (center != 0.0) return Parity::none;
    if (family == ProfileFamily::gaussian_bump) return Parity::even;
    return (poly_degree % 2 == 0) ? Parity::even : Parity::odd;
}

double RadialProfile::support_radius(double tiny, double extra) const {
    // solve exp(-((u-c)/w)^2 + extra*u) * poly = tiny crudely by marching
    double u = std::abs(center) + width;
    for (; u < 60.0; u += 0.25 * width) {
        double x = (u - std::abs(center)) / width;
        double logmag = -x * x + extra * u + 2.0 * std::log1p(std::abs(poly_degree) * std::abs(x) + 1.0);
        if (logmag < std::log(tiny)) break;
    }
    return u;
}

}  // namespace hyppl::jacobi
