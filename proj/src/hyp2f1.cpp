#include "hyppl/hyp2f1.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace hyppl {

namespace {

// non-negative integer n with w == -n, or -1
int as_nonpos_int(Complex w) {
    if (std::abs(w.imag()) > 1e-10) return -1;
    double r = std::round(w.real());
    if (r > 0.5 || std::abs(w.real() - r) > 1e-10) return -1;
    return static_cast<int>(-r);
}

Complex terminating_sum(Complex a, Complex b, Complex c, double z, int nterms) {
    Complex sum{1.0, 0.0};
    Complex term{1.0, 0.0};
    for (int n = 0; n < nterms; ++n) {
        term *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) /
                ((c + static_cast<double>(n)) * static_cast<double>(n + 1)) * z;
        sum += term;
    }
    return sum;
}

// Dormand-Prince 5(4) step for the 2-vector y = (g, g').
struct OdeRhs {
    Complex two_ap1;  // 2(c-1)+1 = 2c-1
    Complex two_bp1;  // 2(a+b-c)+1
    Complex four_ab;
    void operator()(double t, const std::array<Complex, 2>& y, std::array<Complex, 2>& dy) const {
        Complex p = two_ap1 / std::tanh(t) + two_bp1 * std::tanh(t);
        dy[0] = y[1];
        dy[1] = -p * y[1] - four_ab * y[0];
    }
};

void rk_dopri_step(const OdeRhs& f, double t, double h, const std::array<Complex, 2>& y,
                   std::array<Complex, 2>& y5, double& errnorm) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    std::array<Complex, 2> k1, k2, k3, k4, k5, k6, k7, tmp;
    f(t, y, k1);
    for (int i = 0; i < 2; ++i) tmp[i] = y[i] + h * (0.2 * k1[i]);
    f(t + c2 * h, tmp, k2);
    for (int i = 0; i < 2; ++i) tmp[i] = y[i] + h * (3.0 / 40 * k1[i] + 9.0 / 40 * k2[i]);
    f(t + c3 * h, tmp, k3);
    for (int i = 0; i < 2; ++i)
        tmp[i] = y[i] + h * (44.0 / 45 * k1[i] - 56.0 / 15 * k2[i] + 32.0 / 9 * k3[i]);
    f(t + c4 * h, tmp, k4);
    for (int i = 0; i < 2; ++i)
        tmp[i] = y[i] + h * (19372.0 / 6561 * k1[i] - 25360.0 / 2187 * k2[i] +
                             64448.0 / 6561 * k3[i] - 212.0 / 729 * k4[i]);
    f(t + c5 * h, tmp, k5);
    for (int i = 0; i < 2; ++i)
        tmp[i] = y[i] + h * (9017.0 / 3168 * k1[i] - 355.0 / 33 * k2[i] + 46732.0 / 5247 * k3[i] +
                             49.0 / 176 * k4[i] - 5103.0 / 18656 * k5[i]);
    f(t + h, tmp, k6);
    for (int i = 0; i < 2; ++i)
        y5[i] = y[i] + h * (35.0 / 384 * k1[i] + 500.0 / 1113 * k3[i] + 125.0 / 192 * k4[i] -
                            2187.0 / 6784 * k5[i] + 11.0 / 84 * k6[i]);
    f(t + h, y5, k7);
    errnorm = 0.0;
    for (int i = 0; i < 2; ++i) {
        Complex e = h * (71.0 / 57600 * k1[i] - 71.0 / 16695 * k3[i] + 71.0 / 1920 * k4[i] -
                         17253.0 / 339200 * k5[i] + 22.0 / 525 * k6[i] - 1.0 / 40 * k7[i]);
        double scale = std::max({std::abs(y[i]), std::abs(y5[i]), 1e-290});
        errnorm = std::max(errnorm, std::abs(e) / scale);
    }
}

Complex hyp2f1_ode(Complex a, Complex b, Complex c, double z) {
    const double z0 = -8.0;
    const double t0 = std::asinh(std::sqrt(-z0));
    const double t1 = std::asinh(std::sqrt(-z));
    std::array<Complex, 2> y;
    y[0] = hyp2f1_pfaff(a, b, c, z0);
    Complex dFdz = a * b / c * hyp2f1_pfaff(a + 1.0, b + 1.0, c + 1.0, z0);
    y[1] = dFdz * (-std::sinh(2.0 * t0));  // dz/dt = -sinh 2t
    OdeRhs rhs{2.0 * c - 1.0, 2.0 * (a + b - c) + 1.0, 4.0 * a * b};

    const double rtol = 1e-13;
    double t = t0;
    double h = 1e-3;
    int nstep = 0;
    while (t < t1) {
        h = std::min(h, t1 - t);
        std::array<Complex, 2> y5;
        double err;
        rk_dopri_step(rhs, t, h, y, y5, err);
        if (err < rtol) {
            t += h;
            y = y5;
        }
        double fac = 0.9 * std::pow(rtol / std::max(err, 1e-18), 0.2);
        h *= std::clamp(fac, 0.2, 5.0);
        if (++nstep > 2000000) {
            throw NumericError("hyp2f1 ODE continuation step budget exhausted", y[0], err);
        }
    }
    return y[0];
}

}  // namespace

Complex hyp2f1_series(Complex a, Complex b, Complex c, double z, int max_terms) {
    Complex sum{1.0, 0.0};
    Complex term{1.0, 0.0};
    for (int n = 0; n < max_terms; ++n) {
        term *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) /
                ((c + static_cast<double>(n)) * static_cast<double>(n + 1)) * z;
        sum += term;
        if (std::abs(term) < 1e-17 * std::max(1.0, std::abs(sum))) return sum;
    }
    std::ostringstream os;
    os << "hyp2f1 series did not converge after " << max_terms << " terms at z = " << z
       << " (last |term| = " << std::abs(term) << ")";
    throw NumericError(os.str(), sum, std::abs(term));
}

Complex hyp2f1_pfaff(Complex a, Complex b, Complex c, double z) {
    double w = z / (z - 1.0);
    return std::pow(Complex(1.0 - z, 0.0), -a) * hyp2f1_series(a, c - b, c, w);
}

Complex hyp2f1(Complex a, Complex b, Complex c, double z) {
    if (z > 0.0) throw DomainError("hyp2f1: argument must satisfy z <= 0");
    if (z == 0.0) return {1.0, 0.0};

    // polynomial cases
    int na = as_nonpos_int(a), nb = as_nonpos_int(b);
    if (na >= 0 || nb >= 0) {
        int n = (na >= 0 && nb >= 0) ? std::min(na, nb) : std::max(na, nb);
        return terminating_sum(a, b, c, z, n);
    }
    // Euler transform to a terminating series
    int nca = as_nonpos_int(c - a), ncb = as_nonpos_int(c - b);
    if (nca >= 0 || ncb >= 0) {
        int n = (nca >= 0 && ncb >= 0) ? std::min(nca, ncb) : std::max(nca, ncb);
        return std::pow(Complex(1.0 - z, 0.0), c - a - b) * terminating_sum(c - a, c - b, c, z, n);
    }
    if (is_nonpositive_integer(c)) {
        std::ostringstream os;
        os << "hyp2f1: c = " << c.real() << " is a non-positive integer";
        throw DomainError(os.str());
    }
    if (z >= -0.45) return hyp2f1_series(a, b, c, z);
    if (z >= -8.0) return hyp2f1_pfaff(a, b, c, z);
    return hyp2f1_ode(a, b, c, z);
}

}  // namespace hyppl
