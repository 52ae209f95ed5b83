#include "hyppl/derivative.hpp"

#include <array>
#include <cmath>

namespace hyppl {

// Ridders' scheme: halve the step, fill the Neville tableau, stop when the
// error estimate starts growing.
Complex differentiate(const std::function<Complex(double)>& f, double x0, int order, double h0) {
    if (order != 1 && order != 2) throw DomainError("differentiate: order must be 1 or 2");
    constexpr int kTab = 12;
    std::array<std::array<Complex, kTab>, kTab> a;
    auto stencil = [&](double h) -> Complex {
        if (h < 1e-14) throw NumericError("differentiate: step underflow", {0, 0}, 1.0);
        if (order == 1) return (f(x0 + h) - f(x0 - h)) / (2.0 * h);
        return (f(x0 + h) - 2.0 * f(x0) + f(x0 - h)) / (h * h);
    };
    double h = h0;
    a[0][0] = stencil(h);
    Complex best = a[0][0];
    double err = 1e300;
    const double shrink = 1.6;
    for (int i = 1; i < kTab; ++i) {
        h /= shrink;
        a[0][i] = stencil(h);
        double fac = shrink * shrink;
        for (int j = 1; j <= i; ++j) {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
            fac *= shrink * shrink;
            double e = std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
            if (e <= err) {
                err = e;
                best = a[j][i];
            }
        }
        if (std::abs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * err && i > 3) break;
    }
    return best;
}

}  // namespace hyppl
