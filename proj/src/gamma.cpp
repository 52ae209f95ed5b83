#include "hyppl/gamma.hpp"

#include <array>
#include <sstream>

namespace hyppl {

namespace {

// Lanczos coefficients for g = 607/128, n = 15 (Godfrey/Pugh set).
// Gives close to full double precision on the right half plane.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

// Gamma on Re z >= 1/2 via the Lanczos sum.
Complex gamma_right_half(Complex z) {
    z -= 1.0;
    Complex sum = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        sum += kLanczos[i] / (z + static_cast<double>(i));
    }
    Complex t = z + kLanczosG + 0.5;
    return kSqrtTwoPi * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

}  // namespace

Complex gamma(Complex z) {
    if (is_nonpositive_integer(z)) {
        std::ostringstream os;
        os << "gamma pole at z = " << z.real();
        throw DomainError(os.str());
    }
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        return kPi / (std::sin(kPi * z) * gamma_right_half(1.0 - z));
    }
    return gamma_right_half(z);
}

Complex reciprocal_gamma(Complex z) {
    if (is_nonpositive_integer(z)) return {0.0, 0.0};
    if (z.real() < 0.5) {
        return std::sin(kPi * z) * gamma_right_half(1.0 - z) / kPi;
    }
    return 1.0 / gamma_right_half(z);
}

Complex pochhammer(Complex x, int n) {
    Complex r{1.0, 0.0};
    for (int k = 0; k < n; ++k) r *= x + static_cast<double>(k);
    return r;
}

}  // namespace hyppl
