#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hyppl {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline const double kSqrtPi = std::sqrt(kPi);
inline const double kSqrtTwoPi = std::sqrt(2.0 * kPi);
inline constexpr Complex kI{0.0, 1.0};

/// Remainder of m after division by 2, in {0,1}, also for negative m ([m]_2).
inline int parity_mod2(int m) { return ((m % 2) + 2) % 2; }

inline bool is_nonpositive_integer(Complex z, double tol = 1e-12) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.5 && std::abs(z.real() - r) <= tol;
}

/// Input outside an operation's mathematical domain (pole hit, parity
/// violation, off-lattice point, ...).
class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A numerical procedure failed to meet its target; carries the best
/// estimate obtained so far.
class NumericError : public std::runtime_error {
  public:
    NumericError(const std::string& what, Complex best, double err)
        : std::runtime_error(what), best_estimate(best), error_estimate(err) {}
    Complex best_estimate{0.0, 0.0};
    double error_estimate = 0.0;
};

/// A mathematically guaranteed property failed beyond tolerance
/// (e.g. a provably real quantity came out with a large imaginary part).
class ConsistencyError : public std::runtime_error {
  public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyppl
