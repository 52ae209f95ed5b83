#pragma once

#include <string>
#include <vector>

#include "hyppl/quadrature.hpp"
#include "hyppl/types.hpp"

namespace hyppl {

/// Oracle fixtures: each classical integral identity evaluated two ways.

// int_R dx / ((x-i)^alpha (x+i)^beta), Re(alpha+beta) > 1 for the quadrature
Complex casselman_integral_quad(Complex alpha, Complex beta, const QuadratureSpec& spec = {});
// the printed closed form 2^{2-a-b} i^{a-b} Gamma(a+b-1) / (Gamma(a) Gamma(b))
Complex casselman_closed_form(Complex alpha, Complex beta);

enum class TrigKind { cosine, sine, exponential };
// int_0^pi sin^{nu-1}(x) {cos(ax), sin(ax), e^{iax}} dx, Re nu > 0
Complex trig_integral_quad(Complex nu, double a, TrigKind kind, const QuadratureSpec& spec = {});
Complex trig_closed_form(Complex nu, double a, TrigKind kind);

// int_1^inf x^alpha (x-1)^beta dx = B(-alpha-beta-1, beta+1)
Complex power_integral_1_quad(double alpha, double beta, const QuadratureSpec& spec = {});
Complex power_integral_1_closed(double alpha, double beta);

// int_0^inf x^alpha (x+1)^beta dx = B(-alpha-beta-1, alpha+1)
Complex power_integral_2_quad(double alpha, double beta, const QuadratureSpec& spec = {});
Complex power_integral_2_closed(double alpha, double beta);

struct OracleRow {
    std::string identity;
    std::string params;
    Complex lhs_quadrature;
    Complex rhs_closed_form;
    Complex ratio;
};

/// Evaluates every identity on a built-in parameter grid inside its
/// convergence strip and returns per-row lhs/rhs. Ratios must be constant
/// per identity (1 everywhere except the casselman lemma, whose printed
/// right-hand side is short a factor pi).
std::vector<OracleRow> appendix_integral_oracles();

}  // namespace hyppl
