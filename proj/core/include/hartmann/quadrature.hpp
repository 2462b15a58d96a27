#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hartmann/errors.hpp"

namespace hartmann {

enum class QuadScheme {
  gauss_legendre_composite,
  double_exponential,
};

struct QuadratureSpec {
  QuadScheme scheme = QuadScheme::double_exponential;
  double abs_tol = 1.0e-13;
  double rel_tol = 1.0e-11;
  int max_levels = 9;
  int node_budget = 30000;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int nodes_used = 0;
  bool converged = false;
};

/// f(r) on (0, inf).
using RadialIntegrand = std::function<double(double)>;

/// f(x, 1-x^2) on (-1, 1).  The second argument is supplied by the quadrature
/// map to full precision, so integrands with (1-x^2)^g endpoint behaviour
/// do not lose digits where x saturates near +-1.
using AngularIntegrand = std::function<double(double, double)>;

/// Integral of f over (0, inf).  decay_scale is the characteristic exponential
/// rate of f (for the radial basis functions, the state's a); the integration
/// variable is rescaled by it before the double-exponential map.
/// Non-convergence is reported via converged=false, never silently.
IntegralResult integrate_radial(const RadialIntegrand& f, double decay_scale,
                                const QuadratureSpec& spec = {});

/// Integral of f over (-1, 1) where f behaves like (1-x^2)^endpoint_exponent
/// at the endpoints.  Throws DivergentIntegralError for exponent <= -1.
IntegralResult integrate_angular(const AngularIntegrand& f, double endpoint_exponent,
                                 const QuadratureSpec& spec = {});

/// Plain n-point Gauss-Legendre on [a, b]; exact for polynomials of degree
/// <= 2n-1.  Exposed so the exactness property is testable directly.
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order);

/// Nodes and weights on [-1, 1] (Newton iteration on the Legendre recurrence).
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_nodes(int order);

} // namespace hartmann
