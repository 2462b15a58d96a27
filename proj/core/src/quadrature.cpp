#include "hartmann/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>

namespace hartmann {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Trapezoid sums of g(u) on a fixed u-window, spacing halved per level.
// g must decay double-exponentially toward the window ends.
template <class G>
IntegralResult de_levels(G&& g, double umin, double umax, const QuadratureSpec& spec) {
  IntegralResult out;
  double prev = kNaN;
  double h = 0.5;
  for (int level = 0; level <= spec.max_levels; ++level, h *= 0.5) {
    const long jmin = static_cast<long>(std::ceil(umin / h));
    const long jmax = static_cast<long>(std::floor(umax / h));
    if (level > 0 && out.nodes_used + (jmax - jmin + 1) > spec.node_budget) break;

    double sum = 0.0, comp = 0.0;
    int zeros_in_a_row = 0;
    for (long j = jmin; j <= jmax; ++j) {
      const double v = g(j * h);
      ++out.nodes_used;
      if (v == 0.0) {
        // the tails underflow hard; skip ahead once both sides are dead
        if (++zeros_in_a_row > 64 && j * h > 0.0) break;
        continue;
      }
      zeros_in_a_row = 0;
      const double t = sum + v;
      if (std::abs(sum) >= std::abs(v))
        comp += (sum - t) + v;
      else
        comp += (v - t) + sum;
      sum = t;
    }
    const double integral = h * (sum + comp);

    if (level > 0) {
      out.error_estimate = std::abs(integral - prev);
      out.value = integral;
      if (out.error_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(integral))) {
        out.converged = true;
        return out;
      }
    } else {
      out.value = integral;
      out.error_estimate = std::abs(integral);
    }
    prev = integral;
  }
  return out; // converged == false
}

// Composite Gauss-Legendre over a fixed panel list, refined by splitting
// every panel each level.
IntegralResult gl_composite(const std::function<double(double)>& f,
                            std::vector<std::pair<double, double>> panels,
                            const QuadratureSpec& spec) {
  constexpr int kOrder = 24;
  IntegralResult out;
  double prev = kNaN;
  for (int level = 0; level <= spec.max_levels; ++level) {
    if (level > 0) {
      std::vector<std::pair<double, double>> next;
      next.reserve(panels.size() * 2);
      for (auto [a, b] : panels) {
        const double m = 0.5 * (a + b);
        next.emplace_back(a, m);
        next.emplace_back(m, b);
      }
      panels = std::move(next);
      if (out.nodes_used + static_cast<long>(panels.size()) * kOrder > spec.node_budget) break;
    }
    double sum = 0.0;
    for (auto [a, b] : panels) sum += gauss_legendre(f, a, b, kOrder);
    out.nodes_used += static_cast<int>(panels.size()) * kOrder;

    if (level > 0) {
      out.error_estimate = std::abs(sum - prev);
      out.value = sum;
      if (out.error_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(sum))) {
        out.converged = true;
        return out;
      }
    } else {
      out.value = sum;
      out.error_estimate = std::abs(sum);
    }
    prev = sum;
  }
  return out;
}

} // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_nodes(int order) {
  if (order < 1) throw DomainError("gauss_legendre_nodes: order must be >= 1");
  std::vector<double> x(order), w(order);
  for (int i = 0; i < order; ++i) {
    // Newton on P_n from the Chebyshev-like initial guess
    double xi = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = xi;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (xi * p1 - p0) / (xi * xi - 1.0);
      double dx = p1 / dp;
      xi -= dx;
      if (std::abs(dx) < 1.0e-15) break;
    }
    // recompute derivative at the converged node
    {
      double p0 = 1.0, p1 = xi;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (xi * p1 - p0) / (xi * xi - 1.0);
    }
    x[i] = -xi; // ascending order
    w[i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
  }
  return {x, w};
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, gauss_legendre_nodes(order)).first;
  const auto& [x, w] = it->second;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < order; ++i) sum += w[i] * f(mid + half * x[i]);
  return half * sum;
}

IntegralResult integrate_radial(const RadialIntegrand& f, double decay_scale,
                                const QuadratureSpec& spec) {
  if (!(decay_scale > 0.0)) throw DomainError("integrate_radial: decay_scale must be > 0");
  if (spec.node_budget < 16) throw DomainError("integrate_radial: node_budget must be >= 16");

  if (spec.scheme == QuadScheme::gauss_legendre_composite) {
    std::vector<std::pair<double, double>> panels;
    double lo = 0.0;
    for (double hi = 1.0; hi <= 128.0 + 0.5; hi *= 2.0) {
      panels.emplace_back(lo / decay_scale, hi / decay_scale);
      lo = hi;
    }
    return gl_composite(f, std::move(panels), spec);
  }

  // r = exp(u - exp(-u)) / scale maps (-inf, inf) -> (0, inf); both an
  // algebraic singularity at r -> 0 (power > -1) and exponential decay at
  // r -> inf become double-exponential tails in u.
  auto g = [&](double u) -> double {
    const double arg = u - std::exp(-u);
    if (arg < -700.0) return 0.0;
    const double r = std::exp(arg) / decay_scale;
    if (r == 0.0 || !std::isfinite(r)) return 0.0;
    const double jac = r * (1.0 + std::exp(-u));
    const double v = f(r) * jac;
    return std::isfinite(v) ? v : kNaN;
  };
  return de_levels(g, -6.7, 6.7, spec);
}

IntegralResult integrate_angular(const AngularIntegrand& f, double endpoint_exponent,
                                 const QuadratureSpec& spec) {
  if (!(endpoint_exponent > -1.0))
    throw DivergentIntegralError(
        "integrate_angular: endpoint exponent <= -1, integral diverges");
  if (spec.node_budget < 16) throw DomainError("integrate_angular: node_budget must be >= 16");

  if (spec.scheme == QuadScheme::gauss_legendre_composite) {
    auto f1 = [&](double x) { return f(x, (1.0 - x) * (1.0 + x)); };
    return gl_composite(f1, {{-1.0, 0.0}, {0.0, 1.0}}, spec);
  }

  // tanh-sinh: x = tanh((pi/2) sinh u); 1-x^2 = sech^2((pi/2) sinh u) is
  // handed to the integrand directly so endpoint factors keep full precision.
  auto g = [&](double u) -> double {
    const double y = 0.5 * M_PI * std::sinh(u);
    const double e = std::exp(-std::abs(y));
    const double sech = 2.0 * e / (1.0 + e * e);
    const double omx2 = sech * sech;
    if (omx2 == 0.0) return 0.0;
    const double x = std::tanh(y);
    const double w = 0.5 * M_PI * std::cosh(u) * omx2;
    const double v = w * f(x, omx2);
    return std::isfinite(v) ? v : kNaN;
  };
  return de_levels(g, -6.8, 6.8, spec);
}

} // namespace hartmann
