#include "hartmann/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hartmann {

namespace {

// Lanczos g = 7, n = 9 coefficient set (Godfrey); ~15 correct digits over the
// right half plane.
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
const double kLogSqrtTwoPi = 0.5 * std::log(2.0 * M_PI);

bool is_nonpositive_integer(double x, double tol = 1.0e-9) {
  return x <= tol && std::abs(x - std::round(x)) <= tol;
}

double lanczos_series(double z) {
  // z >= 0.5; series part A(z) of the Lanczos formula
  double acc = kLanczosCoeff[0];
  for (int i = 1; i < 9; ++i) acc += kLanczosCoeff[i] / (z - 1.0 + i);
  return acc;
}

double gamma_positive(double z) {
  // z >= 0.5
  const double t = z + kLanczosG - 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z - 0.5) * std::exp(-t) * lanczos_series(z);
}

double lgamma_positive(double z) {
  const double t = z + kLanczosG - 0.5;
  return kLogSqrtTwoPi + (z - 0.5) * std::log(t) - t + std::log(lanczos_series(z));
}

} // namespace

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  double n = std::round(r);
  double d = r - n; // |d| <= 0.5
  double s = std::sin(M_PI * d);
  long long ni = static_cast<long long>(n);
  return (ni % 2 == 0) ? s : -s;
}

double gamma_fn(double x) {
  if (is_nonpositive_integer(x, 0.0) || (x <= 0.0 && x == std::floor(x)))
    throw DomainError("gamma: pole at non-positive integer x=" + std::to_string(x));
  if (x >= 0.5) return gamma_positive(x);
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return M_PI / (sin_pi(x) * gamma_positive(1.0 - x));
}

LogGamma lgamma_signed(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw DomainError("lgamma: pole at non-positive integer x=" + std::to_string(x));
  if (x >= 0.5) return {lgamma_positive(x), +1};
  const double s = sin_pi(x);
  const double lg = std::log(M_PI) - std::log(std::abs(s)) - lgamma_positive(1.0 - x);
  return {lg, s >= 0.0 ? +1 : -1};
}

double pochhammer(double z, int n) {
  double acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= (z + i);
  return acc;
}

double binomial(double top, int m) {
  if (m < 0) return 0.0;
  double acc = 1.0;
  for (int i = 0; i < m; ++i) acc *= (top - i) / (i + 1);
  return acc;
}

double laguerre(const PolyParams& p, double x) {
  if (p.degree < 0) throw DomainError("laguerre: degree must be >= 0");
  const double a = p.order;
  if (p.degree == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + a - x;
  for (int k = 1; k < p.degree; ++k) {
    double ln = ((2.0 * k + 1.0 + a - x) * l - (k + a) * lm1) / (k + 1.0);
    lm1 = l;
    l = ln;
  }
  return l;
}

double gegenbauer(const PolyParams& p, double x) {
  if (p.degree < 0) throw DomainError("gegenbauer: degree must be >= 0");
  const double lam = p.order;
  if (lam <= -0.5) throw DomainError("gegenbauer: order must be > -1/2");
  if (p.degree == 0) return 1.0;
  double cm1 = 1.0;
  double c = 2.0 * lam * x;
  for (int k = 2; k <= p.degree; ++k) {
    double cn = (2.0 * (k + lam - 1.0) * x * c - (k + 2.0 * lam - 2.0) * cm1) / k;
    cm1 = c;
    c = cn;
  }
  return c;
}

double gegenbauer_shift_residual_printed(int n, double alpha, double x) {
  const double lhs = 2.0 * alpha * (1.0 - x * x) * gegenbauer({n - 1, alpha + 1.0}, x);
  const double rhs = (2.0 * alpha + n + 1.0) * gegenbauer({n - 1, alpha}, x) -
                     n * x * gegenbauer({n, alpha}, x);
  return lhs - rhs;
}

double gegenbauer_shift_residual(int n, double alpha, double x) {
  const double lhs = 2.0 * alpha * (1.0 - x * x) * gegenbauer({n - 1, alpha + 1.0}, x);
  const double rhs = (2.0 * alpha + n - 1.0) * gegenbauer({n - 1, alpha}, x) -
                     n * x * gegenbauer({n, alpha}, x);
  return lhs - rhs;
}

double hypergeometric_pfq(const HypergeometricSpec& spec) {
  // terminating index: the non-positive-integer upper parameter of smallest
  // magnitude wins
  int n = -1;
  for (double a : spec.upper) {
    if (is_nonpositive_integer(a)) {
      int cand = static_cast<int>(std::llround(-a));
      if (n < 0 || cand < n) n = cand;
    }
  }
  if (n < 0)
    throw DomainError("pFq: no terminating (non-positive integer) upper parameter");
  for (double b : spec.lower) {
    if (is_nonpositive_integer(b)) {
      int j = static_cast<int>(std::llround(-b));
      if (j <= n - 1)
        throw DomainError("pFq: lower-parameter Pochhammer vanishes before termination");
    }
  }

  // Neumaier-compensated sum of the term recurrence
  double term = 1.0;
  double sum = 1.0;
  double comp = 0.0;
  for (int j = 0; j < n; ++j) {
    double num = 1.0;
    for (double a : spec.upper) num *= (a + j);
    double den = 1.0;
    for (double b : spec.lower) den *= (b + j);
    term *= num / den * spec.argument / (j + 1.0);
    double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

// ---------------------------------------------------------------------------
// SignedLog
// ---------------------------------------------------------------------------

SignedLog SignedLog::of(double v) {
  if (v == 0.0) return zero();
  return {std::log(std::abs(v)), v > 0.0 ? +1 : -1};
}

SignedLog SignedLog::of_gamma(double x) {
  LogGamma lg = lgamma_signed(x);
  return {lg.log_abs, lg.sign};
}

SignedLog SignedLog::of_pow(double base, double e) {
  if (base <= 0.0) throw DomainError("SignedLog::of_pow: base must be positive");
  return {e * std::log(base), +1};
}

SignedLog& SignedLog::operator*=(const SignedLog& o) {
  if (sign == 0 || o.sign == 0) {
    *this = zero();
    return *this;
  }
  log_abs += o.log_abs;
  sign *= o.sign;
  return *this;
}

SignedLog& SignedLog::operator/=(const SignedLog& o) {
  if (o.sign == 0) throw DomainError("SignedLog: division by zero");
  if (sign == 0) return *this;
  log_abs -= o.log_abs;
  sign *= o.sign;
  return *this;
}

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

SignedLog signed_log_sum(std::span<const SignedLog> terms) {
  double mx = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms)
    if (t.sign != 0) mx = std::max(mx, t.log_abs);
  if (!std::isfinite(mx)) return SignedLog::zero();

  double sum = 0.0, comp = 0.0;
  for (const auto& t : terms) {
    if (t.sign == 0) continue;
    double v = t.sign * std::exp(t.log_abs - mx);
    double s = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - s) + v;
    else
      comp += (v - s) + sum;
    sum = s;
  }
  sum += comp;
  if (sum == 0.0) return SignedLog::zero();
  return {mx + std::log(std::abs(sum)), sum > 0.0 ? +1 : -1};
}

} // namespace hartmann
