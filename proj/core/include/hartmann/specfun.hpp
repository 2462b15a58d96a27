#pragma once

#include <span>
#include <vector>

#include "hartmann/errors.hpp"

namespace hartmann {

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

/// Gamma function, Lanczos approximation plus reflection for x < 1/2.
/// Throws DomainError at the poles (non-positive integers).
double gamma_fn(double x);

/// log|Gamma(x)| together with the sign of Gamma(x).
struct LogGamma {
  double log_abs;
  int sign; // +1 or -1
};
LogGamma lgamma_signed(double x);

/// Rising factorial z(z+1)...(z+n-1), computed as a direct product so that
/// non-positive z is handled exactly (a zero factor gives exactly 0).
double pochhammer(double z, int n);

/// sin(pi*x) with argument reduction done on x, not on pi*x.
double sin_pi(double x);

/// Generalized binomial coefficient C(top, m) for integer m >= 0 and real top,
/// as the product top(top-1)...(top-m+1)/m!.  Returns 0 for m < 0.
double binomial(double top, int m);

// ---------------------------------------------------------------------------
// Orthogonal polynomials (degree recurrences, real order)
// ---------------------------------------------------------------------------

struct PolyParams {
  int degree = 0;    // n >= 0
  double order = 0;  // Laguerre alpha or Gegenbauer lambda
};

/// Associated Laguerre polynomial L_n^(alpha)(x).
double laguerre(const PolyParams& p, double x);

/// Gegenbauer (ultraspherical) polynomial C_n^(lambda)(x); requires
/// lambda > -1/2 (the orders used by the angular basis).
double gegenbauer(const PolyParams& p, double x);

/// Residual of the mixed-order Gegenbauer identity in its published form,
///   2a(1-x^2) C_{n-1}^{(a+1)} - [(2a+n+1) C_{n-1}^{(a)} - n x C_n^{(a)}].
/// The published coefficient pattern fails numerically; see the companion
/// below for the reference-table form that holds.
double gegenbauer_shift_residual_printed(int n, double alpha, double x);

/// Residual of the reference-table identity
///   2a(1-x^2) C_{n-1}^{(a+1)} = (2a+n-1) C_{n-1}^{(a)} - n x C_n^{(a)},
/// which validates to machine precision and is the one trusted here.
double gegenbauer_shift_residual(int n, double alpha, double x);

// ---------------------------------------------------------------------------
// Terminating generalized hypergeometric series
// ---------------------------------------------------------------------------

struct HypergeometricSpec {
  std::vector<double> upper;
  std::vector<double> lower;
  double argument = 1.0;
};

/// Terminating pFq.  At least one upper parameter must be a non-positive
/// integer; when several qualify the series terminates at the smallest |value|.
/// Throws DomainError if a lower-parameter Pochhammer vanishes before the
/// terminating index.  Summation uses compensated accumulation.
double hypergeometric_pfq(const HypergeometricSpec& spec);

// ---------------------------------------------------------------------------
// Log-space assembly of Gamma-ratio expressions
// ---------------------------------------------------------------------------

/// A real number carried as (sign, log|value|) so products of large Gamma
/// factors never overflow before the final exponentiation.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 0; // -1, 0, +1

  static SignedLog of(double v);
  static SignedLog of_gamma(double x);          // Gamma(x)
  static SignedLog of_pow(double base, double e); // base^e, base > 0
  static SignedLog one() { return {0.0, 1}; }
  static SignedLog zero() { return {0.0, 0}; }

  SignedLog& operator*=(const SignedLog& o);
  SignedLog& operator/=(const SignedLog& o);
  SignedLog& operator*=(double v) { return (*this) *= of(v); }
  SignedLog& operator/=(double v) { return (*this) /= of(v); }
  friend SignedLog operator*(SignedLog a, const SignedLog& b) { return a *= b; }
  friend SignedLog operator/(SignedLog a, const SignedLog& b) { return a /= b; }

  double value() const; // exponentiates; may overflow to +-inf for |log|>~709
};

/// Sum of signed-log terms: the maximum magnitude is factored out and the
/// remainders are accumulated with Neumaier compensation in a fixed order.
SignedLog signed_log_sum(std::span<const SignedLog> terms);

} // namespace hartmann
