#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hartmann/errors.hpp"
#include "hartmann/quadrature.hpp"

namespace hartmann {

struct UnitSystem {
  std::string name = "atomic"; // atomic | SI | custom
  double length = 1.0;
  double energy = 1.0;
  double mass = 1.0;
  double action = 1.0;
};

/// Ring-shaped potential  V(r,theta) = eta sigma^2 (e^2/r + q hbar^2 / (2 mu r^2 sin^2 theta)).
/// The bound spectrum requires the Coulomb term to act attractively; matrix
/// elements resolve the sign accordingly (see matrix_elements.hpp) while
/// eval_potential returns the value in the form above.
struct HartmannModel {
  double mu = 1.0;
  double e2 = 1.0; // squared charge coupling e^2
  double hbar = 1.0;
  double eta = 1.0;
  double sigma = 1.0;
  double q = 0.0;
  double beta = 0.0; // deformation parameter, >= 0
  UnitSystem units;

  /// eta sigma^2 e^2 (the Coulomb strength; "A" of the worked example)
  double coulomb_strength() const { return eta * sigma * sigma * e2; }
  /// eta q sigma^2 hbar^2 / (2 mu) (the ring strength; "B")
  double ring_strength() const { return eta * q * sigma * sigma * hbar * hbar / (2.0 * mu); }
  /// radicand contribution q eta hbar^2 sigma^2 / (2 mu) entering k
  double k_shift() const { return q * eta * hbar * hbar * sigma * sigma / (2.0 * mu); }
  /// k for magnetic number m
  double k_of(int m) const;
  /// inverse Bohr-like scale mu eta sigma^2 e^2 / hbar^2
  double coupling_scale() const { return mu * coulomb_strength() / (hbar * hbar); }

  /// hard invariants -> throws; returns soft warnings (eta/sigma outside [1,10])
  std::vector<std::string> validate() const;
};

/// One bound state (N, n, m) with its derived quantities.
struct QuantumState {
  int N = 0; // radial quantum number
  int n = 0; // angular index
  int m = 0; // magnetic number
  double k = 0.0;
  double l = 0.0;       // n + k
  double n_prime = 1.0; // N + l + 1
  double a = 0.0;       // 2 mu eta sigma^2 e^2 / (hbar^2 n')
  double E0 = 0.0;      // unperturbed energy, < 0
};

QuantumState derive_state(const HartmannModel& model, int N, int n, int m);

/// Radial factor R(r), normalized so that the integral of R^2 over (0,inf) is 1.
double radial_wavefunction(const QuantumState& s, double r);

/// Angular factor Theta_{n,k}(x), x = cos(theta), with the n-dependent
/// normalization fixed so the integral of Theta^2 over (-1,1) is 1.
/// The (n, k) pair is free (k need not come from a state).
double angular_theta(int n, double k, double x, double one_minus_x2);
double angular_theta(int n, double k, double x);
double angular_theta(const QuantumState& s, double x);

/// Full wavefunction (1/r) R(r) Theta(x) exp(i m phi) / sqrt(2 pi).
std::complex<double> eval_wavefunction(const QuantumState& s, double r, double x, double phi);

/// Potential value in the form printed above; throws on r <= 0, |x| > 1, and
/// on the symmetry axis |x| = 1 when q != 0.
double eval_potential(const HartmannModel& model, double r, double x);

/// States are treated as degenerate when |E1 - E2| <= tol * |E1|.
inline constexpr double kDegeneracyRelTol = 1.0e-12;

/// Group states by unperturbed energy (ascending E0; within a group the
/// original relative order is kept).
std::vector<std::vector<QuantumState>> group_by_energy(std::vector<QuantumState> states,
                                                       double rel_tol = kDegeneracyRelTol);

/// All states with N+n <= shell_cap and |m| <= m_cap, (N,n,m) lexicographic.
std::vector<QuantumState> scan_states(const HartmannModel& model, int shell_cap, int m_cap);

} // namespace hartmann
