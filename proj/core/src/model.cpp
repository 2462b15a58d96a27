#include "hartmann/model.hpp"

#include <algorithm>
#include <cmath>

#include "hartmann/specfun.hpp"

namespace hartmann {

double HartmannModel::k_of(int m) const {
  const double radicand = static_cast<double>(m) * m + k_shift();
  if (radicand < 0.0)
    throw DomainError("k is imaginary: m^2 + q eta hbar^2 sigma^2/(2 mu) = " +
                      std::to_string(radicand) + " < 0");
  return std::sqrt(radicand);
}

std::vector<std::string> HartmannModel::validate() const {
  if (!(mu > 0.0)) throw ConfigError("model: mu must be > 0");
  if (!(e2 > 0.0)) throw ConfigError("model: e2 must be > 0");
  if (!(hbar > 0.0)) throw ConfigError("model: hbar must be > 0");
  if (!(eta > 0.0)) throw ConfigError("model: eta must be > 0");
  if (!(sigma > 0.0)) throw ConfigError("model: sigma must be > 0");
  if (beta < 0.0) throw ConfigError("model: beta must be >= 0");
  if (!(eta * sigma * sigma > 0.0)) throw ConfigError("model: eta sigma^2 must be > 0");
  if (!(units.length > 0.0 && units.energy > 0.0 && units.mass > 0.0 && units.action > 0.0))
    throw ConfigError("model: unit scale factors must be > 0");

  std::vector<std::string> warnings;
  if (eta < 1.0 || eta > 10.0)
    warnings.push_back("eta=" + std::to_string(eta) + " outside the usual range [1,10]");
  if (sigma < 1.0 || sigma > 10.0)
    warnings.push_back("sigma=" + std::to_string(sigma) + " outside the usual range [1,10]");
  return warnings;
}

QuantumState derive_state(const HartmannModel& model, int N, int n, int m) {
  if (N < 0 || n < 0) throw DomainError("derive_state: N and n must be >= 0");
  QuantumState s;
  s.N = N;
  s.n = n;
  s.m = m;
  s.k = model.k_of(m);
  s.l = n + s.k;
  // N+n+1 is summed in integer arithmetic so equal shells give bit-identical n'
  s.n_prime = static_cast<double>(N + n + 1) + s.k;
  s.a = 2.0 * model.coupling_scale() / s.n_prime;
  const double c = model.coulomb_strength();
  s.E0 = -(model.mu * c * c) / (2.0 * model.hbar * model.hbar * s.n_prime * s.n_prime);
  return s;
}

double radial_wavefunction(const QuantumState& s, double r) {
  if (!(r > 0.0)) throw DomainError("radial_wavefunction: r must be > 0");
  const double z = s.a * r;
  const double logc = 0.5 * (std::log(0.5 * s.a) + lgamma_signed(s.N + 1.0).log_abs -
                             std::log(s.n_prime) - lgamma_signed(s.n_prime + s.l + 1.0).log_abs);
  const double lag = laguerre({s.N, 2.0 * s.l + 1.0}, z);
  return std::exp(logc + (s.l + 1.0) * std::log(z) - 0.5 * z) * lag;
}

double angular_theta(int n, double k, double x, double one_minus_x2) {
  if (n < 0) throw DomainError("angular_theta: n must be >= 0");
  if (std::abs(x) > 1.0 || one_minus_x2 < 0.0)
    throw DomainError("angular_theta: |cos(theta)| must be <= 1");
  // Gamma(2k+1)/Gamma(k+1) * sqrt[ n! (2n+2k+1) / (2^{2k+1} Gamma(n+2k+1)) ];
  // the n! under the root closes the Gegenbauer orthogonality sum to 1.
  const double lognorm =
      lgamma_signed(2.0 * k + 1.0).log_abs - lgamma_signed(k + 1.0).log_abs +
      0.5 * (lgamma_signed(n + 1.0).log_abs + std::log(2.0 * n + 2.0 * k + 1.0) -
             (2.0 * k + 1.0) * std::log(2.0) - lgamma_signed(n + 2.0 * k + 1.0).log_abs);
  const double poly = gegenbauer({n, k + 0.5}, x);
  if (one_minus_x2 == 0.0) return k > 0.0 ? 0.0 : std::exp(lognorm) * poly;
  return std::exp(lognorm + 0.5 * k * std::log(one_minus_x2)) * poly;
}

double angular_theta(int n, double k, double x) {
  return angular_theta(n, k, x, (1.0 - x) * (1.0 + x));
}

double angular_theta(const QuantumState& s, double x) { return angular_theta(s.n, s.k, x); }

std::complex<double> eval_wavefunction(const QuantumState& s, double r, double x, double phi) {
  const double radial = radial_wavefunction(s, r) / r;
  const double ang = angular_theta(s, x);
  const double azi = 1.0 / std::sqrt(2.0 * M_PI);
  return radial * ang * azi * std::exp(std::complex<double>(0.0, s.m * phi));
}

double eval_potential(const HartmannModel& model, double r, double x) {
  if (!(r > 0.0)) throw DomainError("eval_potential: r must be > 0");
  if (std::abs(x) > 1.0) throw DomainError("eval_potential: |cos(theta)| must be <= 1");
  const double sin2 = (1.0 - x) * (1.0 + x);
  const double es2 = model.eta * model.sigma * model.sigma;
  if (model.q == 0.0) return es2 * model.e2 / r;
  if (sin2 == 0.0)
    throw DomainError("eval_potential: singular on the symmetry axis (|x|=1, q!=0)");
  return es2 * (model.e2 / r +
                model.q * model.hbar * model.hbar / (2.0 * model.mu * r * r * sin2));
}

std::vector<std::vector<QuantumState>> group_by_energy(std::vector<QuantumState> states,
                                                       double rel_tol) {
  std::stable_sort(states.begin(), states.end(),
                   [](const QuantumState& a, const QuantumState& b) { return a.E0 < b.E0; });
  std::vector<std::vector<QuantumState>> groups;
  for (const auto& s : states) {
    if (!groups.empty()) {
      const double ref = groups.back().front().E0;
      if (std::abs(s.E0 - ref) <= rel_tol * std::abs(ref)) {
        groups.back().push_back(s);
        continue;
      }
    }
    groups.push_back({s});
  }
  return groups;
}

std::vector<QuantumState> scan_states(const HartmannModel& model, int shell_cap, int m_cap) {
  std::vector<QuantumState> out;
  for (int N = 0; N <= shell_cap; ++N)
    for (int n = 0; N + n <= shell_cap; ++n)
      for (int m = -m_cap; m <= m_cap; ++m) out.push_back(derive_state(model, N, n, m));
  return out;
}

} // namespace hartmann
