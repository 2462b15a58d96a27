#pragma once

#include <stdexcept>
#include <string>

namespace hartmann {

/// Argument outside a function's mathematical domain (poles, |x|>1, r<=0, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An integral (or the closed form standing for it) does not converge for the
/// requested exponents.
class DivergentIntegralError : public DomainError {
public:
  explicit DivergentIntegralError(const std::string& what) : DomainError(what) {}
};

/// First-order perturbation theory is not applicable for the requested state
/// (e.g. <sin^-4> diverges); refusing to return a number.
class ValidityError : public std::runtime_error {
public:
  explicit ValidityError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent run configuration.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A recurrence step was asked for before its parent entries exist.
class MissingParentError : public std::logic_error {
public:
  explicit MissingParentError(const std::string& what) : std::logic_error(what) {}
};

} // namespace hartmann
