#pragma once

#include <stdexcept>
#include <string>

namespace lfmkit {

// Base class for every error the library raises on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Tensor quadrature would exceed the evaluation budget and no fallback is possible.
class BudgetExceeded : public Error {
public:
  BudgetExceeded(long double requested, long double budget)
      : Error("tensor quadrature budget exceeded: " + std::to_string(static_cast<double>(requested)) +
              " evaluations requested, budget " + std::to_string(static_cast<double>(budget))),
        requested_(requested), budget_(budget) {}
  long double requested() const { return requested_; }
  long double budget() const { return budget_; }

private:
  long double requested_;
  long double budget_;
};

// Integrand is not integrable under the requested scheme (e.g. undamped oscillatory).
class NonIntegrable : public Error {
public:
  explicit NonIntegrable(const std::string& what) : Error("non-integrable: " + what) {}
};

// Two wave functions (or a kernel and a wave function) live on different spatial grids.
class GridMismatch : public Error {
public:
  explicit GridMismatch(const std::string& what) : Error("grid mismatch: " + what) {}
};

// A quadratic slice chain hit a focal/caustic point; composition is singular there.
class DegenerateSlice : public Error {
public:
  DegenerateSlice(int slice, double time)
      : Error("degenerate slice " + std::to_string(slice) + " at t = " + std::to_string(time) +
              " (focal/caustic point)"),
        slice_(slice), time_(time) {}
  int slice() const { return slice_; }
  double time() const { return time_; }

private:
  int slice_;
  double time_;
};

// The spatial Jacobian of a flow is not invertible at some intermediate time.
class SingularJacobian : public Error {
public:
  explicit SingularJacobian(double tau)
      : Error("singular flow Jacobian at tau = " + std::to_string(tau)), tau_(tau) {}
  double tau() const { return tau_; }

private:
  double tau_;
};

// Closed-form real-time harmonic kernel requested at a caustic time t = m*pi/omega.
class Caustic : public Error {
public:
  explicit Caustic(double t) : Error("caustic at t = " + std::to_string(t)), time_(t) {}
  double time() const { return time_; }

private:
  double time_;
};

// Requested PDE time step violates the solver's recorded stability/accuracy bound.
class UnstableStep : public Error {
public:
  explicit UnstableStep(const std::string& what) : Error("unstable step: " + what) {}
};

// A vector field has neither an analytic nor a finite-difference Jacobian.
class NoJacobian : public Error {
public:
  explicit NoJacobian(const std::string& what) : Error("no jacobian: " + what) {}
};

// Invalid experiment configuration. Collects every problem found, not just the first.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& what) : Error("config error: " + what) {}
};

}  // namespace lfmkit
