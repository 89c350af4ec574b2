#pragma once

// The 1D Coulomb anyon: a particle on x > 0 in the Coulomb plus
// Calogero-Sutherland potential, with origin exponent ν in {1/4, 3/4}.

#include <cfloat>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "oscanyon/core_model.hpp"
#include "oscanyon/specfun.hpp"

namespace oscanyon {

/// V(x) = -α/x - ħ²ν(1-ν)/(2μx²). ν(1-ν) = 3/16 for both admissible ν.
inline double potential(double x, StatParam nu, const PhysicalParams& p) {
  const double alpha = require_coupling(p);
  if (!(x > 0.0)) throw InvalidArgument("x: the anyon potential is singular at x <= 0");
  const double v = value(nu);
  return -alpha / x - p.hbar * p.hbar * v * (1.0 - v) / (2.0 * p.mass * x * x);
}

/// ε_n = -μα² / (2ħ²(n+ν)²).
inline double anyon_energy(int n, StatParam nu, const PhysicalParams& p) {
  const double alpha = require_coupling(p);
  if (n < 0) throw InvalidArgument("n: radial index must be nonnegative");
  const double lambda = n + value(nu);
  return -p.mass * alpha * alpha / (2.0 * p.hbar * p.hbar * lambda * lambda);
}

/// Inverse length β = √(-8με)/ħ = 2μα/(ħ²(n+ν)); the dimensionless variable is y = βx.
inline double anyon_beta(int n, StatParam nu, const PhysicalParams& p) {
  const double alpha = require_coupling(p);
  if (n < 0) throw InvalidArgument("n: radial index must be nonnegative");
  return 2.0 * p.mass * alpha / (p.hbar * p.hbar * (n + value(nu)));
}

struct AnyonState {
  PhysicalParams params;
  QuantumState state;
  double energy;
  double lambda;
  double beta;

  AnyonState(const PhysicalParams& p, const QuantumState& q)
      : params(p),
        state(q),
        energy(anyon_energy(q.n(), q.stat(), p)),
        lambda(std::sqrt(-p.mass * require_coupling(p) * require_coupling(p) / (2.0 * p.hbar * p.hbar * energy))),
        beta(std::sqrt(-8.0 * p.mass * energy) / p.hbar) {}
};

/// ln C_n^{(ν)} with C = (√(μα)/ħ) (n+ν)^{-1} Γ(2ν)^{-1} √(Γ(n+2ν)/n!).
/// With this constant the eigenfunction is unit-normalized in x.
inline double log_anyon_constant(int n, StatParam nu, const PhysicalParams& p) {
  const double alpha = require_coupling(p);
  if (n < 0) throw InvalidArgument("n: radial index must be nonnegative");
  const double v = value(nu);
  return 0.5 * std::log(p.mass * alpha) - std::log(p.hbar) - std::log(n + v) - log_gamma(2.0 * v) +
         0.5 * (log_gamma(n + 2.0 * v) - log_gamma(n + 1.0));
}

inline double anyon_constant(int n, StatParam nu, const PhysicalParams& p) {
  return std::exp(log_anyon_constant(n, nu, p));
}

struct WaveValue {
  double value = 0.0;
  bool underflow = false;
};

namespace detail {

inline constexpr double kLogSpaceThreshold = 700.0;

// C y^ν e^{-y/2} F(-n, 2ν, y) for y > 0, given ln C.
inline WaveValue radial_profile(int n, StatParam nu, double log_constant, double y) {
  const double v = value(nu);
  const double f = kummer_series(-n, 2.0 * v, y);
  if (y <= kLogSpaceThreshold) return {std::exp(log_constant) * std::pow(y, v) * std::exp(-0.5 * y) * f, false};
  if (f == 0.0) return {0.0, false};
  const double log_magnitude = log_constant + v * std::log(y) - 0.5 * y + std::log(std::abs(f));
  if (log_magnitude < std::log(DBL_MIN)) return {0.0, true};
  return {std::copysign(std::exp(log_magnitude), f), false};
}

}  // namespace detail

/// Φ_n^{(ν)}(x), positive as x → 0⁺, with ∫₀^∞ Φ² dx = 1.
inline WaveValue anyon_wavefunction_eval(int n, StatParam nu, const PhysicalParams& p, double x) {
  if (!(x > 0.0)) throw InvalidArgument("x: the anyon wavefunction is defined for x > 0");
  return detail::radial_profile(n, nu, log_anyon_constant(n, nu, p), anyon_beta(n, nu, p) * x);
}

inline double anyon_wavefunction(int n, StatParam nu, const PhysicalParams& p, double x) {
  return anyon_wavefunction_eval(n, nu, p, x).value;
}

/// Which of the two Kummer solutions survives at the origin, and why.
struct BranchSelection {
  StatParam nu;
  double retained_exponent;
  double rejected_exponent;
  std::string reason;
  std::string condition;

  std::string describe() const {
    return "nu=" + std::string(nu == StatParam::quarter ? "1/4" : "3/4") +
           ": retain y^nu F(nu-lambda, 2nu, y); reject y^(1-nu) branch (" + reason + "); quantization " + condition;
  }
};

inline BranchSelection boundary_selection_report(StatParam nu) {
  const double v = value(nu);
  // The second solution behaves as y^{1-ν} at the origin: y^{1/4} for
  // ν=3/4 makes Φ/y^ν singular; for ν=1/4 it is regular, but requiring both
  // branches to terminate needs n - m = 1/2, and dropping the first branch
  // would force Q(0) = 0.
  std::string reason = nu == StatParam::three_quarters ? "singular second solution"
                                                       : "incompatible double quantization";
  return {nu, v, 1.0 - v, std::move(reason), "lambda = n + nu"};
}

/// Continuation of the y-normalized eigenfunction to the full line:
/// |y| replaces y in the exponential and in F, y^ν is kept on the principal
/// branch (y^ν = |y|^ν e^{iπν} for y < 0), and the whole is scaled by 1/√2.
/// Φ̄(-y) = e^{iπν} Φ̄(y) and ∫_{-∞}^{∞} |Φ̄|² dy = 1.
inline std::complex<double> extended_wavefunction(int n, StatParam nu, const PhysicalParams& p, double y) {
  if (y == 0.0 || !std::isfinite(y)) throw InvalidArgument("y: the extended wavefunction excludes y = 0");
  const double log_constant_y = log_anyon_constant(n, nu, p) - 0.5 * std::log(anyon_beta(n, nu, p));
  const double modulus = detail::radial_profile(n, nu, log_constant_y, std::abs(y)).value / std::numbers::sqrt2;
  if (y > 0.0) return {modulus, 0.0};
  return std::polar(1.0, std::numbers::pi * value(nu)) * modulus;
}

}  // namespace oscanyon
