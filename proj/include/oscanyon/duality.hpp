#pragma once

// The oscillator <-> Coulomb anyon dictionary. On the oscillator side ω is
// fixed and E is quantized; on the anyon side α = E/4 is fixed, ω is
// quantized and ε = -μω²/8 plays the role of energy.

#include <cmath>
#include <numbers>

#include "oscanyon/anyon.hpp"
#include "oscanyon/core_model.hpp"
#include "oscanyon/oracle.hpp"
#include "oscanyon/oscillator.hpp"
#include "oscanyon/specfun.hpp"

namespace oscanyon {

struct AnyonSide {
  double coupling;  // α
  double energy;    // ε
};

struct OscillatorSide {
  double energy;     // E
  double frequency;  // ω
};

/// α = E/4, ε = -μω²/8.
inline AnyonSide to_anyon_params(double energy, double omega, const PhysicalParams& p) {
  validate_params(p);
  if (!(energy > 0.0)) throw InvalidArgument("E: oscillator energy must be positive");
  if (!(omega > 0.0)) throw InvalidArgument("frequency: omega must be positive");
  return {energy / 4.0, -p.mass * omega * omega / 8.0};
}

/// Inverse of to_anyon_params: E = 4α, ω = √(-8ε/μ).
inline OscillatorSide to_oscillator_params(double alpha, double epsilon, const PhysicalParams& p) {
  validate_params(p);
  if (!(alpha > 0.0)) throw InvalidArgument("coupling: alpha must be positive");
  if (!(epsilon < 0.0)) throw InvalidArgument("epsilon: anyon energy must be negative");
  return {4.0 * alpha, std::sqrt(-8.0 * epsilon / p.mass)};
}

/// ω_n = 2α/(ħ(n+ν)); -μω_n²/8 reproduces the anyon level ε_n.
inline double dual_frequency(int n, StatParam nu, const PhysicalParams& p) {
  const double alpha = require_coupling(p);
  if (n < 0) throw InvalidArgument("n: radial index must be nonnegative");
  return 2.0 * alpha / (p.hbar * (n + value(nu)));
}

/// The anyon-side params with ω set to the dual frequency of state q.
inline PhysicalParams dual_params(const QuantumState& q, const PhysicalParams& anyon_side) {
  PhysicalParams out = anyon_side;
  out.frequency = dual_frequency(q.n(), q.stat(), anyon_side);
  return out;
}

struct DualityPair {
  double mass;
  double hbar;
  QuantumState state;
  // oscillator side
  double frequency;
  double oscillator_energy;
  // anyon side
  double coupling;
  double anyon_energy;

  int level() const { return state.level(); }
};

/// Anyon side fixed: α given, ω quantized.
inline DualityPair duality_from_anyon(const QuantumState& q, const PhysicalParams& p) {
  const double alpha = require_coupling(p);
  const double omega = dual_frequency(q.n(), q.stat(), p);
  return {p.mass, p.hbar, q, omega, 4.0 * alpha, alpha, -p.mass * omega * omega / 8.0};
}

/// Oscillator side fixed: ω given, E quantized.
inline DualityPair duality_from_oscillator(const QuantumState& q, const PhysicalParams& p) {
  const double omega = require_frequency(p);
  const double energy = osc_energy(q.level(), p);
  const AnyonSide a = to_anyon_params(energy, omega, p);
  return {p.mass, p.hbar, q, omega, energy, a.coupling, a.energy};
}

inline constexpr double kDualFrequencyMatch = 1e-12;

/// ((-1)^n/2) √(μω/(ħ(n+ν))) x^{1/4} Ψ_{2n+2s}(√x). Requires both α and ω in
/// p with ω equal to the dual frequency; the result then equals the anyon
/// eigenfunction Φ_n^{(ν)}(x).
inline double map_oscillator_to_anyon(int n, Spin s, const PhysicalParams& p, double x) {
  const QuantumState q(n, s);
  const double omega = require_frequency(p);
  const double expected = dual_frequency(n, q.stat(), p);
  if (std::abs(omega - expected) > kDualFrequencyMatch * expected)
    throw InvalidArgument("params mismatch: omega is not the dual frequency of (n, nu)");
  if (!(x > 0.0)) throw InvalidArgument("x: the mapped wavefunction is defined for x > 0");
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return 0.5 * sign * std::sqrt(p.mass * omega / (p.hbar * q.lambda())) * std::pow(x, 0.25) *
         osc_wavefunction(q.level(), p, std::sqrt(x));
}

/// ln C̃ with C̃ = (√(μα)/ħ) 2^{-(n-ν+1/4)} √Γ(2n+2ν+1/2) / (π^{1/4} n! (n+ν)).
inline double log_dual_constant(int n, StatParam nu, const PhysicalParams& p) {
  const double alpha = require_coupling(p);
  if (n < 0) throw InvalidArgument("n: radial index must be nonnegative");
  const double v = value(nu);
  return 0.5 * std::log(p.mass * alpha) - std::log(p.hbar) - (n - v + 0.25) * std::numbers::ln2 +
         0.5 * log_gamma(2.0 * n + 2.0 * v + 0.5) - 0.25 * std::log(std::numbers::pi) - log_gamma(n + 1.0) -
         std::log(n + v);
}

/// |C̃ - C| / C. Both constants share the factor √(μα)/ħ, so unit params are used.
inline double constant_equality_residual(int n, StatParam nu) {
  const PhysicalParams unit = PhysicalParams::anyon(1.0);
  return std::abs(std::expm1(log_dual_constant(n, nu, unit) - log_anyon_constant(n, nu, unit)));
}

/// Builds Φ from the oscillator eigenfunction by Ψ̄ = Ψ/(C u^{2s}),
/// Φ = x^ν Ψ̄ with u = √x and C = √(2<u²>), then returns the 4th-order
/// finite-difference residual of the anyon equation with ε = -μω²/8 and
/// α = E/4. `energy_scale` multiplies ε for sensitivity probes.
inline double reduction_chain_residual(int n, Spin s, const PhysicalParams& p, const Grid& grid,
                                       double energy_scale = 1.0) {
  const QuantumState q(n, s);
  const double omega = require_frequency(p);
  if (!(grid.x_min() > 0.0)) throw InvalidArgument("grid: the reduction chain grid must stay in x > 0");
  const double normalization = std::sqrt(2.0 * mean_square_displacement(q.level(), p));
  const double nu = q.nu();
  const auto phi = [&](double x) {
    const double u = std::sqrt(x);
    const double spin_power = s == Spin::half ? u : 1.0;
    const double reduced = osc_wavefunction(q.level(), p, u) / (normalization * spin_power);
    return std::pow(x, nu) * reduced;
  };
  const AnyonSide dual = to_anyon_params(osc_energy(q.level(), p), omega, p);
  const PhysicalParams anyon_side = PhysicalParams::anyon(dual.coupling, p.mass, p.hbar);
  const auto samples = sample(grid, phi);
  return ode_residual(samples, [&](double x) { return potential(x, q.stat(), anyon_side); },
                      energy_scale * dual.energy, anyon_side);
}

}  // namespace oscanyon
