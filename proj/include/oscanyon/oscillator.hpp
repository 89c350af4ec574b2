#pragma once

// The 1D quantum oscillator restricted to the half-line u >= 0.

#include <cmath>
#include <numbers>

#include "oscanyon/core_model.hpp"

namespace oscanyon {

/// E = ħω(N + 1/2).
inline double osc_energy(int level, const PhysicalParams& p) {
  const double omega = require_frequency(p);
  if (level < 0) throw InvalidArgument("N: oscillator level must be nonnegative");
  return p.hbar * omega * (level + 0.5);
}

struct OscillatorState {
  PhysicalParams params;
  QuantumState state;
  double energy;

  OscillatorState(const PhysicalParams& p, const QuantumState& q)
      : params(p), state(q), energy(osc_energy(q.level(), p)) {}
};

namespace detail {

// Unit-normalized Hermite function (2^N N!)^{-1/2} π^{-1/4} e^{-z²/2} H_N(z),
// by the three-term recurrence on the normalized functions.
inline double hermite_function(int level, double z) {
  double previous = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * z * z);
  if (level == 0) return previous;
  double current = std::numbers::sqrt2 * z * previous;
  for (int k = 1; k < level; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * z * current - std::sqrt(static_cast<double>(k) / (k + 1)) * previous;
    previous = current;
    current = next;
  }
  return current;
}

}  // namespace detail

/// Ψ_N(u) = √2 (μω/πħ)^{1/4} (2^N N!)^{-1/2} e^{-μωu²/2ħ} H_N(u√(μω/ħ)),
/// unit-normalized on [0, ∞). The leading Hermite coefficient is positive.
inline double osc_wavefunction(int level, const PhysicalParams& p, double u) {
  const double omega = require_frequency(p);
  if (level < 0) throw InvalidArgument("N: oscillator level must be nonnegative");
  if (!(u >= 0.0)) throw InvalidArgument("u: oscillator coordinate must be nonnegative on the half-line");
  const double scale = p.mass * omega / p.hbar;
  return std::numbers::sqrt2 * std::pow(scale, 0.25) * detail::hermite_function(level, u * std::sqrt(scale));
}

/// <u²> = (N + 1/2) ħ / (μω).
inline double mean_square_displacement(int level, const PhysicalParams& p) {
  const double omega = require_frequency(p);
  if (level < 0) throw InvalidArgument("N: oscillator level must be nonnegative");
  return (level + 0.5) * p.hbar / (p.mass * omega);
}

/// μω u²/2.
inline double osc_potential(double u, const PhysicalParams& p) {
  const double omega = require_frequency(p);
  return 0.5 * p.mass * omega * omega * u * u;
}

}  // namespace oscanyon
