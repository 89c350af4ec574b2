#pragma once

// Numerical machinery that knows nothing about the closed forms: adaptive
// quadrature, a finite-difference oscillator eigensolver, a shooting
// eigensolver for the anyon, and finite-difference ODE residuals.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "oscanyon/core_model.hpp"

namespace oscanyon {

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

namespace detail {

inline boost::math::quadrature::tanh_sinh<double>& tanh_sinh_rule() {
  thread_local boost::math::quadrature::tanh_sinh<double> rule;
  return rule;
}

// Double-exponential rule on a finite interval. The rule clusters nodes at
// both ends, which absorbs integrable x^p endpoint behavior.
template <typename F>
double finite_panel(const F& f, double a, double b, double tol) {
  double error = 0.0;
  double l1 = 0.0;
  const double result = tanh_sinh_rule().integrate(f, a, b, tol, &error, &l1);
  if (!std::isfinite(result)) throw ConvergenceError("quadrature: non-finite panel value");
  if (error > tol * std::max(1.0, l1)) {
    throw ConvergenceError("quadrature: error estimate " + std::to_string(error) + " above tolerance on [" +
                           std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  return result;
}

inline constexpr int kMaxTailPanels = 80;

// [a, ∞): panels of doubling width until two consecutive panels carry less
// than the tolerance.
template <typename F>
double semi_infinite(const F& f, double a, double tol) {
  double total = 0.0;
  double left = a;
  double width = 1.0;
  int quiet = 0;
  for (int panel = 0; panel < kMaxTailPanels; ++panel) {
    const double right = left + width;
    const double piece = finite_panel(f, left, right, tol);
    total += piece;
    if (std::abs(piece) <= 0.1 * tol * std::max(1.0, std::abs(total))) {
      if (++quiet == 2) return total;
    } else {
      quiet = 0;
    }
    left = right;
    width *= 2.0;
  }
  throw ConvergenceError("quadrature: tail did not decay within the panel cap");
}

}  // namespace detail

/// ∫_a^b f. Either bound may be infinite; infinite ranges are truncated once
/// the tail drops below tol.
inline double quadrature(const std::function<double(double)>& f, double a, double b, double tol = 1e-12) {
  if (!(tol > 0.0)) throw InvalidArgument("quadrature: tolerance must be positive");
  if (std::isnan(a) || std::isnan(b)) throw InvalidArgument("quadrature: NaN bound");
  if (a == b) return 0.0;
  if (a > b) return -quadrature(f, b, a, tol);
  const bool lower_infinite = std::isinf(a);
  const bool upper_infinite = std::isinf(b);
  if (!lower_infinite && !upper_infinite) return detail::finite_panel(f, a, b, tol);
  if (lower_infinite && upper_infinite) return quadrature(f, -b, 0.0, tol) + quadrature(f, 0.0, b, tol);
  if (upper_infinite) return detail::semi_infinite(f, a, tol);
  return detail::semi_infinite([&f](double t) { return f(-t); }, -b, tol);
}

// ---------------------------------------------------------------------------
// ODE residual
// ---------------------------------------------------------------------------

/// max |Φ'' + (2μ/ħ²)(ε - V)Φ| / max |(2μ/ħ²)(ε - V)Φ| over interior
/// samples, with Φ'' from the 5-point 4th-order central difference.
inline double ode_residual(std::span<const WaveSample<double>> samples, const std::function<double(double)>& potential,
                           double energy, const PhysicalParams& p) {
  validate_params(p);
  const std::size_t count = samples.size();
  if (count < 7) throw InvalidArgument("ode_residual: at least 7 samples required");
  const double h = samples[1].x - samples[0].x;
  if (!(h > 0.0)) throw InvalidArgument("ode_residual: samples must be increasing");
  for (std::size_t i = 1; i < count; ++i) {
    const double step = samples[i].x - samples[i - 1].x;
    if (std::abs(step - h) > 1e-6 * h) throw InvalidArgument("ode_residual: non-uniform grid");
  }
  const double k = 2.0 * p.mass / (p.hbar * p.hbar);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 2; i + 2 < count; ++i) {
    const double second = (-samples[i - 2].value + 16.0 * samples[i - 1].value - 30.0 * samples[i].value +
                           16.0 * samples[i + 1].value - samples[i + 2].value) /
                          (12.0 * h * h);
    const double source = k * (energy - potential(samples[i].x)) * samples[i].value;
    worst = std::max(worst, std::abs(second + source));
    scale = std::max(scale, std::abs(source));
  }
  if (scale == 0.0) throw InvalidArgument("ode_residual: trivial function");
  return worst / scale;
}

/// Samples f on every point of the grid.
template <typename F>
std::vector<WaveSample<double>> sample(const Grid& grid, F&& f) {
  std::vector<WaveSample<double>> out;
  out.reserve(static_cast<std::size_t>(grid.size()));
  for (double x : grid.points()) out.push_back({x, f(x)});
  return out;
}

// ---------------------------------------------------------------------------
// Finite-difference oscillator spectrum
// ---------------------------------------------------------------------------

namespace detail {

// Number of eigenvalues of the symmetric tridiagonal matrix below `shift`.
inline int sturm_count(std::span<const double> diagonal, double offdiag_sq, double shift) {
  int negatives = 0;
  double pivot = 1.0;
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    pivot = diagonal[i] - shift - (i == 0 ? 0.0 : offdiag_sq / pivot);
    if (pivot == 0.0) pivot = -std::numeric_limits<double>::epsilon() * (std::abs(diagonal[i]) + std::abs(shift));
    if (pivot < 0.0) ++negatives;
  }
  return negatives;
}

}  // namespace detail

inline constexpr int kMaxFdLevels = 20;

/// Lowest `levels` eigenvalues of the 3-point discretization of the
/// oscillator on [-L, L] (M points including the Dirichlet ends), by
/// Sturm-sequence bisection.
inline std::vector<double> fd_oscillator_spectrum(const PhysicalParams& p, double half_width, int points, int levels) {
  const double omega = require_frequency(p);
  if (!(half_width > 0.0)) throw InvalidArgument("fd_oscillator_spectrum: half-width must be positive");
  if (points < 100) throw InvalidArgument("fd_oscillator_spectrum: at least 100 points required");
  if (levels < 1 || levels > kMaxFdLevels) throw InvalidArgument("fd_oscillator_spectrum: levels must be in [1, 20]");
  const int interior = points - 2;
  if (levels > interior / 4) throw InvalidArgument("fd_oscillator_spectrum: grid too small for requested levels");

  const double h = 2.0 * half_width / (points - 1);
  const double kinetic = p.hbar * p.hbar / (p.mass * h * h);
  const double offdiag = -0.5 * kinetic;
  std::vector<double> diagonal(static_cast<std::size_t>(interior));
  for (int i = 0; i < interior; ++i) {
    const double u = -half_width + (i + 1) * h;
    diagonal[static_cast<std::size_t>(i)] = kinetic + 0.5 * p.mass * omega * omega * u * u;
  }
  const auto [dmin, dmax] = std::minmax_element(diagonal.begin(), diagonal.end());
  const double lower = *dmin - 2.0 * std::abs(offdiag);
  const double upper = *dmax + 2.0 * std::abs(offdiag);
  const double offdiag_sq = offdiag * offdiag;
  if (detail::sturm_count(diagonal, offdiag_sq, lower) != 0 ||
      detail::sturm_count(diagonal, offdiag_sq, upper) < levels)
    throw ConvergenceError("fd_oscillator_spectrum: Gershgorin bracket failure");

  std::vector<double> eigenvalues;
  eigenvalues.reserve(static_cast<std::size_t>(levels));
  for (int j = 0; j < levels; ++j) {
    double lo = lower;
    double hi = upper;
    for (int iter = 0; iter < 200 && hi - lo > 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)); ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (detail::sturm_count(diagonal, offdiag_sq, mid) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    eigenvalues.push_back(0.5 * (lo + hi));
  }
  return eigenvalues;
}

// ---------------------------------------------------------------------------
// Shooting eigensolver for the anyon
// ---------------------------------------------------------------------------

/// Lengths in the config are absolute (same units as 1/α scaling of x).
struct ShootingConfig {
  StatParam nu = StatParam::quarter;
  double x_start = 1e-4;
  double x_match = 1.0;
  double x_end = 40.0;
  double step = 5e-3;            // largest RK4 step
  double relative_step = 5e-3;   // step/x cap, dominant near the origin
  std::pair<double, double> energy_bracket{-10.0, -0.01};
  double tolerance = 1e-11;      // relative bracket width at convergence

  void validate() const {
    const auto [lo, hi] = energy_bracket;
    if (!(lo < hi && hi < 0.0)) throw InvalidArgument("shooting: energy bracket must satisfy lo < hi < 0");
    if (!(x_start > 0.0 && x_start < x_match && x_match < x_end))
      throw InvalidArgument("shooting: need 0 < x_start < x_match < x_end");
    if (!(step > 0.0 && relative_step > 0.0)) throw InvalidArgument("shooting: steps must be positive");
    if (!(tolerance > 0.0)) throw InvalidArgument("shooting: tolerance must be positive");
  }
};

struct ShootingResult {
  double energy = 0.0;
  int nodes = 0;
  double mismatch = 0.0;
  int iterations = 0;
};

namespace detail {

struct OdeState {
  double value;
  double slope;
};

// Φ'' = -q(x) Φ with q = (2μ/ħ²)(ε - V).
struct AnyonRadialOde {
  double k_energy;    // 2με/ħ²
  double k_coupling;  // 2μα/ħ²
  double centrifugal; // ν(1-ν)

  double q(double x) const { return k_energy + k_coupling / x + centrifugal / (x * x); }
};

inline constexpr double kRescaleAbove = 1e150;

// Fixed-step RK4 from `from` to `to` (either direction). The step is
// min(step, relative_step * x). Sign changes of Φ at step ends are counted.
inline OdeState integrate(const AnyonRadialOde& ode, const ShootingConfig& cfg, double from, double to,
                          OdeState state, int* sign_changes) {
  const double direction = to > from ? 1.0 : -1.0;
  double x = from;
  auto rhs = [&ode](double at, const OdeState& s) { return OdeState{s.slope, -ode.q(at) * s.value}; };
  while (direction * (to - x) > 0.0) {
    double h = std::min(cfg.step, cfg.relative_step * x);
    if (h >= direction * (to - x)) h = direction * (to - x);
    const double dh = direction * h;
    const OdeState k1 = rhs(x, state);
    const OdeState k2 = rhs(x + 0.5 * dh, {state.value + 0.5 * dh * k1.value, state.slope + 0.5 * dh * k1.slope});
    const OdeState k3 = rhs(x + 0.5 * dh, {state.value + 0.5 * dh * k2.value, state.slope + 0.5 * dh * k2.slope});
    const OdeState k4 = rhs(x + dh, {state.value + dh * k3.value, state.slope + dh * k3.slope});
    const OdeState next{state.value + dh / 6.0 * (k1.value + 2.0 * k2.value + 2.0 * k3.value + k4.value),
                        state.slope + dh / 6.0 * (k1.slope + 2.0 * k2.slope + 2.0 * k3.slope + k4.slope)};
    if (sign_changes && ((state.value < 0.0 && next.value > 0.0) || (state.value > 0.0 && next.value < 0.0)))
      ++*sign_changes;
    state = next;
    x = (std::abs(dh) == direction * (to - x)) ? to : x + dh;
    const double size = std::max(std::abs(state.value), std::abs(state.slope));
    if (size > kRescaleAbove) {
      state.value /= kRescaleAbove;
      state.slope /= kRescaleAbove;
    }
  }
  return state;
}

// Frobenius solution x^ν Σ c_k x^k of the branch with origin exponent ν.
inline OdeState origin_branch(const AnyonRadialOde& ode, double nu, double x) {
  double c_prev2 = 0.0;
  double c_prev = 1.0;
  double series = 1.0;
  double series_slope = nu;
  double power = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double c = -(ode.k_coupling * c_prev + ode.k_energy * c_prev2) / (k * (k + 2.0 * nu - 1.0));
    power *= x;
    series += c * power;
    series_slope += c * (k + nu) * power;
    c_prev2 = c_prev;
    c_prev = c;
    if (k > 2 && std::abs(c * power) < 1e-18 * std::abs(series)) break;
  }
  const double lead = std::pow(x, nu);
  return {lead * series, lead / x * series_slope};
}

// Decaying solution x^{a/2κ} e^{-κx} at large x.
inline OdeState decaying_branch(const AnyonRadialOde& ode, double x) {
  const double kappa = std::sqrt(-ode.k_energy);
  return {1.0, ode.k_coupling / (2.0 * kappa * x) - kappa};
}

inline AnyonRadialOde make_ode(StatParam nu, const PhysicalParams& p, double energy) {
  const double alpha = require_coupling(p);
  const double k = 2.0 * p.mass / (p.hbar * p.hbar);
  const double v = value(nu);
  return {k * energy, k * alpha, v * (1.0 - v)};
}

struct Mismatch {
  double value;
  int nodes;
};

// Normalized Wronskian of the origin and decaying solutions at x_match.
inline Mismatch mismatch(const ShootingConfig& cfg, const PhysicalParams& p, double energy, bool count_nodes) {
  const AnyonRadialOde ode = make_ode(cfg.nu, p, energy);
  int out_nodes = 0;
  int in_nodes = 0;
  const OdeState out = integrate(ode, cfg, cfg.x_start, cfg.x_match, origin_branch(ode, value(cfg.nu), cfg.x_start),
                                 count_nodes ? &out_nodes : nullptr);
  const OdeState in = integrate(ode, cfg, cfg.x_end, cfg.x_match, decaying_branch(ode, cfg.x_end),
                                count_nodes ? &in_nodes : nullptr);
  const double wronskian = out.slope * in.value - out.value * in.slope;
  const double norm = std::hypot(out.value, out.slope) * std::hypot(in.value, in.slope);
  return {wronskian / norm, out_nodes + in_nodes};
}

}  // namespace detail

/// Sign changes of the origin-branch solution on [x_start, x_end] at energy ε.
/// Equals the number of eigenvalues of the truncated problem below ε.
inline int count_nodes(const ShootingConfig& cfg, const PhysicalParams& p, double energy) {
  cfg.validate();
  if (!(energy < 0.0)) throw InvalidArgument("count_nodes: energy must be negative");
  const auto ode = detail::make_ode(cfg.nu, p, energy);
  int nodes = 0;
  detail::integrate(ode, cfg, cfg.x_start, cfg.x_end, detail::origin_branch(ode, value(cfg.nu), cfg.x_start), &nodes);
  return nodes;
}

/// Bisection on the matching Wronskian inside cfg.energy_bracket. The
/// converged solution must have exactly `nodes` interior zeros.
inline ShootingResult shoot_anyon(const ShootingConfig& cfg, const PhysicalParams& p, int nodes) {
  cfg.validate();
  require_coupling(p);
  if (nodes < 0) throw InvalidArgument("shooting: node target must be nonnegative");
  auto [lo, hi] = cfg.energy_bracket;
  double f_lo = detail::mismatch(cfg, p, lo, false).value;
  const double f_hi = detail::mismatch(cfg, p, hi, false).value;
  if (f_lo == 0.0) hi = lo;
  if (f_hi == 0.0) lo = hi;
  if (lo != hi && (f_lo > 0.0) == (f_hi > 0.0))
    throw ConvergenceError("shooting: bracket does not change mismatch sign");

  int iterations = 0;
  while (hi - lo > cfg.tolerance * std::abs(0.5 * (lo + hi)) && iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = detail::mismatch(cfg, p, mid, false).value;
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  const double energy = 0.5 * (lo + hi);
  const auto final = detail::mismatch(cfg, p, energy, true);
  if (final.nodes != nodes) {
    throw ConvergenceError("shooting: converged solution has " + std::to_string(final.nodes) + " nodes, expected " +
                           std::to_string(nodes));
  }
  return {energy, final.nodes, final.value, iterations};
}

inline double shoot_anyon_energy(const ShootingConfig& cfg, const PhysicalParams& p, int nodes) {
  return shoot_anyon(cfg, p, nodes).energy;
}

/// Geometry for energies in [lo, hi], in units of a0 = ħ²/(μα): start at
/// 1e-4 a0, match at the outer turning point of the geometric-mean energy,
/// end 40 decay lengths past the outer turning point of hi.
inline ShootingConfig make_shooting_config(StatParam nu, const PhysicalParams& p, double lo, double hi) {
  const double alpha = require_coupling(p);
  if (!(lo < hi && hi < 0.0)) throw InvalidArgument("shooting: energy bracket must satisfy lo < hi < 0");
  const double bohr = p.hbar * p.hbar / (p.mass * alpha);
  const double k = 2.0 * p.mass / (p.hbar * p.hbar);
  const double kappa_hi = std::sqrt(-k * hi);
  const double kappa_lo = std::sqrt(-k * lo);
  const double mid = -std::sqrt(lo * hi);

  ShootingConfig cfg;
  cfg.nu = nu;
  cfg.x_start = 1e-4 * bohr;
  cfg.x_end = alpha / -hi + 40.0 / kappa_hi;
  cfg.x_match = std::clamp(alpha / -mid, 1e3 * cfg.x_start, 0.5 * cfg.x_end);
  cfg.step = std::min(5e-3 * bohr, 0.05 / kappa_lo);
  cfg.energy_bracket = {lo, hi};
  return cfg;
}

/// Brackets the level with `nodes` zeros inside `search` by bisection on
/// the node count in log|ε|, without reference to any closed form.
inline std::pair<double, double> bracket_anyon_level(StatParam nu, const PhysicalParams& p, int nodes,
                                                     std::pair<double, double> search, double relative_width = 1e-3) {
  auto [lo, hi] = search;
  const ShootingConfig cfg = make_shooting_config(nu, p, lo, hi);
  if (count_nodes(cfg, p, lo) > nodes) throw ConvergenceError("bracket: lower search bound is above the level");
  if (count_nodes(cfg, p, hi) <= nodes) throw ConvergenceError("bracket: upper search bound is below the level");
  while (hi / lo < 1.0 - relative_width) {
    const double mid = -std::sqrt(lo * hi);
    if (count_nodes(cfg, p, mid) > nodes) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

}  // namespace oscanyon
