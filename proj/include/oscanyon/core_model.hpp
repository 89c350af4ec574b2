#pragma once

// Physical parameters, quantum numbers, grids and result records shared by
// every other header. All types are plain values.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscanyon {

inline constexpr const char* kVersion = "1.0.0";

/// Raised for any violated precondition. what() names the offending field.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an iterative routine exhausts its budget.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Spin of the reduced oscillator. The enumerator value is 2s.
enum class Spin : int { zero = 0, half = 1 };

/// Statistical parameter of the Coulomb anyon. The enumerator value is 4ν.
enum class StatParam : int { quarter = 1, three_quarters = 3 };

constexpr double value(Spin s) { return static_cast<int>(s) / 2.0; }
constexpr double value(StatParam nu) { return static_cast<int>(nu) / 4.0; }
constexpr int twice(Spin s) { return static_cast<int>(s); }

/// ν = s + 1/4.
constexpr StatParam stat_param_for(Spin s) {
  return s == Spin::zero ? StatParam::quarter : StatParam::three_quarters;
}
constexpr Spin spin_for(StatParam nu) {
  return nu == StatParam::quarter ? Spin::zero : Spin::half;
}

/// Accepts exactly 0 or 0.5.
inline Spin spin_from_value(double s) {
  if (s == 0.0) return Spin::zero;
  if (s == 0.5) return Spin::half;
  throw InvalidArgument("spin: s must be 0 or 1/2");
}

/// Accepts exactly 0.25 or 0.75.
inline StatParam stat_param_from_value(double nu) {
  if (nu == 0.25) return StatParam::quarter;
  if (nu == 0.75) return StatParam::three_quarters;
  throw InvalidArgument("nu must be 1/4 or 3/4");
}

/// Mass and ħ are always present. The coupling α belongs to the anyon side,
/// the frequency ω to the oscillator side. Duality maps need both.
struct PhysicalParams {
  double mass = 1.0;
  double hbar = 1.0;
  std::optional<double> coupling;   // α
  std::optional<double> frequency;  // ω

  static PhysicalParams oscillator(double omega, double mu = 1.0, double hbar = 1.0) {
    return PhysicalParams{mu, hbar, std::nullopt, omega};
  }
  static PhysicalParams anyon(double alpha, double mu = 1.0, double hbar = 1.0) {
    return PhysicalParams{mu, hbar, alpha, std::nullopt};
  }
};

inline void validate_params(const PhysicalParams& p) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(p.mass)) throw InvalidArgument("mass: must be a positive finite number");
  if (!positive(p.hbar)) throw InvalidArgument("hbar: must be a positive finite number");
  if (p.coupling && !positive(*p.coupling))
    throw InvalidArgument("coupling: alpha must be a positive finite number");
  if (p.frequency && !positive(*p.frequency))
    throw InvalidArgument("frequency: omega must be a positive finite number");
}

/// Validates p and returns ω, which must be present.
inline double require_frequency(const PhysicalParams& p) {
  validate_params(p);
  if (!p.frequency) throw InvalidArgument("frequency: omega is required on the oscillator side");
  return *p.frequency;
}

/// Validates p and returns α, which must be present.
inline double require_coupling(const PhysicalParams& p) {
  validate_params(p);
  if (!p.coupling) throw InvalidArgument("coupling: alpha is required on the anyon side");
  return *p.coupling;
}

/// Quantum numbers (n, s, ν, N) with N = 2n + 2s and ν = s + 1/4.
class QuantumState {
 public:
  QuantumState(int n, Spin s) : n_(n), s_(s) {
    if (n < 0) throw InvalidArgument("n: radial index must be nonnegative");
  }

  int n() const { return n_; }
  Spin spin() const { return s_; }
  StatParam stat() const { return stat_param_for(s_); }
  double s() const { return value(s_); }
  double nu() const { return value(stat()); }
  int level() const { return 2 * n_ + twice(s_); }
  /// λ = n + ν.
  double lambda() const { return n_ + nu(); }

  friend bool operator==(const QuantumState&, const QuantumState&) = default;

 private:
  int n_;
  Spin s_;
};

inline QuantumState make_state(int n, Spin s) { return QuantumState(n, s); }
inline QuantumState make_state(int n, double s) { return QuantumState(n, spin_from_value(s)); }
inline QuantumState make_state(int n, StatParam nu) { return QuantumState(n, spin_for(nu)); }

/// Uniform grid including both endpoints.
class Grid {
 public:
  Grid(double x_min, double x_max, int count) : x_min_(x_min), x_max_(x_max), count_(count) {
    if (!(std::isfinite(x_min) && std::isfinite(x_max))) throw InvalidArgument("grid: bounds must be finite");
    if (!(x_min < x_max)) throw InvalidArgument("grid: x_min must be below x_max");
    if (count < 3) throw InvalidArgument("grid: at least 3 points required");
  }

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int size() const { return count_; }
  double step() const { return (x_max_ - x_min_) / (count_ - 1); }
  double operator[](int i) const { return i == count_ - 1 ? x_max_ : x_min_ + i * step(); }

  std::vector<double> points() const {
    std::vector<double> xs(static_cast<std::size_t>(count_));
    for (int i = 0; i < count_; ++i) xs[static_cast<std::size_t>(i)] = (*this)[i];
    return xs;
  }

 private:
  double x_min_;
  double x_max_;
  int count_;
};

enum class Source { analytic, oracle };

struct SpectrumEntry {
  int index = 0;
  double energy = 0.0;
  Source source = Source::analytic;
  double residual = 0.0;
};

template <typename Scalar>
struct WaveSample {
  double x = 0.0;
  Scalar value{};
};

struct VerificationReport {
  std::string check_name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool lower_bound = false;  // passes when residual >= tolerance (sensitivity probes)

  VerificationReport() = default;
  VerificationReport(std::string name, double res, double tol)
      : check_name(std::move(name)), residual(res), tolerance(tol), passed(std::isfinite(res) && res <= tol) {}

  static VerificationReport at_least(std::string name, double res, double floor) {
    VerificationReport r(std::move(name), res, floor);
    r.lower_bound = true;
    r.passed = std::isfinite(res) && res >= floor;
    return r;
  }
};

}  // namespace oscanyon
