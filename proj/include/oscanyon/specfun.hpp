#pragma once

// Special-function kernels: log-gamma, reciprocal gamma on the real line,
// the confluent hypergeometric function F(a, b, y) (convergent series and
// large-y expansion), associated Laguerre and Hermite polynomials.

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "oscanyon/core_model.hpp"

namespace oscanyon {

namespace detail {

// B_{2k} / (2k (2k-1)), k = 1..10.
inline constexpr std::array<double, 10> kStirlingCoefficients = {
    1.0 / 12.0,           -1.0 / 360.0,        1.0 / 1260.0,        -1.0 / 1680.0,
    1.0 / 1188.0,         -691.0 / 360360.0,   1.0 / 156.0,         -3617.0 / 122400.0,
    43867.0 / 244188.0,   -174611.0 / 125400.0};

inline constexpr double kStirlingThreshold = 8.0;

inline double stirling_log_gamma(double z) {
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double tail = 0.0;
  double power = inv;
  for (double c : kStirlingCoefficients) {
    tail += c * power;
    power *= inv2;
  }
  return (z - 0.5) * (std::log(z) - 1.0) - 0.5 + 0.5 * std::log(2.0 * std::numbers::pi) + tail;
}

/// sin(πx) with exact zeros at the integers.
inline double sin_pi(double x) {
  const double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  if (r > 0.5) return std::sin(std::numbers::pi * (1.0 - r));
  if (r < -0.5) return -std::sin(std::numbers::pi * (1.0 + r));
  return std::sin(std::numbers::pi * r);
}

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace detail

/// ln Γ(z) for z > 0.
inline double log_gamma(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw InvalidArgument("log_gamma: argument must be positive and finite");
  if (z == 1.0 || z == 2.0) return 0.0;
  if (z >= detail::kStirlingThreshold) return detail::stirling_log_gamma(z);
  double shifted = z;
  double product = 1.0;
  while (shifted < detail::kStirlingThreshold) {
    product *= shifted;
    shifted += 1.0;
  }
  return detail::stirling_log_gamma(shifted) - std::log(product);
}

/// 1/Γ(x) for any real x; zero at the poles of Γ.
inline double reciprocal_gamma(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("reciprocal_gamma: argument must be finite");
  if (x > 0.0) return std::exp(-log_gamma(x));
  if (detail::is_nonpositive_integer(x)) return 0.0;
  // Reflection: 1/Γ(x) = sin(πx) Γ(1-x) / π.
  return detail::sin_pi(x) * std::exp(log_gamma(1.0 - x)) / std::numbers::pi;
}

/// Γ(x) for real x off the poles.
inline double gamma_real(double x) {
  const double r = reciprocal_gamma(x);
  if (r == 0.0) throw InvalidArgument("gamma: pole at a nonpositive integer");
  return 1.0 / r;
}

/// Absolute defect of the Legendre duplication formula in log form.
inline double duplication_residual(double z) {
  const double lhs = log_gamma(2.0 * z);
  const double rhs = (2.0 * z - 1.0) * std::numbers::ln2 - 0.5 * std::log(std::numbers::pi) + log_gamma(z) +
                     log_gamma(z + 0.5);
  return std::abs(lhs - rhs);
}

struct KummerParams {
  double a = 0.0;
  double b = 1.0;
  double y = 0.0;
};

struct SeriesSum {
  double value = 0.0;
  int terms = 0;  // nonzero terms accumulated
};

inline constexpr int kKummerTermCap = 10'000;
inline constexpr double kKummerStagnation = 1e-17;

namespace detail {

inline void check_kummer_params(const KummerParams& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.y))
    throw InvalidArgument("kummer: a, b, y must be finite");
  if (is_nonpositive_integer(p.b)) throw InvalidArgument("kummer: b must not be a nonpositive integer");
}

// Sums 1 + (a/b) y/1! + ... in type Real. A terminating series (a = -n)
// runs to its exact zero term; otherwise the sum stops after two
// consecutive terms below the stagnation ratio.
template <typename Real>
SeriesSum sum_kummer_series(const KummerParams& p) {
  const bool terminating = is_nonpositive_integer(p.a);
  const Real a = p.a;
  const Real b = p.b;
  const Real y = p.y;
  Real term = 1;
  Real sum = 1;
  int terms = 1;
  int quiet = 0;
  for (int k = 0; k < kKummerTermCap; ++k) {
    term *= (a + k) / (b + k) * y / (k + 1);
    if (term == 0) return {static_cast<double>(sum), terms};
    sum += term;
    ++terms;
    if (terminating) continue;
    using std::abs;
    if (abs(term) < kKummerStagnation * abs(sum)) {
      if (++quiet == 2) return {static_cast<double>(sum), terms};
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("kummer_series: no convergence within " + std::to_string(kKummerTermCap) + " terms");
}

}  // namespace detail

/// Series for F(a, b, y) together with the number of nonzero terms used.
/// Alternating sums (a nonterminating series at y < 0, or a terminating one
/// at y > 0) cancel heavily and are accumulated in 50-digit arithmetic.
inline SeriesSum kummer_series_sum(const KummerParams& p) {
  detail::check_kummer_params(p);
  if (p.y == 0.0) return {1.0, 1};
  const bool terminating = detail::is_nonpositive_integer(p.a);
  if ((p.y < 0.0) != terminating) return detail::sum_kummer_series<boost::multiprecision::cpp_bin_float_50>(p);
  return detail::sum_kummer_series<double>(p);
}

inline double kummer_series(const KummerParams& p) { return kummer_series_sum(p).value; }

inline double kummer_series(double a, double b, double y) { return kummer_series({a, b, y}); }

/// Large-y expansion of F(a, b, y) for y > 0. `value` is the real part;
/// the term carrying (-y)^{-a} is evaluated on the principal branch
/// (-y) = y e^{iπ}, and its imaginary part is reported in `imag`.
struct AsymptoticValue {
  double value = 0.0;
  double imag = 0.0;
  int terms = 0;  // terms kept in the longer of the two 1/y series
};

inline constexpr double kDefaultAsymptoticThreshold = 30.0;

namespace detail {

// Σ_k (p)_k (q)_k / k! · (sign/y)^k, truncated at stagnation or at the
// smallest term.
inline SeriesSum asymptotic_tail(double p, double q, double y, double sign, int max_terms) {
  double term = 1.0;
  double sum = 1.0;
  int terms = 1;
  double previous = std::abs(term);
  for (int k = 0; terms < max_terms; ++k) {
    const double next = term * (p + k) * (q + k) / (k + 1) * sign / y;
    if (next == 0.0) break;
    if (std::abs(next) >= previous) break;  // optimal truncation
    term = next;
    sum += term;
    ++terms;
    previous = std::abs(term);
    if (previous < kKummerStagnation * std::abs(sum)) break;
  }
  return {sum, terms};
}

}  // namespace detail

/// With max_terms = 1 this is exactly the two leading terms
/// Γ(b)/Γ(b-a) (-y)^{-a} + Γ(b)/Γ(a) e^y y^{a-b}.
inline AsymptoticValue kummer_asymptotic(const KummerParams& p, double threshold = kDefaultAsymptoticThreshold,
                                         int max_terms = kKummerTermCap) {
  detail::check_kummer_params(p);
  if (!(p.y >= threshold)) throw InvalidArgument("kummer_asymptotic: y below the asymptotic threshold");
  if (max_terms < 1) throw InvalidArgument("kummer_asymptotic: max_terms must be at least 1");
  const double gamma_b = gamma_real(p.b);

  AsymptoticValue out;
  const double algebraic_weight = gamma_b * reciprocal_gamma(p.b - p.a);
  if (algebraic_weight != 0.0) {
    const auto s = detail::asymptotic_tail(p.a, p.a - p.b + 1.0, p.y, -1.0, max_terms);
    const double magnitude = algebraic_weight * std::pow(p.y, -p.a) * s.value;
    out.value += magnitude * std::cos(std::numbers::pi * p.a);
    out.imag += -magnitude * detail::sin_pi(p.a);
    out.terms = s.terms;
  }
  const double exponential_weight = gamma_b * reciprocal_gamma(p.a);
  if (exponential_weight != 0.0) {
    const auto s = detail::asymptotic_tail(1.0 - p.a, p.b - p.a, p.y, 1.0, max_terms);
    out.value += exponential_weight * std::exp(p.y + (p.a - p.b) * std::log(p.y)) * s.value;
    out.terms = std::max(out.terms, s.terms);
  }
  return out;
}

/// Associated Laguerre polynomial L_n^{(k)}(y), modern normalization
/// L_n^{(k)}(0) = C(n + k, n).
inline double laguerre(int n, double order, double y) {
  if (n < 0) throw InvalidArgument("laguerre: degree must be nonnegative");
  if (!(order > -1.0)) throw InvalidArgument("laguerre: order must exceed -1");
  double previous = 1.0;
  if (n == 0) return previous;
  double current = 1.0 + order - y;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + order - y) * current - (k + order) * previous) / (k + 1.0);
    previous = current;
    current = next;
  }
  return current;
}

/// Physicists' Hermite polynomial H_N(z).
inline double hermite(int degree, double z) {
  if (degree < 0) throw InvalidArgument("hermite: degree must be nonnegative");
  double previous = 1.0;
  if (degree == 0) return previous;
  double current = 2.0 * z;
  for (int k = 1; k < degree; ++k) {
    const double next = 2.0 * z * current - 2.0 * k * previous;
    previous = current;
    current = next;
  }
  return current;
}

/// |H_{2n+2s}(√y) - (-1)^n ((2n+2s)!/n!) (2√y)^{2s} F(-n, 2s+1/2, y)|.
inline double hermite_kummer_residual(int n, Spin s, double y) {
  if (n < 0) throw InvalidArgument("hermite_kummer_residual: n must be nonnegative");
  if (!(y > 0.0)) throw InvalidArgument("hermite_kummer_residual: y must be positive");
  const int degree = 2 * n + twice(s);
  double factorial_ratio = 1.0;  // (2n+2s)!/n!
  for (int k = n + 1; k <= degree; ++k) factorial_ratio *= k;
  const double root = std::sqrt(y);
  const double spin_factor = s == Spin::half ? 2.0 * root : 1.0;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double rhs = sign * factorial_ratio * spin_factor * kummer_series(-n, 2.0 * value(s) + 0.5, y);
  return std::abs(hermite(degree, root) - rhs);
}

}  // namespace oscanyon
