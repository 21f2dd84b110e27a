#pragma once

// Quantum numbers, unperturbed energies and radial eigenfunctions of the
// d-dimensional isotropic oscillator in spherical coordinates.
//
// Everything is in dimensionless units hbar = m = omega = 1, so r is measured
// in sqrt(hbar / m omega), eta = r^2 and energies in hbar omega.

#include "salpeter/numeric.hpp"

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace salpeter {

/// (d, n, l) labelling an unperturbed radial eigenstate.
///
/// For d >= 2, n and l are non-negative integers. For d = 1 the only states
/// are l = 0 with n = N/2, so n is stored doubled to admit half-integers.
class QuantumNumbers {
 public:
  /// d >= 1, n >= 0, l >= 0; d = 1 requires l = 0.
  static QuantumNumbers radial(int d, int n, int l) {
    if (n < 0) throw std::domain_error("radial quantum number n must be non-negative");
    return QuantumNumbers(d, 2 * n, l);
  }

  /// d = 1 level N, i.e. l = 0 and n = N/2.
  static QuantumNumbers one_dimensional(int N) {
    if (N < 0) throw std::domain_error("level N must be non-negative");
    return QuantumNumbers(1, N, 0);
  }

  /// State of level N = 2n + l with the given l (d >= 2), or level N for d = 1.
  static QuantumNumbers from_level(int d, int N, int l) {
    if (d == 1) {
      if (l != 0) throw std::domain_error("d = 1 requires l = 0");
      return one_dimensional(N);
    }
    if (N < 0 || l < 0 || l > N || (N - l) % 2 != 0)
      throw std::domain_error("l must satisfy 0 <= l <= N with N - l even");
    return radial(d, (N - l) / 2, l);
  }

  int dimension() const { return d_; }
  int l() const { return l_; }
  int twice_n() const { return two_n_; }
  Rational n() const { return Rational(BigInt(two_n_), BigInt(2)); }
  bool has_integer_n() const { return two_n_ % 2 == 0; }
  /// N = 2n + l.
  int level() const { return two_n_ + l_; }

  /// n as an integer; only meaningful for d >= 2 (or even N when d = 1).
  int radial_index() const {
    if (!has_integer_n()) throw std::domain_error("n is a half-integer for this d = 1 state");
    return two_n_ / 2;
  }

  /// Laguerre order alpha = l + d/2 - 1.
  Rational alpha() const { return Rational(BigInt(2 * l_ + d_ - 2), BigInt(2)); }

  /// Angular eigenvalue l(l + d - 2) on the (d-1)-sphere.
  long angular_eigenvalue() const { return static_cast<long>(l_) * (l_ + d_ - 2); }

  std::string to_string() const {
    if (d_ == 1) return "(d=1, N=" + std::to_string(two_n_) + ")";
    return "(d=" + std::to_string(d_) + ", n=" + std::to_string(two_n_ / 2) + ", l=" + std::to_string(l_) + ")";
  }

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
  friend auto operator<=>(const QuantumNumbers&, const QuantumNumbers&) = default;
  friend std::ostream& operator<<(std::ostream& os, const QuantumNumbers& q) { return os << q.to_string(); }

 private:
  QuantumNumbers(int d, int two_n, int l) : d_(d), two_n_(two_n), l_(l) {
    if (d < 1) throw std::domain_error("dimension d must be at least 1");
    if (l < 0) throw std::domain_error("angular quantum number l must be non-negative");
    if (two_n < 0) throw std::domain_error("radial quantum number n must be non-negative");
    if (d == 1 && l != 0) throw std::domain_error("d = 1 requires l = 0");
    if (d >= 2 && two_n % 2 != 0) throw std::domain_error("n must be an integer for d >= 2");
  }

  int d_;
  int two_n_;
  int l_;
};

/// epsilon_0 = 2n + l + d/2 (units of hbar omega).
inline Rational energy_unperturbed(const QuantumNumbers& q) {
  return Rational(BigInt(2 * q.twice_n() + 2 * q.l() + q.dimension()), BigInt(2));
}

/// Energy of the state with the same (d, l) and radial number n + shift.
inline Rational energy_shifted(const QuantumNumbers& q, int shift) {
  return energy_unperturbed(q) + 2 * shift;
}

/// Monomial coefficients c_i of L_n^(alpha)(x) = sum c_i x^i.
inline std::vector<Rational> laguerre_coefficients(int n, const Rational& alpha) {
  if (n < 0) throw std::domain_error("Laguerre degree must be non-negative");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  // c_0 = binom(n + alpha, n)
  Rational c0 = 1;
  for (int k = 1; k <= n; ++k) c0 *= (alpha + k) / k;
  c[0] = c0;
  for (int i = 0; i < n; ++i) c[i + 1] = -c[i] * Rational(n - i) / ((i + 1) * (alpha + i + 1));
  return c;
}

/// L_n^(alpha)(x) by the three-term recurrence in n.
template <typename T>
T laguerre_eval(int n, const T& alpha, const T& x) {
  if (n < 0) return T(0);
  T prev = 1;
  if (n == 0) return prev;
  T cur = alpha + 1 - x;
  for (int k = 1; k < n; ++k) {
    T next = ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
    using std::swap;
    swap(prev, cur);
    swap(cur, next);
  }
  return cur;
}

/// Coefficients a_0..a_{i_max} of f(r) = sum a_i r^i from the two-term power
/// series recursion with a_0 = 1 and E = energy_unperturbed(q).
inline std::vector<Rational> series_coefficients(const QuantumNumbers& q, int i_max) {
  if (q.dimension() < 2) throw unsupported_dimension("series_coefficients requires d >= 2");
  if (i_max < 0) throw std::domain_error("i_max must be non-negative");
  const int d = q.dimension();
  const int l = q.l();
  const Rational two_e = 2 * energy_unperturbed(q);
  std::vector<Rational> a(static_cast<std::size_t>(i_max) + 1, Rational(0));
  a[0] = 1;
  // (i+2)(i+d+2l) a_{i+2} = ((2i + 2l + d) - 2E) a_i ; odd coefficients vanish.
  for (int i = 0; i + 2 <= i_max; i += 2)
    a[i + 2] = Rational(2 * i + 2 * l + d - two_e) / ((i + 2) * (i + d + 2 * l)) * a[i];
  return a;
}

/// A_{nl}^2 = 2 n! / Gamma(n + l + d/2), held as coefficient * pi^(power/2).
/// power is 0 for even d and -1 for odd d.
struct NormalizationSquared {
  Rational coefficient;
  int sqrt_pi_power = 0;

  Real value() const {
    Real v = to_real(coefficient);
    if (sqrt_pi_power == -1) v /= sqrt_pi();
    return v;
  }
};

inline NormalizationSquared normalization_squared(const QuantumNumbers& q) {
  if (q.dimension() < 2) throw unsupported_dimension("radial normalization requires d >= 2");
  const int n = q.radial_index();
  const long twice_gamma_arg = 2L * n + 2L * q.l() + q.dimension();  // 2 (n + l + d/2)
  const BigInt two_n_fact = 2 * factorial(n);
  if (twice_gamma_arg % 2 == 0) return {Rational(two_n_fact, factorial(twice_gamma_arg / 2 - 1)), 0};
  // Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!)
  const long k = (twice_gamma_arg - 1) / 2;
  const Rational inv_gamma_coeff(BigInt(factorial(k)) << (2 * k), factorial(2 * k));
  return {Rational(two_n_fact) * inv_gamma_coeff, -1};
}

/// u_{nl}(eta) = A eta^{(l+1)/2} e^{-eta/2} L_n^{(l+d/2-1)}(eta) with its
/// exact polynomial part.
struct RadialEigenfunction {
  QuantumNumbers q;
  std::vector<Rational> laguerre;  // coefficients in eta
  NormalizationSquared norm_squared;
  Real norm;

  Real operator()(const Real& eta) const {
    if (eta < 0) throw std::domain_error("eta must be non-negative");
    if (eta == 0) return Real(0);
    const Real alpha = to_real(q.alpha());
    return norm * pow(eta, Real(q.l() + 1) / 2) * exp(-eta / 2) * laguerre_eval(q.radial_index(), alpha, eta);
  }
};

inline RadialEigenfunction make_radial_eigenfunction(const QuantumNumbers& q) {
  if (q.dimension() < 2) throw unsupported_dimension("radial eigenfunctions are not built for d = 1");
  auto norm_sq = normalization_squared(q);
  Real norm = sqrt(norm_sq.value());
  return RadialEigenfunction{q, laguerre_coefficients(q.radial_index(), q.alpha()), std::move(norm_sq), std::move(norm)};
}

inline Real u_eval(const QuantumNumbers& q, const Real& eta) {
  if (q.dimension() < 2) throw unsupported_dimension("u_eval is not defined for d = 1");
  return make_radial_eigenfunction(q)(eta);
}

}  // namespace salpeter
