#pragma once

// Method I: even radial moments <r^s> from the d-dimensional
// Kramers-Pasternak recursion, and the first-order correction built on them.
//
// Moments are in units of (hbar / m omega)^(s/2). All arithmetic is exact.

#include "salpeter/qho_basis.hpp"

#include <vector>

namespace salpeter {

struct RadialMoment {
  QuantumNumbers q;
  int power = 0;  // s in <r^s>
  Rational value;
  /// d = 1: obtained by formally setting d = 1, l = 0, n = N/2 in the
  /// recursion. The radial measure is not the 1D one, but the values agree
  /// with <x^s> of the 1D oscillator.
  bool formal = false;
};

/// <r^2> = 2n + l + d/2, from dE/domega = <dH0/domega>.
inline Rational moment_r2(const QuantumNumbers& q) { return energy_unperturbed(q); }

/// <r^0>, <r^2>, ..., <r^max_power> by forward recursion seeded with <r^0> = 1:
///
///   (2s+4) <r^{s+2}> - 2E (2s+2) <r^s>
///     + [2s (d-3+l(l+d-2)) + (s/2)(4-d-s)(4-d+s)] <r^{s-2}> = 0.
///
/// At s = 0 the <r^{-2}> term carries a factor s and drops out.
inline std::vector<Rational> radial_moment_sequence(const QuantumNumbers& q, int max_power) {
  if (max_power < 0) throw std::domain_error("negative moments are not supported");
  if (max_power % 2 != 0) throw std::domain_error("only even moments of r are supported");
  const long d = q.dimension();
  const Rational e = energy_unperturbed(q);
  const Rational centrifugal = Rational(d - 3 + q.angular_eigenvalue());
  std::vector<Rational> m(static_cast<std::size_t>(max_power / 2) + 1);
  m[0] = 1;
  for (long s = 0; s + 2 <= max_power; s += 2) {
    Rational rhs = 2 * e * (2 * s + 2) * m[s / 2];
    if (s >= 2) {
      const Rational coeff = 2 * s * centrifugal + Rational(s * (4 - d - s) * (4 - d + s), 2);
      rhs -= coeff * m[s / 2 - 1];
    }
    m[s / 2 + 1] = rhs / (2 * s + 4);
  }
  return m;
}

/// <r^power> for even power >= 0.
inline RadialMoment radial_moment(const QuantumNumbers& q, int power) {
  auto seq = radial_moment_sequence(q, power);
  return RadialMoment{q, power, std::move(seq.back()), q.dimension() == 1};
}

/// Kramers step at index s: returns <r^{s+2}>.
inline Rational moment_r_even(const QuantumNumbers& q, int s) {
  if (s < 0) throw std::domain_error("negative s would need a <r^-2> seed");
  if (s % 2 != 0) throw std::domain_error("s must be even");
  return radial_moment(q, s + 2).value;
}

/// eps1 = -(1/2) [E^2 - 2E<V> + <V^2>] with V = r^2/2, p^2 = 2(E - V).
inline Rational first_order_method1(const QuantumNumbers& q) {
  const auto moments = radial_moment_sequence(q, 4);
  const Rational e = energy_unperturbed(q);
  const Rational v = moment_r2(q) / 2;
  const Rational v2 = moments[2] / 4;
  return -(e * e - 2 * e * v + v2) / 2;
}

}  // namespace salpeter
