#pragma once

// Method II: the action of eta, eta^2 (and <eta^3>) on radial eigenfunctions
// through the Laguerre recurrence
//
//   eta u_{n,l} = D_{n,l} u_{n+1,l} + eps0(n) u_{n,l} + D_{n-1,l} u_{n-1,l},
//   D_{n,l} = -sqrt((n+1)(n+l+d/2)).
//
// Only D^2 ever enters an assembled quantity, so coefficients are kept as
// SignedRoot (sign and exact square). The spectral substitution
// H1' = -eta^2/8 and H2' = +eta^3/16 (reduced units) turns the corrections
// into moments and matrix elements of eta.

#include "salpeter/qho_basis.hpp"

namespace salpeter {

/// D_{n,l}^2 = (n+1)(n+l+d/2).
inline Rational coeff_D_squared(const QuantumNumbers& q) {
  const Rational n = q.n();
  return (n + 1) * (n + q.l() + Rational(q.dimension(), 2));
}

namespace detail {

/// D^2 evaluated at radial number n + shift; zero once the index is negative.
inline Rational d_squared_at(const QuantumNumbers& q, int shift) {
  const Rational n = q.n() + shift;
  if (n < 0) return 0;
  return (n + 1) * (n + q.l() + Rational(q.dimension(), 2));
}

inline SignedRoot d_at(const QuantumNumbers& q, int shift) { return SignedRoot::from_square(-1, d_squared_at(q, shift)); }

}  // namespace detail

/// eta u_n = up u_{n+1} + diag u_n + down u_{n-1}.
struct TridiagonalAction {
  QuantumNumbers q;
  SignedRoot up;
  Rational diag;
  SignedRoot down;
};

/// eta^2 u_n = up2 u_{n+2} + up1 u_{n+1} + diag u_n + down1 u_{n-1} + down2 u_{n-2}.
struct PentadiagonalAction {
  QuantumNumbers q;
  SignedRoot up2;
  SignedRoot up1;
  Rational diag;
  SignedRoot down1;
  SignedRoot down2;
};

inline TridiagonalAction eta_action(const QuantumNumbers& q) {
  return {q, detail::d_at(q, 0), energy_unperturbed(q), detail::d_at(q, -1)};
}

inline PentadiagonalAction eta2_action(const QuantumNumbers& q) {
  const SignedRoot dn = detail::d_at(q, 0);
  const SignedRoot dn1 = detail::d_at(q, 1);
  const SignedRoot dm1 = detail::d_at(q, -1);
  const SignedRoot dm2 = detail::d_at(q, -2);
  const Rational e = energy_unperturbed(q);
  return {
      q,
      dn * dn1,
      dn * SignedRoot::from_value(e + energy_shifted(q, 1)),
      dn.squared + e * e + dm1.squared,
      dm1 * SignedRoot::from_value(energy_shifted(q, -1) + e),
      dm1 * dm2,
  };
}

/// <eta^2> = D_n^2 + eps0^2 + D_{n-1}^2.
inline Rational eta2_expectation(const QuantumNumbers& q) { return eta2_action(q).diag; }

inline Rational first_order_method2(const QuantumNumbers& q) { return -eta2_expectation(q) / 8; }

/// <eta^3> = <eta u_n | eta^2 u_n>, pairing the tridiagonal and pentadiagonal actions.
inline Rational eta3_expectation(const QuantumNumbers& q) {
  const Rational e = energy_unperturbed(q);
  const Rational dn2 = detail::d_squared_at(q, 0);
  const Rational dm2 = detail::d_squared_at(q, -1);
  return dn2 * (e + energy_shifted(q, 1)) + e * (dn2 + e * e + dm2) + dm2 * (energy_shifted(q, -1) + e);
}

/// (1/16) <eta^3>.
inline Rational second_order_part1(const QuantumNumbers& q) { return eta3_expectation(q) / 16; }

/// (1/128) sum over n' = n +- 1, n +- 2 of |<u_n'|eta^2|u_n>|^2 / (n - n').
/// The unperturbed gap is E_n - E_n' = 2 (n - n') hbar omega.
inline Rational second_order_part2(const QuantumNumbers& q) {
  const PentadiagonalAction a = eta2_action(q);
  Rational sum = a.up2.squared / -2 + a.up1.squared / -1 + a.down1.squared / 1 + a.down2.squared / 2;
  return sum / 128;
}

inline Rational second_order_method2(const QuantumNumbers& q) {
  return second_order_part1(q) + second_order_part2(q);
}

}  // namespace salpeter
