#pragma once

// Closed-form relativistic corrections in reduced units.
//
// With lambda = hbar omega / (m c^2), the perturbed level is
//   E = hbar omega (eps0 + lambda eps1 + lambda^2 eps2 + ...)
// and every coefficient below is an exact rational in n, l, d.

#include "salpeter/qho_basis.hpp"

namespace salpeter {

struct CorrectionTriple {
  Rational epsilon0;
  Rational epsilon1;
  Rational epsilon2;

  friend bool operator==(const CorrectionTriple&, const CorrectionTriple&) = default;
};

/// -(1/8) [6n^2 + l^2 + 6nl + 3nd + ld + l + (d^2 + 2d)/4]
inline Rational epsilon1_general(const QuantumNumbers& q) {
  const Rational n = q.n();
  const Rational l = q.l();
  const Rational d = q.dimension();
  const Rational bracket = 6 * n * n + l * l + 6 * n * l + 3 * n * d + l * d + l + (d * d + 2 * d) / 4;
  return -bracket / 8;
}

/// The same correction written through E/hbar omega and the angular
/// eigenvalue: -(1/8) [(3/2) eps0^2 - l(l+d-2)/2 + (4d - d^2)/8].
inline Rational epsilon1_rewritten(const QuantumNumbers& q) {
  const Rational e0 = energy_unperturbed(q);
  const Rational d = q.dimension();
  const Rational bracket = Rational(3, 2) * e0 * e0 - Rational(q.angular_eigenvalue()) / 2 + (4 * d - d * d) / 8;
  return -bracket / 8;
}

inline Rational epsilon2_general(const QuantumNumbers& q) {
  const Rational n = q.n();
  const Rational l = q.l();
  const Rational d = q.dimension();
  const Rational bracket = 184 * n * n * n + 138 * n * n * d + (27 * d * d + 30 * d + 44) * n  //
                           + 8 * l * l * l + (12 * d + 30) * l * l + (6 * d * d + 30 * d + 22) * l  //
                           + 276 * n * n * l + 108 * n * l * l + (108 * d + 60) * n * l          //
                           + (d * d + Rational(15, 2) * d + 11) * d;
  return bracket / 256;
}

inline CorrectionTriple correction_triple(const QuantumNumbers& q) {
  return {energy_unperturbed(q), epsilon1_general(q), epsilon2_general(q)};
}

/// Dimension-specific forms as they are usually quoted in the literature,
/// kept verbatim so the general formulas can be checked against them.
namespace printed {

inline Rational epsilon1_d1(int N) {
  const Rational x = N;
  return -(6 * x * x + 6 * x + 3) / 32;
}

inline Rational epsilon1_d2(int n, int l) {
  const Rational a = n, b = l;
  return -(6 * a * a + b * b + 6 * a * b + 6 * a + 3 * b + 2) / 8;
}

inline Rational epsilon1_d3(int n, int l) {
  const Rational a = n, b = l;
  return -(6 * a * a + b * b + 6 * a * b + 9 * a + 4 * b + Rational(15, 4)) / 8;
}

/// First-order correction as assembled from the eta^2 recurrence.
inline Rational epsilon1_from_eta2(const Rational& n, int l_, int d_) {
  const Rational l = l_, d = d_;
  return -(6 * n * n + l * l + 6 * n * l + 3 * n * d + (1 + d) * l + d / 4 * (2 + d)) / 8;
}

inline Rational epsilon2_d1(int N) {
  const Rational x = N;
  return (46 * x * x * x + 69 * x * x + 101 * x + 39) / 512;
}

inline Rational epsilon2_d2(int n, int l) {
  const Rational a = n, b = l;
  return (184 * a * a * a + 276 * a * a + 212 * a + 8 * b * b * b + 54 * b * b + 106 * b + 276 * a * a * b +
          108 * a * b * b + 276 * a * b + 60) /
         256;
}

/// Kept as printed. Its nl coefficient is 330; the general form at d = 3 gives
/// 108 * 3 + 60 = 384, so the two differ by 54 n l / 256.
inline Rational epsilon2_d3(int n, int l) {
  const Rational a = n, b = l;
  return (184 * a * a * a + 414 * a * a + 377 * a + 8 * b * b * b + 66 * b * b + 166 * b + 276 * a * a * b +
          108 * a * b * b + 330 * a * b + Rational(255, 2)) /
         256;
}

/// Part I of the second-order correction, (1/16) <eta^3>, expanded.
inline Rational second_order_part1(const Rational& n, int l_, int d_) {
  const Rational l = l_, d = d_;
  const Rational bracket = 20 * n * n * n + 15 * n * n * d + (4 + 3 * d + 3 * d * d) * n + l * l * l +
                           Rational(3, 2) * (d + 2) * l * l + (2 + 3 * d + Rational(3, 4) * d * d) * l +
                           30 * n * n * l + 12 * n * l * l + 6 * (1 + 2 * d) * n * l + d / 8 * (8 + 6 * d + d * d);
  return bracket / 16;
}

/// Part II of the second-order correction, expanded.
inline Rational second_order_part2(const Rational& n, int l_, int d_) {
  const Rational l = l_, d = d_;
  const Rational bracket = 136 * n * n * n + 102 * n * n * d + (21 * d * d + 18 * d + 20) * n + 8 * l * l * l +
                           (12 * d + 18) * l * l + (6 * d * d + 18 * d + 10) * l + 204 * n * n * l +
                           84 * n * l * l + (84 * d + 36) * n * l + (2 * d * d + 9 * d + 10) * d / 2;
  return -bracket / 256;
}

// Two-dimensional ladder-operator results in terms of (N, m).

inline Rational first_order_2d(int N, int m) {
  const Rational x = N, y = m;
  return -(3 * x * x + 6 * x - y * y + 4) / 16;
}

inline Rational second_order_2d_part1(int N, int m) {
  const Rational x = N, y = m;
  return (5 * x * x * x + 15 * x * x - 3 * y * y - 3 * x * y * y + 22 * x + 12) / 32;
}

inline Rational second_order_2d_part2(int N, int m) {
  const Rational x = N, y = m;
  return (-17 * x * x * x - 51 * x * x + 9 * x * y * y - 70 * x + 9 * y * y - 36) / 256;
}

inline Rational second_order_2d(int N, int m) {
  const Rational x = N, y = m;
  return (23 * x * x * x + 69 * x * x - 15 * x * y * y + 106 * x - 15 * y * y + 60) / 256;
}

/// second_order_2d after N = 2n + l, m^2 = l^2.
inline Rational second_order_2d_nl(int n, int l) {
  const Rational a = n, b = l;
  return (184 * a * a * a + 276 * a * a * b + 108 * a * b * b + 8 * b * b * b + 276 * a * a + 276 * a * b +
          54 * b * b + 212 * a + 106 * b + 60) /
         256;
}

}  // namespace printed
}  // namespace salpeter
