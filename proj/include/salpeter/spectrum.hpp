#pragma once

// Degeneracies, first-order level splitting, level tables, and the
// energy-level diagram model.

#include "salpeter/formulas.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace salpeter {

/// g(N, d) = binom(N + d - 1, d - 1).
inline BigInt degeneracy_total(int N, int d) {
  if (N < 0) throw std::domain_error("N must be non-negative");
  if (d < 1) throw std::domain_error("d must be at least 1");
  return binomial(N + d - 1, d - 1);
}

/// h(l, d) = (2l + d - 2)(l + d - 3)! / ((d - 2)! l!).
/// The factorials are undefined at d = 1 and at (d = 2, l = 0); both are 1.
inline BigInt degeneracy_level(int l, int d) {
  if (l < 0) throw std::domain_error("l must be non-negative");
  if (d < 1) throw std::domain_error("d must be at least 1");
  if (d == 1) {
    if (l != 0) throw std::domain_error("d = 1 admits only l = 0");
    return 1;
  }
  if (d == 2 && l == 0) return 1;
  return BigInt(2 * l + d - 2) * factorial(l + d - 3) / (factorial(d - 2) * factorial(l));
}

/// floor(N/2) + 1 distinct sub-levels at first order.
inline int split_count(int N) {
  if (N < 0) throw std::domain_error("N must be non-negative");
  return N / 2 + 1;
}

/// l = N, N-2, ..., down to 1 or 0, returned ascending.
inline std::vector<int> allowed_l(int N) {
  if (N < 0) throw std::domain_error("N must be non-negative");
  std::vector<int> ls;
  for (int l = N % 2; l <= N; l += 2) ls.push_back(l);
  return ls;
}

struct LevelRow {
  int N = 0;
  int l = 0;
  Rational eps0;
  Rational eps1;
  Rational eps2;
  Rational energy;  // eps0 + lambda eps1 + lambda^2 eps2
  BigInt degeneracy;
};

struct LevelTable {
  int d = 0;
  Rational lambda;
  int N_max = 0;
  std::vector<LevelRow> rows;  // sorted by N, then l

  /// Rows belonging to level N.
  std::vector<const LevelRow*> level(int N) const {
    std::vector<const LevelRow*> out;
    for (const auto& r : rows)
      if (r.N == N) out.push_back(&r);
    return out;
  }
};

/// Rows (N, l) for N = 0..N_max. For d = 1 every level holds a single l = 0 row.
inline LevelTable level_table(int N_max, int d, const Rational& lambda) {
  if (N_max < 0) throw std::domain_error("N_max must be non-negative");
  if (d < 1) throw std::domain_error("d must be at least 1");
  if (lambda <= 0) throw std::domain_error("lambda must be positive");
  LevelTable table{d, lambda, N_max, {}};
  for (int N = 0; N <= N_max; ++N) {
    const std::vector<int> ls = d == 1 ? std::vector<int>{0} : allowed_l(N);
    for (int l : ls) {
      const QuantumNumbers q = QuantumNumbers::from_level(d, N, l);
      const CorrectionTriple c = correction_triple(q);
      LevelRow row{N, l, c.epsilon0, c.epsilon1, c.epsilon2, c.epsilon0 + lambda * c.epsilon1 + lambda * lambda * c.epsilon2,
                   degeneracy_level(l, d)};
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

/// Charged particle in B = B0 z-hat plus E = -k z z-hat, with B0 tuned so the
/// cyclotron and axial frequencies coincide and the levels become those of
/// the 2D isotropic oscillator, E(N) = (N + 1) hbar omega, omega = sqrt(qk/m).
struct LandauAnalogue {
  double omega_1 = 0;  // axial oscillation frequency sqrt(qk/m)
  double B0_match = 0;  // sqrt(mk/q)
  double omega_c = 0;  // |q| B0_match / m
  double omega = 0;
  std::vector<double> energies;  // E(N), N = 0..N_max
  std::vector<long> degeneracies;  // N + 1
};

inline LandauAnalogue landau_analogue(double charge, double k, double mass, int N_max, double hbar = 1.0) {
  if (!(charge * k > 0)) throw std::domain_error("charge and field constant must share a sign (qk > 0)");
  if (!(mass > 0)) throw std::domain_error("mass must be positive");
  if (N_max < 0) throw std::domain_error("N_max must be non-negative");
  LandauAnalogue out;
  out.omega_1 = std::sqrt(charge * k / mass);
  out.B0_match = std::sqrt(mass * k / charge);
  out.omega_c = std::abs(charge) * out.B0_match / mass;
  out.omega = out.omega_1;
  for (int N = 0; N <= N_max; ++N) {
    out.energies.push_back((N + 1) * hbar * out.omega);
    out.degeneracies.push_back(N + 1);
  }
  return out;
}

struct DiagramSubLevel {
  int l = 0;
  double y = 0;      // baseline + exaggeration * lambda * eps1
  double shift = 0;  // lambda * eps1 (true first-order shift, hbar omega)
  BigInt degeneracy;
  std::string label;
};

struct DiagramLevel {
  int N = 0;
  double baseline = 0;  // eps0
  std::vector<DiagramSubLevel> sublevels;  // ordered by l
};

struct DiagramModel {
  int d = 0;
  double exaggeration = 0;
  std::vector<DiagramLevel> levels;

  std::size_t sublevel_count() const {
    std::size_t n = 0;
    for (const auto& lv : levels) n += lv.sublevels.size();
    return n;
  }
};

/// Schematic (not to scale): shifts are first order only and multiplied by
/// a uniform exaggeration factor, 0.1 / lambda unless given.
inline DiagramModel diagram_data(const LevelTable& table, std::optional<double> exaggeration = std::nullopt) {
  const double lambda = to_real(table.lambda).convert_to<double>();
  const double factor = exaggeration.value_or(0.1 / lambda);
  if (!(factor > 0)) throw std::domain_error("exaggeration factor must be positive");
  DiagramModel model{table.d, factor, {}};
  for (int N = 0; N <= table.N_max; ++N) {
    DiagramLevel level;
    level.N = N;
    for (const LevelRow* row : table.level(N)) {
      level.baseline = to_real(row->eps0).convert_to<double>();
      const double shift = to_real(table.lambda * row->eps1).convert_to<double>();
      level.sublevels.push_back(
          {row->l, level.baseline + factor * shift, shift, row->degeneracy, "l=" + std::to_string(row->l)});
    }
    model.levels.push_back(std::move(level));
  }
  return model;
}

}  // namespace salpeter
