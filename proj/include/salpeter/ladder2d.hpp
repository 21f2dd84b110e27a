#pragma once

// Method III: polar ladder operators for the two-dimensional oscillator.
//
//   a = (a_x + i a_y)/sqrt2,  b = (a_x - i a_y)/sqrt2,  [a,a+] = [b,b+] = 1.
//
// States |N m> have N = n_a + n_b and m = n_b - n_a. Operators are formal
// sums of generator words with rational coefficients; words are applied
// right to left and kept in the order written (no implicit reordering).

#include "salpeter/qho_basis.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace salpeter {

/// Declared in normal order: creation operators before annihilators.
enum class Ladder : std::uint8_t { a_dag, b_dag, a, b };

inline bool is_raising(Ladder g) { return g == Ladder::a_dag || g == Ladder::b_dag; }

inline const char* to_string(Ladder g) {
  switch (g) {
    case Ladder::a_dag: return "a+";
    case Ladder::b_dag: return "b+";
    case Ladder::a: return "a";
    case Ladder::b: return "b";
  }
  return "?";
}

using Monomial = std::vector<Ladder>;
using Amplitude = SignedRoot;

inline std::string to_string(const Monomial& word) {
  if (word.empty()) return "1";
  std::string out;
  for (Ladder g : word) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

/// Net change of N: raising minus lowering.
inline int delta_N(const Monomial& word) {
  int dn = 0;
  for (Ladder g : word) dn += is_raising(g) ? 1 : -1;
  return dn;
}

/// Net change of m: a and b+ raise it, a+ and b lower it.
inline int delta_m(const Monomial& word) {
  int dm = 0;
  for (Ladder g : word) dm += (g == Ladder::a || g == Ladder::b_dag) ? 1 : -1;
  return dm;
}

struct LadderTerm {
  Rational coeff;
  Monomial ops;

  friend bool operator==(const LadderTerm&, const LadderTerm&) = default;
};

/// Canonical form: normal-ordered words mapped to their coefficients.
using NormalOrdered = std::map<Monomial, Rational>;

class LadderExpr {
 public:
  LadderExpr() = default;
  LadderExpr(std::initializer_list<LadderTerm> terms) {
    for (const auto& t : terms) add(t.coeff, t.ops);
  }

  static LadderExpr constant(const Rational& c) { return LadderExpr{{c, {}}}; }
  static LadderExpr word(std::initializer_list<Ladder> ops, const Rational& c = 1) {
    return LadderExpr{{c, Monomial(ops)}};
  }

  const std::vector<LadderTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const Rational& coeff, Monomial ops) {
    if (coeff != 0) terms_.push_back({coeff, std::move(ops)});
  }

  /// Terms whose net change of N equals dn.
  LadderExpr with_delta_N(int dn) const {
    LadderExpr out;
    for (const auto& t : terms_)
      if (delta_N(t.ops) == dn) out.terms_.push_back(t);
    return out;
  }

  friend LadderExpr operator+(LadderExpr x, const LadderExpr& y) {
    x.terms_.insert(x.terms_.end(), y.terms_.begin(), y.terms_.end());
    return x;
  }
  friend LadderExpr operator*(const Rational& c, LadderExpr x) {
    if (c == 0) return {};
    for (auto& t : x.terms_) t.coeff *= c;
    return x;
  }
  friend LadderExpr operator-(LadderExpr x, const LadderExpr& y) { return std::move(x) + Rational(-1) * y; }

  /// Operator product: every word of x followed by every word of y.
  friend LadderExpr operator*(const LadderExpr& x, const LadderExpr& y) {
    LadderExpr out;
    for (const auto& tx : x.terms_)
      for (const auto& ty : y.terms_) {
        Monomial ops = tx.ops;
        ops.insert(ops.end(), ty.ops.begin(), ty.ops.end());
        out.add(tx.coeff * ty.coeff, std::move(ops));
      }
    return out;
  }

  /// Reduces every word to normal order with a a+ = a+ a + 1 and
  /// b b+ = b+ b + 1; operators of different modes commute.
  NormalOrdered normal_ordered() const {
    NormalOrdered out;
    std::vector<LadderTerm> work(terms_.begin(), terms_.end());
    while (!work.empty()) {
      LadderTerm t = std::move(work.back());
      work.pop_back();
      std::size_t i = 0;
      while (i + 1 < t.ops.size() && t.ops[i] <= t.ops[i + 1]) ++i;
      if (i + 1 >= t.ops.size()) {
        out[t.ops] += t.coeff;
        continue;
      }
      const Ladder x = t.ops[i], y = t.ops[i + 1];
      if ((x == Ladder::a && y == Ladder::a_dag) || (x == Ladder::b && y == Ladder::b_dag)) {
        Monomial contracted;
        contracted.reserve(t.ops.size() - 2);
        contracted.insert(contracted.end(), t.ops.begin(), t.ops.begin() + static_cast<std::ptrdiff_t>(i));
        contracted.insert(contracted.end(), t.ops.begin() + static_cast<std::ptrdiff_t>(i) + 2, t.ops.end());
        work.push_back({t.coeff, std::move(contracted)});
      }
      std::swap(t.ops[i], t.ops[i + 1]);
      work.push_back(std::move(t));
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

 private:
  std::vector<LadderTerm> terms_;
};

inline LadderExpr commutator(const LadderExpr& x, const LadderExpr& y) { return x * y - y * x; }

/// |N m> with |m| <= N and N - m even.
struct FockState2D {
  int N = 0;
  int m = 0;

  static FockState2D make(int N, int m) {
    if (N < 0) throw std::domain_error("N must be non-negative");
    if (std::abs(m) > N || (N - m) % 2 != 0) throw std::domain_error("m must satisfy |m| <= N with N - m even");
    return {N, m};
  }

  int n_a() const { return (N - m) / 2; }
  int n_b() const { return (N + m) / 2; }
  std::string to_string() const { return "|" + std::to_string(N) + "," + std::to_string(m) + ">"; }

  friend bool operator==(const FockState2D&, const FockState2D&) = default;
  friend auto operator<=>(const FockState2D&, const FockState2D&) = default;
};

/// Target state and amplitude of a ladder action. A zero amplitude means the
/// state was annihilated; `state` then still holds the input.
struct Transition {
  FockState2D state;
  Amplitude amplitude;
};

inline Transition apply_generator(Ladder g, const FockState2D& s) {
  const int na = s.n_a(), nb = s.n_b();
  switch (g) {
    case Ladder::a:
      if (na == 0) return {s, {}};
      return {{s.N - 1, s.m + 1}, Amplitude::from_square(1, na)};
    case Ladder::b:
      if (nb == 0) return {s, {}};
      return {{s.N - 1, s.m - 1}, Amplitude::from_square(1, nb)};
    case Ladder::a_dag: return {{s.N + 1, s.m - 1}, Amplitude::from_square(1, na + 1)};
    case Ladder::b_dag: return {{s.N + 1, s.m + 1}, Amplitude::from_square(1, nb + 1)};
  }
  throw std::logic_error("unknown ladder generator");
}

/// Applies the word right to left; the amplitude is the product of the
/// individual square-root factors.
inline Transition apply_monomial(const Monomial& word, const FockState2D& s) {
  Transition t{s, Amplitude::from_square(1, 1)};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Transition step = apply_generator(*it, t.state);
    if (step.amplitude.is_zero()) return {s, {}};
    t = {step.state, t.amplitude * step.amplitude};
  }
  return t;
}

class incompatible_radicals : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// <bra|expr|ket>. Contributions reaching `bra` are sqrt-factors of
/// rationals; they are summed exactly by pulling out one common radicand, so
/// every pair must differ by a rational square factor.
inline Amplitude matrix_element(const LadderExpr& expr, const FockState2D& bra, const FockState2D& ket) {
  std::optional<Rational> radicand;
  Rational total = 0;
  for (const auto& term : expr.terms()) {
    const Transition t = apply_monomial(term.ops, ket);
    if (t.amplitude.is_zero() || t.state != bra) continue;
    if (!radicand) radicand = t.amplitude.squared;
    const auto ratio = exact_sqrt(t.amplitude.squared / *radicand);
    if (!ratio)
      throw incompatible_radicals("terms of " + bra.to_string() + " <- " + ket.to_string() +
                                  " carry incommensurate square roots");
    total += term.coeff * t.amplitude.sign * *ratio;
  }
  if (!radicand || total == 0) return {};
  return Amplitude::from_square(sign_of(total), total * total * *radicand);
}

inline Rational matrix_element_squared(const LadderExpr& expr, const FockState2D& bra, const FockState2D& ket) {
  return matrix_element(expr, bra, ket).squared;
}

/// Diagonal element; exact because every diagonal word yields a rational.
inline Rational expectation(const LadderExpr& expr, const FockState2D& s) {
  const auto v = matrix_element(expr, s, s).exact();
  if (!v) throw incompatible_radicals("diagonal element of " + s.to_string() + " is irrational");
  return *v;
}

namespace ladder_ops {

inline LadderExpr a() { return LadderExpr::word({Ladder::a}); }
inline LadderExpr a_dag() { return LadderExpr::word({Ladder::a_dag}); }
inline LadderExpr b() { return LadderExpr::word({Ladder::b}); }
inline LadderExpr b_dag() { return LadderExpr::word({Ladder::b_dag}); }

}  // namespace ladder_ops

/// p^2 / (hbar m omega) = a+a + b+b - a+b+ - ab + 1.
inline LadderExpr p2_operator() {
  using L = Ladder;
  return LadderExpr{{1, {L::a_dag, L::a}}, {1, {L::b_dag, L::b}}, {-1, {L::a_dag, L::b_dag}}, {-1, {L::a, L::b}}, {1, {}}};
}

/// p^2 assembled from the Cartesian momenta
///   p_x = i sqrt(hbar m omega)/2 (a+ + b+ - a - b),
///   p_y = - sqrt(hbar m omega)/2 (a+ - b+ + a - b),
/// so that p_x^2 = -(1/4) X^2 and p_y^2 = (1/4) Y^2.
inline LadderExpr p2_from_cartesian() {
  using namespace ladder_ops;
  const LadderExpr x = a_dag() + b_dag() - a() - b();
  const LadderExpr y = a_dag() - b_dag() + a() - b();
  return Rational(-1, 4) * (x * x) + Rational(1, 4) * (y * y);
}

/// The five blocks of p^4 / (hbar m omega)^2, grouped by the change in N.
struct P4Blocks {
  LadderExpr K0;  // dN = 0
  LadderExpr R4;  // dN = +4
  LadderExpr L4;  // dN = -4
  LadderExpr R2;  // dN = +2
  LadderExpr L2;  // dN = -2

  LadderExpr sum() const { return K0 + R4 + L4 + R2 + L2; }
  LadderExpr off_diagonal() const { return R2 + L2 + R4 + L4; }
};

inline P4Blocks p4_operators() {
  using L = Ladder;
  P4Blocks p;
  p.K0 = LadderExpr{{1, {L::a_dag, L::a, L::a_dag, L::a}},
                    {1, {L::b_dag, L::b, L::b_dag, L::b}},
                    {4, {L::a_dag, L::a, L::b_dag, L::b}},
                    {3, {L::a_dag, L::a}},
                    {3, {L::b_dag, L::b}},
                    {2, {}}};
  p.R4 = LadderExpr{{1, {L::a_dag, L::b_dag, L::a_dag, L::b_dag}}};
  p.L4 = LadderExpr{{1, {L::a, L::b, L::a, L::b}}};
  p.R2 = LadderExpr{{-2, {L::a_dag, L::a, L::a_dag, L::b_dag}}, {-2, {L::b_dag, L::b, L::a_dag, L::b_dag}}};
  p.L2 = LadderExpr{{-2, {L::a_dag, L::a, L::a, L::b}}, {-2, {L::b_dag, L::b, L::a, L::b}}, {-4, {L::a, L::b}}};
  return p;
}

/// p^4 as a flat list of terms in the order they are usually quoted.
inline LadderExpr p4_printed() {
  using L = Ladder;
  return LadderExpr{{1, {L::a_dag, L::a, L::a_dag, L::a}},
                    {1, {L::b_dag, L::b, L::b_dag, L::b}},
                    {1, {L::a_dag, L::b_dag, L::a_dag, L::b_dag}},
                    {1, {L::a, L::b, L::a, L::b}},
                    {2, {}},
                    {4, {L::a_dag, L::a, L::b_dag, L::b}},
                    {-2, {L::a_dag, L::a, L::a_dag, L::b_dag}},
                    {-2, {L::a_dag, L::a, L::a, L::b}},
                    {3, {L::a_dag, L::a}},
                    {-2, {L::b_dag, L::b, L::a_dag, L::b_dag}},
                    {-2, {L::b_dag, L::b, L::a, L::b}},
                    {3, {L::b_dag, L::b}},
                    {-4, {L::a, L::b}}};
}

/// The N-conserving part of p^6 / (hbar m omega)^3:
///   (a+a + b+b + 1) K0 - a+b+ L2 - ab R2.
inline LadderExpr p6_diagonal() {
  using L = Ladder;
  const P4Blocks p4 = p4_operators();
  const LadderExpr number_plus_one{{1, {L::a_dag, L::a}}, {1, {L::b_dag, L::b}}, {1, {}}};
  return number_plus_one * p4.K0 - LadderExpr::word({L::a_dag, L::b_dag}) * p4.L2 - LadderExpr::word({L::a, L::b}) * p4.R2;
}

namespace detail {

inline const P4Blocks& cached_p4() {
  static const P4Blocks p4 = p4_operators();
  return p4;
}

inline const LadderExpr& cached_p4_off_diagonal() {
  static const LadderExpr e = cached_p4().off_diagonal();
  return e;
}

inline const LadderExpr& cached_p6_diagonal() {
  static const LadderExpr e = p6_diagonal();
  return e;
}

}  // namespace detail

/// eps1 = -(1/8) <N m|K0|N m>, evaluated by applying K0.
inline Rational first_order_2d(const FockState2D& s) { return -expectation(detail::cached_p4().K0, s) / 8; }

/// eps2_I = (1/16) <N m|p6_0|N m>.
inline Rational second_order_2d_partI(const FockState2D& s) { return expectation(detail::cached_p6_diagonal(), s) / 16; }

/// eps2_II = (1/64) sum_{N' != N} |<N' m|R2 + L2 + R4 + L4|N m>|^2 / (N - N').
inline Rational second_order_2d_partII(const FockState2D& s) {
  Rational sum = 0;
  for (int dn : {-4, -2, 2, 4}) {
    const int target = s.N + dn;
    if (target < std::abs(s.m)) continue;
    const Rational sq = matrix_element_squared(detail::cached_p4_off_diagonal(), FockState2D{target, s.m}, s);
    sum += sq / -dn;
  }
  return sum / 64;
}

inline Rational second_order_2d(const FockState2D& s) { return second_order_2d_partI(s) + second_order_2d_partII(s); }

/// N = 2n + l, m^2 = l^2.
inline QuantumNumbers map_Nm_to_nl(const FockState2D& s) {
  const int l = std::abs(s.m);
  if ((s.N - l) % 2 != 0 || l > s.N) throw std::domain_error("state violates N - m parity");
  return QuantumNumbers::radial(2, (s.N - l) / 2, l);
}

/// Result of building |N m> from |0 0> with (a+)^{n_a} (b+)^{n_b}.
struct BuiltState {
  FockState2D state;
  /// n_a! n_b!, the squared amplitude of the bare product of raising operators.
  Rational raw_amplitude_squared;
  /// After dividing by sqrt(n_a! n_b!); always 1.
  Rational amplitude_squared;
};

inline BuiltState build_state(int N, int m) {
  const FockState2D target = FockState2D::make(N, m);
  Monomial word(static_cast<std::size_t>(target.n_a()), Ladder::a_dag);
  word.insert(word.end(), static_cast<std::size_t>(target.n_b()), Ladder::b_dag);
  const Transition t = apply_monomial(word, FockState2D{0, 0});
  if (t.state != target) throw std::logic_error("raising operators reached the wrong state");
  const Rational norm_sq = Rational(factorial(target.n_a()) * factorial(target.n_b()));
  return {t.state, t.amplitude.squared, t.amplitude.squared / norm_sq};
}

}  // namespace salpeter
