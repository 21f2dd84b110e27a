#pragma once

// Independent numerical checks in extended precision: generalized
// Gauss-Laguerre quadrature of radial matrix elements, orthonormality, the
// sum-over-states form of the second-order correction, and radial-equation
// residuals of the eigenfunctions.
//
// With eta = r^2 the radial measure u f u r^{d-3} dr becomes
//   (A^2 / 2) eta^alpha e^{-eta} L_n^alpha(eta)^2 f deta,  alpha = l + d/2 - 1,
// so every matrix element of a power of eta is a polynomial integral against
// the Laguerre weight and the rule below is exact for it.

#include "salpeter/qho_basis.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace salpeter {

/// Gauss rule for the weight x^alpha e^{-x} on [0, inf); exact for
/// polynomials of degree <= 2 size() - 1.
struct QuadratureRule {
  Rational alpha;
  std::vector<Real> nodes;
  std::vector<Real> weights;

  std::size_t size() const { return nodes.size(); }

  template <typename F>
  Real integrate(F&& f) const {
    Real sum = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

namespace detail {

/// Eigenvalues of a symmetric tridiagonal matrix by implicit QL with
/// Wilkinson shifts, tracking only the first component of each eigenvector.
/// diag has size n; offdiag[i] couples rows i and i+1 (size n-1).
inline void tridiagonal_ql(std::vector<Real>& diag, std::vector<Real> offdiag, std::vector<Real>& first_row) {
  const int n = static_cast<int>(diag.size());
  offdiag.resize(static_cast<std::size_t>(n), Real(0));
  first_row.assign(static_cast<std::size_t>(n), Real(0));
  if (n == 0) return;
  first_row[0] = 1;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const Real dd = abs(diag[m]) + abs(diag[m + 1]);
        if (abs(offdiag[m]) + dd == dd) break;
      }
      if (m == l) break;
      if (++iter > 200) throw std::runtime_error("tridiagonal QL failed to converge");
      Real g = (diag[l + 1] - diag[l]) / (2 * offdiag[l]);
      Real r = sqrt(g * g + 1);
      g = diag[m] - diag[l] + offdiag[l] / (g + (g >= 0 ? r : Real(-r)));
      Real s = 1, c = 1, p = 0;
      int i;
      bool deflated = false;
      for (i = m - 1; i >= l; --i) {
        Real f = s * offdiag[i];
        const Real b = c * offdiag[i];
        r = sqrt(f * f + g * g);
        offdiag[i + 1] = r;
        if (r == 0) {
          diag[i + 1] -= p;
          offdiag[m] = 0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = diag[i + 1] - p;
        r = (diag[i] - g) * s + 2 * c * b;
        p = s * r;
        diag[i + 1] = g + p;
        g = c * r - b;
        f = first_row[i + 1];
        first_row[i + 1] = s * first_row[i] + c * f;
        first_row[i] = c * first_row[i] - s * f;
      }
      if (deflated) continue;
      diag[l] -= p;
      offdiag[l] = g;
      offdiag[m] = 0;
    } while (m != l);
  }
}

}  // namespace detail

/// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
/// monic generalized Laguerre polynomials (diagonal 2k + alpha + 1,
/// off-diagonal sqrt(k (k + alpha))); weights are Gamma(alpha + 1) times the
/// squared first eigenvector components.
inline QuadratureRule build_gauss_laguerre(const Rational& alpha, int count) {
  if (count < 1) throw std::domain_error("quadrature rule needs at least one node");
  if (alpha <= -1) throw std::domain_error("Laguerre weight requires alpha > -1");
  const Real a = to_real(alpha);
  std::vector<Real> diag(static_cast<std::size_t>(count)), off(static_cast<std::size_t>(count - 1)), first;
  for (int k = 0; k < count; ++k) diag[k] = 2 * k + a + 1;
  for (int k = 1; k < count; ++k) off[k - 1] = sqrt(k * (k + a));
  detail::tridiagonal_ql(diag, std::move(off), first);

  // Gamma(alpha + 1) for integer or half-integer alpha.
  const Rational twice = 2 * (alpha + 1);
  Real mu0;
  if (boost::multiprecision::denominator(twice) == 1) {
    mu0 = gamma_half_integer(boost::multiprecision::numerator(twice).convert_to<long>());
  } else {
    mu0 = boost::multiprecision::tgamma(a + 1);
  }

  std::vector<std::size_t> order(static_cast<std::size_t>(count));
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });
  QuadratureRule rule{alpha, {}, {}};
  for (std::size_t i : order) {
    rule.nodes.push_back(diag[i]);
    rule.weights.push_back(mu0 * first[i] * first[i]);
  }
  return rule;
}

/// Memoized rules keyed by (alpha, node count, working precision).
/// Concurrent readers share the cache; construction takes the write lock.
inline std::shared_ptr<const QuadratureRule> gauss_laguerre_rule(const Rational& alpha, int count) {
  using Key = std::tuple<std::string, int, unsigned>;
  static std::shared_mutex mutex;
  static std::map<Key, std::shared_ptr<const QuadratureRule>> cache;
  const Key key{to_pq(alpha), count, working_digits()};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(build_gauss_laguerre(alpha, count));
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(rule)).first->second;
}

/// Relative tolerance at which the two rules of a converged quadrature agree.
inline constexpr double kQuadratureAgreement = 1e-14;

namespace detail {

inline Real quad_eta_power(int n1, int n2, int l, int d, int s) {
  if (d < 2) throw unsupported_dimension("quadrature oracle requires d >= 2");
  if (s < 0) throw std::domain_error("power of eta must be non-negative");
  const QuantumNumbers q1 = QuantumNumbers::radial(d, n1, l);
  const QuantumNumbers q2 = QuantumNumbers::radial(d, n2, l);
  const Rational alpha = q1.alpha();
  const Real a = to_real(alpha);
  const Real prefactor = sqrt(normalization_squared(q1).value() * normalization_squared(q2).value()) / 2;
  auto integrand = [&](const Real& x) -> Real { return pow(x, s) * laguerre_eval(n1, a, x) * laguerre_eval(n2, a, x); };

  const int top = std::max(n1, n2);
  const auto coarse = gauss_laguerre_rule(alpha, top + s + 2);
  const auto fine = gauss_laguerre_rule(alpha, 2 * (top + s) + 8);
  const Real v1 = prefactor * coarse->integrate(integrand);
  const Real v2 = prefactor * fine->integrate(integrand);
  // Values that vanish exactly only agree to the rounding floor of the sum,
  // i.e. working epsilon (with margin) times sum |w f|.
  const Real scale = prefactor * coarse->integrate([&](const Real& x) -> Real { return abs(integrand(x)); });
  const Real floor = scale * pow(Real(10), -static_cast<int>(working_digits()) + 10);
  if (abs(v1 - v2) > kQuadratureAgreement * std::max(abs(v1), abs(v2)) + floor)
    throw std::runtime_error("quadrature did not converge for eta^" + std::to_string(s) + " between n=" +
                             std::to_string(n1) + " and n=" + std::to_string(n2));
  return v2;
}

}  // namespace detail

/// <u_{n1,l}| eta^s |u_{n2,l}> in dimensionless units.
inline Real quad_matrix_element(int n1, int n2, int l, int d, int s) { return detail::quad_eta_power(n1, n2, l, d, s); }

/// <eta^s> = <r^{2s}>.
inline Real quad_expectation(const QuantumNumbers& q, int s) {
  if (q.dimension() < 2) throw unsupported_dimension("quadrature oracle requires d >= 2");
  const int n = q.radial_index();
  return detail::quad_eta_power(n, n, q.l(), q.dimension(), s);
}

/// max_{n1,n2 <= n_max} |<u_n1|u_n2> - delta|.
inline Real orthonormality_check(int l, int d, int n_max) {
  Real worst = 0;
  for (int n1 = 0; n1 <= n_max; ++n1)
    for (int n2 = n1; n2 <= n_max; ++n2) {
      const Real overlap = quad_matrix_element(n1, n2, l, d, 0);
      worst = std::max(worst, Real(abs(overlap - (n1 == n2 ? 1 : 0))));
    }
  return worst;
}

/// (1/128) sum_{n' <= n_cutoff, n' != n} <u_n'|eta^2|u_n>^2 / (n - n'), with
/// every matrix element from quadrature.
inline Real sum_over_states_check(const QuantumNumbers& q, int n_cutoff) {
  if (q.dimension() < 2) throw unsupported_dimension("quadrature oracle requires d >= 2");
  const int n = q.radial_index();
  if (n_cutoff < n + 2) throw std::domain_error("cutoff must reach at least n + 2");
  Real sum = 0;
  for (int np = 0; np <= n_cutoff; ++np) {
    if (np == n) continue;
    const Real me = quad_matrix_element(np, n, q.l(), q.dimension(), 2);
    sum += me * me / (n - np);
  }
  return sum / 128;
}

/// Largest residual of
///   u'' = [(r^2 - 2E) + (d - 3 + l(l+d-2)) / r^2] u - (d - 3)/r u'
/// over the sample points, each normalized by its largest term or piece. Derivatives
/// are analytic, with dL_n^a/dx = -L_{n-1}^{a+1}. energy_offset perturbs E to
/// show the check has teeth.
inline Real radial_residual(const QuantumNumbers& q, std::span<const double> sample_etas,
                            const Real& energy_offset = Real(0)) {
  if (q.dimension() < 2) throw unsupported_dimension("radial residual requires d >= 2");
  const RadialEigenfunction u = make_radial_eigenfunction(q);
  const int n = q.radial_index();
  const int l = q.l();
  const int d = q.dimension();
  const Real a = to_real(q.alpha());
  const Real energy = to_real(energy_unperturbed(q)) + energy_offset;
  const Real centrifugal = Real(d - 3 + q.angular_eigenvalue());

  Real worst = 0;
  for (double eta_d : sample_etas) {
    if (!(eta_d > 0)) throw std::domain_error("sample points must be positive");
    const Real eta = Real(eta_d);
    const Real r = sqrt(eta);
    const Real lag = laguerre_eval(n, a, eta);
    const Real lag1 = -laguerre_eval(n - 1, Real(a + 1), eta);
    const Real lag2 = laguerre_eval(n - 2, Real(a + 2), eta);

    // u = A P G F with P = r^{l+1}, G = e^{-r^2/2}, F = L(r^2).
    const Real P = pow(r, l + 1);
    const Real P1 = (l + 1) * pow(r, l);
    const Real P2 = l == 0 ? Real(0) : Real((l + 1) * l * pow(r, l - 1));
    const Real G = exp(-eta / 2);
    const Real G1 = -r * G;
    const Real G2 = (eta - 1) * G;
    const Real F = lag;
    const Real F1 = 2 * r * lag1;
    const Real F2 = 2 * lag1 + 4 * eta * lag2;

    const Real u0 = u.norm * P * G * F;
    const Real u1 = u.norm * (P1 * G * F + P * G1 * F + P * G * F1);
    const Real u2 = u.norm * (P2 * G * F + P * G2 * F + P * G * F2 + 2 * (P1 * G1 * F + P1 * G * F1 + P * G1 * F1));

    const Real t_pot = (eta - 2 * energy) * u0;
    const Real t_cent = centrifugal / eta * u0;
    const Real t_first = (d - 3) / r * u1;
    const Real residual = u2 - t_pot - t_cent + t_first;
    // u'' summed from its pieces can cancel to rounding level at a node, so
    // the pieces set the scale too.
    const Real u2_pieces = abs(u.norm) * (abs(P2 * G * F) + abs(P * G2 * F) + abs(P * G * F2) +
                                          2 * (abs(P1 * G1 * F) + abs(P1 * G * F1) + abs(P * G1 * F1)));
    const Real scale = std::max<Real>({u2_pieces, abs(t_pot), abs(t_cent), abs(t_first)});
    if (scale == 0) continue;
    worst = std::max(worst, Real(abs(residual) / scale));
  }
  return worst;
}

}  // namespace salpeter
