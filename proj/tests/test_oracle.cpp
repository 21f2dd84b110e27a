#include "salpeter/kramers.hpp"
#include "salpeter/laguerre_me.hpp"
#include "salpeter/oracle.hpp"

#include <catch_amalgamated.hpp>

#include <thread>

using namespace salpeter;

namespace {

QuantumNumbers Q(int d, int n, int l) { return QuantumNumbers::radial(d, n, l); }

bool close(const Real& got, const Real& want, double tol) {
  return abs(got - want) <= tol * std::max(Real(1), Real(abs(want)));
}

}  // namespace

TEST_CASE("Gauss-Laguerre rule integrates monomials exactly") {
  for (int twice_alpha : {0, 1, 2, 5, 12}) {
    const Rational alpha = make_rational(twice_alpha, 2);
    const auto rule = gauss_laguerre_rule(alpha, 10);
    REQUIRE(rule->size() == 10);
    for (int k = 0; k <= 19; ++k) {
      // int x^{k+alpha} e^{-x} = Gamma(k + alpha + 1)
      const Real want = gamma_half_integer(2 * k + twice_alpha + 2);
      const Real got = rule->integrate([&](const Real& x) -> Real { return pow(x, k); });
      CHECK(abs(got - want) <= Real(1e-40) * want);
    }
    for (std::size_t i = 1; i < rule->size(); ++i) CHECK(rule->nodes[i - 1] < rule->nodes[i]);
  }
  CHECK(gauss_laguerre_rule(make_rational(1, 2), 10) == gauss_laguerre_rule(make_rational(1, 2), 10));
  CHECK_THROWS_AS(build_gauss_laguerre(0, 0), std::domain_error);
  CHECK_THROWS_AS(build_gauss_laguerre(-1, 4), std::domain_error);
}

TEST_CASE("quadrature expectation values") {
  CHECK(close(quad_expectation(Q(3, 0, 0), 0), Real(1), 1e-12));
  CHECK(close(quad_expectation(Q(3, 0, 0), 2), Real(15) / 4, 1e-12));
  CHECK(close(quad_expectation(Q(2, 1, 1), 1), Real(4), 1e-12));
  CHECK(close(quad_expectation(Q(3, 0, 0), 3), to_real(eta3_expectation(Q(3, 0, 0))), 1e-12));
  CHECK(close(quad_expectation(Q(2, 0, 0), 3), Real(6), 1e-12));
  CHECK_THROWS_AS(quad_expectation(QuantumNumbers::one_dimensional(2), 1), unsupported_dimension);
}

TEST_CASE("quadrature matrix elements") {
  CHECK(close(quad_matrix_element(1, 0, 0, 3, 1), -sqrt(Real(3) / 2), 1e-12));
  CHECK(abs(quad_matrix_element(3, 0, 0, 3, 2)) < 1e-12);
  CHECK(close(quad_matrix_element(0, 0, 2, 2, 0), Real(1), 1e-12));
  // Off-diagonal eta and eta^2 elements equal the signed recurrence coefficients.
  for (int d : {2, 3, 5})
    for (int n = 0; n <= 5; ++n)
      for (int l = 0; l <= 4; ++l) {
        const auto a1 = eta_action(Q(d, n, l));
        const auto a2 = eta2_action(Q(d, n, l));
        CHECK(close(quad_matrix_element(n + 1, n, l, d, 1), a1.up.to_real(), 1e-12));
        CHECK(close(quad_matrix_element(n + 1, n, l, d, 2), a2.up1.to_real(), 1e-12));
        CHECK(close(quad_matrix_element(n + 2, n, l, d, 2), a2.up2.to_real(), 1e-12));
        CHECK(abs(quad_matrix_element(n + 3, n, l, d, 2)) < 1e-12);
        CHECK(abs(quad_matrix_element(n + 4, n, l, d, 2)) < 1e-12);
      }
}

TEST_CASE("orthonormality") {
  CHECK(orthonormality_check(0, 3, 8) <= 1e-12);
  CHECK(orthonormality_check(3, 2, 8) <= 1e-12);
  CHECK(orthonormality_check(0, 7, 5) <= 1e-12);
}

TEST_CASE("sum over states reproduces part II") {
  CHECK(close(sum_over_states_check(Q(3, 0, 0), 6), Real(-165) / 512, 1e-10));
  CHECK(close(sum_over_states_check(Q(2, 0, 0), 4), Real(-9) / 64, 1e-10));
  const Real near = sum_over_states_check(Q(3, 2, 1), 4);
  const Real far = sum_over_states_check(Q(3, 2, 1), 12);
  CHECK(abs(near - far) <= Real(1e-12) * abs(far));
  CHECK(close(far, to_real(second_order_part2(Q(3, 2, 1))), 1e-10));
  CHECK_THROWS_AS(sum_over_states_check(Q(3, 2, 1), 3), std::domain_error);
}

TEST_CASE("radial equation residual") {
  const double etas[] = {0.1, 0.5, 1.0, 1.5, 2.5, 4.0, 9.0};
  CHECK(radial_residual(Q(3, 0, 0), etas) <= 1e-10);
  CHECK(radial_residual(Q(2, 2, 1), etas) <= 1e-10);
  CHECK(radial_residual(Q(3, 1, 1), etas) <= 1e-10);  // 2.5 is a node of this state
  CHECK(radial_residual(Q(3, 0, 0), etas, Real(1) / 10) > 1e-3);
  CHECK(radial_residual(Q(5, 3, 2), etas, Real(1) / 10) > 1e-3);
  const double bad[] = {0.0};
  CHECK_THROWS_AS(radial_residual(Q(3, 0, 0), bad), std::domain_error);
}

TEST_CASE("rule cache is safe under concurrent use") {
  std::vector<std::thread> pool;
  std::vector<Real> results(4);
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([t, &results] { results[t] = quad_expectation(Q(5, 3, 2), 4 + (t % 2)); });
  for (auto& th : pool) th.join();
  CHECK(results[0] == results[2]);
  CHECK(results[1] == results[3]);
  CHECK(close(results[0], to_real(radial_moment(Q(5, 3, 2), 8).value), 1e-12));
}

TEST_CASE("higher working precision tightens agreement") {
  const unsigned before = working_digits();
  set_working_digits(100);
  const Real v = quad_expectation(Q(3, 4, 3), 6);
  CHECK(abs(v - to_real(radial_moment(Q(3, 4, 3), 12).value)) < Real(1e-80) * v);
  set_working_digits(before);
}
