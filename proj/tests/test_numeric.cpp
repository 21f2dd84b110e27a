#include "salpeter/numeric.hpp"

#include <catch_amalgamated.hpp>

#include <boost/math/special_functions/gamma.hpp>

#include <random>

using namespace salpeter;

TEST_CASE("rationals render as p/q with the /1 kept") {
  CHECK(to_pq(make_rational(-15, 32)) == "-15/32");
  CHECK(to_pq(make_rational(6, 4)) == "3/2");
  CHECK(to_pq(Rational(7)) == "7/1");
  CHECK(to_pq(Rational(0)) == "0/1");
}

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(parse_rational("1/1000") == make_rational(1, 1000));
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(parse_rational("42") == Rational(42));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("0.001") == make_rational(1, 1000));
  CHECK(parse_rational("-2.5e-3") == make_rational(-1, 400));
  CHECK(parse_rational("1.5E2") == Rational(150));
  CHECK(parse_rational(".25") == make_rational(1, 4));
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "e5", "1e", "--1", "1/2/3"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("parse_rational inverts to_pq") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    const Rational q = make_rational(num(rng), den(rng));
    CHECK(parse_rational(to_pq(q)) == q);
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(factorial(25).str() == "15511210043330985984000000");
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
  for (long n = 1; n < 40; ++n)
    for (long k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("gamma at half-integers matches the library gamma") {
  for (long twice = 1; twice < 60; ++twice) {
    const Real mine = gamma_half_integer(twice);
    const Real ref = boost::math::tgamma(Real(twice) / 2);
    CHECK(abs(mine - ref) / ref < Real(1e-40));
  }
  CHECK_THROWS_AS(gamma_half_integer(0), std::domain_error);
}

TEST_CASE("exact square roots") {
  CHECK(exact_sqrt(make_rational(9, 4)) == make_rational(3, 2));
  CHECK_FALSE(exact_sqrt(make_rational(3, 2)).has_value());
  CHECK_FALSE(exact_sqrt(make_rational(-4, 1)).has_value());
}

TEST_CASE("SignedRoot keeps sign and squared magnitude") {
  const SignedRoot a = SignedRoot::from_square(-1, make_rational(3, 2));
  CHECK(a.sign == -1);
  CHECK_FALSE(a.exact().has_value());
  CHECK(abs(a.to_real() + sqrt(Real(1.5))) < Real(1e-45));
  const SignedRoot b = a * a;
  CHECK(b.exact() == make_rational(3, 2));
  CHECK(SignedRoot::from_value(make_rational(-5, 3)).exact() == make_rational(-5, 3));
  CHECK(SignedRoot::from_square(1, 0).is_zero());
  CHECK_THROWS_AS(SignedRoot::from_square(1, -1), std::domain_error);
  CHECK_THROWS_AS(SignedRoot::from_square(0, 2), std::domain_error);
}

TEST_CASE("working precision is configurable with a floor") {
  const unsigned before = working_digits();
  set_working_digits(80);
  CHECK(working_digits() == 80);
  CHECK(Real(1).precision() == 80);
  CHECK_THROWS_AS(set_working_digits(10), std::invalid_argument);
  set_working_digits(before);
}
