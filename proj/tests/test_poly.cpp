#include <doctest.h>

#include "poly.hpp"

using namespace rw;

TEST_SUITE("poly") {

TEST_CASE("q integers and factorials") {
  CHECK(q_int(4).coeffs() == std::vector<i64>{1, 1, 1, 1});
  CHECK(q_int(0).is_zero());
  CHECK(q_factorial(0) == QPoly::constant(1));
  CHECK(q_factorial(1) == QPoly::constant(1));
  CHECK(q_factorial(3).coeffs() == std::vector<i64>{1, 2, 2, 1});
  CHECK_THROWS_AS(q_int(-1), std::invalid_argument);
  CHECK_THROWS_AS(q_factorial(-2), std::invalid_argument);
}

TEST_CASE("qpoly arithmetic trims and stays exact") {
  const QPoly a({1, 2, 0, 0});
  CHECK(a.degree() == 1);
  CHECK((a + QPoly({0, -2})).coeffs() == std::vector<i64>{1});
  CHECK((q_int(2) * q_int(2)).coeffs() == std::vector<i64>{1, 2, 1});
  CHECK(q_int(3).eval_ones() == 3);
  CHECK(QPoly().str() == "0");
  CHECK(q_factorial(3).str() == "1 + 2q + 2q^2 + q^3");
}

TEST_CASE("multivariate polynomials") {
  const Polynomial x1 = Polynomial::variable(1), x2 = Polynomial::variable(2);
  const Polynomial f = x1 * x1 * x2 + Polynomial::constant(1);
  CHECK(f.eval_ones() == 2);
  CHECK(f.terms().size() == 2);
  CHECK((f + Polynomial::monomial({2, 1}, -1)) == Polynomial::constant(1));
  CHECK(Polynomial::monomial({1, 0, 0}) == x1);  // exponents trimmed
  CHECK_THROWS_AS(Polynomial::monomial({-1}), std::invalid_argument);
}

TEST_CASE("principal specialization") {
  CHECK(principal_specialization(Polynomial::monomial({2, 1})).coeffs() ==
        std::vector<i64>{0, 1});  // x1^2 x2 -> q
  CHECK(principal_specialization(Polynomial::constant(1)) == QPoly::constant(1));
  Polynomial schub;  // x1^2x2 + x1^2x3 + x1x2^2 + x1x2x3 + x2^2x3
  schub += Polynomial::monomial({2, 1});
  schub += Polynomial::monomial({2, 0, 1});
  schub += Polynomial::monomial({1, 2});
  schub += Polynomial::monomial({1, 1, 1});
  schub += Polynomial::monomial({0, 2, 1});
  CHECK(principal_specialization(schub).coeffs() == std::vector<i64>{0, 1, 2, 1, 1});
}

TEST_CASE("overflow is an error, not a wrap") {
  const i64 big = 5000000000000000000LL;
  CHECK_THROWS_AS(checked_mul(big, 4), std::overflow_error);
  CHECK_THROWS_AS(checked_add(big, big), std::overflow_error);
  CHECK(checked_mul(1 << 20, 1 << 20) == (1LL << 40));
}

}  // TEST_SUITE
