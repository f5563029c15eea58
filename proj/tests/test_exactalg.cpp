#include <doctest.h>

#include <random>

#include "quantinv/exactalg.hpp"

using namespace quantinv;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int den) {
  std::uniform_int_distribution<int> n_terms(0, 4), expo(-6, 6), coef(-3, 3);
  std::vector<LaurentPoly::Term> t;
  for (int k = n_terms(rng); k > 0; --k) t.emplace_back(expo(rng), Integer(coef(rng)));
  return LaurentPoly::from_terms(den, t);
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  const auto q = LaurentPoly::q();
  const auto qi = LaurentPoly::q(-1);
  CHECK((q + qi) * (q + qi) == LaurentPoly::q(2) + 2 + LaurentPoly::q(-2));
  auto a = LaurentPoly::q(3, 2) - 4;
  CHECK(a * 1 == a);
  CHECK(LaurentPoly::q(1, 2) * LaurentPoly::q(1, 2) == q);
  CHECK((LaurentPoly::q(1, 2) * LaurentPoly::q(1, 2)).denom() == 1);
  CHECK((a - a).is_zero());
}

TEST_CASE("bar involution") {
  auto a = LaurentPoly::q(2) + LaurentPoly::monomial(3, -1);
  CHECK(a.bar() == LaurentPoly::q(-2) + LaurentPoly::monomial(3, 1));
  CHECK(LaurentPoly(5).bar() == LaurentPoly(5));
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    auto x = random_poly(rng, 1 + k % 3), y = random_poly(rng, 2);
    CHECK(x.bar().bar() == x);
    CHECK((x * y).bar() == x.bar() * y.bar());
    CHECK((x + y).bar() == x.bar() + y.bar());
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    auto a = random_poly(rng, 1), b = random_poly(rng, 2), c = random_poly(rng, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(3, 1) == LaurentPoly::q(2) + 1 + LaurentPoly::q(-2));
  CHECK(quantum_integer(0, 1).is_zero());
  CHECK(quantum_integer(1, 1).is_one());
  CHECK(quantum_integer(2, 2) == LaurentPoly::q(2) + LaurentPoly::q(-2));
  CHECK(quantum_integer(-2, 1) == -quantum_integer(2, 1));
}

TEST_CASE("quantum binomials are positive laurent polynomials") {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 7; ++n)
      for (int k = 0; k <= n; ++k) {
        auto b = quantum_binomial(n, k, d);
        CHECK(b * quantum_factorial(k, d) * quantum_factorial(n - k, d) == quantum_factorial(n, d));
        for (const auto& [e, c] : b.terms()) CHECK(c > 0);
        CHECK(b.at_one() == Integer(mpz_class(1)) * [&] {
          mpz_class r;
          mpz_bin_uiui(r.get_mpz_t(), n, k);
          return r;
        }());
      }
}

TEST_CASE("exact division") {
  auto a = quantum_integer(6, 1);
  auto b = quantum_integer(2, 1);
  auto r = LaurentPoly::divide_exact(a, b);
  REQUIRE(r);
  CHECK(*r * b == a);
  CHECK_FALSE(LaurentPoly::divide_exact(quantum_integer(3, 1), b));
}

TEST_CASE("rendering") {
  CHECK((LaurentPoly::q(2) + 1 + LaurentPoly::q(-2)).to_string() == "q^2 + 1 + q^-2");
  CHECK(LaurentPoly::monomial(-1, 3, 2).to_string() == "-q^(3/2)");
  CHECK(LaurentPoly().to_string() == "0");
  auto x = LaurentPoly::q(3, 2) - LaurentPoly::monomial(2, -1);
  CHECK(LaurentPoly::from_json(x.to_json()) == x);
}

TEST_CASE("ratfunc normal form") {
  const RatFunc q = LaurentPoly::q();
  RatFunc a = (q * q - 1) / (q - 1);
  CHECK(a.is_laurent());
  CHECK(*a.to_laurent() == LaurentPoly::q() + 1);
  RatFunc b = RatFunc(1) / (q + 1);
  CHECK_FALSE(b.is_laurent());
  CHECK(b * (q + 1) == RatFunc(1));
  CHECK(b + b == RatFunc(2) / (q + 1));
  CHECK(RatFunc(LaurentPoly::q(-3)).inverse() == RatFunc(LaurentPoly::q(3)));
  RatFunc c = RatFunc(LaurentPoly::q(1, 2)) / (q - LaurentPoly::q(-1));
  CHECK(c.bar() == RatFunc(LaurentPoly::q(-1, 2)) / (LaurentPoly::q(-1) - q));
  CHECK(c * c.inverse() == RatFunc(1));
}

TEST_CASE("series from rational") {
  const auto q = [](long e) { return LaurentPoly::q(e); };
  TPoly num{{0, q(-2)}, {1, -q(-2)}};
  TPoly den{{0, LaurentPoly(1)}, {2, -q(-4)}};
  auto s = series_from_rational(num, den, 4);
  CHECK(s.coeff(0) == q(-2));
  CHECK(s.coeff(1) == -q(-2));
  CHECK(s.coeff(2) == q(-6));
  CHECK(s.coeff(3) == -q(-6));
  CHECK(s.coeff(4) == q(-10));
  CHECK_THROWS_AS(s.coeff(5), std::out_of_range);

  auto g = series_from_rational({{0, 1}}, {{0, 1}, {1, -1}}, 2);
  CHECK(g.coeff(0).is_one());
  CHECK(g.coeff(1).is_one());
  CHECK(g.coeff(2).is_one());

  auto p = series_from_rational({{-2, q(1)}}, {{0, 1}}, 0);
  CHECK(p.t_min() == -2);
  CHECK(p.coeff(-2) == q(1));
  CHECK(p.coeff(0).is_zero());

  CHECK_THROWS_AS(series_from_rational({{0, 1}}, {{0, q(1) + 1}}, 3), std::invalid_argument);
}

TEST_CASE("series times denominator recovers numerator") {
  std::mt19937 rng(5);
  for (int k = 0; k < 20; ++k) {
    TPoly num, den{{0, LaurentPoly::q(k % 3 - 1)}};
    for (int j = 0; j < 3; ++j) num[j] = random_poly(rng, 1);
    for (int j = 1; j < 3; ++j) den[j] = random_poly(rng, 1);
    const int n = 8;
    auto s = series_from_rational(num, den, n);
    TPoly st(s.coeffs().begin(), s.coeffs().end());
    auto prod = tpoly_mul(st, den);
    for (int j = 0; j <= n; ++j) {
      LaurentPoly lhs = prod.count(j) ? prod[j] : LaurentPoly();
      LaurentPoly rhs = num.count(j) ? num[j] : LaurentPoly();
      CHECK(lhs == rhs);
    }
  }
}
