#include <doctest.h>

#include "quantinv/evaluator.hpp"
#include "quantinv/homtor.hpp"

using namespace quantinv;

namespace {

QVec scaled_sum(const GradedAlgebra& a, const char* x, const char* y, int sign) {
  QVec v = a.element(x);
  const QVec w = a.element(y);
  for (std::size_t c = 0; c < v.size(); ++c) v[c] += sign * w[c];
  return v;
}

bool proportional(const QVec& a, const QVec& b) {
  std::optional<Rational> r;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if ((sgn(a[c]) == 0) != (sgn(b[c]) == 0)) return false;
    if (sgn(a[c]) == 0) continue;
    const Rational q = a[c] / b[c];
    if (r && *r != q) return false;
    r = q;
  }
  return r.has_value();
}

}  // namespace

TEST_CASE("graded algebras") {
  const auto a = unknot_algebra();
  CHECK(a->dim() == 4);
  CHECK(a->is_commutative());
  CHECK(a->degree(a->unit()) == 0);
  CHECK(a->radical_basis().size() == 3);
  CHECK(a->mul(a->element("y1"), a->element("y2")) == a->element("y1y2"));
  CHECK(a->render(a->mul(a->element("y1"), a->element("y1"))) == "0");
  CHECK(a->render(scaled_sum(*a, "y1", "y2", -1)) == "y1 - y2");

  // Q x Q is not local.
  std::vector<std::vector<QVec>> mult = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}};
  CHECK_THROWS_AS(GradedAlgebra({"1", "e"}, {0, 0}, mult, 0), std::invalid_argument);
  // Degree violation.
  std::vector<std::vector<QVec>> bad = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}};
  CHECK_THROWS_AS(GradedAlgebra({"1", "y"}, {0, 2}, bad, 0), std::invalid_argument);
}

TEST_CASE("graded modules") {
  const auto a = unknot_algebra();
  const auto m = unknot_module(a);
  CHECK(m.graded_dimension() == std::map<int, int>{{0, 1}, {2, 1}});
  CHECK(GradedModule::residue_field(a).graded_dimension() == std::map<int, int>{{0, 1}});
  CHECK(GradedModule::free(a, {0, 3}).graded_dimension() == std::map<int, int>{{0, 1}, {2, 2}, {3, 1}, {4, 1}, {5, 2}, {7, 1}});
  CHECK(GradedModule::quotient(a, {a->element("y1")}).graded_dimension() == std::map<int, int>{{0, 1}, {2, 1}});
  // y1 + y2 acts as zero on A/(y1+y2).
  CHECK(m.act(scaled_sum(*a, "y1", "y2", 1), QVec{1, 0}) == QVec{0, 0});
}

TEST_CASE("resolution of A/(y1+y2)") {
  const auto a = unknot_algebra();
  const auto res = minimal_resolution(unknot_module(a), 6);
  REQUIRE(res.length() == 7);
  CHECK_FALSE(res.finite);
  for (std::size_t i = 0; i < res.length(); ++i) CHECK(res.shifts(i) == std::vector<int>{-2 * static_cast<int>(i)});
  const QVec plus = scaled_sum(*a, "y1", "y2", 1), minus = scaled_sum(*a, "y1", "y2", -1);
  for (std::size_t i = 1; i < res.length(); ++i) {
    const auto& d = res.differentials[i - 1];
    CAPTURE(i);
    CHECK(proportional(d[0][0], i % 2 == 1 ? plus : minus));
  }
  CHECK(res.is_complex());
  CHECK(res.is_minimal());
}

TEST_CASE("resolution of free and residue modules") {
  const auto a = unknot_algebra();
  const auto f = minimal_resolution(GradedModule::free(a, {0, 2}), 4);
  CHECK(f.finite);
  CHECK(f.length() == 1);
  CHECK(f.shifts(0) == std::vector<int>{0, -2});

  // Tensor square of the periodic resolution of Q over Q[y]/(y^2).
  const auto k = minimal_resolution(GradedModule::residue_field(a), 4);
  REQUIRE(k.length() == 5);
  for (std::size_t i = 0; i < k.length(); ++i) {
    CHECK(k.rank(i) == i + 1);
    CHECK(k.shifts(i) == std::vector<int>(i + 1, -2 * static_cast<int>(i)));
  }
  CHECK(k.is_complex());
  CHECK(k.is_minimal());
}

TEST_CASE("Tor of A/(y1+y2) with itself") {
  const auto a = unknot_algebra();
  const auto m = unknot_module(a);
  const auto t = tor_bigraded(m, m, 9);
  CHECK(t.graded(0) == std::map<int, int>{{0, 1}, {2, 1}});
  for (int i = 1; i <= 9; ++i) {
    CAPTURE(i);
    const int j = i % 2 == 1 ? 2 * i : 2 * i + 2;
    CHECK(t.graded(i) == std::map<int, int>{{j, 1}});
  }
  CHECK(t.dim(10, 22) == 0);
  CHECK(t.to_json()["i_max"] == 9);
}

TEST_CASE("Tor properties") {
  const auto a = unknot_algebra();
  const auto m = unknot_module(a);
  const auto k = GradedModule::residue_field(a);
  const auto free = GradedModule::free(a, {0});
  const auto y1 = GradedModule::quotient(a, {a->element("y1")});

  const auto flat = tor_bigraded(free, m, 5);
  CHECK(flat.graded(0) == m.graded_dimension());
  for (int i = 1; i <= 5; ++i) CHECK(flat.graded(i).empty());
  const auto flat2 = tor_bigraded(m, free, 5);
  for (int i = 1; i <= 5; ++i) CHECK(flat2.graded(i).empty());

  CHECK(tor_bigraded(m, k, 5) == tor_bigraded(k, m, 5));
  CHECK(tor_bigraded(m, y1, 5) == tor_bigraded(y1, m, 5));
  CHECK(tor_bigraded(k, y1, 4) == tor_bigraded(y1, k, 4));

  const auto kk = tor_bigraded(k, k, 5);
  for (int i = 0; i <= 5; ++i) CHECK(kk.graded(i) == std::map<int, int>{{2 * i, i + 1}});
}

TEST_CASE("unknot Poincare series") {
  const auto [num, den] = unknot_closed_form();
  for (int t_max : {4, 7, 20}) {
    CAPTURE(t_max);
    CHECK(unknot_series(t_max) == series_from_rational(num, den, t_max));
  }
  const auto s = unknot_series(6);
  CHECK(s.coeff(-2) == LaurentPoly::q(2));
  CHECK(s.coeff(-1).is_zero());
  CHECK(s.coeff(0) == LaurentPoly(1) + LaurentPoly::q(-2));
  CHECK(s.coeff(1) == -LaurentPoly::q(-2));
  CHECK(s.coeff(2) == LaurentPoly::q(-2) + LaurentPoly::q(-6));
  CHECK(s.coeff(3) == -LaurentPoly::q(-6));
  CHECK(s.coeff(4) == LaurentPoly::q(-10));
  CHECK_THROWS_AS(unknot_series(3), std::invalid_argument);

  const auto chi = unknot_euler_characteristic();
  CHECK(chi == LaurentPoly::q(-2) + LaurentPoly(1) + LaurentPoly::q(2));
  auto a1 = std::make_shared<const CartanData>(CartanData::parse("A1"));
  const Tangle unknot(a1, {}, {{SliceKind::cup_cw, 0, Weight({2})}, {SliceKind::cap_cw, 0, {}}});
  CHECK(evaluate_closed(unknot, RibbonChoice::snyder_tingley) == chi);
}

TEST_CASE("Poincare monomials") {
  CHECK(poincare_monomial(0, 0, 0, 0) == std::pair<int, LaurentPoly>{0, LaurentPoly(1)});
  CHECK(poincare_monomial(1, 2, 0, 0) == std::pair<int, LaurentPoly>{1, -LaurentPoly::q(-2)});
  CHECK(poincare_monomial(0, 0, -2, 2) == std::pair<int, LaurentPoly>{-2, LaurentPoly::q(2)});
}
