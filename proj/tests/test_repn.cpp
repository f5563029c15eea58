#include <doctest.h>

#include "oracles.hpp"
#include "quantinv/repn.hpp"

using namespace quantinv;

namespace {

struct Case {
  const char* algebra;
  std::vector<int> weight;
};

const std::vector<Case> kBattery = {
    {"A1", {0}},       {"A1", {1}},       {"A1", {2}},       {"A1", {3}},    {"A1", {4}},
    {"A2", {1, 0}},    {"A2", {0, 1}},    {"A2", {1, 1}},    {"A2", {2, 0}}, {"B2", {1, 0}},
    {"B2", {0, 1}},    {"B2", {1, 1}},    {"C2", {0, 1}},    {"G2", {1, 0}}, {"G2", {0, 1}},
    {"A3", {0, 1, 0}}, {"B3", {0, 0, 1}}, {"C3", {1, 0, 0}},
};

std::shared_ptr<const CartanData> cartan(const char* name) {
  return std::make_shared<const CartanData>(CartanData::parse(name));
}

}  // namespace

TEST_CASE("small examples") {
  auto a1 = cartan("A1");
  auto v1 = Repn::build(a1, Weight({1}));
  CHECK(v1.dim() == 2);
  CHECK(v1.multiplicities() == std::map<Weight, std::size_t>{{Weight({1}), 1}, {Weight({-1}), 1}});
  auto v2 = Repn::build(a1, Weight({2}));
  CHECK(v2.dim() == 3);
  // E F v_h = [2] v_h
  auto efv = (v2.E(0) * v2.F(0)).get(0, 0);
  CHECK(efv == quantum_integer(2));
  CHECK(Repn::build(cartan("A2"), Weight({1, 1})).dim() == 8);
  CHECK_THROWS_AS(Repn::build(a1, Weight({-1})), std::invalid_argument);
}

TEST_CASE("relations, dimensions and multiplicities against oracles") {
  for (const auto& c : kBattery) {
    auto cd = cartan(c.algebra);
    const Weight w(c.weight);
    CAPTURE(std::string(c.algebra));
    CAPTURE(w.to_string());
    auto rep = Repn::build(cd, w);
    CHECK(Rational(rep.dim()) == oracle::weyl_dimension(*cd, w));
    std::map<Weight, std::size_t> fr;
    for (const auto& [mu, m] : oracle::freudenthal(*cd, w)) fr[mu] = m;
    CHECK(rep.multiplicities() == fr);
    auto fails = relation_failures(rep);
    for (const auto& f : fails) MESSAGE(f);
    CHECK(fails.empty());
    for (std::size_t i = 0; i < cd->rank(); ++i) CHECK(rep.E(i).col(0).empty());
    CHECK(rep.spaces()[rep.space_index_of(rep.lowest_index())].dim == 1);
    // Weyl symmetry of the character
    auto mult = rep.multiplicities();
    for (const auto& [mu, m] : mult)
      for (std::size_t i = 0; i < cd->rank(); ++i) CHECK(mult[cd->reflect(i, mu)] == m);
  }
}

TEST_CASE("quantum characters") {
  auto a1 = cartan("A1");
  const auto q = [](long e) { return LaurentPoly::q(e); };
  CHECK(quantum_character(Repn::build(a1, Weight({1}))) == q(1) + q(-1));
  CHECK(quantum_character(Repn::build(a1, Weight({2}))) == q(2) + 1 + q(-2));
  CHECK(quantum_character(Repn::build(cartan("A2"), Weight({1, 0}))) == q(2) + 1 + q(-2));
  // Quantum Weyl dimension formula as independent oracle.
  for (const auto& c : kBattery) {
    auto cd = cartan(c.algebra);
    const Weight w(c.weight);
    RatFunc prod(1);
    for (const auto& r : cd->positive_roots()) {
      const Weight b = cd->from_root_coords(r);
      auto qint = [&](const Rational& x) {
        return RatFunc(LaurentPoly::q(x) - LaurentPoly::q(-x)) ;
      };
      prod *= qint(cd->pairing(w + cd->rho(), b)) / qint(cd->pairing(cd->rho(), b));
    }
    CAPTURE(std::string(c.algebra));
    CAPTURE(w.to_string());
    CHECK(RatFunc(quantum_character(Repn::build(cd, w))) == prod);
  }
}

TEST_CASE("extremal vectors") {
  auto a1 = cartan("A1");
  auto v2 = Repn::build(a1, Weight({2}));
  auto ev = extremal_vector(v2, {0});
  REQUIRE(ev.size() == 1);
  CHECK(v2.weight_of(ev[0].first) == Weight({-2}));
  auto v0 = Repn::build(a1, Weight({0}));
  CHECK(extremal_vector(v0, {0}) == SparseVec<LaurentPoly>{{0, LaurentPoly(1)}});
  auto a2 = cartan("A2");
  auto r = Repn::build(a2, Weight({1, 0}));
  auto e = extremal_vector(r, {0, 1, 0});
  CHECK(r.weight_of(e[0].first) == Weight({0, -1}));
  // Independence of the reduced word.
  CHECK(extremal_vector(r, {1, 0, 1}) == e);
  auto b2 = cartan("B2");
  for (auto w : {Weight({1, 0}), Weight({0, 1}), Weight({1, 1})}) {
    auto rb = Repn::build(b2, w);
    CHECK(extremal_vector(rb, {0, 1, 0, 1}) == extremal_vector(rb, {1, 0, 1, 0}));
  }
  auto g2 = cartan("G2");
  auto rg = Repn::build(g2, Weight({1, 0}));
  CHECK(extremal_vector(rg, {0, 1, 0, 1, 0, 1}) == extremal_vector(rg, {1, 0, 1, 0, 1, 0}));
}

TEST_CASE("literal duals satisfy the relations") {
  for (const auto& c : kBattery) {
    auto cd = cartan(c.algebra);
    const Weight w(c.weight);
    CAPTURE(std::string(c.algebra));
    CAPTURE(w.to_string());
    auto base = Repn::build(cd, w);
    auto lit = Repn::literal_dual(base);
    CHECK(lit.highest_weight() == cd->dual_weight(w));
    CHECK(lit.is_literal_dual());
    CHECK(relation_failures(lit).empty());
    CHECK(lit.multiplicities() == Repn::build(cd, cd->dual_weight(w)).multiplicities());
  }
}

TEST_CASE("dual pairing") {
  for (const auto& c : kBattery) {
    auto cd = cartan(c.algebra);
    const Weight w(c.weight);
    CAPTURE(std::string(c.algebra));
    CAPTURE(w.to_string());
    auto base = std::make_shared<const Repn>(Repn::build(cd, w));
    auto dual = std::make_shared<const Repn>(Repn::build(cd, cd->dual_weight(w)));
    auto lit = std::make_shared<const Repn>(Repn::literal_dual(*base));
    auto d = dual_repn(base, dual, lit, cd->longest_word());
    // <v_l, v_h> = 1
    LaurentPoly s;
    for (const auto& [a, x] : d.v_l) s += x * d.pairing.get(a, base->highest_index());
    CHECK(s.is_one());
    // The identification intertwines the antipode action: P^T rho*(u) = rho(S(u))^T P^T.
    auto pt = d.pairing.transpose();
    for (std::size_t i = 0; i < cd->rank(); ++i) {
      CHECK(pt * dual->E(i) == antipode_E(*base, i).transpose() * pt);
      CHECK(pt * dual->F(i) == antipode_F(*base, i).transpose() * pt);
    }
    CHECK(d.iso_from_literal * to_ratfunc(d.iso_to_literal) == SparseMatrix<RatFunc>::identity(dual->dim()));
  }
  auto a1 = cartan("A1");
  CHECK(a1->dual_weight(Weight({1})) == Weight({1}));
  auto a2 = cartan("A2");
  CHECK(a2->dual_weight(Weight({1, 0})) == Weight({0, 1}));
}

TEST_CASE("rep info report") {
  auto rep = Repn::build(cartan("A2"), Weight({1, 0}));
  auto j = rep_info_json(rep);
  CHECK(j["dim"] == 3);
  CHECK(j["weights"].size() == 3);
  CHECK(rep_info_text(rep).find("dim: 3") != std::string::npos);
}
