// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "kauffman_oracle.hpp"
#include "quantinv/evaluator.hpp"
#include "quantinv/homtor.hpp"

using namespace quantinv;

namespace {

CartanPtr cartan(const char* name) { return std::make_shared<const CartanData>(CartanData::parse(name)); }

struct BatteryEntry {
  const char* algebra;
  std::vector<int> weight;
};

const std::vector<BatteryEntry> kBattery = {
    {"A1", {1}},    {"A1", {2}},    {"A1", {3}},    {"A1", {4}},    {"A2", {1, 0}},
    {"A2", {0, 1}}, {"A2", {1, 1}}, {"B2", {1, 0}}, {"B2", {0, 1}},
};

Tangle framed_unknot(CartanPtr cd, const Weight& w, int framing) {
  std::vector<Slice> s{{SliceKind::cup_cw, 0, w}};
  for (int k = 0; k < (framing < 0 ? -framing : framing); ++k)
    s.push_back({framing > 0 ? SliceKind::twist_pos : SliceKind::twist_neg, 0, {}});
  s.push_back({SliceKind::cap_cw, 0, {}});
  return Tangle(std::move(cd), {}, std::move(s));
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream time;
  time.precision(3);
  time << std::fixed << secs << " s";
  if (limit_s > 0) {
    time << " / limit " << limit_s << " s";
    if (secs >= limit_s) {
      o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("runtime limit exceeded");
    }
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS " : "FAIL ") << id << ": " << title << " [" << time.str() << "]"
            << (o.detail.empty() ? "" : " - " + o.detail) << std::endl;
}

}  // namespace

int main() {
  criterion(1, "A1 colour-2 unknot, ST ribbon = q^-2 + 1 + q^2", 1.0, [] {
    const auto v = evaluate_closed(framed_unknot(cartan("A1"), Weight({2}), 0), RibbonChoice::snyder_tingley);
    const auto want = LaurentPoly::q(-2) + LaurentPoly(1) + LaurentPoly::q(2);
    return Outcome{v == want, v == want ? "" : "got " + v.to_string()};
  });

  criterion(2, "unknot homology series = closed form through t^20", 5.0, [] {
    const auto [num, den] = unknot_closed_form();
    const auto got = unknot_series(20);
    const auto want = series_from_rational(num, den, 20);
    for (int k = want.t_min(); k <= 20; ++k)
      if (got.coeff(k) != want.coeff(k))
        return Outcome{false, "t^" + std::to_string(k) + ": " + got.coeff(k).to_string() + " vs " +
                                  want.coeff(k).to_string()};
    return Outcome{got == want, ""};
  });

  criterion(3, "ST / standard ratio = writhe sign formula", 0, [] {
    auto a1 = cartan("A1");
    std::vector<Tangle> links;
    for (int c : {1, 2})
      for (int f : {-1, 0, 1, 2}) links.push_back(framed_unknot(a1, Weight({c}), f));
    for (int c : {1, 2}) links.push_back(braid_closure(a1, {1, 1, 1}, {Weight({c}), Weight({c})}));
    int n = 0;
    for (const auto& t : links) {
      const auto r = st_standard_ratio(t);
      if (!r || *r != schur_sign(t)) return Outcome{false, "mismatch on\n" + render(t)};
      ++n;
    }
    return Outcome{true, std::to_string(n) + " links"};
  });

  criterion(4, "Yang-Baxter: A1 (1,1,1) (1,2,1) (2,2,2), A2 (w1,w1,w1)", 60.0, [] {
    struct Triple {
      const char* alg;
      std::vector<std::vector<int>> w;
    };
    const std::vector<Triple> triples = {{"A1", {{1}, {1}, {1}}},
                                         {"A1", {{1}, {2}, {1}}},
                                         {"A1", {{2}, {2}, {2}}},
                                         {"A2", {{1, 0}, {1, 0}, {1, 0}}}};
    for (const auto& t : triples) {
      Session s(cartan(t.alg));
      if (!yang_baxter_holds(s.irrep(Weight(t.w[0])), s.irrep(Weight(t.w[1])), s.irrep(Weight(t.w[2]))))
        return Outcome{false, std::string("fails on ") + t.alg};
    }
    return Outcome{true, ""};
  });

  criterion(5, "quantum group relations on the battery", 0, [] {
    int n = 0;
    for (const auto& b : kBattery) {
      Session s(cartan(b.algebra));
      for (bool dual : {false, true}) {
        const auto bad = relation_failures(*s.object({Weight(b.weight), dual}));
        if (!bad.empty()) return Outcome{false, std::string(b.algebra) + " " + Weight(b.weight).to_string() + ": " + bad[0]};
        ++n;
      }
    }
    return Outcome{true, std::to_string(n) + " modules"};
  });

  criterion(6, "zig-zag identities on the battery", 0, [] {
    for (const auto& b : kBattery)
      for (auto choice : {RibbonChoice::snyder_tingley, RibbonChoice::standard}) {
        Session s(cartan(b.algebra));
        const auto bad = zigzag_failures(*s.cupcap(Weight(b.weight), choice));
        if (!bad.empty()) return Outcome{false, std::string(b.algebra) + " " + Weight(b.weight).to_string() + ": " + bad[0]};
      }
    return Outcome{true, ""};
  });

  criterion(7, "random RII/RIII/S-move insertions leave invariants unchanged", 0, [] {
    auto a1 = cartan("A1");
    std::mt19937 rng(97);
    int moves = 0;
    for (int c : {1, 2}) {
      const Weight w({c});
      for (const auto& base : {braid_closure(a1, {1, 1, 1}, {w, w}), braid_closure(a1, {1, -2, 1, -2}, {w, w, w})}) {
        Tangle t = base;
        for (int k = 0; k < 10; ++k) {
          t = random_move(t, rng);
          if (!invariance_suite(base, t).equal()) return Outcome{false, "changed after\n" + render(t)};
          ++moves;
        }
      }
    }
    return Outcome{true, std::to_string(moves) + " insertions"};
  });

  criterion(8, "A1 colour-1 invariants = Kauffman bracket at A = q^(1/2)", 0, [] {
    auto a1 = cartan("A1");
    const Weight w({1});
    const std::vector<std::pair<std::string, Tangle>> links = {
        {"unknot", framed_unknot(a1, w, 0)},
        {"trefoil", braid_closure(a1, {1, 1, 1}, {w, w})},
        {"figure-eight", braid_closure(a1, {1, -2, 1, -2}, {w, w, w})}};
    for (const auto& [name, t] : links) {
      const auto bracket = oracle::kauffman_bracket(t);
      if (evaluate_closed(t, RibbonChoice::snyder_tingley) != bracket) return Outcome{false, name + " (ST)"};
      if (evaluate_closed(t, RibbonChoice::standard) != bracket * LaurentPoly(schur_sign(t)))
        return Outcome{false, name + " (standard)"};
    }
    return Outcome{true, ""};
  });

  criterion(9, "standard closed unknot = quantum character on the battery", 0, [] {
    for (const auto& b : kBattery) {
      auto cd = cartan(b.algebra);
      const Weight w(b.weight);
      if (evaluate_closed(framed_unknot(cd, w, 0), RibbonChoice::standard) != quantum_character(Repn::build(cd, w)))
        return Outcome{false, std::string(b.algebra) + " " + w.to_string()};
    }
    return Outcome{true, ""};
  });

  return failures == 0 ? 0 : 1;
}
