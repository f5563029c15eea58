#include <doctest.h>

#include "quantinv/tangle.hpp"

using namespace quantinv;

namespace {

CartanPtr cartan(const char* name) { return std::make_shared<const CartanData>(CartanData::parse(name)); }

const char* kTrefoil = R"(# trefoil as a vertical twist closed on both sides
algebra A1
bottom:
cup_cw 0 [1]
cup_ccw 2 [1]
cross_pos 1
cross_pos 1
cross_pos 1
cap_cw 0
cap_ccw 0
)";

}  // namespace

TEST_CASE("parse unknot and trefoil") {
  auto u = parse_tangle("algebra A1\ncup_cw 0 [2]\ncap_cw 0\n");
  CHECK(u.closed());
  CHECK(u.slices().size() == 2);
  CHECK(u.levels()[1] == std::vector<StrandState>{{Weight({2}), Direction::up}, {Weight({2}), Direction::down}});
  auto c = trace_components(u);
  REQUIRE(c.size() == 1);
  CHECK(c.writhe[0] == 0);

  auto t = parse_tangle(kTrefoil);
  auto tc = trace_components(t);
  REQUIRE(tc.size() == 1);
  CHECK(tc.labels[0] == Weight({1}));
  CHECK(tc.writhe[0] == 3);
}

TEST_CASE("open tangle boundaries") {
  auto t = parse_tangle("algebra A2\nbottom: [1,0;up] [0,1;down]\ncross_neg 0\n");
  CHECK_FALSE(t.closed());
  CHECK(t.top() == std::vector<StrandState>{{Weight({0, 1}), Direction::down}, {Weight({1, 0}), Direction::up}});
  CHECK_THROWS_AS(trace_components(t), TangleError);
}

TEST_CASE("parse errors") {
  auto message = [](const char* text) {
    try {
      parse_tangle(text);
    } catch (const TangleError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  const auto bm = message("algebra A1\ncup_cw 0 [1]\ncap_cw 0\ncross_pos 0\n");
  CHECK(bm.find("slice 3: boundary mismatch") != std::string::npos);
  CHECK(bm.find("line 4") != std::string::npos);
  CHECK(message("algebra A1\ncup_cw 0 [1]\ncap_ccw 0\n").find("cap orientation violation at slice 2") !=
        std::string::npos);
  CHECK(message("algebra A1\ncup_cw 0 [1]\ncup_cw 2 [2]\ncap_ccw 1\n").find("different labels") != std::string::npos);
  CHECK(message("algebra A1\ncup_cw 0 [1,0]\n").find("arity") != std::string::npos);
  CHECK(message("algebra Q7\n").find("unknown algebra") != std::string::npos);
  CHECK(message("algebra A1\nfrobnicate 0\n").find("line 2: unknown directive") != std::string::npos);
  CHECK(message("algebra A1\ncup_cw 0\n").find("line 2") != std::string::npos);
  CHECK(message("algebra A1\ncap_cw x\n").find("bad position") != std::string::npos);
  CHECK(message("cup_cw 0 [1]\n").find("before 'algebra'") != std::string::npos);
  CHECK(message("algebra A1\nbottom: [1;sideways]\n").find("unknown direction") != std::string::npos);
  CHECK(message("algebra A1\nbottom: [1;up]\ncap_cw 0\n").find("slice 1: boundary mismatch") != std::string::npos);
}

TEST_CASE("render round-trip") {
  for (const char* text : {kTrefoil, "algebra B2\nbottom: [0,1;down] [1,0;up]\ncross_pos 0\ntwist_neg 1\n"}) {
    auto t = parse_tangle(text);
    auto again = parse_tangle(render(t));
    CHECK(again == t);
    CHECK(to_json(again) == to_json(t));
  }
  auto j = to_json(parse_tangle(kTrefoil));
  CHECK(j["algebra"] == "A1");
  CHECK(j["slices"].size() == 7);
  CHECK(j["slices"][0]["label"] == nlohmann::json::array({1}));
}

TEST_CASE("crossing signs") {
  CHECK(crossing_sign(SliceKind::cross_pos, Direction::up, Direction::up) == 1);
  CHECK(crossing_sign(SliceKind::cross_pos, Direction::down, Direction::down) == 1);
  CHECK(crossing_sign(SliceKind::cross_pos, Direction::up, Direction::down) == -1);
  CHECK(crossing_sign(SliceKind::cross_neg, Direction::up, Direction::up) == -1);
  CHECK(crossing_sign(SliceKind::cross_neg, Direction::down, Direction::up) == 1);
}

TEST_CASE("braid closures") {
  auto a1 = cartan("A1");
  const Weight w({1});
  auto tre = braid_closure(a1, {1, 1, 1}, {w, w});
  auto c = trace_components(tre);
  REQUIRE(c.size() == 1);
  CHECK(c.writhe[0] == 3);

  auto fig8 = braid_closure(a1, {1, -2, 1, -2}, {w, w, w});
  c = trace_components(fig8);
  REQUIRE(c.size() == 1);
  CHECK(c.writhe[0] == 0);

  auto hopf = braid_closure(a1, {1, 1}, {w, Weight({2})});
  c = trace_components(hopf);
  REQUIRE(c.size() == 2);
  CHECK(c.writhe == std::vector<int>{0, 0});
  CHECK(c.labels == std::vector<Weight>{w, Weight({2})});

  CHECK_THROWS_AS(braid_closure(a1, {1}, {w, Weight({2})}), std::invalid_argument);
  CHECK_THROWS_AS(braid_closure(a1, {2}, {w, w}), std::out_of_range);
}

TEST_CASE("moves preserve components and writhe") {
  auto a1 = cartan("A1");
  const Weight w({1});
  std::mt19937 rng(7);
  for (auto base : {parse_tangle(kTrefoil), braid_closure(a1, {1, -2, 1, -2}, {w, w, w})}) {
    const auto c0 = trace_components(base);
    auto t = base;
    for (int k = 0; k < 25; ++k) {
      t = random_move(t, rng);
      const auto c = trace_components(t);
      CHECK(c.writhe == c0.writhe);
      CHECK(c.labels == c0.labels);
    }
    CHECK(t.slices().size() > base.slices().size());
  }
}

TEST_CASE("kinks and explicit moves") {
  auto t = parse_tangle("algebra A1\ncup_cw 0 [1]\ncap_cw 0\n");
  auto k = insert_kink(t, 1, 0, true);
  CHECK(trace_components(k).writhe[0] == 1);
  CHECK(trace_components(insert_kink(k, 1, 0, false)).writhe[0] == 0);
  CHECK_THROWS_AS(insert_kink(t, 1, 1, true), std::invalid_argument);

  for (std::size_t pos : {0u, 1u})
    for (bool left : {true, false}) {
      auto s = insert_smove(t, 1, pos, left);
      CHECK(s.slices().size() == 4);
      CHECK(trace_components(s).size() == 1);
    }

  auto r = apply_riii(braid_closure(cartan("A1"), {1, 2, 1}, {Weight({1}), Weight({1}), Weight({1})}));
  REQUIRE(r.has_value());
  CHECK(r->slices()[3].pos == 1);
  CHECK(r->slices()[4].pos == 0);
  CHECK(r->slices()[5].pos == 1);
}
