#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "quantinv/cli.hpp"
#include "quantinv/evaluator.hpp"

using namespace quantinv;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "quantinv");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("quantinv-" + std::to_string(::getpid()) + "-" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("ascending rendering") {
  CHECK(render_ascending(LaurentPoly::q(2) + LaurentPoly(1) + LaurentPoly::q(-2)) == "q^-2 + 1 + q^2");
  CHECK(render_ascending(-LaurentPoly::q(1) - LaurentPoly::q(-1)) == "-q^-1 - q");
  CHECK(render_ascending(LaurentPoly()) == "0");
  CHECK(render_ascending(LaurentPoly::q(3, 2) * LaurentPoly(-2)) == "-2q^(3/2)");
}

TEST_CASE("invariant command") {
  const auto unknot = write_temp("unknot.tangle", "algebra A1\ncup_cw 0 [2]\ncap_cw 0\n");
  auto r = run({"invariant", "--tangle", unknot, "--algebra", "A1", "--ribbon", "st"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "q^-2 + 1 + q^2\n");
  r = run({"invariant", "--tangle", unknot, "--algebra", "A1", "--ribbon", "standard"});
  CHECK(r.out == "q^-2 + 1 + q^2\n");

  r = run({"invariant", "--tangle", unknot, "--output", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["algebra"] == "A1");
  CHECK(j["ribbon"] == "st");
  CHECK(j["components"][0]["writhe"] == 0);
  CHECK(j["components"][0]["label"] == nlohmann::json::array({2}));
  CHECK(LaurentPoly::from_json(j["invariant"]) == LaurentPoly::q(-2) + LaurentPoly(1) + LaurentPoly::q(2));

  const auto one = write_temp("one.tangle", "algebra A1\ncup_cw 0 [1]\ncap_cw 0\n");
  r = run({"invariant", "--tangle", one, "--both"});
  CHECK(r.out == "st: -q^-1 - q\nstandard: q^-1 + q\nwrithe sign: -1\n");
  r = run({"invariant", "--tangle", one, "--both", "--output", "json"});
  const auto jb = nlohmann::json::parse(r.out);
  CHECK(jb["writhe_sign"] == -1);
  CHECK(LaurentPoly::from_json(jb["other"]["invariant"]) == LaurentPoly::q(1) + LaurentPoly::q(-1));
}

TEST_CASE("invariant command errors") {
  const auto bad = write_temp("bad.tangle", "algebra A1\ncup_cw 0 [1]\ncap_cw 0\ncross_pos 0\n");
  auto r = run({"invariant", "--tangle", bad});
  CHECK(r.code == kExitParse);
  CHECK(r.err.find("slice 3: boundary mismatch") != std::string::npos);

  CHECK(run({"invariant", "--tangle", "/nonexistent/x.tangle"}).code == kExitParse);
  const auto open = write_temp("open.tangle", "algebra A1\nbottom: [1;up]\n");
  CHECK(run({"invariant", "--tangle", open}).code == kExitValidation);
  const auto unknot = write_temp("unknot2.tangle", "algebra A1\ncup_cw 0 [2]\ncap_cw 0\n");
  CHECK(run({"invariant", "--tangle", unknot, "--algebra", "B2"}).code == kExitValidation);
  CHECK(run({"invariant", "--tangle", unknot, "--ribbon", "other"}).code == kExitValidation);
  const auto neg = write_temp("neg.tangle", "algebra A1\ncup_cw 0 [-1]\ncap_cw 0\n");
  CHECK(run({"invariant", "--tangle", neg}).code == kExitValidation);
  CHECK(run({"invariant"}).code == kExitValidation);
}

TEST_CASE("rep command") {
  auto r = run({"rep", "--algebra", "A2", "--weight", "1,0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("dim: 3") != std::string::npos);
  r = run({"rep", "--algebra", "A2", "--weight", "1,0", "--output", "json"});
  CHECK(nlohmann::json::parse(r.out)["dim"] == 3);
  CHECK(run({"rep", "--algebra", "A2", "--weight", "1"}).code == kExitValidation);
  CHECK(run({"rep", "--algebra", "A2", "--weight", "-1,0"}).code == kExitValidation);
  CHECK(run({"rep", "--algebra", "Z9", "--weight", "1"}).code == kExitValidation);
}

TEST_CASE("check command") {
  auto r = run({"check", "--suite", "yangbaxter", "--algebra", "A1", "--weights", "1;1;1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "PASS yangbaxter (1)(1)(1)\n");
  r = run({"check", "--suite", "zigzag", "--algebra", "A1", "--weight", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"check", "--suite", "relations", "--algebra", "B2", "--weights", "1,0;0,1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PASS relations (0,1)") != std::string::npos);
  r = run({"check", "--suite", "reidemeister", "--algebra", "A1", "--weight", "1", "--output", "json"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["pass"] == true);
  CHECK(run({"check", "--suite", "nope", "--algebra", "A1", "--weight", "1"}).code == kExitValidation);
  CHECK(run({"check", "--suite", "yangbaxter", "--algebra", "A1", "--weights", "1;1"}).code == kExitValidation);
}

TEST_CASE("unknot-homology command") {
  auto r = run({"unknot-homology", "--tmax", "20"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("t^-2: q^2\n") != std::string::npos);
  CHECK(r.out.find("t^0: q^-2 + 1\n") != std::string::npos);
  CHECK(r.out.find("PASS closed form through t^20") != std::string::npos);
  r = run({"unknot-homology", "--tmax", "8", "--output", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["closed_form_match"] == true);
  CHECK(run({"unknot-homology", "--tmax", "2"}).code == kExitValidation);
}
