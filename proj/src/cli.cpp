#include "quantinv/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "quantinv/evaluator.hpp"
#include "quantinv/homtor.hpp"

namespace quantinv {

namespace {

CartanPtr make_cartan(const LieType& t) { return std::make_shared<const CartanData>(t); }

std::vector<Weight> parse_weights(const std::string& list, std::size_t rank) {
  std::vector<Weight> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ';');) {
    if (item.empty()) continue;
    Weight w = Weight::parse(item);
    if (w.rank() != rank) throw ValidationError("weight " + item + " has the wrong number of coordinates");
    if (!w.is_dominant()) throw ValidationError("weight " + item + " is not dominant");
    out.push_back(std::move(w));
  }
  if (out.empty()) throw ValidationError("no weights given");
  return out;
}

std::string render_label(const Weight& w) { return "(" + w.to_string() + ")"; }

}  // namespace

std::string render_ascending(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : p.terms()) {
    const std::string m = LaurentPoly::monomial(c, k, p.denom()).to_string();
    if (s.empty()) s = m;
    else if (m[0] == '-') s += " - " + m.substr(1);
    else s += " + " + m;
  }
  return s;
}

int cmd_invariant(const Config& cfg, const std::string& tangle_path, bool both, std::ostream& out, std::ostream& err) {
  std::ifstream in(tangle_path);
  if (!in) {
    err << "error: cannot read " << tangle_path << "\n";
    return kExitParse;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const Tangle t = parse_tangle(buf.str());
    if (cfg.algebra && *cfg.algebra != t.cartan().type())
      throw ValidationError("--algebra " + cfg.algebra->to_string() + " does not match the file's algebra " +
                            t.cartan().type().to_string());
    if (!t.closed()) throw ValidationError("invariant requires a closed tangle (top and bottom must be empty)");
    auto session = Session::for_algebra(t.cartan().type());
    if (cfg.cache_dir) session->set_cache_dir(cfg.cache_dir);
    const auto comps = trace_components(t);
    const auto value = evaluate_closed(t, cfg.ribbon, session.get());
    std::optional<LaurentPoly> other;
    const RibbonChoice other_choice =
        cfg.ribbon == RibbonChoice::standard ? RibbonChoice::snyder_tingley : RibbonChoice::standard;
    if (both) other = evaluate_closed(t, other_choice, session.get());

    if (cfg.output == OutputFormat::json) {
      nlohmann::json cj = nlohmann::json::array();
      for (std::size_t i = 0; i < comps.size(); ++i)
        cj.push_back({{"label", comps.labels[i].coords}, {"writhe", comps.writhe[i]}});
      nlohmann::json j{{"algebra", t.cartan().type().to_string()},
                       {"ribbon", to_string(cfg.ribbon)},
                       {"components", cj},
                       {"invariant", value.to_json()}};
      if (other) {
        j["other"] = {{"ribbon", to_string(other_choice)}, {"invariant", other->to_json()}};
        j["writhe_sign"] = schur_sign(t);
      }
      out << j.dump(2) << "\n";
    } else if (!other) {
      out << render_ascending(value) << "\n";
    } else {
      out << to_string(cfg.ribbon) << ": " << render_ascending(value) << "\n";
      out << to_string(other_choice) << ": " << render_ascending(*other) << "\n";
      out << "writhe sign: " << (schur_sign(t) > 0 ? "+1" : "-1") << "\n";
    }
    return kExitOk;
  } catch (const TangleError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ConstructionError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int cmd_rep(const Config& cfg, const std::string& weight, std::ostream& out, std::ostream& err) {
  try {
    if (!cfg.algebra) throw ValidationError("--algebra is required");
    auto cd = make_cartan(*cfg.algebra);
    const Weight w = parse_weights(weight, cd->rank()).front();
    const Repn rep = Repn::build(cd, w);
    if (cfg.output == OutputFormat::json)
      out << rep_info_json(rep).dump(2) << "\n";
    else
      out << rep_info_text(rep);
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ConstructionError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int cmd_check(const Config& cfg, const std::string& suite, const std::string& weights, std::ostream& out,
              std::ostream& err) {
  struct Line {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Line> lines;
  try {
    if (!cfg.algebra) throw ValidationError("--algebra is required");
    if (suite != "relations" && suite != "yangbaxter" && suite != "zigzag" && suite != "reidemeister")
      throw ValidationError("unknown suite '" + suite + "' (expected relations, yangbaxter, zigzag or reidemeister)");
    auto session = Session::for_algebra(*cfg.algebra);
    if (cfg.cache_dir) session->set_cache_dir(cfg.cache_dir);
    const auto cd = session->cartan_ptr();
    const auto ws = parse_weights(weights, cd->rank());

    if (suite == "relations") {
      for (const auto& w : ws) {
        const auto bad = relation_failures(*session->irrep(w));
        const auto bad_dual = relation_failures(*session->object({w, true}));
        lines.push_back({"relations " + render_label(w), bad.empty(), bad.empty() ? "" : bad.front()});
        lines.push_back({"relations dual " + render_label(w), bad_dual.empty(), bad_dual.empty() ? "" : bad_dual.front()});
      }
    } else if (suite == "yangbaxter") {
      if (ws.size() != 3) throw ValidationError("yangbaxter needs exactly three weights");
      std::string name = "yangbaxter " + render_label(ws[0]) + render_label(ws[1]) + render_label(ws[2]);
      lines.push_back({name, yang_baxter_holds(session->irrep(ws[0]), session->irrep(ws[1]), session->irrep(ws[2])),
                       "matrix identity fails"});
    } else if (suite == "zigzag") {
      for (const auto& w : ws)
        for (auto choice : {RibbonChoice::snyder_tingley, RibbonChoice::standard}) {
          const auto bad = zigzag_failures(*session->cupcap(w, choice));
          lines.push_back({"zigzag " + render_label(w) + " " + to_string(choice), bad.empty(),
                           bad.empty() ? "" : bad.front()});
        }
    } else {
      std::mt19937 rng(20240601);
      for (const auto& w : ws) {
        const std::vector<std::pair<std::string, Tangle>> bases = {
            {"trefoil", braid_closure(cd, {1, 1, 1}, {w, w})},
            {"figure-eight", braid_closure(cd, {1, -2, 1, -2}, {w, w, w})}};
        for (const auto& [name, base] : bases) {
          Tangle t = base;
          for (int k = 0; k < 5; ++k) {
            t = random_move(t, rng);
            const auto rep = invariance_suite(base, t, session.get());
            lines.push_back({"reidemeister " + name + " " + render_label(w) + " move " + std::to_string(k + 1),
                             rep.equal(), "invariant changed"});
          }
        }
      }
    }
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ConstructionError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  bool all = true;
  if (cfg.output == OutputFormat::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& l : lines) {
      j.push_back({{"case", l.name}, {"pass", l.pass}});
      all = all && l.pass;
    }
    out << nlohmann::json{{"suite", suite}, {"cases", j}, {"pass", all}}.dump(2) << "\n";
  } else {
    for (const auto& l : lines) {
      out << (l.pass ? "PASS " : "FAIL ") << l.name << (l.pass ? "" : ": " + l.detail) << "\n";
      all = all && l.pass;
    }
  }
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_unknot_homology(const Config& cfg, int t_max, std::ostream& out, std::ostream& err) {
  if (t_max < 4) {
    err << "validation error: --tmax must be at least 4\n";
    return kExitValidation;
  }
  const auto series = unknot_series(t_max);
  const auto [num, den] = unknot_closed_form();
  const bool match = series == series_from_rational(num, den, t_max);
  if (cfg.output == OutputFormat::json) {
    out << nlohmann::json{{"t_max", t_max},
                          {"series", series.to_json()},
                          {"closed_form_match", match},
                          {"euler_characteristic", unknot_euler_characteristic().to_json()}}
               .dump(2)
        << "\n";
  } else {
    for (int k = series.t_min(); k <= t_max; ++k) {
      const auto c = series.coeff(k);
      if (!c.is_zero()) out << "t^" << k << ": " << render_ascending(c) << "\n";
    }
    out << "euler characteristic: " << render_ascending(unknot_euler_characteristic()) << "\n";
    out << (match ? "PASS" : "FAIL") << " closed form through t^" << t_max << "\n";
  }
  return match ? kExitOk : kExitCheckFailed;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum invariants of framed tangles"};
  app.require_subcommand(1);

  std::string algebra, ribbon = "st", output = "text", cache_dir, tangle, weight, weights, suite;
  bool both = false;
  int t_max = 20;
  auto add_output = [&](CLI::App* c) {
    c->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* inv = app.add_subcommand("invariant", "Invariant of a closed tangle file");
  inv->add_option("--tangle", tangle, "Tangle file")->required();
  inv->add_option("--algebra", algebra, "Expected algebra, e.g. A1");
  inv->add_option("--ribbon", ribbon, "st or standard");
  inv->add_flag("--both", both, "Also evaluate with the other ribbon element");
  inv->add_option("--cache-dir", cache_dir, "Directory for cached braiding blocks");
  add_output(inv);

  auto* rep = app.add_subcommand("rep", "Describe an irreducible module");
  rep->add_option("--algebra", algebra)->required();
  rep->add_option("--weight", weight, "Highest weight, e.g. 1,0")->required();
  add_output(rep);

  auto* chk = app.add_subcommand("check", "Run a property suite");
  chk->add_option("--suite", suite, "relations, yangbaxter, zigzag or reidemeister")->required();
  chk->add_option("--algebra", algebra)->required();
  auto* wsopt = chk->add_option("--weights", weights, "Weights separated by ';'");
  chk->add_option("--weight", weight, "A single weight")->excludes(wsopt);
  chk->add_option("--cache-dir", cache_dir);
  add_output(chk);

  auto* hom = app.add_subcommand("unknot-homology", "Poincare series of the colour-2 unknot");
  hom->add_option("--tmax", t_max, "Truncation order");
  add_output(hom);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitValidation;
  }

  Config cfg;
  try {
    if (!algebra.empty()) cfg.algebra = LieType::parse(algebra);
    cfg.ribbon = parse_ribbon(ribbon);
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  }
  cfg.output = output == "json" ? OutputFormat::json : OutputFormat::text;
  if (!cache_dir.empty()) cfg.cache_dir = cache_dir;

  if (inv->parsed()) return cmd_invariant(cfg, tangle, both, out, err);
  if (rep->parsed()) return cmd_rep(cfg, weight, out, err);
  if (chk->parsed()) return cmd_check(cfg, suite, weights.empty() ? weight : weights, out, err);
  return cmd_unknot_homology(cfg, t_max, out, err);
}

}  // namespace quantinv
