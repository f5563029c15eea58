#include "quantinv/tangle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace quantinv {

namespace {

const std::map<std::string, SliceKind, std::less<>> kKinds = {
    {"cross_pos", SliceKind::cross_pos}, {"cross_neg", SliceKind::cross_neg}, {"cup_cw", SliceKind::cup_cw},
    {"cup_ccw", SliceKind::cup_ccw},     {"cap_cw", SliceKind::cap_cw},       {"cap_ccw", SliceKind::cap_ccw},
    {"twist_pos", SliceKind::twist_pos}, {"twist_neg", SliceKind::twist_neg},
};

bool is_cup(SliceKind k) { return k == SliceKind::cup_cw || k == SliceKind::cup_ccw; }
bool is_cross(SliceKind k) { return k == SliceKind::cross_pos || k == SliceKind::cross_neg; }

const char* dir_name(Direction d) { return d == Direction::up ? "up" : "down"; }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

std::string to_string(SliceKind k) {
  for (const auto& [name, kind] : kKinds)
    if (kind == k) return name;
  return "?";
}

Tangle::Tangle(CartanPtr cd, std::vector<StrandState> bottom, std::vector<Slice> slices)
    : cd_(std::move(cd)), slices_(std::move(slices)) {
  for (const auto& s : bottom)
    if (s.label.rank() != cd_->rank())
      throw TangleError("bottom: label arity mismatch (" + s.label.to_string() + " for " +
                            cd_->type().to_string() + ")",
                        0, 0);
  levels_.push_back(std::move(bottom));
  for (std::size_t k = 0; k < slices_.size(); ++k) {
    const Slice& s = slices_[k];
    const int idx = static_cast<int>(k) + 1;
    const std::string where = "slice " + std::to_string(idx) + ": ";
    auto cur = levels_.back();
    const std::size_t n = cur.size();
    auto need = [&](std::size_t width) {
      if (s.pos + width > n)
        throw TangleError(where + "boundary mismatch (" + to_string(s.kind) + " at position " +
                              std::to_string(s.pos) + " needs " + std::to_string(width) + " strand(s), boundary has " +
                              std::to_string(n) + ")",
                          0, idx);
    };
    if (is_cup(s.kind) != s.payload.has_value())
      throw TangleError(where + (is_cup(s.kind) ? "cup requires a label" : "only cups take a label"), 0, idx);
    if (is_cross(s.kind)) {
      need(2);
      std::swap(cur[s.pos], cur[s.pos + 1]);
    } else if (s.kind == SliceKind::twist_pos || s.kind == SliceKind::twist_neg) {
      need(1);
    } else if (is_cup(s.kind)) {
      if (s.pos > n)
        throw TangleError(where + "boundary mismatch (cup at position " + std::to_string(s.pos) +
                              ", boundary has " + std::to_string(n) + ")",
                          0, idx);
      if (s.payload->rank() != cd_->rank())
        throw TangleError(where + "label arity mismatch (" + s.payload->to_string() + " for " +
                              cd_->type().to_string() + ")",
                          0, idx);
      const bool cw = s.kind == SliceKind::cup_cw;
      StrandState a{*s.payload, cw ? Direction::up : Direction::down};
      StrandState b{*s.payload, cw ? Direction::down : Direction::up};
      cur.insert(cur.begin() + static_cast<long>(s.pos), {a, b});
    } else {
      need(2);
      const bool cw = s.kind == SliceKind::cap_cw;
      const auto& l = cur[s.pos];
      const auto& r = cur[s.pos + 1];
      if (l.dir != (cw ? Direction::up : Direction::down) || r.dir != (cw ? Direction::down : Direction::up))
        throw TangleError("cap orientation violation at slice " + std::to_string(idx) + " (" + to_string(s.kind) +
                              " consumes (" + dir_name(l.dir) + ", " + dir_name(r.dir) + "))",
                          0, idx);
      if (l.label != r.label)
        throw TangleError(where + "cap joins strands with different labels " + l.label.to_string() + " and " +
                              r.label.to_string(),
                          0, idx);
      cur.erase(cur.begin() + static_cast<long>(s.pos), cur.begin() + static_cast<long>(s.pos) + 2);
    }
    levels_.push_back(std::move(cur));
  }
}

Tangle parse_tangle(std::string_view text) {
  CartanPtr cd;
  std::vector<StrandState> bottom;
  std::vector<Slice> slices;
  std::vector<int> slice_lines;
  int bottom_line = 0;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  auto fail = [&](const std::string& msg) -> TangleError {
    return TangleError("line " + std::to_string(lineno) + ": " + msg, lineno, 0);
  };
  auto parse_weight = [&](std::string tok) {
    if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']') throw fail("expected [weight], got '" + tok + "'");
    try {
      return Weight::parse(tok.substr(1, tok.size() - 2));
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
  };
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.rfind("bottom:", 0) == 0) {
      if (!cd) throw fail("'bottom:' before 'algebra'");
      if (bottom_line) throw fail("duplicate 'bottom:'");
      if (!slices.empty()) throw fail("'bottom:' after slices");
      bottom_line = lineno;
      for (const auto& tok : split_ws(line.substr(7))) {
        if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']') throw fail("expected [weight;dir], got '" + tok + "'");
        const auto semi = tok.find(';');
        if (semi == std::string::npos) throw fail("expected [weight;dir], got '" + tok + "'");
        const std::string d = tok.substr(semi + 1, tok.size() - semi - 2);
        if (d != "up" && d != "down") throw fail("unknown direction '" + d + "'");
        bottom.push_back({parse_weight(tok.substr(0, semi) + "]"), d == "up" ? Direction::up : Direction::down});
      }
      continue;
    }
    const auto toks = split_ws(line);
    if (toks[0] == "algebra") {
      if (cd) throw fail("duplicate 'algebra'");
      if (toks.size() != 2) throw fail("expected 'algebra <name>'");
      try {
        cd = std::make_shared<const CartanData>(CartanData::parse(toks[1]));
      } catch (const std::invalid_argument&) {
        throw fail("unknown algebra '" + toks[1] + "'");
      }
      continue;
    }
    auto kind = kKinds.find(toks[0]);
    if (kind == kKinds.end()) throw fail("unknown directive '" + toks[0] + "'");
    if (!cd) throw fail("slice before 'algebra'");
    const bool cup = is_cup(kind->second);
    if (toks.size() != (cup ? 3u : 2u))
      throw fail(toks[0] + (cup ? " expects a position and a [weight]" : " expects a position"));
    Slice s{kind->second, 0, std::nullopt};
    if (toks[1].empty() || !std::all_of(toks[1].begin(), toks[1].end(), ::isdigit))
      throw fail("bad position '" + toks[1] + "'");
    s.pos = std::stoul(toks[1]);
    if (cup) s.payload = parse_weight(toks[2]);
    slices.push_back(std::move(s));
    slice_lines.push_back(lineno);
  }
  if (!cd) throw TangleError("missing 'algebra' directive", lineno, 0);
  try {
    return Tangle(cd, std::move(bottom), std::move(slices));
  } catch (const TangleError& e) {
    const int line = e.slice() > 0 ? slice_lines[e.slice() - 1] : bottom_line;
    throw TangleError("line " + std::to_string(line) + ": " + e.what(), line, e.slice());
  }
}

std::string render(const Tangle& t) {
  std::ostringstream os;
  os << "algebra " << t.cartan().type().to_string() << "\n";
  os << "bottom:";
  for (const auto& s : t.bottom()) os << " [" << s.label.to_string() << ";" << dir_name(s.dir) << "]";
  os << "\n";
  for (const auto& s : t.slices()) {
    os << to_string(s.kind) << " " << s.pos;
    if (s.payload) os << " [" << s.payload->to_string() << "]";
    os << "\n";
  }
  return os.str();
}

nlohmann::json to_json(const Tangle& t) {
  auto strands = [](const std::vector<StrandState>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& s : v) a.push_back({{"label", s.label.coords}, {"dir", dir_name(s.dir)}});
    return a;
  };
  nlohmann::json sl = nlohmann::json::array();
  for (const auto& s : t.slices()) {
    nlohmann::json j{{"kind", to_string(s.kind)}, {"pos", s.pos}};
    if (s.payload) j["label"] = s.payload->coords;
    sl.push_back(j);
  }
  return {{"algebra", t.cartan().type().to_string()},
          {"bottom", strands(t.bottom())},
          {"slices", sl},
          {"top", strands(t.top())}};
}

int crossing_sign(SliceKind k, Direction left, Direction right) {
  const int s = k == SliceKind::cross_pos ? 1 : -1;
  return left == right ? s : -s;
}

ComponentData trace_components(const Tangle& t) {
  if (!t.closed()) throw TangleError("trace_components: open tangle", 0, 0);
  std::vector<std::size_t> parent;
  std::vector<Weight> seg_label;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  struct Event {
    std::size_t a, b;
    int sign;
  };
  std::vector<Event> events;
  std::vector<std::size_t> ids;  // segment id per position on the current level
  for (std::size_t k = 0; k < t.slices().size(); ++k) {
    const auto& s = t.slices()[k];
    const auto& lvl = t.levels()[k];
    switch (s.kind) {
      case SliceKind::cross_pos:
      case SliceKind::cross_neg:
        events.push_back({ids[s.pos], ids[s.pos + 1], crossing_sign(s.kind, lvl[s.pos].dir, lvl[s.pos + 1].dir)});
        std::swap(ids[s.pos], ids[s.pos + 1]);
        break;
      case SliceKind::twist_pos:
      case SliceKind::twist_neg:
        events.push_back({ids[s.pos], ids[s.pos], s.kind == SliceKind::twist_pos ? 1 : -1});
        break;
      case SliceKind::cup_cw:
      case SliceKind::cup_ccw: {
        const std::size_t id = parent.size();
        parent.push_back(id);
        seg_label.push_back(*s.payload);
        ids.insert(ids.begin() + static_cast<long>(s.pos), {id, id});
        break;
      }
      case SliceKind::cap_cw:
      case SliceKind::cap_ccw: {
        const auto a = find(ids[s.pos]), b = find(ids[s.pos + 1]);
        parent[std::max(a, b)] = std::min(a, b);
        ids.erase(ids.begin() + static_cast<long>(s.pos), ids.begin() + static_cast<long>(s.pos) + 2);
        break;
      }
    }
  }
  ComponentData out;
  std::map<std::size_t, std::size_t> comp_of_root;
  for (std::size_t id = 0; id < parent.size(); ++id) {
    const auto r = find(id);
    if (comp_of_root.emplace(r, out.labels.size()).second) {
      out.labels.push_back(seg_label[id]);
      out.writhe.push_back(0);
    }
  }
  for (const auto& e : events) {
    const auto ra = find(e.a);
    if (ra == find(e.b)) out.writhe[comp_of_root[ra]] += e.sign;
  }
  return out;
}

Tangle braid_closure(CartanPtr cd, const std::vector<int>& word, const std::vector<Weight>& labels) {
  const std::size_t n = labels.size();
  if (n == 0) throw std::invalid_argument("braid_closure: no strands");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Slice> slices;
  for (std::size_t k = 0; k < n; ++k) slices.push_back({SliceKind::cup_cw, k, labels[k]});
  for (int g : word) {
    const int a = g < 0 ? -g : g;
    if (a < 1 || static_cast<std::size_t>(a) >= n)
      throw std::out_of_range("braid_closure: generator " + std::to_string(g) + " out of range for " +
                              std::to_string(n) + " strands");
    slices.push_back({g > 0 ? SliceKind::cross_pos : SliceKind::cross_neg, static_cast<std::size_t>(a - 1), {}});
    std::swap(perm[a - 1], perm[a]);
  }
  for (std::size_t k = 0; k < n; ++k)
    if (labels[perm[k]] != labels[k])
      throw std::invalid_argument("braid_closure: labels are not constant on a component");
  for (std::size_t k = n; k-- > 0;) slices.push_back({SliceKind::cap_cw, k, {}});
  return Tangle(std::move(cd), {}, std::move(slices));
}

Tangle insert_slices(const Tangle& t, std::size_t at, const std::vector<Slice>& ins) {
  if (at > t.slices().size()) throw std::out_of_range("insert_slices: bad index");
  auto s = t.slices();
  s.insert(s.begin() + static_cast<long>(at), ins.begin(), ins.end());
  return Tangle(t.cartan_ptr(), t.bottom(), std::move(s));
}

Tangle insert_rii(const Tangle& t, std::size_t at, std::size_t pos, bool positive_first) {
  const auto a = positive_first ? SliceKind::cross_pos : SliceKind::cross_neg;
  const auto b = positive_first ? SliceKind::cross_neg : SliceKind::cross_pos;
  return insert_slices(t, at, {{a, pos, {}}, {b, pos, {}}});
}

Tangle insert_riii(const Tangle& t, std::size_t at, std::size_t pos, bool positive) {
  const auto p = positive ? SliceKind::cross_pos : SliceKind::cross_neg;
  const auto m = positive ? SliceKind::cross_neg : SliceKind::cross_pos;
  return insert_slices(t, at,
                       {{p, pos, {}}, {p, pos + 1, {}}, {p, pos, {}}, {m, pos + 1, {}}, {m, pos, {}}, {m, pos + 1, {}}});
}

Tangle insert_smove(const Tangle& t, std::size_t at, std::size_t pos, bool left) {
  if (at >= t.levels().size() || pos >= t.levels()[at].size()) throw std::out_of_range("insert_smove: bad place");
  const auto& s = t.levels()[at][pos];
  const bool up = s.dir == Direction::up;
  std::vector<Slice> ins;
  if (up == left) {
    // new strand appears on the left (up) or right (down) of a cw cup
    ins = {{SliceKind::cup_cw, up ? pos : pos + 1, s.label}, {SliceKind::cap_ccw, up ? pos + 1 : pos, {}}};
  } else {
    ins = {{SliceKind::cup_ccw, up ? pos + 1 : pos, s.label}, {SliceKind::cap_cw, up ? pos : pos + 1, {}}};
  }
  return insert_slices(t, at, ins);
}

Tangle insert_kink(const Tangle& t, std::size_t at, std::size_t pos, bool positive) {
  if (at >= t.levels().size() || pos >= t.levels()[at].size() || t.levels()[at][pos].dir != Direction::up)
    throw std::invalid_argument("insert_kink: needs an up strand");
  const auto& s = t.levels()[at][pos];
  return insert_slices(t, at,
                       {{SliceKind::cup_cw, pos + 1, s.label},
                        {positive ? SliceKind::cross_pos : SliceKind::cross_neg, pos, {}},
                        {SliceKind::cap_cw, pos + 1, {}}});
}

std::optional<Tangle> apply_riii(const Tangle& t) {
  const auto& s = t.slices();
  for (std::size_t k = 0; k + 2 < s.size(); ++k) {
    if (!is_cross(s[k].kind) || s[k + 1].kind != s[k].kind || s[k + 2].kind != s[k].kind) continue;
    const std::size_t i = s[k].pos;
    std::optional<std::size_t> j;
    if (s[k + 1].pos == i + 1 && s[k + 2].pos == i) j = i + 1;
    if (i > 0 && s[k + 1].pos == i - 1 && s[k + 2].pos == i) j = i - 1;
    if (!j) continue;
    auto out = s;
    out[k].pos = *j;
    out[k + 1].pos = i;
    out[k + 2].pos = *j;
    return Tangle(t.cartan_ptr(), t.bottom(), std::move(out));
  }
  return std::nullopt;
}

Tangle random_move(const Tangle& t, std::mt19937& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t at = std::uniform_int_distribution<std::size_t>(0, t.slices().size())(rng);
    const std::size_t width = t.levels()[at].size();
    const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
    const bool flag = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    if (kind == 0 && width >= 2)
      return insert_rii(t, at, std::uniform_int_distribution<std::size_t>(0, width - 2)(rng), flag);
    if (kind == 1 && width >= 3)
      return insert_riii(t, at, std::uniform_int_distribution<std::size_t>(0, width - 3)(rng), flag);
    if (kind == 2 && width >= 1)
      return insert_smove(t, at, std::uniform_int_distribution<std::size_t>(0, width - 1)(rng), flag);
  }
  throw std::invalid_argument("random_move: tangle has no strands to move");
}

}  // namespace quantinv
