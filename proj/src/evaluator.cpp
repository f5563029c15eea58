#include "quantinv/evaluator.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>

namespace quantinv {

const std::string& conventions_tag() {
  static const std::string tag =
      "coproduct:E(x)1+Kt_i(x)E;F(x)Kt_-i+1(x)F|K_mu:q^<mu,nu>|R:A.Theta^-1|sigma:flip.R|"
      "dual:literal,S|qtr:theta.ev.sigma|qcotr:theta.sigma.coev|basis:divided-power-rref";
  return tag;
}

Session::Session(CartanPtr cd) : cd_(std::move(cd)) {
  if (const char* env = std::getenv("QUANTINV_CACHE_DIR"); env && *env) cache_dir_ = env;
}

std::shared_ptr<Session> Session::for_algebra(const LieType& t) {
  static std::mutex m;
  static std::map<LieType, std::shared_ptr<Session>> sessions;
  std::lock_guard lock(m);
  auto& s = sessions[t];
  if (!s) s = std::make_shared<Session>(std::make_shared<const CartanData>(t));
  return s;
}

void Session::set_cache_dir(std::optional<std::filesystem::path> dir) {
  std::lock_guard lock(mu_);
  cache_dir_ = std::move(dir);
}

template <class K, class V, class F>
std::shared_ptr<const V> Session::get_or_build(std::map<K, std::shared_future<std::shared_ptr<const V>>>& m,
                                               const K& key, F&& build) {
  std::promise<std::shared_ptr<const V>> p;
  std::shared_future<std::shared_ptr<const V>> fut;
  bool owner = false;
  {
    std::lock_guard lock(mu_);
    auto it = m.find(key);
    if (it != m.end()) {
      fut = it->second;
    } else {
      fut = p.get_future().share();
      m.emplace(key, fut);
      owner = true;
    }
  }
  if (owner) {
    try {
      p.set_value(build());
    } catch (...) {
      p.set_exception(std::current_exception());
      std::lock_guard lock(mu_);
      m.erase(key);
    }
  }
  return fut.get();
}

RepnPtr Session::object(const ObjKey& k) {
  return get_or_build(objects_, k, [&]() -> RepnPtr {
    if (!k.label.is_dominant() || k.label.rank() != cd_->rank())
      throw ValidationError("label " + k.label.to_string() + " is not a dominant weight of " + cd_->type().to_string());
    if (k.dual) return std::make_shared<const Repn>(Repn::literal_dual(*object({k.label, false})));
    return std::make_shared<const Repn>(Repn::build(cd_, k.label));
  });
}

namespace {

std::string obj_name(const ObjKey& k) {
  std::string s = k.label.to_string();
  for (auto& c : s)
    if (c == ',') c = '_';
  return (k.dual ? "d" : "v") + s;
}

}  // namespace

std::shared_ptr<const LMatrix> Session::braid(const ObjKey& x, const ObjKey& y, bool inverse) {
  return get_or_build(braids_, std::make_tuple(x, y, inverse), [&]() -> std::shared_ptr<const LMatrix> {
    std::optional<std::filesystem::path> file;
    {
      std::lock_guard lock(mu_);
      if (cache_dir_) {
        const auto h = std::hash<std::string>{}(conventions_tag());
        file = *cache_dir_ / (cd_->type().to_string() + "_" + obj_name(x) + "_" + obj_name(y) +
                              (inverse ? "_inv_" : "_") + std::to_string(h) + ".json");
      }
    }
    if (file && std::filesystem::exists(*file)) {
      std::ifstream in(*file);
      try {
        auto j = nlohmann::json::parse(in);
        if (j.at("conventions") == conventions_tag())
          return std::make_shared<const LMatrix>(matrix_from_json(j.at("matrix")));
      } catch (const std::exception&) {
        // unreadable cache entry: rebuild
      }
    }
    auto a = object(x), b = object(y);
    auto m = std::make_shared<const LMatrix>(inverse ? braiding_inverse(a, b).matrix : braiding(a, b).matrix);
    if (file) {
      std::error_code ec;
      std::filesystem::create_directories(file->parent_path(), ec);
      const auto tmp = file->string() + ".tmp";
      std::ofstream out(tmp);
      out << nlohmann::json{{"conventions", conventions_tag()}, {"matrix", matrix_to_json(*m)}}.dump();
      out.close();
      if (out) std::filesystem::rename(tmp, *file, ec);
    }
    return m;
  });
}

std::shared_ptr<const CupCapMaps> Session::cupcap(const Weight& w, RibbonChoice choice) {
  return get_or_build(cupcaps_, std::make_pair(w, choice), [&]() {
    return std::make_shared<const CupCapMaps>(build_cupcap(object({w, false}), object({w, true}), choice));
  });
}

SparseVec<LaurentPoly> apply_local(const LMatrix& op, const SparseVec<LaurentPoly>& x,
                                   const std::vector<std::size_t>& dims, std::size_t pos, std::size_t n_in,
                                   const std::vector<std::size_t>& out_dims) {
  std::size_t right = 1, mid = 1, mid_out = 1;
  for (std::size_t k = pos + n_in; k < dims.size(); ++k) right *= dims[k];
  for (std::size_t k = pos; k < pos + n_in; ++k) mid *= dims[k];
  for (auto d : out_dims) mid_out *= d;
  if (op.cols() != mid || op.rows() != mid_out) throw std::logic_error("apply_local: operator shape mismatch");
  SparseAccumulator<LaurentPoly> acc;
  for (const auto& [idx, v] : x) {
    const std::size_t r = idx % right;
    const std::size_t m = (idx / right) % mid;
    const std::size_t l = idx / right / mid;
    for (const auto& [mo, w] : op.col(m)) acc.add((l * mid_out + mo) * right + r, w * v);
  }
  return acc.take();
}

LMatrix evaluate(const Tangle& t, RibbonChoice choice, Session* session) {
  std::shared_ptr<Session> owned;
  if (!session) {
    owned = Session::for_algebra(t.cartan().type());
    session = owned.get();
  }
  if (session->cartan().type() != t.cartan().type())
    throw ValidationError("tangle algebra " + t.cartan().type().to_string() + " does not match session algebra " +
                          session->cartan().type().to_string());
  for (const auto& lvl : t.levels())
    for (const auto& s : lvl)
      if (!s.label.is_dominant()) throw ValidationError("label " + s.label.to_string() + " is not dominant");
  for (const auto& s : t.slices())
    if (s.payload && !s.payload->is_dominant())
      throw ValidationError("label " + s.payload->to_string() + " is not dominant");

  auto key = [](const StrandState& s) { return ObjKey{s.label, s.dir == Direction::down}; };
  std::vector<std::size_t> dims;
  for (const auto& s : t.bottom()) dims.push_back(session->object(key(s))->dim());
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<SparseVec<LaurentPoly>> cols(total);
  for (std::size_t c = 0; c < total; ++c) cols[c] = {{c, LaurentPoly(1)}};

  for (std::size_t k = 0; k < t.slices().size(); ++k) {
    const auto& s = t.slices()[k];
    const auto& lvl = t.levels()[k];
    std::shared_ptr<const LMatrix> op;
    std::shared_ptr<const CupCapMaps> cc;
    const LMatrix* m = nullptr;
    std::size_t n_in = 0;
    std::vector<std::size_t> out;
    switch (s.kind) {
      case SliceKind::cross_pos:
      case SliceKind::cross_neg: {
        const auto a = key(lvl[s.pos]), b = key(lvl[s.pos + 1]);
        op = s.kind == SliceKind::cross_pos ? session->braid(a, b, false) : session->braid(b, a, true);
        m = op.get();
        n_in = 2;
        out = {dims[s.pos + 1], dims[s.pos]};
        break;
      }
      case SliceKind::twist_pos:
      case SliceKind::twist_neg: {
        LaurentPoly th = ribbon_scalar(t.cartan(), lvl[s.pos].label, choice);
        const int p = s.kind == SliceKind::twist_pos ? kTwistPower : -kTwistPower;
        if (p < 0) th = th.unit_inverse();
        for (auto& c : cols)
          for (auto& e : c) e.second *= th;
        continue;
      }
      case SliceKind::cup_cw:
      case SliceKind::cup_ccw: {
        cc = session->cupcap(*s.payload, choice);
        const bool cw = s.kind == SliceKind::cup_cw;
        m = cw ? &cc->coev : &cc->qcotrace;
        n_in = 0;
        out = cw ? std::vector{cc->v->dim(), cc->dual->dim()} : std::vector{cc->dual->dim(), cc->v->dim()};
        break;
      }
      case SliceKind::cap_cw:
      case SliceKind::cap_ccw: {
        cc = session->cupcap(lvl[s.pos].label, choice);
        m = s.kind == SliceKind::cap_cw ? &cc->qtrace : &cc->eval;
        n_in = 2;
        out = {};
        break;
      }
    }
    for (auto& c : cols) c = apply_local(*m, c, dims, s.pos, n_in, out);
    dims.erase(dims.begin() + static_cast<long>(s.pos), dims.begin() + static_cast<long>(s.pos + n_in));
    dims.insert(dims.begin() + static_cast<long>(s.pos), out.begin(), out.end());
  }
  std::size_t rows = 1;
  for (auto d : dims) rows *= d;
  LMatrix result(rows, total);
  for (std::size_t c = 0; c < total; ++c) result.set_col(c, std::move(cols[c]));
  return result;
}

LaurentPoly evaluate_closed(const Tangle& t, RibbonChoice choice, Session* session) {
  if (!t.closed()) throw ValidationError("tangle is not closed");
  return evaluate(t, choice, session).get(0, 0);
}

int schur_sign(const Tangle& t) {
  const auto comps = trace_components(t);
  long e = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) e += t.cartan().two_rho_check(comps.labels[i]) * (comps.writhe[i] - 1);
  return e % 2 == 0 ? 1 : -1;
}

std::optional<int> st_standard_ratio(const Tangle& t, Session* session) {
  const auto st = evaluate_closed(t, RibbonChoice::snyder_tingley, session);
  const auto sd = evaluate_closed(t, RibbonChoice::standard, session);
  if (sd.is_zero()) return std::nullopt;
  if (st == sd) return 1;
  if (st == -sd) return -1;
  return std::nullopt;
}

InvarianceReport invariance_suite(const Tangle& t1, const Tangle& t2, Session* session) {
  return {evaluate_closed(t1, RibbonChoice::snyder_tingley, session),
          evaluate_closed(t2, RibbonChoice::snyder_tingley, session),
          evaluate_closed(t1, RibbonChoice::standard, session), evaluate_closed(t2, RibbonChoice::standard, session)};
}

nlohmann::json matrix_to_json(const LMatrix& m) {
  nlohmann::json e = nlohmann::json::array();
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.col(c)) e.push_back({r, c, v.to_json()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

LMatrix matrix_from_json(const nlohmann::json& j) {
  LMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries"))
    m.add(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), LaurentPoly::from_json(e.at(2)));
  return m;
}

}  // namespace quantinv
