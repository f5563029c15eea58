#include "quantinv/repn.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace quantinv {

namespace {

using Vec = std::vector<RatFunc>;

struct Builder {
  const CartanData& cd;
  std::size_t n;
  struct Space {
    Weight weight;
    int depth;
    std::size_t dim;
  };
  std::vector<Space> spaces;
  std::map<Weight, std::size_t> lookup;
  // (generator, source space) -> dense block, block[col] = image of basis col.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Vec>> fblk, eblk;

  explicit Builder(const CartanData& c) : cd(c), n(c.rank()) {}

  std::optional<std::size_t> find(const Weight& w) const {
    auto it = lookup.find(w);
    if (it == lookup.end()) return std::nullopt;
    return it->second;
  }

  static Vec apply_block(const std::vector<Vec>& blk, const Vec& x, std::size_t out_dim) {
    Vec y(out_dim, RatFunc(0));
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (x[c].is_zero()) continue;
      for (std::size_t r = 0; r < out_dim; ++r)
        if (!blk[c][r].is_zero()) y[r] += blk[c][r] * x[c];
    }
    return y;
  }

  // Applies generator `i` (lowering if `lower`) to x in space s.
  std::optional<std::pair<std::size_t, Vec>> step(bool lower, std::size_t i, std::size_t s, const Vec& x) const {
    const auto& blocks = lower ? fblk : eblk;
    auto it = blocks.find({i, s});
    if (it == blocks.end()) return std::nullopt;
    const Weight a = cd.simple_root(i);
    auto t = find(lower ? spaces[s].weight - a : spaces[s].weight + a);
    if (!t) return std::nullopt;
    return std::make_pair(*t, apply_block(it->second, x, spaces[*t].dim));
  }

  std::optional<std::pair<std::size_t, Vec>> f_div(std::size_t i, int a, std::size_t s, Vec x) const {
    for (int k = 0; k < a; ++k) {
      auto r = step(true, i, s, x);
      if (!r) return std::nullopt;
      s = r->first;
      x = std::move(r->second);
    }
    const RatFunc inv = RatFunc(quantum_factorial(a, cd.symmetrizer(i))).inverse();
    for (auto& v : x) v *= inv;
    return std::make_pair(s, std::move(x));
  }

  static Vec unit(std::size_t dim, std::size_t b) {
    Vec v(dim, RatFunc(0));
    v[b] = RatFunc(1);
    return v;
  }

  void build(const Weight& highest) {
    spaces.push_back({highest, 0, 1});
    lookup[highest] = 0;
    std::vector<std::size_t> frontier{0};
    for (int depth = 1; !frontier.empty(); ++depth) {
      std::set<Weight, std::greater<>> cands;
      for (auto s : frontier)
        for (std::size_t i = 0; i < n; ++i) cands.insert(spaces[s].weight - cd.simple_root(i));
      std::vector<std::size_t> next;
      for (const auto& nu : cands)
        if (add_space(nu, depth)) next.push_back(spaces.size() - 1);
      frontier = std::move(next);
    }
  }

  // Spans the weight space nu by F_i^{(a)} e_b and quotients by the kernel of
  // the joint raising map into the spaces above.
  bool add_space(const Weight& nu, int depth) {
    struct Entry {
      std::size_t i;
      int a;
      std::size_t src;
      std::size_t b;
    };
    std::vector<Entry> entries;
    for (int a = depth; a >= 1; --a)
      for (std::size_t i = 0; i < n; ++i) {
        auto s = find(nu + cd.simple_root(i) * a);
        if (!s) continue;
        for (std::size_t b = 0; b < spaces[*s].dim; ++b) entries.push_back({i, a, *s, b});
      }
    if (entries.empty()) return false;

    std::vector<std::optional<std::size_t>> up(n);
    std::vector<std::size_t> row_off(n, 0);
    std::size_t rows = 0;
    for (std::size_t j = 0; j < n; ++j) {
      up[j] = find(nu + cd.simple_root(j));
      row_off[j] = rows;
      if (up[j]) rows += spaces[*up[j]].dim;
    }

    DenseMatrix<RatFunc> m(rows, entries.size());
    for (std::size_t c = 0; c < entries.size(); ++c) {
      const auto& en = entries[c];
      const Vec eb = unit(spaces[en.src].dim, en.b);
      const int mi = spaces[en.src].weight[en.i];
      for (std::size_t j = 0; j < n; ++j) {
        if (!up[j]) continue;
        Vec img(spaces[*up[j]].dim, RatFunc(0));
        // E_j F_i^{(a)} e_b = F_i^{(a)} E_j e_b (+ [m-a+1] F_i^{(a-1)} e_b if j == i)
        if (auto x = step(false, j, en.src, eb)) {
          if (auto y = f_div(en.i, en.a, x->first, x->second)) {
            if (y->first != *up[j]) throw ConstructionError("repn: weight bookkeeping mismatch");
            for (std::size_t r = 0; r < img.size(); ++r) img[r] += y->second[r];
          }
        }
        if (j == en.i) {
          const RatFunc coef = quantum_integer(mi - en.a + 1, cd.symmetrizer(en.i));
          if (!coef.is_zero()) {
            auto y = f_div(en.i, en.a - 1, en.src, eb);
            if (!y || y->first != *up[j]) throw ConstructionError("repn: missing divided-power image");
            for (std::size_t r = 0; r < img.size(); ++r) img[r] += coef * y->second[r];
          }
        }
        for (std::size_t r = 0; r < img.size(); ++r) m(row_off[j] + r, c) = img[r];
      }
    }

    DenseMatrix<RatFunc> red = m;
    const auto piv = red.rref();
    if (piv.empty()) return false;
    const std::size_t dim = piv.size();
    const std::size_t s = spaces.size();
    spaces.push_back({nu, depth, dim});
    lookup[nu] = s;

    // F_i from nu + alpha_i: coordinates of F_i e_b in the pivot basis.
    for (std::size_t c = 0; c < entries.size(); ++c) {
      const auto& en = entries[c];
      if (en.a != 1) continue;
      auto& blk = fblk[{en.i, en.src}];
      if (blk.empty()) blk.assign(spaces[en.src].dim, Vec(dim, RatFunc(0)));
      for (std::size_t r = 0; r < dim; ++r) blk[en.b][r] = red(r, c);
    }
    // E_j from nu: the original images of the pivot entries.
    for (std::size_t j = 0; j < n; ++j) {
      if (!up[j]) continue;
      auto& blk = eblk[{j, s}];
      blk.assign(dim, Vec(spaces[*up[j]].dim, RatFunc(0)));
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t r = 0; r < spaces[*up[j]].dim; ++r) blk[k][r] = m(row_off[j] + r, piv[k]);
    }
    return true;
  }
};

SparseMatrix<LaurentPoly> divided(const SparseMatrix<LaurentPoly>& x, int n, int d) {
  if (n < 0) throw std::invalid_argument("divided power: negative exponent");
  SparseMatrix<LaurentPoly> p = SparseMatrix<LaurentPoly>::identity(x.rows());
  for (int k = 0; k < n; ++k) p = x * p;
  const LaurentPoly f = quantum_factorial(n, d);
  return p.map([&](const LaurentPoly& v) {
    auto r = LaurentPoly::divide_exact(v, f);
    if (!r) throw ConstructionError("divided power is not integral");
    return *r;
  });
}

}  // namespace

Repn Repn::build(CartanPtr cd, const Weight& highest) {
  if (highest.rank() != cd->rank())
    throw std::invalid_argument("weight " + highest.to_string() + " has wrong rank for " + cd->type().to_string());
  if (!highest.is_dominant())
    throw std::invalid_argument("weight " + highest.to_string() + " is not dominant");

  Builder b(*cd);
  b.build(highest);

  Repn rep;
  rep.cd_ = cd;
  rep.highest_ = highest;
  std::size_t off = 0;
  for (std::size_t s = 0; s < b.spaces.size(); ++s) {
    rep.spaces_.push_back({b.spaces[s].weight, b.spaces[s].depth, off, b.spaces[s].dim});
    rep.space_lookup_[b.spaces[s].weight] = s;
    for (std::size_t k = 0; k < b.spaces[s].dim; ++k) rep.space_index_.push_back(s);
    off += b.spaces[s].dim;
  }
  rep.dim_ = off;

  const std::size_t n = cd->rank();
  for (int lower = 0; lower < 2; ++lower) {
    const auto& blocks = lower ? b.fblk : b.eblk;
    for (std::size_t i = 0; i < n; ++i) {
      SparseMatrix<RatFunc> m(rep.dim_, rep.dim_);
      for (std::size_t s = 0; s < rep.spaces_.size(); ++s) {
        auto it = blocks.find({i, s});
        if (it == blocks.end()) continue;
        const Weight a = cd->simple_root(i);
        auto t = rep.space_of(lower ? rep.spaces_[s].weight - a : rep.spaces_[s].weight + a);
        if (!t) continue;
        for (std::size_t c = 0; c < it->second.size(); ++c)
          for (std::size_t r = 0; r < it->second[c].size(); ++r)
            m.add(rep.spaces_[*t].offset + r, rep.spaces_[s].offset + c, it->second[c][r]);
      }
      auto l = to_laurent(m);
      if (!l)
        throw ConstructionError(std::string(lower ? "F" : "E") + "_" + std::to_string(i + 1) +
                                " is not integral on V(" + highest.to_string() + ")");
      (lower ? rep.f_ : rep.e_).push_back(std::move(*l));
    }
  }

  std::vector<std::size_t> lowest;
  for (std::size_t s = 0; s < rep.spaces_.size(); ++s) {
    bool low = true;
    for (std::size_t i = 0; i < n; ++i)
      if (rep.space_of(rep.spaces_[s].weight - cd->simple_root(i))) low = false;
    if (low) lowest.push_back(s);
  }
  if (lowest.size() != 1 || rep.spaces_[lowest[0]].dim != 1 ||
      rep.spaces_[lowest[0]].weight != cd->apply_word(cd->longest_word(), highest))
    throw ConstructionError("repn: lowest weight space is not a single line of weight w0(lambda)");
  rep.lowest_index_ = rep.spaces_[lowest[0]].offset;

  // Integral-form check on divided powers.
  for (std::size_t i = 0; i < n; ++i)
    for (int k = 2;; ++k) {
      auto fd = rep.F_div(i, k);
      auto ed = rep.E_div(i, k);
      if (fd.is_zero_matrix() && ed.is_zero_matrix()) break;
    }

  rep.compute_raising_data();
  return rep;
}

Repn Repn::literal_dual(const Repn& v) {
  if (v.literal_dual_) throw std::invalid_argument("literal_dual: double duals are not supported");
  Repn d;
  d.cd_ = v.cd_;
  d.highest_ = -v.weight_of(v.lowest_index());
  d.literal_dual_ = true;
  d.dim_ = v.dim_;
  d.dual_perm_.assign(v.dim_, 0);
  const int max_depth = v.spaces_.back().depth;
  std::size_t off = 0;
  for (std::size_t s = v.spaces_.size(); s-- > 0;) {
    const auto& sp = v.spaces_[s];
    const std::size_t ns = d.spaces_.size();
    d.spaces_.push_back({-sp.weight, max_depth - sp.depth, off, sp.dim});
    d.space_lookup_[-sp.weight] = ns;
    for (std::size_t k = 0; k < sp.dim; ++k) {
      d.dual_perm_[sp.offset + k] = off + k;
      d.space_index_.push_back(ns);
    }
    off += sp.dim;
  }
  d.lowest_index_ = d.dual_perm_[v.highest_index()];
  auto permuted = [&](const SparseMatrix<LaurentPoly>& m) {
    SparseMatrix<LaurentPoly> out(m.cols(), m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& [r, x] : m.col(c)) out.add(d.dual_perm_[c], d.dual_perm_[r], x);
    return out;
  };
  for (std::size_t i = 0; i < v.rank(); ++i) {
    d.e_.push_back(permuted(antipode_E(v, i)));
    d.f_.push_back(permuted(antipode_F(v, i)));
  }
  d.compute_raising_data();
  return d;
}

void Repn::compute_raising_data() {
  raising_.assign(spaces_.size(), {});
  const std::size_t n = rank();
  for (std::size_t s = 0; s < spaces_.size(); ++s) {
    const auto& sp = spaces_[s];
    if (sp.offset == lowest_index_) continue;
    std::vector<std::pair<std::size_t, std::size_t>> cands;
    for (std::size_t i = 0; i < n; ++i) {
      auto below = space_of(sp.weight - cd_->simple_root(i));
      if (!below) continue;
      for (std::size_t k = 0; k < spaces_[*below].dim; ++k) cands.emplace_back(i, spaces_[*below].offset + k);
    }
    DenseMatrix<RatFunc> m(sp.dim, cands.size());
    for (std::size_t c = 0; c < cands.size(); ++c)
      for (const auto& [r, v] : e_[cands[c].first].col(cands[c].second)) m(r - sp.offset, c) = RatFunc(v);
    DenseMatrix<RatFunc> red = m;
    auto piv = red.rref();
    if (piv.size() != sp.dim) throw ConstructionError("repn: module is not generated by its lowest weight vector");
    DenseMatrix<RatFunc> c(sp.dim, sp.dim);
    RaisingData rd;
    for (std::size_t k = 0; k < sp.dim; ++k) {
      rd.gen.push_back(cands[piv[k]]);
      for (std::size_t r = 0; r < sp.dim; ++r) c(r, k) = m(r, piv[k]);
    }
    auto ci = c.inverse();
    if (!ci) throw ConstructionError("repn: singular raising block");
    rd.coeff.assign(sp.dim, std::vector<RatFunc>(sp.dim));
    for (std::size_t mi = 0; mi < sp.dim; ++mi)
      for (std::size_t k = 0; k < sp.dim; ++k) rd.coeff[mi][k] = (*ci)(k, mi);
    raising_[s] = std::move(rd);
  }
}

std::optional<std::size_t> Repn::space_of(const Weight& w) const {
  auto it = space_lookup_.find(w);
  if (it == space_lookup_.end()) return std::nullopt;
  return it->second;
}

std::map<Weight, std::size_t> Repn::multiplicities() const {
  std::map<Weight, std::size_t> m;
  for (const auto& s : spaces_) m[s.weight] = s.dim;
  return m;
}

SparseMatrix<LaurentPoly> Repn::E_div(std::size_t i, int n) const {
  return divided(e_.at(i), n, cd_->symmetrizer(i));
}

SparseMatrix<LaurentPoly> Repn::F_div(std::size_t i, int n) const {
  return divided(f_.at(i), n, cd_->symmetrizer(i));
}

Rational Repn::k_exponent(const Weight& mu, std::size_t basis_index) const {
  return cd_->pairing(mu, weight_of(basis_index));
}

SparseMatrix<LaurentPoly> Repn::K(const Weight& mu) const {
  SparseMatrix<LaurentPoly> k(dim_, dim_);
  for (const auto& s : spaces_) {
    const auto v = LaurentPoly::q(cd_->pairing(mu, s.weight));
    for (std::size_t j = 0; j < s.dim; ++j) k.add(s.offset + j, s.offset + j, v);
  }
  return k;
}

SparseMatrix<LaurentPoly> Repn::Ktilde(std::size_t i, int sign) const {
  return K(cd_->simple_root(i) * sign);
}

std::string Repn::describe() const {
  std::ostringstream os;
  if (literal_dual_)
    os << "V(" << (-weight_of(lowest_index_)).to_string() << ")^* of " << cd_->type().to_string() << ", dim " << dim_;
  else
    os << "V(" << highest_.to_string() << ") of " << cd_->type().to_string() << ", dim " << dim_;
  return os.str();
}

SparseVec<LaurentPoly> extremal_vector(const Repn& rep, const std::vector<int>& word) {
  const auto& cd = rep.cartan();
  SparseVec<LaurentPoly> v{{rep.highest_index(), LaurentPoly(1)}};
  Weight mu = rep.highest_weight();
  for (int i : word) {
    if (i < 0 || static_cast<std::size_t>(i) >= cd.rank()) throw std::invalid_argument("extremal_vector: bad index");
    const int k = mu[i];
    if (k < 0) throw std::invalid_argument("extremal_vector: word is not reduced for this weight");
    if (k > 0) v = rep.F_div(i, k).apply(v);
    mu = cd.reflect(i, mu);
  }
  if (v.empty()) throw ConstructionError("extremal_vector: zero result");
  if (!rep.space_of(mu) || rep.weight_of(v.front().first) != mu)
    throw ConstructionError("extremal_vector: result has wrong weight");
  return v;
}

LaurentPoly quantum_character(const Repn& rep) {
  const auto& cd = rep.cartan();
  LaurentPoly sum;
  for (const auto& s : rep.spaces())
    sum += LaurentPoly::monomial(Integer(static_cast<unsigned long>(s.dim)), 0) *
           LaurentPoly::q(2 * cd.pairing(cd.rho(), s.weight));
  return sum;
}

SparseMatrix<LaurentPoly> antipode_E(const Repn& rep, std::size_t i) {
  return (rep.Ktilde(i, -1) * rep.E(i)).scaled(LaurentPoly(-1));
}

SparseMatrix<LaurentPoly> antipode_F(const Repn& rep, std::size_t i) {
  return (rep.F(i) * rep.Ktilde(i, 1)).scaled(LaurentPoly(-1));
}

DualRepn dual_repn(RepnPtr base, RepnPtr dual, RepnPtr literal, const std::vector<int>& word) {
  const auto& cd = base->cartan();
  if (dual->highest_weight() != cd.dual_weight(base->highest_weight()))
    throw std::invalid_argument("dual_repn: highest weight is not lambda*");
  if (!literal->is_literal_dual() || literal->dim() != base->dim())
    throw std::invalid_argument("dual_repn: third argument is not the literal dual");
  DualRepn out;
  out.base = base;
  out.dual = dual;
  out.literal = literal;
  out.word = word;
  out.v_l = extremal_vector(*dual, word);
  if (out.v_l.size() != 1 || out.v_l[0].first != dual->lowest_index())
    throw ConstructionError("dual_repn: extremal vector is not on the lowest line");

  const std::size_t n = cd.rank();
  std::vector<SparseMatrix<RatFunc>> se_t;
  for (std::size_t i = 0; i < n; ++i) se_t.push_back(to_ratfunc(antipode_E(*base, i)).transpose());

  // rows[a] = ev(f_a (x) -) over the basis of V_lambda, via
  // ev(E_i f, v) = ev(f, S(E_i) v) starting from the lowest line.
  std::vector<SparseVec<RatFunc>> rows(dual->dim());
  rows[dual->lowest_index()] = {{base->highest_index(), RatFunc(out.v_l[0].second).inverse()}};
  const auto& sp = dual->spaces();
  for (std::size_t s = sp.size(); s-- > 0;) {
    if (sp[s].offset == dual->lowest_index()) continue;
    const auto& rd = dual->raising(s);
    std::vector<SparseVec<RatFunc>> images;
    for (const auto& [i, u] : rd.gen) images.push_back(se_t[i].apply(rows[u]));
    for (std::size_t m = 0; m < sp[s].dim; ++m) {
      SparseAccumulator<RatFunc> acc;
      for (std::size_t k = 0; k < images.size(); ++k) acc.add_scaled(images[k], rd.coeff[m][k]);
      rows[sp[s].offset + m] = acc.take();
    }
  }
  SparseMatrix<RatFunc> p_t(base->dim(), dual->dim());
  SparseMatrix<RatFunc> iso(literal->dim(), dual->dim());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (const auto& [b, v] : rows[a]) iso.add(literal->dual_index(b), a, v);
    p_t.set_col(a, std::move(rows[a]));
  }
  auto p = to_laurent(p_t.transpose());
  auto il = to_laurent(iso);
  if (!p || !il) throw ConstructionError("dual_repn: pairing is not integral");
  out.pairing = std::move(*p);
  out.iso_to_literal = std::move(*il);

  for (std::size_t i = 0; i < n; ++i)
    if (literal->E(i) * out.iso_to_literal != out.iso_to_literal * dual->E(i) ||
        literal->F(i) * out.iso_to_literal != out.iso_to_literal * dual->F(i))
      throw ConstructionError("dual_repn: pairing is not invariant");

  // The pairing is block diagonal by weight; invert block by block.
  SparseMatrix<RatFunc> inv(dual->dim(), literal->dim());
  for (const auto& ds : dual->spaces()) {
    auto ls = literal->space_of(ds.weight);
    if (!ls || literal->spaces()[*ls].dim != ds.dim) throw ConstructionError("dual_repn: weight spaces do not match");
    const auto& l = literal->spaces()[*ls];
    DenseMatrix<RatFunc> blk(ds.dim, ds.dim);
    for (std::size_t r = 0; r < ds.dim; ++r)
      for (std::size_t c = 0; c < ds.dim; ++c) blk(r, c) = RatFunc(out.iso_to_literal.get(l.offset + r, ds.offset + c));
    auto bi = blk.inverse();
    if (!bi) throw ConstructionError("dual_repn: pairing is degenerate");
    for (std::size_t r = 0; r < ds.dim; ++r)
      for (std::size_t c = 0; c < ds.dim; ++c) inv.add(ds.offset + r, l.offset + c, (*bi)(r, c));
  }
  out.iso_from_literal = std::move(inv);
  return out;
}

std::vector<std::string> relation_failures(const Repn& rep) {
  using M = SparseMatrix<LaurentPoly>;
  const auto& cd = rep.cartan();
  const std::size_t n = cd.rank();
  const M id = M::identity(rep.dim());
  std::vector<std::string> bad;
  auto fail = [&](const std::string& s) { bad.push_back(s); };

  if (rep.K(Weight::zero(n)) != id) fail("(i) K_0 != 1");
  std::vector<Weight> fund;
  for (std::size_t k = 0; k < n; ++k) {
    Weight w = Weight::zero(n);
    w.coords[k] = 1;
    fund.push_back(w);
  }
  for (const auto& a : fund)
    for (const auto& b : fund)
      if (rep.K(a) * rep.K(b) != rep.K(a + b)) fail("(i) K_mu K_mu' != K_{mu+mu'}");

  for (std::size_t i = 0; i < n; ++i) {
    const std::string si = std::to_string(i + 1);
    for (const auto& mu : fund) {
      const auto s = LaurentPoly::q(cd.pairing(mu, cd.simple_root(i)));
      const M km = rep.K(mu);
      if (km * rep.E(i) != (rep.E(i) * km).scaled(s)) fail("(ii) fails for E_" + si);
      if (km * rep.F(i) * rep.K(-mu) != rep.F(i).scaled(s.unit_inverse())) fail("(iii) fails for F_" + si);
    }
    for (std::size_t j = 0; j < n; ++j) {
      M lhs = rep.E(i) * rep.F(j) - rep.F(j) * rep.E(i);
      M rhs(rep.dim(), rep.dim());
      if (i == j)
        for (std::size_t b = 0; b < rep.dim(); ++b)
          rhs.add(b, b, quantum_integer(rep.weight_of(b)[i], cd.symmetrizer(i)));
      if (lhs != rhs) fail("(iv) fails for i=" + si + ", j=" + std::to_string(j + 1));
      if (i == j) continue;
      const int top = 1 - cd.cartan(j, i);
      M se(rep.dim(), rep.dim()), sf(rep.dim(), rep.dim());
      for (int a = 0; a <= top; ++a) {
        const LaurentPoly sign = a % 2 ? -1 : 1;
        se = se + (rep.E_div(i, a) * rep.E(j) * rep.E_div(i, top - a)).scaled(sign);
        sf = sf + (rep.F_div(i, a) * rep.F(j) * rep.F_div(i, top - a)).scaled(sign);
      }
      if (!se.is_zero_matrix() || !sf.is_zero_matrix())
        fail("(v) Serre relation fails for i=" + si + ", j=" + std::to_string(j + 1));
    }
  }
  return bad;
}

nlohmann::json rep_info_json(const Repn& rep) {
  nlohmann::json j;
  j["algebra"] = rep.cartan().type().to_string();
  j["highest_weight"] = rep.highest_weight().coords;
  j["dim"] = rep.dim();
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& [w, m] : rep.multiplicities()) ws.push_back({{"weight", w.coords}, {"multiplicity", m}});
  j["weights"] = ws;
  const auto qd = quantum_character(rep);
  j["quantum_dimension"] = qd.to_json();
  j["quantum_dimension_text"] = qd.to_string();
  return j;
}

std::string rep_info_text(const Repn& rep) {
  std::ostringstream os;
  os << "algebra: " << rep.cartan().type().to_string() << "\n"
     << "highest weight: " << rep.highest_weight().to_string() << "\n"
     << "dim: " << rep.dim() << "\n"
     << "weights:\n";
  for (auto it = rep.spaces().begin(); it != rep.spaces().end(); ++it)
    os << "  " << it->weight.to_string() << "  x" << it->dim << "\n";
  os << "quantum dimension: " << quantum_character(rep).to_string() << "\n";
  return os.str();
}

}  // namespace quantinv
