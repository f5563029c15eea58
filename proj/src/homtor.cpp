#include "quantinv/homtor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "quantinv/linalg.hpp"

namespace quantinv {

namespace {

bool is_zero_vec(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

QVec unit_vec(std::size_t n, std::size_t i) {
  QVec v(n, Rational(0));
  v[i] = 1;
  return v;
}

// Incremental row echelon basis for membership tests.
class Echelon {
 public:
  explicit Echelon(std::size_t n) : n_(n) {}
  bool add(QVec v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational c = v[pivots_[r]];
      if (sgn(c) == 0) continue;
      for (std::size_t k = 0; k < n_; ++k) v[k] -= c * rows_[r][k];
    }
    std::size_t p = 0;
    while (p < n_ && sgn(v[p]) == 0) ++p;
    if (p == n_) return false;
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  const std::vector<QVec>& rows() const { return rows_; }

 private:
  std::size_t n_;
  std::vector<QVec> rows_;
  std::vector<std::size_t> pivots_;
};

// Coordinates with respect to linearly independent columns.
class Solver {
 public:
  Solver(const std::vector<QVec>& basis, std::size_t n) : n_(n), k_(basis.size()) {
    DenseMatrix<Rational> aug(n, k_ + n);
    for (std::size_t j = 0; j < k_; ++j)
      for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
    for (std::size_t i = 0; i < n; ++i) aug(i, k_ + i) = 1;
    const auto piv = aug.rref();
    for (std::size_t j = 0; j < k_; ++j)
      if (j >= piv.size() || piv[j] != j) throw std::logic_error("Solver: basis vectors are dependent");
    t_ = DenseMatrix<Rational>(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t_(i, j) = aug(i, k_ + j);
  }
  QVec coords(const QVec& x) const {
    QVec y(n_, Rational(0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(x[j]) != 0) y[i] += t_(i, j) * x[j];
    for (std::size_t i = k_; i < n_; ++i)
      if (sgn(y[i]) != 0) throw std::logic_error("Solver: vector outside the span");
    y.resize(k_);
    return y;
  }

 private:
  std::size_t n_, k_;
  DenseMatrix<Rational> t_;
};

// Degree of a nonzero vector over a homogeneous basis; throws if mixed.
int vec_degree(const QVec& v, const std::vector<int>& degrees) {
  std::optional<int> d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (d && *d != degrees[i]) throw std::invalid_argument("vector is not homogeneous");
    d = degrees[i];
  }
  if (!d) throw std::invalid_argument("zero vector has no degree");
  return *d;
}

std::size_t rank_of(const std::vector<QVec>& cols, std::size_t n) {
  if (cols.empty()) return 0;
  DenseMatrix<Rational> m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m.rank();
}

}  // namespace

// ---------------------------------------------------------------- algebra

GradedAlgebra::GradedAlgebra(std::vector<std::string> tags, std::vector<int> degrees,
                             std::vector<std::vector<QVec>> mult, std::size_t unit)
    : tags_(std::move(tags)), degrees_(std::move(degrees)), mult_(std::move(mult)), unit_(unit) {
  const std::size_t n = degrees_.size();
  if (tags_.size() != n || mult_.size() != n || unit_ >= n)
    throw std::invalid_argument("GradedAlgebra: inconsistent sizes");
  for (const auto& row : mult_) {
    if (row.size() != n) throw std::invalid_argument("GradedAlgebra: inconsistent sizes");
    for (const auto& v : row)
      if (v.size() != n) throw std::invalid_argument("GradedAlgebra: inconsistent sizes");
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (b != unit_ && degrees_[b] <= 0) throw std::invalid_argument("GradedAlgebra: non-local algebra");
    if (mult_[unit_][b] != unit_vec(n, b) || mult_[b][unit_] != unit_vec(n, b))
      throw std::invalid_argument("GradedAlgebra: unit law fails");
  }
  if (degrees_[unit_] != 0) throw std::invalid_argument("GradedAlgebra: unit must have degree 0");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(mult_[a][b][c]) != 0 && degrees_[c] != degrees_[a] + degrees_[b])
          throw std::invalid_argument("GradedAlgebra: multiplication is not graded");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(element(a), element(b)), element(c)) != mul(element(a), mul(element(b), element(c))))
          throw std::invalid_argument("GradedAlgebra: multiplication is not associative");
}

GradedAlgebra GradedAlgebra::square_zero_polynomial(int n, int degree) {
  if (n < 0 || n > 16) throw std::invalid_argument("square_zero_polynomial: bad number of variables");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::string> tags(dim);
  std::vector<int> degs(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    std::string t;
    int d = 0;
    for (int i = 0; i < n; ++i)
      if (s >> i & 1u) {
        t += "y" + std::to_string(i + 1);
        d += degree;
      }
    tags[s] = t.empty() ? "1" : t;
    degs[s] = d;
  }
  std::vector<std::vector<QVec>> mult(dim, std::vector<QVec>(dim, QVec(dim, Rational(0))));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      if ((a & b) == 0) mult[a][b][a | b] = 1;
  return GradedAlgebra(std::move(tags), std::move(degs), std::move(mult), 0);
}

QVec GradedAlgebra::mul(const QVec& x, const QVec& y) const {
  const std::size_t n = dim();
  QVec out(n, Rational(0));
  for (std::size_t a = 0; a < n; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (sgn(y[b]) == 0) continue;
      const Rational s = x[a] * y[b];
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(mult_[a][b][c]) != 0) out[c] += s * mult_[a][b][c];
    }
  }
  return out;
}

QVec GradedAlgebra::element(std::size_t b) const { return unit_vec(dim(), b); }

QVec GradedAlgebra::element(const std::string& tag) const {
  for (std::size_t b = 0; b < dim(); ++b)
    if (tags_[b] == tag) return element(b);
  throw std::invalid_argument("GradedAlgebra: no basis element '" + tag + "'");
}

std::vector<std::size_t> GradedAlgebra::radical_basis() const {
  std::vector<std::size_t> r;
  for (std::size_t b = 0; b < dim(); ++b)
    if (b != unit_) r.push_back(b);
  return r;
}

bool GradedAlgebra::is_commutative() const {
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = a + 1; b < dim(); ++b)
      if (mult_[a][b] != mult_[b][a]) return false;
  return true;
}

std::string GradedAlgebra::render(const QVec& x) const {
  std::string s;
  for (std::size_t b = 0; b < dim(); ++b) {
    if (sgn(x[b]) == 0) continue;
    std::string c = x[b].get_str();
    if (!s.empty()) s += c[0] == '-' ? " - " : " + ";
    else if (c[0] == '-') s += "-";
    if (c[0] == '-') c.erase(0, 1);
    if (c != "1" || b == unit_) s += c + (b == unit_ ? "" : "*");
    if (b != unit_) s += tags_[b];
  }
  return s.empty() ? "0" : s;
}

// ----------------------------------------------------------------- module

GradedModule::GradedModule(AlgebraPtr alg, std::vector<int> degrees, std::vector<std::vector<QVec>> action)
    : alg_(std::move(alg)), degrees_(std::move(degrees)), action_(std::move(action)) {
  const std::size_t n = alg_->dim(), d = degrees_.size();
  if (action_.size() != n) throw std::invalid_argument("GradedModule: inconsistent sizes");
  for (const auto& row : action_) {
    if (row.size() != d) throw std::invalid_argument("GradedModule: inconsistent sizes");
    for (const auto& v : row)
      if (v.size() != d) throw std::invalid_argument("GradedModule: inconsistent sizes");
  }
  for (std::size_t m = 0; m < d; ++m)
    if (action_[alg_->unit()][m] != unit_vec(d, m)) throw std::invalid_argument("GradedModule: unit acts nontrivially");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(action_[a][m][k]) != 0 && degrees_[k] != alg_->degree(a) + degrees_[m])
          throw std::invalid_argument("GradedModule: action is not graded");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t m = 0; m < d; ++m)
        if (act(alg_->mul(a, b), unit_vec(d, m)) != act(a, act(b, unit_vec(d, m))))
          throw std::invalid_argument("GradedModule: action is not associative");
}

GradedModule GradedModule::free(AlgebraPtr alg, const std::vector<int>& generator_degrees) {
  const std::size_t n = alg->dim(), r = generator_degrees.size();
  std::vector<int> degs(r * n);
  std::vector<std::vector<QVec>> action(n, std::vector<QVec>(r * n, QVec(r * n, Rational(0))));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t b = 0; b < n; ++b) {
      degs[k * n + b] = generator_degrees[k] + alg->degree(b);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) action[a][k * n + b][k * n + c] = alg->mul(a, b)[c];
    }
  return GradedModule(std::move(alg), std::move(degs), std::move(action));
}

GradedModule GradedModule::quotient(AlgebraPtr alg, const std::vector<QVec>& generators) {
  const std::size_t n = alg->dim();
  std::vector<int> adeg(n);
  for (std::size_t b = 0; b < n; ++b) adeg[b] = alg->degree(b);
  Echelon ideal(n);
  for (const auto& g : generators) {
    if (is_zero_vec(g)) continue;
    vec_degree(g, adeg);
    for (std::size_t b = 0; b < n; ++b) ideal.add(alg->mul(alg->element(b), g));
  }
  std::vector<QVec> full = ideal.rows();
  const std::size_t isize = full.size();
  Echelon span = ideal;
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < n; ++c)
    if (span.add(unit_vec(n, c))) {
      comp.push_back(c);
      full.push_back(unit_vec(n, c));
    }
  const Solver solver(full, n);
  const std::size_t d = comp.size();
  std::vector<int> degs(d);
  for (std::size_t m = 0; m < d; ++m) degs[m] = alg->degree(comp[m]);
  std::vector<std::vector<QVec>> action(n, std::vector<QVec>(d));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t m = 0; m < d; ++m) {
      const QVec c = solver.coords(alg->mul(a, comp[m]));
      action[a][m] = QVec(c.begin() + static_cast<long>(isize), c.end());
    }
  return GradedModule(std::move(alg), std::move(degs), std::move(action));
}

GradedModule GradedModule::residue_field(AlgebraPtr alg) {
  std::vector<QVec> rad;
  for (auto b : alg->radical_basis()) rad.push_back(alg->element(b));
  return quotient(std::move(alg), rad);
}

GradedModule GradedModule::submodule(const GradedModule& ambient, const std::vector<QVec>& basis) {
  const auto& alg = ambient.algebra();
  const Solver solver(basis, ambient.dim());
  std::vector<int> degs;
  for (const auto& v : basis) degs.push_back(vec_degree(v, ambient.degrees()));
  std::vector<std::vector<QVec>> action(alg.dim(), std::vector<QVec>(basis.size()));
  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t j = 0; j < basis.size(); ++j) action[a][j] = solver.coords(ambient.act(a, basis[j]));
  return GradedModule(ambient.algebra_ptr(), std::move(degs), std::move(action));
}

QVec GradedModule::act(std::size_t a, const QVec& x) const {
  const std::size_t d = dim();
  QVec out(d, Rational(0));
  for (std::size_t m = 0; m < d; ++m) {
    if (sgn(x[m]) == 0) continue;
    for (std::size_t k = 0; k < d; ++k)
      if (sgn(action_[a][m][k]) != 0) out[k] += x[m] * action_[a][m][k];
  }
  return out;
}

QVec GradedModule::act(const QVec& a, const QVec& x) const {
  QVec out(dim(), Rational(0));
  for (std::size_t b = 0; b < a.size(); ++b) {
    if (sgn(a[b]) == 0) continue;
    const QVec y = act(b, x);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += a[b] * y[k];
  }
  return out;
}

std::map<int, int> GradedModule::graded_dimension() const {
  std::map<int, int> out;
  for (int d : degrees_) ++out[d];
  return out;
}

// ------------------------------------------------------------- resolution

std::vector<int> Resolution::shifts(std::size_t i) const {
  std::vector<int> s;
  for (int d : generator_degrees.at(i)) s.push_back(-d);
  return s;
}

bool Resolution::is_complex() const {
  const std::size_t n = algebra->dim();
  for (std::size_t i = 1; i < differentials.size(); ++i) {
    const auto& a = differentials[i - 1];  // d_i
    const auto& b = differentials[i];      // d_{i+1}
    for (std::size_t k0 = 0; k0 < rank(i - 1); ++k0)
      for (std::size_t k2 = 0; k2 < rank(i + 1); ++k2) {
        QVec sum(n, Rational(0));
        for (std::size_t k1 = 0; k1 < rank(i); ++k1) {
          const QVec p = algebra->mul(b[k1][k2], a[k0][k1]);
          for (std::size_t c = 0; c < n; ++c) sum[c] += p[c];
        }
        if (!is_zero_vec(sum)) return false;
      }
  }
  return true;
}

bool Resolution::is_minimal() const {
  for (const auto& d : differentials)
    for (const auto& row : d)
      for (const auto& e : row)
        if (sgn(e[algebra->unit()]) != 0) return false;
  return true;
}

namespace {

std::vector<std::size_t> minimal_generators(const GradedModule& m) {
  const std::size_t d = m.dim();
  Echelon span(d);
  for (auto y : m.algebra().radical_basis())
    for (std::size_t k = 0; k < d; ++k) span.add(m.act(y, unit_vec(d, k)));
  std::vector<std::size_t> order(d);
  for (std::size_t k = 0; k < d; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return m.degree(a) < m.degree(b); });
  std::vector<std::size_t> gens;
  for (auto k : order)
    if (span.add(unit_vec(d, k))) gens.push_back(k);
  return gens;
}

// Kernel of a degree-preserving map given by its columns, computed degree by degree.
std::vector<QVec> graded_kernel(const std::vector<QVec>& cols, const std::vector<int>& col_degrees,
                                std::size_t rows) {
  std::set<int> degs(col_degrees.begin(), col_degrees.end());
  std::vector<QVec> out;
  for (int deg : degs) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (col_degrees[j] == deg) idx.push_back(j);
    DenseMatrix<Rational> m(rows, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (std::size_t i = 0; i < rows; ++i) m(i, c) = cols[idx[c]][i];
    for (const auto& k : m.kernel()) {
      QVec v(cols.size(), Rational(0));
      for (std::size_t c = 0; c < idx.size(); ++c) v[idx[c]] = k[c];
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

Resolution minimal_resolution(const GradedModule& m, int steps) {
  const auto& alg = m.algebra_ptr();
  const std::size_t n = alg->dim();
  Resolution res;
  res.algebra = alg;
  GradedModule cur = m;
  std::vector<QVec> emb;  // basis of cur in coordinates of P_{i-1}
  for (int i = 0; i <= steps; ++i) {
    const auto gens = minimal_generators(cur);
    if (gens.empty()) {
      res.finite = true;
      break;
    }
    std::vector<int> degs;
    for (auto g : gens) degs.push_back(cur.degree(g));
    if (i > 0) {
      const std::size_t r0 = res.generator_degrees.back().size();
      std::vector<std::vector<QVec>> d(r0, std::vector<QVec>(gens.size()));
      for (std::size_t k1 = 0; k1 < gens.size(); ++k1)
        for (std::size_t k0 = 0; k0 < r0; ++k0)
          d[k0][k1] = QVec(emb[gens[k1]].begin() + static_cast<long>(k0 * n),
                           emb[gens[k1]].begin() + static_cast<long>((k0 + 1) * n));
      res.differentials.push_back(std::move(d));
    }
    res.generator_degrees.push_back(degs);
    if (i == steps) break;

    const GradedModule p = GradedModule::free(alg, degs);
    std::vector<QVec> cols(p.dim());
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (std::size_t b = 0; b < n; ++b) cols[k * n + b] = cur.act(b, unit_vec(cur.dim(), gens[k]));
    auto ker = graded_kernel(cols, p.degrees(), cur.dim());
    if (ker.empty()) {
      res.finite = true;
      break;
    }
    cur = GradedModule::submodule(p, ker);
    emb = std::move(ker);
  }
  return res;
}

// -------------------------------------------------------------------- Tor

int TorTable::dim(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::map<int, int> TorTable::graded(int i) const {
  std::map<int, int> out;
  for (const auto& [k, v] : entries)
    if (k.first == i) out[k.second] = v;
  return out;
}

nlohmann::json TorTable::to_json() const {
  nlohmann::json e = nlohmann::json::array();
  for (const auto& [k, v] : entries) e.push_back({k.first, k.second, v});
  return {{"i_max", i_max}, {"entries", e}};
}

TorTable tor_bigraded(const GradedModule& m, const GradedModule& nmod, int i_max) {
  const auto& alg = m.algebra();
  if (!alg.is_commutative()) throw std::invalid_argument("tor_bigraded: algebra is not commutative");
  const Resolution res = minimal_resolution(m, i_max + 1);
  const std::size_t dn = nmod.dim();

  auto chain_degrees = [&](std::size_t i) {
    std::vector<int> d;
    for (std::size_t k = 0; k < res.rank(i); ++k)
      for (std::size_t x = 0; x < dn; ++x) d.push_back(res.generator_degrees[i][k] + nmod.degree(x));
    return d;
  };
  // Columns of d_i (x) 1 : C_i -> C_{i-1}.
  auto chain_map = [&](std::size_t i) {
    std::vector<QVec> cols;
    if (i == 0 || i >= res.length()) return cols;
    const auto& d = res.differentials[i - 1];
    const std::size_t r0 = res.rank(i - 1);
    for (std::size_t k1 = 0; k1 < res.rank(i); ++k1)
      for (std::size_t x = 0; x < dn; ++x) {
        QVec col(r0 * dn, Rational(0));
        for (std::size_t k0 = 0; k0 < r0; ++k0) {
          const QVec y = nmod.act(d[k0][k1], unit_vec(dn, x));
          for (std::size_t z = 0; z < dn; ++z) col[k0 * dn + z] = y[z];
        }
        cols.push_back(std::move(col));
      }
    return cols;
  };
  auto rank_in_degree = [&](const std::vector<QVec>& cols, const std::vector<int>& degs, int j, std::size_t rows) {
    std::vector<QVec> sel;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (degs[c] == j) sel.push_back(cols[c]);
    return rank_of(sel, rows);
  };

  TorTable out;
  out.i_max = i_max;
  for (int i = 0; i <= i_max; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const auto degs = chain_degrees(ui);
    if (degs.empty()) continue;
    const auto di = chain_map(ui);
    const auto dnext = chain_map(ui + 1);
    const auto degs_next = chain_degrees(ui + 1);
    const std::size_t rows_prev = i > 0 ? res.rank(ui - 1) * dn : 0;
    for (int j : std::set<int>(degs.begin(), degs.end())) {
      const long cnt = std::count(degs.begin(), degs.end(), j);
      const long rk_out = i > 0 ? static_cast<long>(rank_in_degree(di, degs, j, rows_prev)) : 0;
      const long rk_in = static_cast<long>(rank_in_degree(dnext, degs_next, j, degs.size()));
      const long h = cnt - rk_out - rk_in;
      if (h > 0) out.entries[{i, j}] = static_cast<int>(h);
    }
  }
  return out;
}

// ---------------------------------------------------------------- assembly

std::pair<int, LaurentPoly> poincare_monomial(int i, int j, int a, int b) {
  const int e = i + a;
  LaurentPoly m = LaurentPoly::q(b - j);
  if (e % 2 != 0) m = -m;
  return {e, m};
}

BiGradedSeries assemble_series(const std::vector<TorSummand>& parts, int t_max) {
  int t_min = t_max;
  for (const auto& p : parts)
    for (const auto& [k, v] : p.table.entries) t_min = std::min(t_min, k.first + p.hom_shift);
  BiGradedSeries out(t_min, t_max);
  for (const auto& p : parts)
    for (const auto& [k, v] : p.table.entries) {
      const auto [e, mono] = poincare_monomial(k.first, k.second, p.hom_shift, p.int_shift);
      if (e <= t_max) out.add_to(e, mono * LaurentPoly(v));
    }
  return out;
}

AlgebraPtr unknot_algebra() {
  return std::make_shared<const GradedAlgebra>(GradedAlgebra::square_zero_polynomial(2, 2));
}

GradedModule unknot_module(const AlgebraPtr& alg) {
  QVec g = alg->element("y1");
  const QVec y2 = alg->element("y2");
  for (std::size_t c = 0; c < g.size(); ++c) g[c] += y2[c];
  return GradedModule::quotient(alg, {g});
}

std::vector<TorSummand> unknot_summands(int i_max) {
  const auto alg = unknot_algebra();
  const auto m = unknot_module(alg);
  TorTable k;
  k.entries[{0, 0}] = 1;
  k.i_max = i_max;
  return {{k, -2, 2}, {tor_bigraded(m, m, i_max), 0, 0}, {k, 2, -2}};
}

BiGradedSeries unknot_series(int t_max) {
  if (t_max < 4) throw std::invalid_argument("unknot_series: t_max must be at least 4");
  return assemble_series(unknot_summands(t_max), t_max);
}

std::pair<TPoly, TPoly> unknot_closed_form() {
  const LaurentPoly qm2 = LaurentPoly::q(-2);
  const TPoly den{{0, LaurentPoly(1)}, {2, -LaurentPoly::q(-4)}};
  const TPoly isolated{{-2, LaurentPoly::q(2)}, {0, LaurentPoly(1)}, {2, qm2}};
  TPoly num = tpoly_mul(isolated, den);
  num[0] += qm2;
  num[1] -= qm2;
  return {num, den};
}

LaurentPoly unknot_euler_characteristic() {
  const auto [num, den] = unknot_closed_form();
  LaurentPoly n, d;
  for (const auto& [k, c] : num) n += c;
  for (const auto& [k, c] : den) d += c;
  auto l = RatFunc(n, d).to_laurent();
  if (!l) throw std::logic_error("unknot_euler_characteristic: not a Laurent polynomial");
  return *l;
}

}  // namespace quantinv
