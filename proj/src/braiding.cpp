#include "quantinv/braiding.hpp"

namespace quantinv {

namespace {

RepnPtr alias(const Repn& r) { return RepnPtr(RepnPtr(), &r); }

}  // namespace

std::size_t TensorSpace::dim() const {
  std::size_t d = 1;
  for (const auto& f : factors) d *= f->dim();
  return d;
}

Weight TensorSpace::weight_of(std::size_t index) const {
  Weight w = Weight::zero(factors.front()->rank());
  for (std::size_t k = factors.size(); k-- > 0;) {
    const std::size_t d = factors[k]->dim();
    w = w + factors[k]->weight_of(index % d);
    index /= d;
  }
  return w;
}

LMatrix TensorSpace::E(std::size_t i, bool bar) const {
  // sum_k Kt^{(x)k} (x) E (x) 1...
  const int s = bar ? -1 : 1;
  LMatrix total(dim(), dim());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    LMatrix term = LMatrix::identity(1);
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const auto& f = *factors[j];
      term = kron(term, j < k ? f.Ktilde(i, s) : j == k ? f.E(i) : LMatrix::identity(f.dim()));
    }
    total = total + term;
  }
  return total;
}

LMatrix TensorSpace::F(std::size_t i, bool bar) const {
  // sum_k 1...(x) F (x) Kt_{-i}^{(x) rest}
  const int s = bar ? 1 : -1;
  LMatrix total(dim(), dim());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    LMatrix term = LMatrix::identity(1);
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const auto& f = *factors[j];
      term = kron(term, j > k ? f.Ktilde(i, s) : j == k ? f.F(i) : LMatrix::identity(f.dim()));
    }
    total = total + term;
  }
  return total;
}

LMatrix theta_on(const Repn& v, const Repn& w) {
  const auto& cd = v.cartan();
  const std::size_t n = cd.rank();
  const std::size_t dv = v.dim(), dw = w.dim();
  const TensorSpace vw{{alias(v), alias(w)}};

  std::vector<SparseMatrix<RatFunc>> de, ew;
  for (std::size_t i = 0; i < n; ++i) {
    de.push_back(to_ratfunc(vw.E(i)));
    ew.push_back(to_ratfunc(w.E(i)));
  }

  std::vector<SparseVec<RatFunc>> cols(dv * dw);
  const std::size_t low = v.lowest_index();
  for (std::size_t b = 0; b < dw; ++b) cols[low * dw + b] = {{low * dw + b, RatFunc(1)}};

  // Theta(E_i u (x) b) = Delta(E_i) Theta(u (x) b) - q^{-<alpha_i, wt u>} Theta(u (x) E_i b)
  const auto& sp = v.spaces();
  for (std::size_t s = sp.size(); s-- > 0;) {
    if (sp[s].offset == low) continue;
    const auto& rd = v.raising(s);
    for (std::size_t b = 0; b < dw; ++b) {
      std::vector<SparseVec<RatFunc>> images;
      for (const auto& [i, u] : rd.gen) {
        SparseAccumulator<RatFunc> acc;
        acc.add_scaled(de[i].apply(cols[u * dw + b]), RatFunc(1));
        const RatFunc c = -RatFunc(LaurentPoly::q(-cd.pairing(cd.simple_root(i), v.weight_of(u))));
        for (const auto& [b2, x] : ew[i].col(b)) acc.add_scaled(cols[u * dw + b2], c * x);
        images.push_back(acc.take());
      }
      for (std::size_t m = 0; m < sp[s].dim; ++m) {
        SparseAccumulator<RatFunc> acc;
        for (std::size_t k = 0; k < images.size(); ++k) acc.add_scaled(images[k], rd.coeff[m][k]);
        cols[(sp[s].offset + m) * dw + b] = acc.take();
      }
    }
  }

  SparseMatrix<RatFunc> tr(dv * dw, dv * dw);
  for (std::size_t c = 0; c < cols.size(); ++c) tr.set_col(c, std::move(cols[c]));
  auto theta = to_laurent(tr);
  if (!theta) throw ConstructionError("theta: not integral on " + v.describe() + " (x) " + w.describe());
  for (std::size_t i = 0; i < n; ++i) {
    if (vw.E(i) * *theta != *theta * vw.E(i, true))
      throw ConstructionError("theta: E-intertwining residual is nonzero");
    if (vw.F(i) * *theta != *theta * vw.F(i, true))
      throw ConstructionError("theta: F-intertwining residual is nonzero");
  }
  return *theta;
}

LMatrix weight_operator(const Repn& v, const Repn& w) {
  const auto& cd = v.cartan();
  LMatrix a(v.dim() * w.dim(), v.dim() * w.dim());
  for (const auto& sv : v.spaces())
    for (const auto& sw : w.spaces()) {
      const auto s = LaurentPoly::q(cd.pairing(sv.weight, sw.weight));
      for (std::size_t x = 0; x < sv.dim; ++x)
        for (std::size_t y = 0; y < sw.dim; ++y) {
          const std::size_t k = (sv.offset + x) * w.dim() + sw.offset + y;
          a.add(k, k, s);
        }
    }
  return a;
}

LMatrix flip_operator(std::size_t dim_v, std::size_t dim_w) {
  LMatrix f(dim_v * dim_w, dim_v * dim_w);
  for (std::size_t x = 0; x < dim_v; ++x)
    for (std::size_t y = 0; y < dim_w; ++y) f.add(y * dim_v + x, x * dim_w + y, LaurentPoly(1));
  return f;
}

LMatrix unipotent_inverse(const LMatrix& u) {
  const std::size_t d = u.rows();
  const LMatrix id = LMatrix::identity(d);
  const LMatrix minus_n = (u - id).scaled(LaurentPoly(-1));
  LMatrix sum = id, term = id;
  for (std::size_t k = 0; k <= d; ++k) {
    term = minus_n * term;
    if (term.is_zero_matrix()) return sum;
    sum = sum + term;
  }
  throw ConstructionError("unipotent_inverse: matrix is not unipotent");
}

BraidOp braiding(RepnPtr v, RepnPtr w) {
  const LMatrix ti = unipotent_inverse(theta_on(*v, *w));
  LMatrix m = flip_operator(v->dim(), w->dim()) * (weight_operator(*v, *w) * ti);
  return {std::move(v), std::move(w), std::move(m)};
}

BraidOp braiding_inverse(RepnPtr v, RepnPtr w) {
  const LMatrix a_inv = weight_operator(*v, *w).map([](const LaurentPoly& x) { return x.unit_inverse(); });
  LMatrix m = theta_on(*v, *w) * (a_inv * flip_operator(w->dim(), v->dim()));
  return {std::move(v), std::move(w), std::move(m)};
}

bool intertwines(const LMatrix& m, const TensorSpace& source, const TensorSpace& target) {
  const std::size_t n = source.factors.front()->rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (m * source.E(i) != target.E(i) * m) return false;
    if (m * source.F(i) != target.F(i) * m) return false;
  }
  return true;
}

LMatrix pad(const LMatrix& m, std::size_t left, std::size_t right) {
  LMatrix out = m;
  if (left > 1) out = kron(LMatrix::identity(left), out);
  if (right > 1) out = kron(out, LMatrix::identity(right));
  return out;
}

bool yang_baxter_holds(RepnPtr u, RepnPtr v, RepnPtr w) {
  const std::size_t a = u->dim(), b = v->dim(), c = w->dim();
  const LMatrix suv = braiding(u, v).matrix;
  const LMatrix suw = braiding(u, w).matrix;
  const LMatrix svw = braiding(v, w).matrix;
  const LMatrix lhs = pad(svw, 1, a) * (pad(suw, b, 1) * pad(suv, 1, c));
  const LMatrix rhs = pad(suv, c, 1) * (pad(suw, 1, b) * pad(svw, a, 1));
  return lhs == rhs;
}

}  // namespace quantinv
