#include "quantinv/rigidity.hpp"

#include <stdexcept>

namespace quantinv {

std::string to_string(RibbonChoice c) { return c == RibbonChoice::standard ? "standard" : "st"; }

RibbonChoice parse_ribbon(std::string_view s) {
  if (s == "st" || s == "snyder_tingley" || s == "ST") return RibbonChoice::snyder_tingley;
  if (s == "standard") return RibbonChoice::standard;
  throw std::invalid_argument("unknown ribbon choice '" + std::string(s) + "' (expected st or standard)");
}

LaurentPoly ribbon_scalar(const CartanData& cd, const Weight& lambda, RibbonChoice choice) {
  LaurentPoly t = LaurentPoly::q(cd.pairing(lambda, lambda + cd.rho() * 2));
  if (choice == RibbonChoice::snyder_tingley && cd.two_rho_check(lambda) % 2 != 0) t = -t;
  return t;
}

namespace {

LaurentPoly power(const LaurentPoly& unit, int k) {
  LaurentPoly base = k < 0 ? unit.unit_inverse() : unit;
  LaurentPoly r(1);
  for (int j = 0; j < (k < 0 ? -k : k); ++j) r *= base;
  return r;
}

}  // namespace

std::vector<std::string> zigzag_failures(const CupCapMaps& m) {
  std::vector<std::string> bad;
  const std::size_t dv = m.v->dim(), dd = m.dual->dim();
  const LMatrix iv = LMatrix::identity(dv), id = LMatrix::identity(dd);
  if (pad(m.eval, dv, 1) * pad(m.coev, 1, dv) != iv) bad.push_back("(1 (x) eval)(coev (x) 1) != 1_V");
  if (pad(m.eval, 1, dd) * pad(m.coev, dd, 1) != id) bad.push_back("(eval (x) 1)(1 (x) coev) != 1_V*");
  if (pad(m.qtrace, 1, dv) * pad(m.qcotrace, dv, 1) != iv) bad.push_back("(qtrace (x) 1)(1 (x) qcotrace) != 1_V");
  if (pad(m.qtrace, dd, 1) * pad(m.qcotrace, 1, dd) != id) bad.push_back("(1 (x) qtrace)(qcotrace (x) 1) != 1_V*");
  return bad;
}

bool cupcap_invariant(const CupCapMaps& m) {
  const TensorSpace vd{{m.v, m.dual}}, dv{{m.dual, m.v}};
  for (std::size_t i = 0; i < m.v->rank(); ++i) {
    if (!(vd.E(i) * m.coev).is_zero_matrix() || !(vd.F(i) * m.coev).is_zero_matrix()) return false;
    if (!(dv.E(i) * m.qcotrace).is_zero_matrix() || !(dv.F(i) * m.qcotrace).is_zero_matrix()) return false;
  }
  return true;
}

CupCapMaps build_cupcap(RepnPtr v, RepnPtr literal_dual, RibbonChoice choice) {
  if (!literal_dual->is_literal_dual() || literal_dual->dim() != v->dim())
    throw std::invalid_argument("build_cupcap: second argument is not the literal dual");
  const auto& cd = v->cartan();
  const std::size_t dv = v->dim(), dd = literal_dual->dim();

  LMatrix coev(dv * dd, 1), eval(1, dd * dv);
  for (std::size_t b = 0; b < dv; ++b) {
    const std::size_t f = literal_dual->dual_index(b);
    coev.add(b * dd + f, 0, LaurentPoly(1));
    eval.add(0, f * dv + b, LaurentPoly(1));
  }
  const LMatrix sigma = braiding(v, literal_dual).matrix;
  const LMatrix ev_sigma = eval * sigma;
  const LMatrix sigma_coev = sigma * coev;
  const LaurentPoly theta = ribbon_scalar(cd, v->highest_weight(), choice);
  const LaurentPoly qdim_std = quantum_character(*v);
  const LaurentPoly expected =
      choice == RibbonChoice::standard ? qdim_std : ribbon_scalar(cd, v->highest_weight(), choice) *
                                                        ribbon_scalar(cd, v->highest_weight(), RibbonChoice::standard).unit_inverse() *
                                                        qdim_std;

  std::vector<CupCapMaps> passing;
  for (int tp : {-1, 1})
    for (int cp : {-1, 1}) {
      CupCapMaps m{v, literal_dual, choice, theta, tp, cp, coev, eval,
                   ev_sigma.scaled(power(theta, tp)), sigma_coev.scaled(power(theta, cp))};
      if (!zigzag_failures(m).empty()) continue;
      if ((m.qtrace * m.coev).get(0, 0) != expected) continue;
      if ((m.eval * m.qcotrace).get(0, 0) != expected) continue;
      passing.push_back(std::move(m));
    }
  if (passing.size() != 1)
    throw ConstructionError("build_cupcap: " + std::to_string(passing.size()) +
                            " twist placements pass the self-checks for " + v->describe());
  if (!cupcap_invariant(passing.front())) throw ConstructionError("build_cupcap: cup is not invariant");
  return std::move(passing.front());
}

}  // namespace quantinv
