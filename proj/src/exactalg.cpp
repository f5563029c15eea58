#include "quantinv/exactalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace quantinv {

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

// Dense polynomial in x with integer coefficients, index = degree.
using Poly = std::vector<Integer>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const Poly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_content(Poly& p, const Integer& c) {
  if (c == 1 || c == 0) return;
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
Poly pseudo_rem(Poly a, const Poly& b) {
  const Integer& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a;
  Integer ca = content(a);
  Integer cb = content(b);
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  divide_content(a, ca);
  divide_content(b, cb);
  while (!b.empty()) {
    if (b.size() == 1) {
      a = Poly{1};
      break;
    }
    Poly r = pseudo_rem(a, b);
    a = std::move(b);
    divide_content(r, content(r));
    b = std::move(r);
  }
  divide_content(a, content(a));
  if (a.back() < 0)
    for (auto& x : a) x = -x;
  for (auto& x : a) x *= c;
  return a;
}

// Exact division in Z[x]; nullopt if not divisible.
std::optional<Poly> poly_divexact(Poly a, const Poly& b) {
  if (a.empty()) return Poly{};
  if (a.size() < b.size()) return std::nullopt;
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db);
  Integer qc, r;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    if (r != 0) return std::nullopt;
    q[shift] = qc;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= qc * b[i];
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

// Splits p (nonzero) at scale d into x^low * P(x) with P(0) != 0.
std::pair<std::int64_t, Poly> to_poly(const LaurentPoly& p, std::int64_t d) {
  auto terms = p.scaled_terms(d);
  const std::int64_t low = terms.front().first;
  Poly out(static_cast<std::size_t>(terms.back().first - low + 1));
  for (auto& [e, c] : terms) out[static_cast<std::size_t>(e - low)] = std::move(c);
  return {low, out};
}

LaurentPoly from_poly(const Poly& p, std::int64_t shift, std::int64_t d) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i) + shift, p[i]);
  return LaurentPoly::from_terms(d, std::move(terms));
}

std::string exponent_string(std::int64_t num, std::int64_t den) {
  if (den == 1) {
    if (num == 1) return "q";
    return "q^" + std::to_string(num);
  }
  return "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("LaurentPoly: exponent denominator must be positive");
  return from_terms(den, {{num, c}});
}

LaurentPoly LaurentPoly::q(std::int64_t num, std::int64_t den) { return monomial(1, num, den); }

LaurentPoly LaurentPoly::q(const Rational& exponent) {
  Rational e = exponent;
  e.canonicalize();
  return monomial(1, e.get_num().get_si(), e.get_den().get_si());
}

LaurentPoly LaurentPoly::from_terms(std::int64_t denom, std::vector<Term> terms) {
  LaurentPoly p;
  p.denom_ = denom;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  terms_.clear();
  for (auto& t : merged)
    if (t.second != 0) terms_.push_back(std::move(t));
  if (terms_.empty()) {
    denom_ = 1;
    return;
  }
  std::int64_t g = denom_;
  for (const auto& t : terms_) g = std::gcd(g, t.first);
  if (g > 1) {
    denom_ /= g;
    for (auto& t : terms_) t.first /= g;
  }
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rational LaurentPoly::low_exponent() const {
  if (terms_.empty()) throw std::invalid_argument("low_exponent of zero");
  Rational r(terms_.front().first, denom_);
  r.canonicalize();
  return r;
}

Rational LaurentPoly::high_exponent() const {
  if (terms_.empty()) throw std::invalid_argument("high_exponent of zero");
  Rational r(terms_.back().first, denom_);
  r.canonicalize();
  return r;
}

Integer LaurentPoly::coeff(const Rational& e) const {
  Rational scaled = e * denom_;
  if (scaled.get_den() != 1) return 0;
  const long k = scaled.get_num().get_si();
  for (const auto& t : terms_)
    if (t.first == k) return t.second;
  return 0;
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

std::vector<LaurentPoly::Term> LaurentPoly::scaled_terms(std::int64_t d) const {
  if (d % denom_ != 0) throw std::invalid_argument("scaled_terms: incompatible scale");
  const std::int64_t f = d / denom_;
  std::vector<Term> out = terms_;
  for (auto& t : out) t.first *= f;
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first = -t.first;
  std::reverse(p.terms_.begin(), p.terms_.end());
  return p;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw ExactnessError("unit_inverse: " + to_string() + " is not a unit");
  LaurentPoly p = *this;
  p.terms_[0].first = -p.terms_[0].first;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const std::int64_t d = lcm64(denom_, o.denom_);
  std::vector<Term> a = scaled_terms(d);
  std::vector<Term> b = o.scaled_terms(d);
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(std::move(b[j++]));
    } else {
      Integer c = a[i].second + b[j].second;
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  denom_ = d;
  // Already sorted and merged; only the scale may need reducing.
  if (terms_.empty()) {
    denom_ = 1;
  } else {
    std::int64_t g = denom_;
    for (const auto& t : terms_) g = std::gcd(g, t.first);
    if (g > 1) {
      denom_ /= g;
      for (auto& t : terms_) t.first /= g;
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::int64_t d = lcm64(a.denom_, b.denom_);
  const std::int64_t fa = d / a.denom_;
  const std::int64_t fb = d / b.denom_;
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.emplace_back(ea * fa + eb * fb, ca * cb);
  return LaurentPoly::from_terms(d, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (a.is_zero()) return LaurentPoly{};
  if (b.is_unit()) return a * b.unit_inverse();
  const std::int64_t d = lcm64(a.denom_, b.denom_);
  auto [la, pa] = to_poly(a, d);
  auto [lb, pb] = to_poly(b, d);
  auto q = poly_divexact(std::move(pa), pb);
  if (!q) return std::nullopt;
  return from_poly(*q, la - lb, d);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    const std::int64_t g = std::gcd(k, denom_);
    const std::int64_t num = k / g;
    const std::int64_t den = denom_ / g;
    const bool neg = c < 0;
    Integer mag = neg ? Integer(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (num == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str();
      os << exponent_string(num, den);
    }
  }
  return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    const std::int64_t g = std::gcd(k, denom_);
    nlohmann::json coeff;
    if (c.fits_slong_p())
      coeff = c.get_si();
    else
      coeff = c.get_str();
    arr.push_back({k / g, denom_ / g, coeff});
  }
  return arr;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  LaurentPoly out;
  for (const auto& t : j) {
    const std::int64_t num = t.at(0).get<std::int64_t>();
    const std::int64_t den = t.at(1).get<std::int64_t>();
    Integer c = t.at(2).is_string() ? Integer(t.at(2).get<std::string>())
                                    : Integer(t.at(2).get<long>());
    out += monomial(c, num, den);
  }
  return out;
}

LaurentPoly quantum_integer(std::int64_t n, std::int64_t d) {
  if (d <= 0) throw std::invalid_argument("quantum_integer: d must be positive");
  if (n < 0) return -quantum_integer(-n, d);
  std::vector<LaurentPoly::Term> terms;
  for (std::int64_t k = 0; k < n; ++k) terms.emplace_back(d * (n - 1 - 2 * k), Integer(1));
  return LaurentPoly::from_terms(1, std::move(terms));
}

LaurentPoly quantum_factorial(std::int64_t n, std::int64_t d) {
  if (n < 0) throw std::invalid_argument("quantum_factorial: negative argument");
  LaurentPoly out(1);
  for (std::int64_t k = 2; k <= n; ++k) out *= quantum_integer(k, d);
  return out;
}

LaurentPoly quantum_binomial(std::int64_t n, std::int64_t k, std::int64_t d) {
  if (k < 0 || k > n) return {};
  auto q = LaurentPoly::divide_exact(quantum_factorial(n, d),
                                     quantum_factorial(k, d) * quantum_factorial(n - k, d));
  if (!q) throw ExactnessError("quantum_binomial: inexact division");
  return *q;
}

// ---------------------------------------------------------------------------

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_unit()) {
    num_ *= den_.unit_inverse();
    den_ = LaurentPoly(1);
    return;
  }
  const std::int64_t d = lcm64(num_.denom(), den_.denom());
  auto [ln, pn] = to_poly(num_, d);
  auto [ld, pd] = to_poly(den_, d);
  Poly g = poly_gcd(pn, pd);
  if (!(g.size() == 1 && g[0] == 1)) {
    pn = *poly_divexact(std::move(pn), g);
    pd = *poly_divexact(std::move(pd), g);
  }
  if (pd.back() < 0) {
    for (auto& x : pn) x = -x;
    for (auto& x : pd) x = -x;
  }
  num_ = from_poly(pn, ln - ld, d);
  den_ = from_poly(pd, 0, d);
}

std::optional<LaurentPoly> RatFunc::to_laurent() const {
  if (den_.is_one()) return num_;
  return std::nullopt;
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  if (is_zero()) return *this;
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------

BiGradedSeries::BiGradedSeries(int t_min, int t_max) : t_min_(t_min), t_max_(t_max) {
  if (t_max < t_min) throw std::invalid_argument("BiGradedSeries: empty range");
}

LaurentPoly BiGradedSeries::coeff(int k) const {
  if (k < t_min_ || k > t_max_)
    throw std::out_of_range("BiGradedSeries: t-order " + std::to_string(k) + " outside [" +
                            std::to_string(t_min_) + ", " + std::to_string(t_max_) + "]");
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? LaurentPoly{} : it->second;
}

void BiGradedSeries::add_to(int k, const LaurentPoly& c) {
  if (k < t_min_ || k > t_max_) throw std::out_of_range("BiGradedSeries: add outside range");
  LaurentPoly v = coeff(k) + c;
  if (v.is_zero())
    coeffs_.erase(k);
  else
    coeffs_[k] = std::move(v);
}

LaurentPoly BiGradedSeries::sum() const {
  LaurentPoly s;
  for (const auto& [k, c] : coeffs_) s += c;
  return s;
}

bool operator==(const BiGradedSeries& a, const BiGradedSeries& b) {
  return a.t_max_ == b.t_max_ && a.coeffs_ == b.coeffs_;
}

std::string BiGradedSeries::to_string() const {
  std::ostringstream os;
  for (int k = t_min_; k <= t_max_; ++k) os << "t^" << k << ": " << coeff(k).to_string() << "\n";
  os << "+ O(t^" << (t_max_ + 1) << ")\n";
  return os.str();
}

nlohmann::json BiGradedSeries::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : coeffs_) terms.push_back({{"t", k}, {"coeff", c.to_json()}});
  return {{"t_min", t_min_}, {"t_max", t_max_}, {"terms", terms}};
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
  TPoly out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      LaurentPoly v = out[i + j] + x * y;
      if (v.is_zero())
        out.erase(i + j);
      else
        out[i + j] = std::move(v);
    }
  return out;
}

BiGradedSeries series_from_rational(const TPoly& num, const TPoly& den, int t_max) {
  auto first_nonzero = [](const TPoly& p) {
    for (auto it = p.begin(); it != p.end(); ++it)
      if (!it->second.is_zero()) return it;
    return p.end();
  };
  auto d0 = first_nonzero(den);
  if (d0 == den.end()) throw std::invalid_argument("series_from_rational: zero denominator");
  if (!d0->second.is_unit())
    throw std::invalid_argument("series_from_rational: lowest t-coefficient of the denominator (" +
                                d0->second.to_string() + ") is not a unit");
  const int shift = d0->first;
  const LaurentPoly inv = d0->second.unit_inverse();

  auto n0 = first_nonzero(num);
  const int lo = (n0 == num.end() ? 0 : n0->first) - shift;
  BiGradedSeries out(std::min(lo, t_max), t_max);
  if (n0 == num.end()) return out;

  // c_k = inv * (n_{k+shift} - sum_{j>=1} d_{shift+j} c_{k-j})
  std::map<int, LaurentPoly> c;
  for (int k = lo; k <= t_max; ++k) {
    LaurentPoly acc;
    if (auto it = num.find(k + shift); it != num.end()) acc = it->second;
    for (const auto& [e, dc] : den) {
      const int j = e - shift;
      if (j <= 0) continue;
      if (auto ck = c.find(k - j); ck != c.end()) acc -= dc * ck->second;
    }
    if (!acc.is_zero()) {
      c[k] = acc * inv;
      out.add_to(k, c[k]);
    }
  }
  return out;
}

}  // namespace quantinv
