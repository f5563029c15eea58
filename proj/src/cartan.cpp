#include "quantinv/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "quantinv/linalg.hpp"

namespace quantinv {

namespace {

bool valid_rank(char s, int n) {
  switch (s) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 3;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

// Sets c_ij = alpha_j^vee(alpha_i) for a bond i - j where alpha_i is long
// and alpha_j short with length ratio `mult`.
void bond(std::vector<std::vector<int>>& c, std::size_t i, std::size_t j, int mult = 1) {
  c[i][j] = -mult;
  c[j][i] = -1;
}

std::vector<std::vector<int>> build_cartan(LieType t) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  switch (t.series) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) bond(c, i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 2 < n; ++i) bond(c, i, i + 1);
      bond(c, n - 2, n - 1, 2);  // alpha_n short
      break;
    case 'C':
      for (std::size_t i = 0; i + 2 < n; ++i) bond(c, i, i + 1);
      bond(c, n - 1, n - 2, 2);  // alpha_n long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) bond(c, i, i + 1);
      bond(c, n - 3, n - 1);
      break;
    case 'E':
      bond(c, 0, 2);
      bond(c, 1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) bond(c, i, i + 1);
      break;
    case 'F':
      bond(c, 0, 1);
      bond(c, 1, 2, 2);
      bond(c, 2, 3);
      break;
    case 'G':
      bond(c, 1, 0, 3);  // alpha_1 short, alpha_2 long
      break;
    default:
      throw std::invalid_argument("unknown Lie series");
  }
  return c;
}

// Solves d_j c_ij = d_i c_ji on the connected Dynkin diagram, scaled so
// that the smallest d_i is 1.
std::vector<int> symmetrize(const std::vector<std::vector<int>>& c) {
  const std::size_t n = c.size();
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0 || sgn(d[j]) != 0) continue;
      d[j] = d[i] * c[j][i] / c[i][j];
      queue.push_back(j);
    }
  }
  Rational lo = *std::min_element(d.begin(), d.end());
  Integer den = 1;
  for (auto& x : d) {
    x /= lo;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<int> out;
  for (const auto& x : d) {
    Rational y = x * den;
    out.push_back(static_cast<int>(y.get_num().get_si()));
  }
  return out;
}

}  // namespace

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("unknown algebra '" + std::string(text) + "'");
  const char s = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  int n = 0;
  auto rest = text.substr(1);
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || !valid_rank(s, n))
    throw std::invalid_argument("unknown algebra '" + std::string(text) + "'");
  return {s, n};
}

std::string LieType::to_string() const { return std::string(1, series) + std::to_string(rank); }

Weight Weight::parse(std::string_view text) {
  std::vector<int> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad weight '" + std::string(text) + "'");
    c.push_back(v);
    pos = comma + 1;
  }
  return Weight(std::move(c));
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int x) { return x >= 0; });
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords.at(i);
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords.at(i);
  return r;
}

Weight Weight::operator-() const { return *this * -1; }

Weight Weight::operator*(int k) const {
  Weight r = *this;
  for (auto& x : r.coords) x *= k;
  return r;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  return os.str();
}

// ---------------------------------------------------------------------------

CartanData::CartanData(LieType type) : type_(type) {
  if (!valid_rank(type.series, type.rank))
    throw std::invalid_argument("unknown algebra '" + type.to_string() + "'");
  c_ = build_cartan(type_);
  d_ = symmetrize(c_);
  const std::size_t n = rank();

  DenseMatrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c_[i][j];
  auto inv = m.inverse();
  if (!inv) throw std::logic_error("singular Cartan matrix");
  inv_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv_[i][j] = (*inv)(i, j);

  // det via fraction-free elimination on the integer matrix
  {
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = c_[i][j];
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a[k][k] == 0) {
        std::size_t p = k + 1;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw std::logic_error("singular Cartan matrix");
        std::swap(a[p], a[k]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
          mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
        }
      prev = a[k][k];
    }
    det_ = sign * static_cast<int>(a[n - 1][n - 1].get_si());
  }

  rho_ = Weight(std::vector<int>(n, 1));

  // Positive roots by simple-root strings, processed in order of height.
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    positive_roots_.push_back(e);
    seen.insert(e);
  }
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    const std::vector<int> beta = positive_roots_[k];
    const Weight bw = from_root_coords(beta);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> down = beta;
      int p = 0;
      for (;;) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      if (p - bw[i] > 0) {
        std::vector<int> up = beta;
        up[i] += 1;
        if (seen.insert(up).second) positive_roots_.push_back(up);
      }
    }
  }
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });

  longest_word_ = longest_word_compute(*this);
}

Weight CartanData::simple_root(std::size_t i) const { return Weight(c_.at(i)); }

Weight CartanData::from_root_coords(const std::vector<int>& r) const {
  Weight w = Weight::zero(rank());
  for (std::size_t j = 0; j < rank(); ++j)
    if (r[j] != 0)
      for (std::size_t k = 0; k < rank(); ++k) w.coords[k] += r[j] * c_[j][k];
  return w;
}

std::vector<Rational> CartanData::root_coords(const Weight& w) const {
  // w^k = sum_j m_j c_jk, so m = w * C^{-1} as a row vector.
  std::vector<Rational> m(rank(), Rational(0));
  for (std::size_t j = 0; j < rank(); ++j)
    for (std::size_t k = 0; k < rank(); ++k)
      if (w[k] != 0) m[j] += w[k] * inv_[k][j];
  return m;
}

Rational CartanData::pairing(const Weight& a, const Weight& b) const {
  // <a, alpha_j> = d_j a^j
  auto m = root_coords(b);
  Rational s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s += m[j] * d_[j] * a[j];
  return s;
}

Rational CartanData::rho_check(const Weight& w) const {
  auto m = root_coords(w);
  Rational s = 0;
  for (const auto& x : m) s += x;
  return s;
}

long CartanData::two_rho_check(const Weight& w) const {
  Rational t = 2 * rho_check(w);
  if (t.get_den() != 1) throw std::logic_error("2 rho^vee(lambda) is not an integer");
  return t.get_num().get_si();
}

Weight CartanData::reflect(std::size_t i, const Weight& w) const {
  const int k = w[i];
  if (k == 0) return w;
  Weight out = w;
  for (std::size_t j = 0; j < rank(); ++j) out.coords[j] -= k * c_[i][j];
  return out;
}

Weight CartanData::apply_word(const std::vector<int>& word, const Weight& w) const {
  Weight out = w;
  for (int i : word) out = reflect(static_cast<std::size_t>(i), out);
  return out;
}

Weight CartanData::dominant_representative(const Weight& w) const {
  Weight out = w;
  for (;;) {
    auto it = std::find_if(out.coords.begin(), out.coords.end(), [](int x) { return x < 0; });
    if (it == out.coords.end()) return out;
    out = reflect(static_cast<std::size_t>(it - out.coords.begin()), out);
  }
}

Weight CartanData::dual_weight(const Weight& w) const { return -apply_word(longest_word_, w); }

std::vector<Weight> CartanData::weight_system(const Weight& highest) const {
  if (!highest.is_dominant())
    throw std::invalid_argument("weight_system: " + highest.to_string() + " is not dominant");
  std::vector<Weight> roots;
  std::vector<Rational> norms;
  for (const auto& r : positive_roots_) {
    roots.push_back(from_root_coords(r));
    norms.push_back(pairing(roots.back(), roots.back()));
  }
  std::set<Weight> seen{highest};
  std::deque<Weight> queue{highest};
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < roots.size(); ++a) {
      Rational n = 2 * pairing(roots[a], mu) / norms[a];
      const long k = n.get_num().get_si();
      const int step = k > 0 ? -1 : 1;
      for (long s = 1; s <= std::labs(k); ++s) {
        Weight nu = mu + roots[a] * static_cast<int>(step * s);
        if (seen.insert(nu).second) queue.push_back(nu);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Weight> CartanData::dominant_weights(const Weight& w) const {
  if (!w.is_dominant())
    throw std::invalid_argument(w.to_string() + " is not dominant");
  // Every dominant weight below w is reached by subtracting positive roots
  // through dominant weights only.
  std::vector<Weight> roots;
  for (const auto& r : positive_roots_) roots.push_back(from_root_coords(r));
  std::set<Weight> seen{w};
  std::vector<Weight> out{w};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& b : roots) {
      Weight nu = out[k] - b;
      if (nu.is_dominant() && seen.insert(nu).second) out.push_back(nu);
    }
  return out;
}

bool CartanData::is_minuscule(const Weight& w) const {
  if (!w.is_dominant())
    throw std::invalid_argument("is_minuscule: " + w.to_string() + " is not dominant");
  return dominant_weights(w).size() == 1;
}

int CartanData::known_positive_root_count(LieType t) {
  const int n = t.rank;
  switch (t.series) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
    default: throw std::invalid_argument("unknown Lie series");
  }
}

std::vector<int> longest_word_compute(const CartanData& cd) {
  std::vector<int> word;
  Weight mu = cd.rho();
  for (;;) {
    auto it = std::find_if(mu.coords.begin(), mu.coords.end(), [](int x) { return x > 0; });
    if (it == mu.coords.end()) break;
    const auto i = static_cast<std::size_t>(it - mu.coords.begin());
    word.push_back(static_cast<int>(i));
    mu = cd.reflect(i, mu);
  }
  return word;
}

}  // namespace quantinv
