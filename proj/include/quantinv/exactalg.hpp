#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace quantinv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an exactness assumption fails (inexact division, non-unit
/// inverse). Always indicates a bug or a convention mismatch upstream.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Integer Laurent polynomial in q^{1/D}.
///
/// Exponents are stored scaled by D, so the term (k, c) means c * q^{k/D}.
/// The scale is always reduced to the smallest D that represents the value,
/// which makes structural equality coincide with value equality.
class LaurentPoly {
 public:
  using Term = std::pair<std::int64_t, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& c);

  /// c * q^{num/den}
  static LaurentPoly monomial(const Integer& c, std::int64_t num, std::int64_t den = 1);
  /// q^{num/den}
  static LaurentPoly q(std::int64_t num = 1, std::int64_t den = 1);
  static LaurentPoly q(const Rational& exponent);
  /// Build from scaled terms (any order, duplicates summed, zeros dropped).
  static LaurentPoly from_terms(std::int64_t denom, std::vector<Term> terms);

  std::int64_t denom() const { return denom_; }
  /// Terms in increasing exponent order.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True iff the value is +-q^k.
  bool is_unit() const;
  bool is_constant() const;

  /// Lowest/highest exponent as exact rationals; value must be nonzero.
  Rational low_exponent() const;
  Rational high_exponent() const;
  /// Coefficient of q^{e} (zero if absent).
  Integer coeff(const Rational& e) const;
  /// Value at q = 1.
  Integer at_one() const;

  /// Exponents rescaled to denominator `d` (which must be a multiple of denom()).
  std::vector<Term> scaled_terms(std::int64_t d) const;

  LaurentPoly bar() const;
  /// Inverse of a unit +-q^k.
  LaurentPoly unit_inverse() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.denom_ == b.denom_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Exact quotient a/b in the Laurent ring, or nullopt if b does not divide a.
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

  /// "q^2 - 2q^(1/2) + 1 + q^-2": decreasing exponent order.
  std::string to_string() const;
  /// [[numerator_exponent, denominator_exponent, coefficient], ...]
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  void normalize();

  std::int64_t denom_ = 1;
  std::vector<Term> terms_;
};

/// [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d}).
LaurentPoly quantum_integer(std::int64_t n, std::int64_t d = 1);
/// [n]_{q^d}! = [1][2]...[n].
LaurentPoly quantum_factorial(std::int64_t n, std::int64_t d = 1);
/// Quantum binomial [n choose k]_{q^d}; always a Laurent polynomial.
LaurentPoly quantum_binomial(std::int64_t n, std::int64_t k, std::int64_t d = 1);

/// Fraction num/den over LaurentPoly.
///
/// Normal form: den is a polynomial in q^{1/D} with nonzero constant term,
/// positive leading coefficient, and no common factor with num over Z.
/// Units of the Laurent ring are absorbed into num, so a RatFunc that is a
/// Laurent polynomial has den == 1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }
  std::optional<LaurentPoly> to_laurent() const;
  RatFunc inverse() const;
  RatFunc bar() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Laurent polynomial in t with LaurentPoly coefficients.
using TPoly = std::map<int, LaurentPoly>;

/// Truncated series in t with LaurentPoly coefficients. Orders above
/// truncation_order() are unknown, not zero.
class BiGradedSeries {
 public:
  BiGradedSeries() = default;
  BiGradedSeries(int t_min, int t_max);

  int t_min() const { return t_min_; }
  int t_max() const { return t_max_; }
  int truncation_order() const { return t_max_; }

  /// Coefficient of t^k; k must lie in [t_min, t_max].
  LaurentPoly coeff(int k) const;
  void add_to(int k, const LaurentPoly& c);
  /// Nonzero coefficients only.
  const std::map<int, LaurentPoly>& coeffs() const { return coeffs_; }

  /// Sum of the coefficients, i.e. the specialization t = 1 of the truncation.
  LaurentPoly sum() const;

  friend bool operator==(const BiGradedSeries& a, const BiGradedSeries& b);

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  int t_min_ = 0;
  int t_max_ = 0;
  std::map<int, LaurentPoly> coeffs_;
};

/// Expand num/den as a series in t through order t_max. The lowest nonzero
/// t-coefficient of den must be a unit +-q^k.
BiGradedSeries series_from_rational(const TPoly& num, const TPoly& den, int t_max);

/// Product of t-polynomials.
TPoly tpoly_mul(const TPoly& a, const TPoly& b);

}  // namespace quantinv
