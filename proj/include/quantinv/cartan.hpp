#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "quantinv/exactalg.hpp"

namespace quantinv {

/// Finite type of a simple Lie algebra, e.g. {'B', 3}.
struct LieType {
  char series = 'A';
  int rank = 1;

  /// Parses "A1", "b3", "G2"; throws std::invalid_argument on unknown or
  /// invalid rank.
  static LieType parse(std::string_view text);
  std::string to_string() const;
  friend auto operator<=>(const LieType&, const LieType&) = default;
};

/// Weight in fundamental-weight coordinates: coords[i] = alpha_i^vee(lambda).
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }
  /// Parses "1,0,2".
  static Weight parse(std::string_view text);

  std::size_t rank() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  bool is_zero() const;
  bool is_dominant() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(int k) const;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;
};

/// Root datum of one finite-type simple Lie algebra.
///
/// Numbering is Bourbaki's; `cartan()(i, j)` is alpha_j^vee(alpha_i), so row
/// i holds the fundamental-weight coordinates of the simple root alpha_i.
/// The inner product is normalized so short roots have squared length 2,
/// and d_i = <alpha_i, alpha_i>/2.
class CartanData {
 public:
  explicit CartanData(LieType type);
  static CartanData parse(std::string_view name) { return CartanData(LieType::parse(name)); }

  const LieType& type() const { return type_; }
  std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }
  int cartan(std::size_t i, std::size_t j) const { return c_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return c_; }
  int symmetrizer(std::size_t i) const { return d_[i]; }
  const std::vector<int>& symmetrizers() const { return d_; }
  /// Determinant of the Cartan matrix; exponents of q live in (1/D)Z.
  int det() const { return det_; }
  const std::vector<std::vector<Rational>>& inverse_cartan() const { return inv_; }
  const Weight& rho() const { return rho_; }
  /// Reduced word for w0, 0-based simple reflection indices, applied left to right.
  const std::vector<int>& longest_word() const { return longest_word_; }
  /// Positive roots in simple-root coordinates, sorted by height.
  const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }

  Weight simple_root(std::size_t i) const;
  /// Weight coordinates of a root-lattice element given in simple-root coordinates.
  Weight from_root_coords(const std::vector<int>& r) const;
  /// Simple-root coordinates of a weight (rational in general).
  std::vector<Rational> root_coords(const Weight& w) const;

  /// Symmetrized inner product <lambda, mu>.
  Rational pairing(const Weight& a, const Weight& b) const;
  /// rho^vee(lambda): sum of the simple-root coordinates.
  Rational rho_check(const Weight& w) const;
  /// 2 rho^vee(lambda), always an integer.
  long two_rho_check(const Weight& w) const;

  Weight reflect(std::size_t i, const Weight& w) const;
  Weight apply_word(const std::vector<int>& word, const Weight& w) const;
  Weight dominant_representative(const Weight& w) const;
  /// lambda* = -w0(lambda).
  Weight dual_weight(const Weight& w) const;
  /// True iff every weight of V_lambda is Weyl-conjugate to lambda.
  bool is_minuscule(const Weight& w) const;
  /// Dominant weights of V_lambda, lambda first.
  std::vector<Weight> dominant_weights(const Weight& highest) const;
  /// All weights of V_lambda (without multiplicity), by string saturation.
  std::vector<Weight> weight_system(const Weight& highest) const;

  /// Number of positive roots from the classification.
  static int known_positive_root_count(LieType t);

 private:
  LieType type_;
  std::vector<std::vector<int>> c_;
  std::vector<int> d_;
  int det_ = 1;
  std::vector<std::vector<Rational>> inv_;
  Weight rho_;
  std::vector<int> longest_word_;
  std::vector<std::vector<int>> positive_roots_;
};

/// Descent-greedy reduced word for w0: starting from rho, repeatedly reflect
/// in the smallest index with a positive coordinate until antidominant.
std::vector<int> longest_word_compute(const CartanData& cd);

}  // namespace quantinv
