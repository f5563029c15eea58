#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quantinv/exactalg.hpp"

namespace quantinv {

using QVec = std::vector<Rational>;

/// Finite-dimensional graded algebra over Q with a homogeneous basis.
/// Only local algebras are accepted: degree 0 is spanned by the unit and
/// every other basis element has positive degree.
class GradedAlgebra {
 public:
  /// mult[a][b] holds the coordinates of basis_a * basis_b.
  GradedAlgebra(std::vector<std::string> tags, std::vector<int> degrees, std::vector<std::vector<QVec>> mult,
                std::size_t unit);

  /// Q[y_1..y_n]/(y_1^2, ..., y_n^2) with deg y_i = degree. Basis: square-free monomials.
  static GradedAlgebra square_zero_polynomial(int n, int degree);

  std::size_t dim() const { return degrees_.size(); }
  int degree(std::size_t b) const { return degrees_[b]; }
  const std::string& tag(std::size_t b) const { return tags_[b]; }
  std::size_t unit() const { return unit_; }
  const QVec& mul(std::size_t a, std::size_t b) const { return mult_[a][b]; }
  QVec mul(const QVec& x, const QVec& y) const;
  /// Coordinates of a basis element, or of a named one ("y1", "y1y2", "1").
  QVec element(std::size_t b) const;
  QVec element(const std::string& tag) const;
  /// Basis indices of positive degree; they span the radical.
  std::vector<std::size_t> radical_basis() const;
  bool is_commutative() const;
  std::string render(const QVec& x) const;

 private:
  std::vector<std::string> tags_;
  std::vector<int> degrees_;
  std::vector<std::vector<QVec>> mult_;
  std::size_t unit_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Finite-dimensional graded left module with a homogeneous basis.
class GradedModule {
 public:
  /// action[a][m] holds the coordinates of basis_a . basis_m.
  GradedModule(AlgebraPtr alg, std::vector<int> degrees, std::vector<std::vector<QVec>> action);

  /// Free module with generators in the given degrees (A(-d) for each d).
  static GradedModule free(AlgebraPtr alg, const std::vector<int>& generator_degrees);
  /// A / (left ideal generated by homogeneous elements).
  static GradedModule quotient(AlgebraPtr alg, const std::vector<QVec>& generators);
  static GradedModule residue_field(AlgebraPtr alg);
  /// Submodule of `ambient` spanned (over Q) by homogeneous vectors that are
  /// closed under the action; basis is the given vectors.
  static GradedModule submodule(const GradedModule& ambient, const std::vector<QVec>& basis);

  const GradedAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  std::size_t dim() const { return degrees_.size(); }
  int degree(std::size_t m) const { return degrees_[m]; }
  const std::vector<int>& degrees() const { return degrees_; }
  QVec act(std::size_t a, const QVec& x) const;
  QVec act(const QVec& a, const QVec& x) const;
  /// Internal degree -> dimension.
  std::map<int, int> graded_dimension() const;

 private:
  AlgebraPtr alg_;
  std::vector<int> degrees_;
  std::vector<std::vector<QVec>> action_;
};

/// Minimal graded free resolution P_0 <- P_1 <- ... of a module.
struct Resolution {
  AlgebraPtr algebra;
  /// generator_degrees[i]: degrees of the generators of P_i.
  std::vector<std::vector<int>> generator_degrees;
  /// differentials[i-1] is d_i : P_i -> P_{i-1}; entry [k0][k1] is the
  /// algebra element with d_i(e_k1) = sum_k0 entry * e_k0.
  std::vector<std::vector<std::vector<QVec>>> differentials;
  /// True if the resolution terminated (the last kernel was zero).
  bool finite = false;

  std::size_t length() const { return generator_degrees.size(); }
  std::size_t rank(std::size_t i) const { return i < length() ? generator_degrees[i].size() : 0; }
  /// Degree shifts of P_i = sum_k A(shift_k): the negated generator degrees.
  std::vector<int> shifts(std::size_t i) const;
  bool is_complex() const;
  /// No differential entry has a nonzero unit component.
  bool is_minimal() const;
};

/// Resolves through P_steps (or until the kernel vanishes).
Resolution minimal_resolution(const GradedModule& m, int steps);

/// (homological degree i, internal degree j) -> dim Tor_i(M, N)_j for i <= i_max.
struct TorTable {
  std::map<std::pair<int, int>, int> entries;
  int i_max = 0;

  int dim(int i, int j) const;
  /// Internal degree -> dimension in homological degree i.
  std::map<int, int> graded(int i) const;
  nlohmann::json to_json() const;
  friend bool operator==(const TorTable&, const TorTable&) = default;
};

/// Tor over a commutative algebra via the minimal resolution of M tensored with N.
TorTable tor_bigraded(const GradedModule& m, const GradedModule& n, int i_max);

/// A summand H[a](b) of the assembled Tor group.
struct TorSummand {
  TorTable table;
  int hom_shift = 0;
  int int_shift = 0;
};

/// Monomial of a class in homological degree i and internal degree j of a
/// summand shifted by [a](b): (-t)^{i+a} q^{b-j}.
std::pair<int, LaurentPoly> poincare_monomial(int i, int j, int a, int b);

/// Sum of poincare_monomial over all classes, truncated at t^t_max.
BiGradedSeries assemble_series(const std::vector<TorSummand>& parts, int t_max);

/// The algebra Q[y1,y2]/(y1^2,y2^2), deg y = 2, and the module A/(y1+y2)A.
AlgebraPtr unknot_algebra();
GradedModule unknot_module(const AlgebraPtr& alg);

/// Summands K[-2](2), Tor_A(M, M), K[2](-2): the three pieces with their
/// displayed relative shifts, normalised so the middle piece is unshifted.
std::vector<TorSummand> unknot_summands(int i_max);
/// Poincare series of the colour-2 sl2 unknot through t^t_max (t_max >= 4).
BiGradedSeries unknot_series(int t_max);

/// q^-2 t^2 + 1 + q^2 t^-2 + (q^-2 - q^-2 t)/(1 - t^2 q^-4) as num/den.
std::pair<TPoly, TPoly> unknot_closed_form();
/// The closed form evaluated at t = 1.
LaurentPoly unknot_euler_characteristic();

}  // namespace quantinv
