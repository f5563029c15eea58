#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quantinv/cartan.hpp"
#include "quantinv/exactalg.hpp"
#include "quantinv/linalg.hpp"

namespace quantinv {

using CartanPtr = std::shared_ptr<const CartanData>;

/// Raised when a constructed module fails an exactness or integrality
/// self-check. Signals a convention or construction bug, never bad input.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One weight space of a Repn: basis vectors offset..offset+dim-1.
struct WeightSpace {
  Weight weight;
  int depth = 0;  // height of (highest - weight)
  std::size_t offset = 0;
  std::size_t dim = 0;
};

/// Expresses the basis of one weight space through raising operators
/// applied to the weight space below: e_m = sum_k coeff[m][k] E_{gen[k].first} e_{gen[k].second}.
/// The lowest weight space has no generators.
struct RaisingData {
  std::vector<std::pair<std::size_t, std::size_t>> gen;
  std::vector<std::vector<RatFunc>> coeff;
};

/// The irreducible U_q(g)-module of a given dominant highest weight, as
/// explicit weight-graded matrices over Z[q^{1/D}, q^{-1/D}].
///
/// Basis vectors are divided-power monomials F_{i1}^{(a1)}...F_{ik}^{(ak)} v_h,
/// chosen weight space by weight space; index 0 is v_h. K_mu acts on a vector
/// of weight nu by q^{<mu,nu>}; Ktilde_{+-i} = K_{+-alpha_i}.
class Repn {
 public:
  /// Builds V_lambda. Throws std::invalid_argument if lambda is not dominant
  /// and ConstructionError if any integrality check fails.
  static Repn build(CartanPtr cd, const Weight& highest);
  /// The dual space V^* with (u.f)(v) = f(S(u)v), in the basis dual to that
  /// of `v`, reordered so that its highest weight space comes first.
  static Repn literal_dual(const Repn& v);

  bool is_literal_dual() const { return literal_dual_; }
  /// For a literal dual: position of the dual basis vector e^b.
  std::size_t dual_index(std::size_t b) const { return dual_perm_.at(b); }

  const CartanData& cartan() const { return *cd_; }
  const CartanPtr& cartan_ptr() const { return cd_; }
  const Weight& highest_weight() const { return highest_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return cd_->rank(); }

  /// Weight spaces in construction order (by depth, then weight descending).
  const std::vector<WeightSpace>& spaces() const { return spaces_; }
  std::optional<std::size_t> space_of(const Weight& w) const;
  const Weight& weight_of(std::size_t basis_index) const { return spaces_[space_index_[basis_index]].weight; }
  std::size_t space_index_of(std::size_t basis_index) const { return space_index_[basis_index]; }
  std::size_t highest_index() const { return 0; }
  std::size_t lowest_index() const { return lowest_index_; }
  std::map<Weight, std::size_t> multiplicities() const;

  const SparseMatrix<LaurentPoly>& E(std::size_t i) const { return e_.at(i); }
  const SparseMatrix<LaurentPoly>& F(std::size_t i) const { return f_.at(i); }
  /// Divided powers E_i^n/[n]_{q^{d_i}}!, F_i^n/[n]_{q^{d_i}}!.
  SparseMatrix<LaurentPoly> E_div(std::size_t i, int n) const;
  SparseMatrix<LaurentPoly> F_div(std::size_t i, int n) const;
  /// Diagonal K_mu.
  SparseMatrix<LaurentPoly> K(const Weight& mu) const;
  /// Ktilde_i (sign=+1) or Ktilde_{-i} (sign=-1).
  SparseMatrix<LaurentPoly> Ktilde(std::size_t i, int sign) const;
  /// Exponent <mu, wt(basis)> of K_mu on a basis vector.
  Rational k_exponent(const Weight& mu, std::size_t basis_index) const;

  const RaisingData& raising(std::size_t space) const { return raising_.at(space); }

  std::string describe() const;

 private:
  Repn() = default;
  void compute_raising_data();

  CartanPtr cd_;
  Weight highest_;
  std::size_t dim_ = 0;
  std::vector<WeightSpace> spaces_;
  std::map<Weight, std::size_t> space_lookup_;
  std::vector<std::size_t> space_index_;
  std::size_t lowest_index_ = 0;
  std::vector<SparseMatrix<LaurentPoly>> e_;
  std::vector<SparseMatrix<LaurentPoly>> f_;
  std::vector<RaisingData> raising_;
  bool literal_dual_ = false;
  std::vector<std::size_t> dual_perm_;
};

using RepnPtr = std::shared_ptr<const Repn>;

/// Applies F_{i1}^{(lambda^{i1})}, F_{i2}^{((s1 lambda)^{i2})}, ... to v_h.
/// The result spans the lowest weight space.
SparseVec<LaurentPoly> extremal_vector(const Repn& rep, const std::vector<int>& word);

/// sum over weights mu of dim V[mu] q^{<2 rho, mu>}.
LaurentPoly quantum_character(const Repn& rep);

/// V_lambda together with V_{lambda*} and the invariant pairing
/// ev: V_{lambda*} (x) V_lambda -> trivial normalized by ev(v_l (x) v_h) = 1,
/// where v_l is the divided-power extremal vector of V_{lambda*}.
///
/// The pairing is integral but in general not unimodular, so the
/// identification of V_{lambda*} with the literal dual V_lambda^* is a
/// Laurent matrix whose inverse has denominators.
struct DualRepn {
  RepnPtr base;     // V_lambda
  RepnPtr dual;     // V_{lambda*}
  RepnPtr literal;  // V_lambda^*
  std::vector<int> word;
  SparseVec<LaurentPoly> v_l;
  /// pairing(a, b) = ev(f_a (x) e_b), f_a basis of V_{lambda*}, e_b of V_lambda.
  SparseMatrix<LaurentPoly> pairing;
  /// V_{lambda*} -> V_lambda^* (columns: images of f_a in the dual basis).
  SparseMatrix<LaurentPoly> iso_to_literal;
  /// Its inverse, V_lambda^* -> V_{lambda*}.
  SparseMatrix<RatFunc> iso_from_literal;
};

/// Builds the pairing between `base` and a separately built V_{lambda*}.
DualRepn dual_repn(RepnPtr base, RepnPtr dual, RepnPtr literal, const std::vector<int>& word);

/// Matrices of the antipode images S(E_i) = -Ktilde_{-i} E_i and
/// S(F_i) = -F_i Ktilde_i on a module.
SparseMatrix<LaurentPoly> antipode_E(const Repn& rep, std::size_t i);
SparseMatrix<LaurentPoly> antipode_F(const Repn& rep, std::size_t i);

/// Checks the defining relations (i)-(v) as exact matrix identities;
/// returns one message per failed relation instance.
std::vector<std::string> relation_failures(const Repn& rep);

/// "rep-info" report.
nlohmann::json rep_info_json(const Repn& rep);
std::string rep_info_text(const Repn& rep);

}  // namespace quantinv
