#pragma once

#include <filesystem>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quantinv/rigidity.hpp"
#include "quantinv/tangle.hpp"

namespace quantinv {

/// Input that parses but cannot be evaluated (e.g. non-dominant labels).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Object carried by a strand: V_label, or its literal dual for down strands.
struct ObjKey {
  Weight label;
  bool dual = false;
  friend auto operator<=>(const ObjKey&, const ObjKey&) = default;
};

/// Per-algebra cache of modules, braidings and duality maps. Concurrent
/// requests for the same key wait for a single construction.
class Session {
 public:
  explicit Session(CartanPtr cd);

  /// Shared process-wide session for an algebra.
  static std::shared_ptr<Session> for_algebra(const LieType& t);

  const CartanData& cartan() const { return *cd_; }
  const CartanPtr& cartan_ptr() const { return cd_; }

  RepnPtr object(const ObjKey& k);
  RepnPtr irrep(const Weight& w) { return object({w, false}); }
  /// sigma_{X,Y} (inverse=false) or sigma_{X,Y}^{-1}: Y (x) X -> X (x) Y.
  std::shared_ptr<const LMatrix> braid(const ObjKey& x, const ObjKey& y, bool inverse);
  std::shared_ptr<const CupCapMaps> cupcap(const Weight& w, RibbonChoice choice);

  /// Persist braid blocks under `dir` (created if needed).
  void set_cache_dir(std::optional<std::filesystem::path> dir);

 private:
  template <class K, class V, class F>
  std::shared_ptr<const V> get_or_build(std::map<K, std::shared_future<std::shared_ptr<const V>>>& m, const K& key,
                                        F&& build);

  CartanPtr cd_;
  std::mutex mu_;
  std::optional<std::filesystem::path> cache_dir_;
  std::map<ObjKey, std::shared_future<std::shared_ptr<const Repn>>> objects_;
  std::map<std::tuple<ObjKey, ObjKey, bool>, std::shared_future<std::shared_ptr<const LMatrix>>> braids_;
  std::map<std::pair<Weight, RibbonChoice>, std::shared_future<std::shared_ptr<const CupCapMaps>>> cupcaps_;
};

/// Identifier of the conventions that determine every cached block.
const std::string& conventions_tag();

/// Power of the ribbon scalar contributed by twist_pos (twist_neg is its
/// inverse): the value of a positive curl.
constexpr int kTwistPower = 1;

/// Matrix from the bottom boundary space to the top boundary space
/// (1 x 1 for closed links). Throws ValidationError for non-dominant labels.
LMatrix evaluate(const Tangle& t, RibbonChoice choice, Session* session = nullptr);
/// Scalar invariant of a closed tangle.
LaurentPoly evaluate_closed(const Tangle& t, RibbonChoice choice, Session* session = nullptr);

/// prod_i (-1)^{2 rho^vee(lambda_i) (wr(L_i) - 1)}.
int schur_sign(const Tangle& t);

/// evaluate(t, ST) / evaluate(t, standard) as +-1; nullopt if the standard
/// value is zero or the ratio is not a sign.
std::optional<int> st_standard_ratio(const Tangle& t, Session* session = nullptr);

struct InvarianceReport {
  LaurentPoly st1, st2, std1, std2;
  bool equal() const { return st1 == st2 && std1 == std2; }
};
InvarianceReport invariance_suite(const Tangle& t1, const Tangle& t2, Session* session = nullptr);

/// Applies `op` (rows: product of out_dims, cols: product of in_dims) to the
/// factors [pos, pos + in_dims.size()) of a vector over `dims`, without
/// forming the Kronecker-padded operator.
SparseVec<LaurentPoly> apply_local(const LMatrix& op, const SparseVec<LaurentPoly>& x,
                                   const std::vector<std::size_t>& dims, std::size_t pos, std::size_t n_in,
                                   const std::vector<std::size_t>& out_dims);

/// JSON matrix schema shared by the disk cache: {rows, cols, entries: [[r, c, poly]]}.
nlohmann::json matrix_to_json(const LMatrix& m);
LMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace quantinv
