#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quantinv/cartan.hpp"
#include "quantinv/repn.hpp"

namespace quantinv {

enum class Direction { up, down };

/// A strand on a horizontal level. `label` is the colour of its component;
/// an up strand carries V_label and a down strand its dual.
struct StrandState {
  Weight label;
  Direction dir = Direction::up;
  friend bool operator==(const StrandState&, const StrandState&) = default;
};

enum class SliceKind { cross_pos, cross_neg, cup_cw, cup_ccw, cap_cw, cap_ccw, twist_pos, twist_neg };

std::string to_string(SliceKind k);

/// cup_cw creates (up, down) and cup_ccw creates (down, up) at pos, pos+1;
/// cap_cw consumes (up, down) and cap_ccw consumes (down, up).
struct Slice {
  SliceKind kind = SliceKind::cross_pos;
  std::size_t pos = 0;
  std::optional<Weight> payload;  // cups only
  friend bool operator==(const Slice&, const Slice&) = default;
};

/// Parse or validation failure. `line` is 0 when not tied to input text and
/// `slice` is 0 when not tied to a slice; both are 1-based otherwise.
class TangleError : public std::runtime_error {
 public:
  TangleError(const std::string& msg, int line, int slice)
      : std::runtime_error(msg), line_(line), slice_(slice) {}
  int line() const { return line_; }
  int slice() const { return slice_; }

 private:
  int line_;
  int slice_;
};

class Tangle {
 public:
  /// Validates slice by slice; throws TangleError naming the first bad slice.
  Tangle(CartanPtr cd, std::vector<StrandState> bottom, std::vector<Slice> slices);

  const CartanData& cartan() const { return *cd_; }
  const CartanPtr& cartan_ptr() const { return cd_; }
  const std::vector<StrandState>& bottom() const { return levels_.front(); }
  const std::vector<StrandState>& top() const { return levels_.back(); }
  const std::vector<Slice>& slices() const { return slices_; }
  /// levels()[k] is the boundary below slice k; levels().back() is the top.
  const std::vector<std::vector<StrandState>>& levels() const { return levels_; }
  bool closed() const { return bottom().empty() && top().empty(); }

  friend bool operator==(const Tangle& a, const Tangle& b) {
    return a.cd_->type() == b.cd_->type() && a.levels_.front() == b.levels_.front() && a.slices_ == b.slices_;
  }

 private:
  CartanPtr cd_;
  std::vector<Slice> slices_;
  std::vector<std::vector<StrandState>> levels_;
};

/// Parses the line format
///   algebra <name>
///   bottom: [<weight>;up|down] ...
///   <slice kind> <pos> [<weight>]
/// with '#' comments. Errors carry the line number.
Tangle parse_tangle(std::string_view text);
std::string render(const Tangle& t);
nlohmann::json to_json(const Tangle& t);

struct ComponentData {
  std::vector<Weight> labels;
  std::vector<int> writhe;
  std::size_t size() const { return labels.size(); }
};

/// Components in order of first appearance, with blackboard writhe:
/// signed self-crossings plus +-1 per twist. Throws TangleError if open.
ComponentData trace_components(const Tangle& t);

/// Writhe sign of a crossing slice given the directions of its two strands.
int crossing_sign(SliceKind k, Direction left, Direction right);

/// Markov closure of a braid word (+-i for sigma_i^{+-1}, 1-based) on
/// labels.size() strands. Labels must be constant on the cycles of the
/// braid permutation.
Tangle braid_closure(CartanPtr cd, const std::vector<int>& word, const std::vector<Weight>& labels);

/// Tangle with `ins` inserted before slice index `at` (0..slices().size()).
Tangle insert_slices(const Tangle& t, std::size_t at, const std::vector<Slice>& ins);

/// sigma sigma^{-1} (or the reverse) on strands pos, pos+1 of level `at`.
Tangle insert_rii(const Tangle& t, std::size_t at, std::size_t pos, bool positive_first);
/// s_i s_{i+1} s_i (s_{i+1} s_i s_{i+1})^{-1} with all crossings of one sign:
/// trivial exactly when the braid relation holds.
Tangle insert_riii(const Tangle& t, std::size_t at, std::size_t pos, bool positive);
/// Zig-zag on the strand at `pos` of level `at`, bending left or right.
Tangle insert_smove(const Tangle& t, std::size_t at, std::size_t pos, bool left);
/// Curl on an up strand: cup, crossing, cap; changes writhe by +-1.
Tangle insert_kink(const Tangle& t, std::size_t at, std::size_t pos, bool positive);
/// Replaces the first occurrence of cross i, cross i+1, cross i (one sign)
/// by cross i+1, cross i, cross i+1. Returns nullopt if no such triple.
std::optional<Tangle> apply_riii(const Tangle& t);

/// One random RII, RIII or S-move insertion at a random valid place.
Tangle random_move(const Tangle& t, std::mt19937& rng);

}  // namespace quantinv
