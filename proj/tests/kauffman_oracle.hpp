#pragma once

// State-sum Kauffman bracket on the slice list of a closed diagram, ignoring
// orientations and labels. Unnormalised: a single loop has value
// delta = -A^2 - A^-2. Crossings expand as
//   cross_pos = A * (vertical) + A^-1 * (cap-cup),  cross_neg = A^-1 * (vertical) + A * (cap-cup)
// and a twist is (-A^3)^{+-1}. Results are in A = q^{1/2}.

#include <numeric>
#include <vector>

#include "quantinv/tangle.hpp"

namespace oracle {

inline quantinv::LaurentPoly kauffman_bracket(const quantinv::Tangle& t) {
  using quantinv::LaurentPoly;
  using quantinv::SliceKind;
  const LaurentPoly A = LaurentPoly::q(1, 2), Ainv = LaurentPoly::q(-1, 2);
  const LaurentPoly delta = -(A * A) - Ainv * Ainv;
  std::vector<std::size_t> crossings;
  LaurentPoly twist(1);
  for (std::size_t k = 0; k < t.slices().size(); ++k) {
    const auto kind = t.slices()[k].kind;
    if (kind == SliceKind::cross_pos || kind == SliceKind::cross_neg) crossings.push_back(k);
    if (kind == SliceKind::twist_pos) twist *= -(A * A * A);
    if (kind == SliceKind::twist_neg) twist *= -(Ainv * Ainv * Ainv);
  }
  LaurentPoly total;
  for (unsigned long state = 0; state < (1ul << crossings.size()); ++state) {
    std::vector<std::size_t> parent;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto fresh = [&] {
      parent.push_back(parent.size());
      return parent.size() - 1;
    };
    auto join = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    std::vector<std::size_t> ids;
    LaurentPoly w(1);
    std::size_t c = 0;
    for (const auto& s : t.slices()) {
      switch (s.kind) {
        case SliceKind::cross_pos:
        case SliceKind::cross_neg: {
          const bool vertical = ((state >> c++) & 1u) == 0;
          const bool pos = s.kind == SliceKind::cross_pos;
          w *= (vertical == pos) ? A : Ainv;
          if (!vertical) {
            join(ids[s.pos], ids[s.pos + 1]);
            const auto id = fresh();
            ids[s.pos] = ids[s.pos + 1] = id;
          }
          break;
        }
        case SliceKind::cup_cw:
        case SliceKind::cup_ccw: {
          const auto id = fresh();
          ids.insert(ids.begin() + static_cast<long>(s.pos), {id, id});
          break;
        }
        case SliceKind::cap_cw:
        case SliceKind::cap_ccw:
          join(ids[s.pos], ids[s.pos + 1]);
          ids.erase(ids.begin() + static_cast<long>(s.pos), ids.begin() + static_cast<long>(s.pos) + 2);
          break;
        default:
          break;
      }
    }
    std::size_t loops = 0;
    for (std::size_t x = 0; x < parent.size(); ++x) loops += find(x) == x;
    for (std::size_t l = 0; l < loops; ++l) w *= delta;
    total += w;
  }
  return total * twist;
}

}  // namespace oracle
