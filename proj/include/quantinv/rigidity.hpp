#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quantinv/braiding.hpp"

namespace quantinv {

enum class RibbonChoice { snyder_tingley, standard };

std::string to_string(RibbonChoice c);
/// Accepts "st", "snyder_tingley", "standard".
RibbonChoice parse_ribbon(std::string_view s);

/// Scalar by which the ribbon element acts on V_lambda:
/// standard q^{<lambda, lambda + 2 rho>}, Snyder-Tingley additionally (-1)^{2 rho^vee(lambda)}.
LaurentPoly ribbon_scalar(const CartanData& cd, const Weight& lambda, RibbonChoice choice);

/// Duality maps for V and its literal dual V^*:
///   coev:     1 -> V (x) V^*        sum_b e_b (x) e^b
///   eval:     V^* (x) V -> 1        f (x) v -> f(v)
///   qtrace:   V (x) V^* -> 1        theta^{trace_power} eval o sigma_{V,V^*}
///   qcotrace: 1 -> V^* (x) V        theta^{cotrace_power} sigma_{V,V^*} o coev
/// The two twist powers are chosen at construction as the unique pair for
/// which both zig-zag identities hold and the closed loop equals the
/// quantum dimension under the standard ribbon element.
struct CupCapMaps {
  RepnPtr v;
  RepnPtr dual;
  RibbonChoice choice = RibbonChoice::snyder_tingley;
  LaurentPoly theta;
  int trace_power = 0;
  int cotrace_power = 0;
  LMatrix coev;      // (dim V * dim V^*) x 1
  LMatrix eval;      // 1 x (dim V^* * dim V)
  LMatrix qtrace;    // 1 x (dim V * dim V^*)
  LMatrix qcotrace;  // (dim V^* * dim V) x 1
};

/// Throws ConstructionError if no twist placement passes the self-checks.
CupCapMaps build_cupcap(RepnPtr v, RepnPtr literal_dual, RibbonChoice choice);

/// Both pairs of zig-zag identities as exact matrix identities; returns one
/// message per failure.
std::vector<std::string> zigzag_failures(const CupCapMaps& m);

/// coev(1) and qcotrace(1) are killed by every E_i and F_i.
bool cupcap_invariant(const CupCapMaps& m);

}  // namespace quantinv
