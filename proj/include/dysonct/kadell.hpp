#pragma once

// Kadell's identity for the Dyson product, the modified q-product of its
// proposed q-analogue, and the m = 1 counterexample to that q-analogue.

#include "dysonct/dyson.hpp"
#include "dysonct/firstlayer.hpp"

#include <utility>
#include <vector>

namespace dysonct {

/// Pairs (i_k, j_k), one per position k of the layer.
struct PairSet {
  std::vector<std::pair<int, int>> pairs;

  static PairSet positional(const LayerSpec& layer);
  [[nodiscard]] bool contains(int s, int t) const;
};

/// CT [ prod_k (1 - x_{j_k}/x_{i_k}) * D_n(x,a) ] by brute force.
Integer kadell_ct(const LayerSpec& layer, const DysonSpec& a);
/// (1 + a - a_I) * kadell_ct
Rational kadell_dyson_lhs(const LayerSpec& layer, const DysonSpec& a);
/// (1 + a) * multinomial(a)
Rational kadell_dyson_rhs(const DysonSpec& a);
/// (1 + a_I / (1 + a - a_I)) * multinomial(a); requires I nonempty.
Rational lc_closed(const LayerSpec& layer, const DysonSpec& a);

/// For s < t: (x_s/x_t)_{a_s + [(t,s) in P]} and (q x_t/x_s)_{a_t + [(s,t) in P]}.
std::vector<LaurentPoly> kadell_q_product(const LayerSpec& layer, const DysonSpec& a, const PairSet& P);
/// CT of kadell_q_product with the positional pairing.
QPoly kadell_q_ct(const LayerSpec& layer, const DysonSpec& a);

VerificationReport verify_kadell(const LayerSpec& layer, const DysonSpec& a);
/// Evaluates both sides of the proposed q-analogue for one instance.
VerificationReport verify_kadell_q(const LayerSpec& layer, const DysonSpec& a);

/// n = 2, I = {0}, J = {1}, a = (1,1,1). The report's `holds` is false; the
/// extra fields record whether both sides match the published values.
VerificationReport reproduce_counterexample();

}  // namespace dysonct
