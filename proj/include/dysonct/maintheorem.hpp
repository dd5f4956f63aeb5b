#pragma once

// q-analogue of Kadell's identity for paired layers, with the exponent
// machinery (C(I_l), J_k*, g) and the factorization/cancellation lemmas
// used to prove it.
//
// Subsets of I are PositionMasks: bit k selects i_{k+1} together with its
// partner j_{k+1}. Every index below (r_k, t_s, v) is a position into I.

#include "dysonct/dyson.hpp"
#include "dysonct/firstlayer.hpp"
#include "dysonct/laurent.hpp"
#include "dysonct/report.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace dysonct {

/// How J_l u {j_{r_k}} is formed when J has repeated entries.
enum class JStarSemantics { multiset, set };

inline constexpr JStarSemantics kDefaultSemantics = JStarSemantics::multiset;

std::string_view to_string(JStarSemantics s);
JStarSemantics parse_semantics(std::string_view text);

/// The layer violates the hypothesis s < t < u, j_t < i_s < j_u < i_t.
class NpcViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// First (s, t, u), 1-based, with j_t < i_s < j_u < i_t, if any.
std::optional<std::array<int, 3>> npc_witness(const LayerSpec& layer);
inline bool npc_holds(const LayerSpec& layer) { return !npc_witness(layer).has_value(); }

/// I_l, the positions r_1 < ... < r_{m-l} of I \ I_l, and the chain
/// chain[k-1] = I_k = I_l u {i_{r_k}, ..., i_{r_{m-l}}} for k = 1..m-l+1.
struct ChainData {
  PositionMask subset = 0;
  std::vector<int> complement;
  std::vector<PositionMask> chain;
};

ChainData chain_data(const LayerSpec& layer, PositionMask subset);

/// J_k*(J_l) = { j > min I_k : j in J_l u {j_{r_k}} }, ascending; 1 <= k <= m - l.
std::vector<int> j_star(const LayerSpec& layer, PositionMask subset, int k,
                        JStarSemantics sem = kDefaultSemantics);

/// L*(U | I_l) with I_l's pairing set as its J.
int l_star_within(const LayerSpec& layer, PositionMask U, PositionMask subset, const DysonSpec& a);

/// C(I_l) for nonempty I_l.
int c_exponent(const LayerSpec& layer, PositionMask subset, const DysonSpec& a,
               JStarSemantics sem = kDefaultSemantics);

/// 1 + sum_{I_l != {}} (-1)^l q^{C(I_l)} prod_{k in I_l} x_{j_k} / x_{i_k}.
LaurentPoly main_lhs_combination(const LayerSpec& layer, const DysonSpec& a,
                                 JStarSemantics sem = kDefaultSemantics);

/// Brute-force check of
///   (1 - q^{1+a-a_I}) CT[combination * D_n(x,a,q)] = (1 - q^{1+a}) qmult(a).
/// Throws NpcViolation for layers outside the hypothesis.
VerificationReport verify_main(const LayerSpec& layer, const DysonSpec& a,
                               JStarSemantics sem = kDefaultSemantics);

/// g(i_{t_s}) where t_1 < ... < t_{m-d} are the positions of I \ U, s is
/// 1-based and v is the 1-based position of i_v in I.
int g_exponent(const LayerSpec& layer, PositionMask U, int v, int s, const DysonSpec& a);

struct FactorizationCheck {
  QPoly lhs;      // direct sum over I_l
  QPoly rhs;      // signed power of q times the product
  QPoly product;  // prod (1 - q^g) over the residual positions
  bool equality = false;
  bool residual_empty = false;
  bool npc = false;
  /// Only meaningful when npc && !residual_empty.
  bool product_zero = false;
  [[nodiscard]] bool holds() const { return equality && (!npc || residual_empty || product_zero); }
};

/// U nonempty, U != I, v the 1-based position of i_v with i_v <= min U.
FactorizationCheck check_factorization(const LayerSpec& layer, PositionMask U, int v, const DysonSpec& a,
                                       JStarSemantics sem = kDefaultSemantics);
VerificationReport verify_factorization(const LayerSpec& layer, PositionMask U, int v, const DysonSpec& a,
                                        JStarSemantics sem = kDefaultSemantics);

/// For U = {i_h, ..., i_m} (2 <= h <= m):
///   C(U) + L*(U|U) = C(U u {i_{h-1}}) + L*(U | U u {i_{h-1}}) = 1 + a - a_U.
bool verify_tail_cancel(const LayerSpec& layer, int h, const DysonSpec& a,
                        JStarSemantics sem = kDefaultSemantics);

/// Every choice function s -> k_s != s on {1..n} has rows s < k with
/// k_k = r <= s and k_s = l >= k. Requires 2 <= n <= 5.
bool lemma_f1_check(int n);

/// For each nonempty U: sum over I_l containing U of
/// (-1)^{|U|+|I_l|} q^{C(I_l) + L*(U|I_l)}.
std::map<PositionMask, QPoly> expansion_inner_sums(const LayerSpec& layer, const DysonSpec& a,
                                                   JStarSemantics sem = kDefaultSemantics);

}  // namespace dysonct
