#pragma once

// First-layer coefficients of the q-Dyson product: closed forms and their
// brute-force counterparts.
//
// A first-layer coefficient is CT_x (x_{j_1}...x_{j_m} / x_{i_1}...x_{i_m}) D_n(x,a,q)
// with I = {i_1 < ... < i_m} a proper subset of {0..n} and J = {j_1 <= ... <= j_m}
// a multiset avoiding I.

#include "dysonct/dyson.hpp"
#include "dysonct/laurent.hpp"
#include "dysonct/qpoly.hpp"
#include "dysonct/report.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dysonct {

/// Thrown when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subset of I given by positions into I (bit k <=> i_{k+1}).
using PositionMask = std::uint32_t;

struct LayerSpec {
  int n = 0;
  std::vector<int> I;
  std::vector<int> J;

  /// Validates every invariant; throws InvalidParameters.
  static LayerSpec make(int n, std::vector<int> I, std::vector<int> J);

  [[nodiscard]] int m() const { return static_cast<int>(I.size()); }
  [[nodiscard]] PositionMask full_mask() const { return (PositionMask{1} << m()) - 1; }
  /// Values of I selected by mask, ascending.
  [[nodiscard]] std::vector<int> select(PositionMask mask) const;
  /// The layer (I_l, J_l) where J_l is the pairing set of I_l.
  [[nodiscard]] LayerSpec sublayer(PositionMask mask) const;
};

/// N(k, S): number of entries of S (with multiplicity) not exceeding k.
int count_upto(int k, std::span<const int> S);

/// w_i = a_i off T, 0 on T.
std::vector<int> weight_vector(std::span<const int> a, std::span<const int> T);

/// L(T | I); requires i_1 = 0 and T a nonempty subset of I.
int l_exponent(std::span<const int> T, const LayerSpec& layer, std::span<const int> a);

/// L*(T | I), valid for any i_1. With t = #{j < i_1}:
///   t + sum_{k >= i_1} [N(k,I) - N(k,J+)] w_k + sum_{k < i_1} [t - N(k,J-)] a_k.
int l_star_exponent(std::span<const int> T, const LayerSpec& layer, std::span<const int> a);

/// Exponent vector of prod x_i / prod x_j; its coefficient in D_n is the
/// first-layer constant term.
Monomial first_layer_target(const LayerSpec& layer);

/// qmult(a) * sum_{T != {}} (-1)^|T| q^{L*(T|I)} (1 - q^{a_T}) / (1 - q^{1+a-a_T}).
QRat first_layer_closed(const LayerSpec& layer, const DysonSpec& a);
/// Brute-force coefficient from the q-Dyson product.
QPoly first_layer_brute(const LayerSpec& layer, const DysonSpec& a);

/// multinomial(a) * sum_{T != {}} (-1)^|T| a_T / (1 + a - a_T).
Rational first_layer_q1_closed(const LayerSpec& layer, const DysonSpec& a);
/// Brute-force coefficient from the classical Dyson product.
Integer first_layer_q1_brute(const LayerSpec& layer, const DysonSpec& a);

VerificationReport verify_first_layer(const LayerSpec& layer, const DysonSpec& a);

/// Throws InvalidParameters unless layer and a share the same n.
void check_same_ambient(const LayerSpec& layer, const DysonSpec& a);

}  // namespace dysonct
