#pragma once

// Sparse multivariate Laurent polynomials in x_0..x_n with QPoly coefficients.

#include "dysonct/qpoly.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dysonct {

/// Largest supported number of variables (n + 1).
inline constexpr int kMaxVariables = 12;

class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector of x_0..x_n; entries may be negative.
class Monomial {
 public:
  Monomial() = default;
  /// The unit monomial in n + 1 variables.
  explicit Monomial(int n);
  Monomial(int n, std::span<const int> exps);
  Monomial(int n, std::initializer_list<int> exps)
      : Monomial(n, std::span<const int>(exps.begin(), exps.size())) {}

  /// x_num / x_den (or 1 when num == den).
  static Monomial ratio(int n, int num, int den);

  [[nodiscard]] int n() const { return size_ - 1; }
  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return exps_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] bool is_unit() const;
  [[nodiscard]] int total_degree() const;
  [[nodiscard]] std::vector<int> to_vector() const;

  Monomial& operator+=(const Monomial& rhs);
  friend Monomial operator+(Monomial lhs, const Monomial& rhs) { return lhs += rhs; }
  friend bool operator==(const Monomial& x, const Monomial& y) { return x.exps_ == y.exps_ && x.size_ == y.size_; }
  /// Lexicographic order on the exponent vector.
  friend bool operator<(const Monomial& x, const Monomial& y);

  [[nodiscard]] std::size_t hash() const;

 private:
  std::array<std::int32_t, kMaxVariables> exps_{};
  std::int32_t size_ = 1;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Per-variable [min, max] exponent over the support of a polynomial.
struct ExponentBox {
  std::array<std::int32_t, kMaxVariables> lo{};
  std::array<std::int32_t, kMaxVariables> hi{};
};

class LaurentPoly {
 public:
  using TermMap = std::unordered_map<Monomial, QPoly, MonomialHash>;

  /// The zero polynomial in x_0..x_n.
  explicit LaurentPoly(int n);

  static LaurentPoly constant(int n, const QPoly& c);
  static LaurentPoly one(int n) { return constant(n, QPoly::constant(1)); }
  static LaurentPoly term(const Monomial& m, const QPoly& c);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const TermMap& terms() const { return terms_; }

  /// Adds c * x^m, dropping the entry if it cancels to zero.
  void add_term(const Monomial& m, const QPoly& c);

  [[nodiscard]] QPoly coeff_of(const Monomial& m) const;
  [[nodiscard]] QPoly constant_term() const;

  /// Common total x-degree, or nullopt for mixed degrees. Throws on zero.
  [[nodiscard]] std::optional<int> homogeneous_degree() const;
  /// Substitutes x_i -> x_{(i+k) mod (n+1)} / q^{floor((i+k)/(n+1))}.
  [[nodiscard]] LaurentPoly pi_action(int k) const;
  /// Replaces every coefficient by its value at q = 1.
  [[nodiscard]] LaurentPoly at_q_equals_one() const;
  [[nodiscard]] ExponentBox exponent_box() const;
  /// Terms sorted lexicographically by exponent vector.
  [[nodiscard]] std::vector<std::pair<Monomial, QPoly>> sorted_terms() const;
  [[nodiscard]] std::string to_string() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend bool operator==(const LaurentPoly& f, const LaurentPoly& g);

 private:
  int n_;
  TermMap terms_;
};

inline LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
inline LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }
inline QPoly coeff_of(const LaurentPoly& f, const Monomial& m) { return f.coeff_of(m); }
inline QPoly ct_x(const LaurentPoly& f) { return f.constant_term(); }

/// prod_{k=0}^{m-1} (1 - q^{offset+k} x^z)
LaurentPoly shifted_factorial(const Monomial& z, int m, int offset);

/// Renders a single monomial as "x0^e0*x2^e2" ("1" for the unit monomial).
std::string to_string(const Monomial& m);

}  // namespace dysonct
