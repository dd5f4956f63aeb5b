#pragma once

// Exact coefficient ring: Laurent polynomials in q over arbitrary-precision
// integers, plus formal quotients of them.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dysonct {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown by divide_exact when the divisor does not divide the dividend.
class NonExactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Laurent polynomial in q stored densely:
 *   p(q) = sum_k coeffs[k] * q^(min_exp + k).
 *
 * The representation is always trimmed (first and last coefficient nonzero);
 * the zero polynomial has an empty coefficient vector and min_exp 0.
 */
class QPoly {
 public:
  QPoly() = default;
  QPoly(int min_exp, std::vector<Integer> coeffs);

  static QPoly constant(const Integer& c);
  static QPoly monomial(const Integer& c, int exp);
  /// 1 - q^exp
  static QPoly one_minus_q_pow(int exp);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] int min_exp() const { return min_exp_; }
  /// Highest exponent; only meaningful for nonzero polynomials.
  [[nodiscard]] int max_exp() const {
    return min_exp_ + static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] const std::vector<Integer>& coeffs() const { return coeffs_; }
  [[nodiscard]] Integer coeff(int exp) const;
  [[nodiscard]] std::size_t term_count() const;

  /// Value at q = 1 (sum of coefficients).
  [[nodiscard]] Integer eval_at_one() const;
  /// Multiply by q^shift.
  [[nodiscard]] QPoly shifted(int shift) const;

  /// Canonical rendering, e.g. "1 + 2*q + 3*q^2 - q^5".
  [[nodiscard]] std::string to_string() const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);

  /// this += a * b without materializing the product.
  void add_product(const QPoly& a, const QPoly& b);

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  friend QPoly operator-(QPoly p);
  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();

  int min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

/// Quotient of two polynomials and the exact remainder-free quotient if any.
std::optional<QPoly> try_divide_exact(const QPoly& num, const QPoly& den);
/// Exact long division; throws NonExactDivision on a nonzero remainder.
QPoly divide_exact(const QPoly& num, const QPoly& den);

/**
 * Formal quotient num/den. No gcd reduction is ever performed; equality and
 * arithmetic go through cross-multiplication.
 */
class QRat {
 public:
  QRat() : num_(), den_(QPoly::constant(1)) {}
  QRat(QPoly num);  // NOLINT(google-explicit-constructor)
  QRat(QPoly num, QPoly den);

  [[nodiscard]] const QPoly& num() const { return num_; }
  [[nodiscard]] const QPoly& den() const { return den_; }

  /// The polynomial value when den divides num, otherwise nullopt.
  [[nodiscard]] std::optional<QPoly> as_polynomial() const;
  /// Polynomial rendering when exact, "(num)/(den)" otherwise.
  [[nodiscard]] std::string to_string() const;

  friend QRat operator+(const QRat& x, const QRat& y);
  friend QRat operator-(const QRat& x, const QRat& y);
  friend QRat operator*(const QRat& x, const QRat& y);
  friend QRat operator-(const QRat& x);
  friend bool operator==(const QRat& x, const QRat& y);

 private:
  QPoly num_;
  QPoly den_;
};

inline bool qrat_eq(const QRat& x, const QRat& y) { return x == y; }

/// (q)_m = (1-q)(1-q^2)...(1-q^m); 1 for m = 0.
QPoly q_pochhammer(int m);
/// (q)_{sum a} / prod (q)_{a_i}
QRat q_multinomial(std::span<const int> a);
/// (sum a)! / prod a_i!
Integer multinomial(std::span<const int> a);

/// Decimal rendering of a big rational ("p" or "p/q").
std::string to_string(const Rational& r);

}  // namespace dysonct
