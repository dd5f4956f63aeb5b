#include "dysonct/qpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dysonct {

QPoly::QPoly(int min_exp, std::vector<Integer> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  trim();
}

QPoly QPoly::constant(const Integer& c) { return QPoly(0, {c}); }

QPoly QPoly::monomial(const Integer& c, int exp) { return QPoly(exp, {c}); }

QPoly QPoly::one_minus_q_pow(int exp) {
  return QPoly::constant(1) - QPoly::monomial(1, exp);
}

void QPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& c) { return !c.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                           [](const Integer& c) { return !c.is_zero(); });
  coeffs_.erase(last.base(), coeffs_.end());
  const auto lead = std::distance(coeffs_.begin(), first);
  coeffs_.erase(coeffs_.begin(), first);
  min_exp_ += static_cast<int>(lead);
}

bool QPoly::is_one() const {
  return min_exp_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1;
}

Integer QPoly::coeff(int exp) const {
  if (is_zero() || exp < min_exp_ || exp > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

std::size_t QPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return !c.is_zero(); }));
}

Integer QPoly::eval_at_one() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), Integer(0));
}

QPoly QPoly::shifted(int shift) const {
  QPoly out = *this;
  if (!out.is_zero()) out.min_exp_ += shift;
  return out;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(min_exp_, rhs.min_exp_);
  const int hi = std::max(max_exp(), rhs.max_exp());
  if (lo < min_exp_ || hi > max_exp()) {
    std::vector<Integer> grown(static_cast<std::size_t>(hi - lo + 1));
    std::move(coeffs_.begin(), coeffs_.end(), grown.begin() + (min_exp_ - lo));
    coeffs_ = std::move(grown);
    min_exp_ = lo;
  }
  const auto offset = static_cast<std::size_t>(rhs.min_exp_ - min_exp_);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[offset + k] += rhs.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) { return *this += -rhs; }

QPoly operator-(QPoly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

void QPoly::add_product(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (is_zero()) {
    *this = a * b;
    return;
  }
  const int lo = std::min(min_exp_, a.min_exp_ + b.min_exp_);
  const int hi = std::max(max_exp(), a.max_exp() + b.max_exp());
  if (lo < min_exp_ || hi > max_exp()) {
    std::vector<Integer> grown(static_cast<std::size_t>(hi - lo + 1));
    std::move(coeffs_.begin(), coeffs_.end(), grown.begin() + (min_exp_ - lo));
    coeffs_ = std::move(grown);
    min_exp_ = lo;
  }
  const auto offset = static_cast<std::size_t>(a.min_exp_ + b.min_exp_ - min_exp_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      coeffs_[offset + i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  trim();
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return QPoly(lhs.min_exp_ + rhs.min_exp_, std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c.is_zero()) continue;
    const int e = min_exp_ + static_cast<int>(k);
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::optional<QPoly> try_divide_exact(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (num.is_zero()) return QPoly{};
  // Any exact quotient spans [num.min - den.min, num.max - den.max].
  const int q_lo = num.min_exp() - den.min_exp();
  const int q_hi = num.max_exp() - den.max_exp();
  if (q_hi < q_lo) return std::nullopt;

  std::vector<Integer> rem(num.coeffs());
  const auto& d = den.coeffs();
  const Integer& d0 = d.front();
  std::vector<Integer> quot(static_cast<std::size_t>(q_hi - q_lo + 1));
  for (std::size_t k = 0; k < quot.size(); ++k) {
    if (rem[k].is_zero()) continue;
    Integer r;
    Integer c;
    boost::multiprecision::divide_qr(rem[k], d0, c, r);
    if (!r.is_zero()) return std::nullopt;
    quot[k] = c;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return !c.is_zero(); })) {
    return std::nullopt;
  }
  return QPoly(q_lo, std::move(quot));
}

QPoly divide_exact(const QPoly& num, const QPoly& den) {
  auto q = try_divide_exact(num, den);
  if (!q) {
    throw NonExactDivision("(" + num.to_string() + ") is not divisible by (" +
                           den.to_string() + ")");
  }
  return *std::move(q);
}

QRat::QRat(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) {}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QRat with zero denominator");
}

std::optional<QPoly> QRat::as_polynomial() const { return try_divide_exact(num_, den_); }

std::string QRat::to_string() const {
  if (auto p = as_polynomial()) return p->to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRat operator+(const QRat& x, const QRat& y) {
  if (x.den_ == y.den_) return {x.num_ + y.num_, x.den_};
  return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}

QRat operator-(const QRat& x) { return {-x.num_, x.den_}; }

QRat operator-(const QRat& x, const QRat& y) { return x + (-y); }

QRat operator*(const QRat& x, const QRat& y) { return {x.num_ * y.num_, x.den_ * y.den_}; }

bool operator==(const QRat& x, const QRat& y) { return x.num_ * y.den_ == y.num_ * x.den_; }

QPoly q_pochhammer(int m) {
  if (m < 0) throw std::invalid_argument("q_pochhammer: negative length");
  QPoly out = QPoly::constant(1);
  for (int k = 1; k <= m; ++k) out *= QPoly::one_minus_q_pow(k);
  return out;
}

QRat q_multinomial(std::span<const int> a) {
  int total = 0;
  QPoly den = QPoly::constant(1);
  for (int ai : a) {
    if (ai < 0) throw std::invalid_argument("q_multinomial: negative entry");
    total += ai;
    den *= q_pochhammer(ai);
  }
  return {q_pochhammer(total), den};
}

Integer multinomial(std::span<const int> a) {
  // Product of binomials C(prefix, a_i) keeps intermediates integral.
  Integer out = 1;
  int prefix = 0;
  for (int ai : a) {
    if (ai < 0) throw std::invalid_argument("multinomial: negative entry");
    for (int k = 1; k <= ai; ++k) {
      out *= prefix + k;
      out /= k;
    }
    prefix += ai;
  }
  return out;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) {
    os << '/' << boost::multiprecision::denominator(r);
  }
  return os.str();
}

}  // namespace dysonct
