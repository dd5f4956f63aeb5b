#include "dysonct/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace dysonct {

namespace {

void check_size(int n) {
  if (n < 0 || n + 1 > kMaxVariables) {
    throw std::invalid_argument("monomial: n must lie in [0, " +
                                std::to_string(kMaxVariables - 1) + "]");
  }
}

}  // namespace

Monomial::Monomial(int n) : size_(n + 1) { check_size(n); }

Monomial::Monomial(int n, std::span<const int> exps) : Monomial(n) {
  if (static_cast<int>(exps.size()) != size_) {
    throw AmbientMismatch("monomial: expected " + std::to_string(size_) + " exponents");
  }
  std::copy(exps.begin(), exps.end(), exps_.begin());
}

Monomial Monomial::ratio(int n, int num, int den) {
  Monomial m(n);
  m[num] += 1;
  m[den] -= 1;
  return m;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.begin() + size_, [](int e) { return e == 0; });
}

int Monomial::total_degree() const {
  int d = 0;
  for (int i = 0; i < size_; ++i) d += exps_[static_cast<std::size_t>(i)];
  return d;
}

std::vector<int> Monomial::to_vector() const { return {exps_.begin(), exps_.begin() + size_}; }

Monomial& Monomial::operator+=(const Monomial& rhs) {
  if (size_ != rhs.size_) throw AmbientMismatch("monomial: ambient mismatch");
  for (int i = 0; i < size_; ++i) exps_[static_cast<std::size_t>(i)] += rhs.exps_[static_cast<std::size_t>(i)];
  return *this;
}

bool operator<(const Monomial& x, const Monomial& y) {
  return std::lexicographical_compare(x.exps_.begin(), x.exps_.begin() + x.size_,
                                      y.exps_.begin(), y.exps_.begin() + y.size_);
}

std::size_t Monomial::hash() const {
  // FNV-1a over the active exponents.
  std::uint64_t h = 1469598103934665603ULL;
  for (int i = 0; i < size_; ++i) {
    h ^= static_cast<std::uint32_t>(exps_[static_cast<std::size_t>(i)]);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << i << '^' << m[i];
  }
  return first ? "1" : os.str();
}

LaurentPoly::LaurentPoly(int n) : n_(n) { check_size(n); }

LaurentPoly LaurentPoly::constant(int n, const QPoly& c) {
  LaurentPoly f(n);
  f.add_term(Monomial(n), c);
  return f;
}

LaurentPoly LaurentPoly::term(const Monomial& m, const QPoly& c) {
  LaurentPoly f(m.n());
  f.add_term(m, c);
  return f;
}

void LaurentPoly::add_term(const Monomial& m, const QPoly& c) {
  if (m.n() != n_) throw AmbientMismatch("laurent: ambient mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QPoly LaurentPoly::coeff_of(const Monomial& m) const {
  if (m.n() != n_) throw AmbientMismatch("laurent: ambient mismatch");
  auto it = terms_.find(m);
  return it == terms_.end() ? QPoly{} : it->second;
}

QPoly LaurentPoly::constant_term() const { return coeff_of(Monomial(n_)); }

std::optional<int> LaurentPoly::homogeneous_degree() const {
  if (terms_.empty()) throw std::domain_error("homogeneous_degree of the zero polynomial");
  std::optional<int> degree;
  for (const auto& [m, c] : terms_) {
    const int d = m.total_degree();
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

LaurentPoly LaurentPoly::pi_action(int k) const {
  if (k < 0) throw std::invalid_argument("pi_action: negative power");
  const int vars = n_ + 1;
  LaurentPoly out(n_);
  for (const auto& [m, c] : terms_) {
    Monomial image(n_);
    int q_shift = 0;
    for (int i = 0; i < vars; ++i) {
      image[(i + k) % vars] += m[i];
      q_shift -= ((i + k) / vars) * m[i];
    }
    out.add_term(image, c.shifted(q_shift));
  }
  return out;
}

LaurentPoly LaurentPoly::at_q_equals_one() const {
  LaurentPoly out(n_);
  for (const auto& [m, c] : terms_) out.add_term(m, QPoly::constant(c.eval_at_one()));
  return out;
}

ExponentBox LaurentPoly::exponent_box() const {
  ExponentBox box;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i <= n_; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      if (first) {
        box.lo[idx] = box.hi[idx] = m[i];
      } else {
        box.lo[idx] = std::min(box.lo[idx], m[i]);
        box.hi[idx] = std::max(box.hi[idx], m[i]);
      }
    }
    first = false;
  }
  return box;
}

std::vector<std::pair<Monomial, QPoly>> LaurentPoly::sorted_terms() const {
  std::vector<std::pair<Monomial, QPoly>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    if (!m.is_unit()) os << '*' << dysonct::to_string(m);
  }
  return os.str();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.n_ != n_) throw AmbientMismatch("laurent: ambient mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.n_ != g.n_) throw AmbientMismatch("laurent: ambient mismatch");
  LaurentPoly out(f.n_);
  out.terms_.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& [mf, cf] : f.terms_) {
    for (const auto& [mg, cg] : g.terms_) {
      out.terms_[mf + mg].add_product(cf, cg);
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
  return f.n_ == g.n_ && f.terms_ == g.terms_;
}

LaurentPoly shifted_factorial(const Monomial& z, int m, int offset) {
  if (m < 0) throw std::invalid_argument("shifted_factorial: negative length");
  if (offset < 0) throw std::invalid_argument("shifted_factorial: negative offset");
  LaurentPoly out = LaurentPoly::one(z.n());
  for (int k = 0; k < m; ++k) {
    LaurentPoly factor = LaurentPoly::one(z.n());
    factor.add_term(z, QPoly::monomial(-1, offset + k));
    out *= factor;
  }
  return out;
}

}  // namespace dysonct
