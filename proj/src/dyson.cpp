#include "dysonct/dyson.hpp"

#include "dysonct/ct.hpp"

namespace dysonct {

DysonSpec::DysonSpec(int n, std::vector<int> a) : n_(n), a_(std::move(a)) {
  if (n_ < 0 || n_ + 1 > kMaxVariables) {
    throw InvalidParameters("n must lie in [0, " + std::to_string(kMaxVariables - 1) + "]");
  }
  if (static_cast<int>(a_.size()) != n_ + 1) {
    throw InvalidParameters("expected " + std::to_string(n_ + 1) + " parameters a_0..a_n, got " +
                            std::to_string(a_.size()));
  }
  for (int ai : a_) {
    if (ai < 0) throw InvalidParameters("parameters a_i must be nonnegative");
    total_ += ai;
  }
}

std::vector<LaurentPoly> q_dyson_factors(const DysonSpec& spec) {
  const int n = spec.n();
  std::vector<LaurentPoly> out;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(shifted_factorial(Monomial::ratio(n, i, j), spec.a(i), 0));
      out.push_back(shifted_factorial(Monomial::ratio(n, j, i), spec.a(j), 1));
    }
  }
  return out;
}

std::vector<LaurentPoly> dyson_factors(const DysonSpec& spec) {
  const int n = spec.n();
  std::vector<LaurentPoly> out;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      const LaurentPoly factor = shifted_factorial(Monomial::ratio(n, i, j), 1, 0);
      for (int r = 0; r < spec.a(i); ++r) out.push_back(factor);
    }
  }
  return out;
}

QPoly q_dyson_ct(const DysonSpec& spec) {
  const auto factors = q_dyson_factors(spec);
  return ct_of_factor_list(factors, Monomial(spec.n()));
}

Integer dyson_ct(const DysonSpec& spec) {
  const auto factors = dyson_factors(spec);
  return ct_of_factor_list(factors, Monomial(spec.n())).coeff(0);
}

VerificationReport verify_q_dyson(const DysonSpec& spec) {
  Stopwatch clock;
  VerificationReport r;
  r.identity = "qdyson";
  r.params.n = spec.n();
  r.params.a = spec.a_vector();
  const QPoly ct = q_dyson_ct(spec);
  const QRat closed = q_multinomial(spec.a());
  r.holds = QRat(ct) == closed;
  r.lhs = ct.to_string();
  r.rhs = closed.to_string();
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_dyson(const DysonSpec& spec) {
  Stopwatch clock;
  VerificationReport r;
  r.identity = "dyson";
  r.params.n = spec.n();
  r.params.a = spec.a_vector();
  const Integer ct = dyson_ct(spec);
  const Integer closed = multinomial(spec.a());
  r.holds = ct == closed;
  r.lhs = ct.str();
  r.rhs = closed.str();
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace dysonct
