#include "dysonct/kadell.hpp"

#include "dysonct/ct.hpp"

#include <algorithm>

namespace dysonct {

PairSet PairSet::positional(const LayerSpec& layer) {
  PairSet P;
  for (int k = 0; k < layer.m(); ++k) {
    P.pairs.emplace_back(layer.I[static_cast<std::size_t>(k)], layer.J[static_cast<std::size_t>(k)]);
  }
  return P;
}

bool PairSet::contains(int s, int t) const {
  return std::find(pairs.begin(), pairs.end(), std::pair{s, t}) != pairs.end();
}

namespace {

int sum_over(std::span<const int> idx, const DysonSpec& a) {
  int s = 0;
  for (int i : idx) s += a.a(i);
  return s;
}

}  // namespace

Integer kadell_ct(const LayerSpec& layer, const DysonSpec& a) {
  check_same_ambient(layer, a);
  auto factors = dyson_factors(a);
  for (int k = 0; k < layer.m(); ++k) {
    const int i = layer.I[static_cast<std::size_t>(k)];
    const int j = layer.J[static_cast<std::size_t>(k)];
    factors.push_back(shifted_factorial(Monomial::ratio(layer.n, j, i), 1, 0));
  }
  return ct_of_factor_list(factors, Monomial(layer.n)).coeff(0);
}

Rational kadell_dyson_lhs(const LayerSpec& layer, const DysonSpec& a) {
  return Rational(1 + a.total() - sum_over(layer.I, a)) * Rational(kadell_ct(layer, a));
}

Rational kadell_dyson_rhs(const DysonSpec& a) {
  return Rational(1 + a.total()) * Rational(multinomial(a.a()));
}

Rational lc_closed(const LayerSpec& layer, const DysonSpec& a) {
  check_same_ambient(layer, a);
  if (layer.m() == 0) throw PreconditionError("lc_closed needs a nonempty I");
  const int aI = sum_over(layer.I, a);
  return (1 + Rational(aI, 1 + a.total() - aI)) * Rational(multinomial(a.a()));
}

std::vector<LaurentPoly> kadell_q_product(const LayerSpec& layer, const DysonSpec& a, const PairSet& P) {
  check_same_ambient(layer, a);
  const int n = layer.n;
  std::vector<LaurentPoly> out;
  for (int s = 0; s <= n; ++s) {
    for (int t = s + 1; t <= n; ++t) {
      const int down = a.a(s) + (P.contains(t, s) ? 1 : 0);
      const int up = a.a(t) + (P.contains(s, t) ? 1 : 0);
      out.push_back(shifted_factorial(Monomial::ratio(n, s, t), down, 0));
      out.push_back(shifted_factorial(Monomial::ratio(n, t, s), up, 1));
    }
  }
  return out;
}

QPoly kadell_q_ct(const LayerSpec& layer, const DysonSpec& a) {
  const auto factors = kadell_q_product(layer, a, PairSet::positional(layer));
  return ct_of_factor_list(factors, Monomial(layer.n));
}

namespace {

VerificationReport layer_report(std::string identity, const LayerSpec& layer, const DysonSpec& a) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params.n = layer.n;
  r.params.a = a.a_vector();
  r.params.I = layer.I;
  r.params.J = layer.J;
  return r;
}

}  // namespace

VerificationReport verify_kadell(const LayerSpec& layer, const DysonSpec& a) {
  Stopwatch clock;
  auto r = layer_report("kadell", layer, a);
  const Integer ct = kadell_ct(layer, a);
  const Rational lhs = Rational(1 + a.total() - sum_over(layer.I, a)) * Rational(ct);
  const Rational rhs = kadell_dyson_rhs(a);
  bool lc_holds = true;
  if (layer.m() > 0) {
    const Rational lc = lc_closed(layer, a);
    lc_holds = Rational(ct) == lc;
    r.params.extra["lc_brute"] = ct.str();
    r.params.extra["lc_closed"] = to_string(lc);
  }
  r.params.extra["lc_holds"] = lc_holds;
  r.holds = lhs == rhs && lc_holds;
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_kadell_q(const LayerSpec& layer, const DysonSpec& a) {
  Stopwatch clock;
  auto r = layer_report("kadellq", layer, a);
  const QPoly ct = kadell_q_ct(layer, a);
  const QPoly lhs = QPoly::one_minus_q_pow(1 + a.total() - sum_over(layer.I, a)) * ct;
  const QRat rhs = QRat(QPoly::one_minus_q_pow(1 + a.total())) * q_multinomial(a.a());
  r.holds = QRat(lhs) == rhs;
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.params.extra["ct"] = ct.to_string();
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport reproduce_counterexample() {
  Stopwatch clock;
  const auto layer = LayerSpec::make(2, {0}, {1});
  const DysonSpec a(2, {1, 1, 1});
  auto r = verify_kadell_q(layer, a);
  r.identity = "counterexample";

  // Published values: LHS (1-q^3)(1+2q+3q^2+2q^3), RHS (1-q^4)(1+q)(1+q+q^2).
  const QPoly published_ct(0, {1, 2, 3, 2});
  const QPoly published_lhs = QPoly::one_minus_q_pow(3) * published_ct;
  const QPoly published_rhs = QPoly::one_minus_q_pow(4) * QPoly(0, {1, 1}) * QPoly(0, {1, 1, 1});
  const bool matches = r.lhs == published_lhs.to_string() && r.rhs == published_rhs.to_string();
  r.params.extra["published_lhs"] = published_lhs.to_string();
  r.params.extra["published_rhs"] = published_rhs.to_string();
  r.params.extra["matches_published"] = matches;
  r.params.extra["expected_failure"] = true;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace dysonct
