#include "dysonct/firstlayer.hpp"

#include "dysonct/ct.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace dysonct {

LayerSpec LayerSpec::make(int n, std::vector<int> I, std::vector<int> J) {
  if (n < 0) throw InvalidParameters("n must be nonnegative");
  if (I.size() != J.size()) {
    throw InvalidParameters("|I| = " + std::to_string(I.size()) + " differs from |J| = " +
                            std::to_string(J.size()));
  }
  const auto in_range = [n](int v) { return v >= 0 && v <= n; };
  if (!std::all_of(I.begin(), I.end(), in_range) || !std::all_of(J.begin(), J.end(), in_range)) {
    throw InvalidParameters("entries of I and J must lie in [0, n]");
  }
  if (std::adjacent_find(I.begin(), I.end(), std::greater_equal<>()) != I.end()) {
    throw InvalidParameters("I must be strictly increasing");
  }
  if (std::adjacent_find(J.begin(), J.end(), std::greater<>()) != J.end()) {
    throw InvalidParameters("J must be weakly increasing");
  }
  for (int j : J) {
    if (std::binary_search(I.begin(), I.end(), j)) {
      throw InvalidParameters("I and J must be disjoint (" + std::to_string(j) + " in both)");
    }
  }
  if (static_cast<int>(I.size()) > n) throw InvalidParameters("I must be a proper subset of {0..n}");
  if (I.size() > 31) throw InvalidParameters("|I| too large");
  return LayerSpec{n, std::move(I), std::move(J)};
}

std::vector<int> LayerSpec::select(PositionMask mask) const {
  std::vector<int> out;
  for (int k = 0; k < m(); ++k) {
    if (mask >> k & 1U) out.push_back(I[static_cast<std::size_t>(k)]);
  }
  return out;
}

LayerSpec LayerSpec::sublayer(PositionMask mask) const {
  LayerSpec out{n, {}, {}};
  for (int k = 0; k < m(); ++k) {
    if (mask >> k & 1U) {
      out.I.push_back(I[static_cast<std::size_t>(k)]);
      out.J.push_back(J[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

void check_same_ambient(const LayerSpec& layer, const DysonSpec& a) {
  if (layer.n != a.n()) {
    throw InvalidParameters("layer has n = " + std::to_string(layer.n) + " but a has n = " +
                            std::to_string(a.n()));
  }
}

int count_upto(int k, std::span<const int> S) {
  return static_cast<int>(std::count_if(S.begin(), S.end(), [k](int s) { return s <= k; }));
}

std::vector<int> weight_vector(std::span<const int> a, std::span<const int> T) {
  std::vector<int> w(a.begin(), a.end());
  for (int t : T) w.at(static_cast<std::size_t>(t)) = 0;
  return w;
}

namespace {

void check_subset(std::span<const int> T, const LayerSpec& layer) {
  if (T.empty()) throw PreconditionError("T must be nonempty");
  for (int t : T) {
    if (!std::binary_search(layer.I.begin(), layer.I.end(), t)) {
      throw PreconditionError("T must be a subset of I");
    }
  }
}

int subset_sum(std::span<const int> T, std::span<const int> a) {
  int s = 0;
  for (int t : T) s += a[static_cast<std::size_t>(t)];
  return s;
}

}  // namespace

int l_exponent(std::span<const int> T, const LayerSpec& layer, std::span<const int> a) {
  if (layer.I.empty() || layer.I.front() != 0) throw PreconditionError("L(T|I) requires i_1 = 0");
  check_subset(T, layer);
  const auto w = weight_vector(a, T);
  int L = 0;
  for (int k = 0; k <= layer.n; ++k) {
    L += (count_upto(k, layer.I) - count_upto(k, layer.J)) * w[static_cast<std::size_t>(k)];
  }
  return L;
}

int l_star_exponent(std::span<const int> T, const LayerSpec& layer, std::span<const int> a) {
  check_subset(T, layer);
  const int i1 = layer.I.front();
  std::vector<int> j_minus;
  std::vector<int> j_plus;
  for (int j : layer.J) (j < i1 ? j_minus : j_plus).push_back(j);
  const int t = static_cast<int>(j_minus.size());
  const auto w = weight_vector(a, T);
  int L = t;
  for (int k = i1; k <= layer.n; ++k) {
    L += (count_upto(k, layer.I) - count_upto(k, j_plus)) * w[static_cast<std::size_t>(k)];
  }
  for (int k = 0; k < i1; ++k) {
    L += (t - count_upto(k, j_minus)) * a[static_cast<std::size_t>(k)];
  }
  return L;
}

Monomial first_layer_target(const LayerSpec& layer) {
  Monomial target(layer.n);
  for (int i : layer.I) target[i] += 1;
  for (int j : layer.J) target[j] -= 1;
  return target;
}

QRat first_layer_closed(const LayerSpec& layer, const DysonSpec& a) {
  check_same_ambient(layer, a);
  if (layer.m() == 0) throw PreconditionError("first-layer formula needs m >= 1");
  QRat sum(QPoly{});
  for (PositionMask mask = 1; mask <= layer.full_mask(); ++mask) {
    const auto T = layer.select(mask);
    const int aT = subset_sum(T, a.a());
    const int sign = std::popcount(mask) % 2 ? -1 : 1;
    const QPoly num = QPoly::monomial(sign, l_star_exponent(T, layer, a.a())) * QPoly::one_minus_q_pow(aT);
    sum = sum + QRat(num, QPoly::one_minus_q_pow(1 + a.total() - aT));
  }
  return q_multinomial(a.a()) * sum;
}

QPoly first_layer_brute(const LayerSpec& layer, const DysonSpec& a) {
  check_same_ambient(layer, a);
  const auto factors = q_dyson_factors(a);
  return ct_of_factor_list(factors, first_layer_target(layer));
}

Rational first_layer_q1_closed(const LayerSpec& layer, const DysonSpec& a) {
  check_same_ambient(layer, a);
  if (layer.m() == 0) throw PreconditionError("first-layer formula needs m >= 1");
  Rational sum = 0;
  for (PositionMask mask = 1; mask <= layer.full_mask(); ++mask) {
    const auto T = layer.select(mask);
    const int aT = subset_sum(T, a.a());
    const Rational term(aT, 1 + a.total() - aT);
    sum += std::popcount(mask) % 2 ? -term : term;
  }
  return Rational(multinomial(a.a())) * sum;
}

Integer first_layer_q1_brute(const LayerSpec& layer, const DysonSpec& a) {
  check_same_ambient(layer, a);
  const auto factors = dyson_factors(a);
  return ct_of_factor_list(factors, first_layer_target(layer)).coeff(0);
}

VerificationReport verify_first_layer(const LayerSpec& layer, const DysonSpec& a) {
  Stopwatch clock;
  VerificationReport r;
  r.identity = "firstlayer";
  r.params.n = layer.n;
  r.params.a = a.a_vector();
  r.params.I = layer.I;
  r.params.J = layer.J;
  const QPoly brute = first_layer_brute(layer, a);
  const QRat closed = first_layer_closed(layer, a);
  const Integer brute_q1 = first_layer_q1_brute(layer, a);
  const Rational closed_q1 = first_layer_q1_closed(layer, a);
  const bool q_holds = QRat(brute) == closed;
  const bool q1_holds = Rational(brute_q1) == closed_q1;
  r.holds = q_holds && q1_holds;
  r.lhs = brute.to_string();
  r.rhs = closed.to_string();
  r.params.extra["q1_brute"] = brute_q1.str();
  r.params.extra["q1_closed"] = to_string(closed_q1);
  r.params.extra["q1_holds"] = q1_holds;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace dysonct
