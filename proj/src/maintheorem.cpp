#include "dysonct/maintheorem.hpp"

#include "dysonct/ct.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dysonct {

std::string_view to_string(JStarSemantics s) {
  return s == JStarSemantics::multiset ? "multiset" : "set";
}

JStarSemantics parse_semantics(std::string_view text) {
  if (text == "multiset") return JStarSemantics::multiset;
  if (text == "set") return JStarSemantics::set;
  throw InvalidParameters("unknown J* semantics '" + std::string(text) + "' (expected multiset|set)");
}

namespace {

bool has(PositionMask mask, int pos) { return (mask >> pos & 1U) != 0; }

PositionMask bit(int pos) { return PositionMask{1} << pos; }

int lowest_position(PositionMask mask) { return std::countr_zero(mask); }

int at(const std::vector<int>& v, int pos) { return v[static_cast<std::size_t>(pos)]; }

int a_sum(const LayerSpec& layer, PositionMask mask, const DysonSpec& a) {
  int s = 0;
  for (int k = 0; k < layer.m(); ++k) {
    if (has(mask, k)) s += a.a(at(layer.I, k));
  }
  return s;
}

void check_subset_mask(const LayerSpec& layer, PositionMask mask, bool allow_empty) {
  if ((mask & ~layer.full_mask()) != 0) throw PreconditionError("subset mask exceeds |I|");
  if (!allow_empty && mask == 0) throw PreconditionError("subset of I must be nonempty");
}

}  // namespace

std::optional<std::array<int, 3>> npc_witness(const LayerSpec& layer) {
  const int m = layer.m();
  for (int s = 0; s < m; ++s) {
    for (int t = s + 1; t < m; ++t) {
      for (int u = t + 1; u < m; ++u) {
        if (at(layer.J, t) < at(layer.I, s) && at(layer.I, s) < at(layer.J, u) &&
            at(layer.J, u) < at(layer.I, t)) {
          return std::array<int, 3>{s + 1, t + 1, u + 1};
        }
      }
    }
  }
  return std::nullopt;
}

ChainData chain_data(const LayerSpec& layer, PositionMask subset) {
  check_subset_mask(layer, subset, true);
  ChainData out;
  out.subset = subset;
  for (int k = 0; k < layer.m(); ++k) {
    if (!has(subset, k)) out.complement.push_back(k);
  }
  const int len = static_cast<int>(out.complement.size());
  out.chain.assign(static_cast<std::size_t>(len + 1), subset);
  for (int k = len - 1; k >= 0; --k) {
    out.chain[static_cast<std::size_t>(k)] =
        out.chain[static_cast<std::size_t>(k + 1)] | bit(out.complement[static_cast<std::size_t>(k)]);
  }
  return out;
}

std::vector<int> j_star(const LayerSpec& layer, PositionMask subset, int k, JStarSemantics sem) {
  const ChainData data = chain_data(layer, subset);
  const int len = static_cast<int>(data.complement.size());
  if (k < 1 || k > len) throw PreconditionError("j_star: k must lie in [1, m - l]");
  const int floor = at(layer.I, lowest_position(data.chain[static_cast<std::size_t>(k - 1)]));
  const int rk = data.complement[static_cast<std::size_t>(k - 1)];
  std::vector<int> pool;
  for (int p = 0; p < layer.m(); ++p) {
    if (has(subset, p)) pool.push_back(at(layer.J, p));
  }
  pool.push_back(at(layer.J, rk));
  std::erase_if(pool, [floor](int j) { return j <= floor; });
  std::sort(pool.begin(), pool.end());
  if (sem == JStarSemantics::set) pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

int l_star_within(const LayerSpec& layer, PositionMask U, PositionMask subset, const DysonSpec& a) {
  check_subset_mask(layer, subset, false);
  if (U == 0 || (U & ~subset) != 0) throw PreconditionError("L*(U|I_l) needs nonempty U inside I_l");
  return l_star_exponent(layer.select(U), layer.sublayer(subset), a.a());
}

int c_exponent(const LayerSpec& layer, PositionMask subset, const DysonSpec& a, JStarSemantics sem) {
  check_same_ambient(layer, a);
  check_subset_mask(layer, subset, false);
  const ChainData data = chain_data(layer, subset);
  const auto members = layer.select(subset);
  int c = 1 + a.total() - a_sum(layer, subset, a);
  for (int k = 1; k <= static_cast<int>(data.complement.size()); ++k) {
    const int i_rk = at(layer.I, data.complement[static_cast<std::size_t>(k - 1)]);
    const auto jk = j_star(layer, subset, k, sem);
    c += (count_upto(i_rk, members) - count_upto(i_rk, jk)) * a.a(i_rk);
  }
  return c - l_star_within(layer, subset, subset, a);
}

LaurentPoly main_lhs_combination(const LayerSpec& layer, const DysonSpec& a, JStarSemantics sem) {
  check_same_ambient(layer, a);
  LaurentPoly out = LaurentPoly::one(layer.n);
  for (PositionMask mask = 1; mask <= layer.full_mask(); ++mask) {
    Monomial mono(layer.n);
    for (int k = 0; k < layer.m(); ++k) {
      if (!has(mask, k)) continue;
      mono[at(layer.J, k)] += 1;
      mono[at(layer.I, k)] -= 1;
    }
    const int sign = std::popcount(mask) % 2 ? -1 : 1;
    out.add_term(mono, QPoly::monomial(sign, c_exponent(layer, mask, a, sem)));
  }
  return out;
}

VerificationReport verify_main(const LayerSpec& layer, const DysonSpec& a, JStarSemantics sem) {
  check_same_ambient(layer, a);
  if (auto w = npc_witness(layer)) {
    throw NpcViolation("layer violates the non-crossing hypothesis at (s,t,u) = (" +
                       std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                       std::to_string((*w)[2]) + ")");
  }
  Stopwatch clock;
  VerificationReport r;
  r.identity = "main";
  r.params.n = layer.n;
  r.params.a = a.a_vector();
  r.params.I = layer.I;
  r.params.J = layer.J;
  r.params.extra["semantics"] = std::string(to_string(sem));

  auto factors = q_dyson_factors(a);
  const LaurentPoly combination = main_lhs_combination(layer, a, sem);
  factors.push_back(combination);
  const QPoly ct = ct_of_factor_list(factors, Monomial(layer.n));
  const QPoly lhs = QPoly::one_minus_q_pow(1 + a.total() - a_sum(layer, layer.full_mask(), a)) * ct;
  const QRat rhs = QRat(QPoly::one_minus_q_pow(1 + a.total())) * q_multinomial(a.a());
  r.holds = QRat(lhs) == rhs;
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.params.extra["combination"] = combination.to_string();
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

namespace {

std::vector<int> positions_outside(const LayerSpec& layer, PositionMask U) {
  std::vector<int> out;
  for (int k = 0; k < layer.m(); ++k) {
    if (!has(U, k)) out.push_back(k);
  }
  return out;
}

void check_v(const LayerSpec& layer, PositionMask U, int v) {
  if (v < 1 || v > layer.m()) throw PreconditionError("v must lie in [1, m]");
  if (U != 0 && v - 1 > lowest_position(U)) throw PreconditionError("i_v must not exceed min U");
}

}  // namespace

int g_exponent(const LayerSpec& layer, PositionMask U, int v, int s, const DysonSpec& a) {
  check_subset_mask(layer, U, true);
  check_v(layer, U, v);
  const auto t = positions_outside(layer, U);
  const int len = static_cast<int>(t.size());
  if (s < 1 || s > len) throw PreconditionError("s must lie in [1, m - |U|]");
  const auto tpos = [&](int k) { return t[static_cast<std::size_t>(k - 1)]; };
  if (tpos(s) == v - 1) throw PreconditionError("i_{t_s} must differ from i_v");
  const int iv = at(layer.I, v - 1);
  const int jts = at(layer.J, tpos(s));
  const auto between = [&](int k) { return at(layer.I, tpos(k)) > jts && jts > iv; };
  int g = 0;
  for (int k = v; k <= s - 1; ++k) {
    if (between(k)) g -= a.a(at(layer.I, tpos(k)));
  }
  for (int k = s + 1; k <= len; ++k) {
    if (!between(k)) g += a.a(at(layer.I, tpos(k)));
  }
  return g;
}

FactorizationCheck check_factorization(const LayerSpec& layer, PositionMask U, int v, const DysonSpec& a,
                                       JStarSemantics sem) {
  check_same_ambient(layer, a);
  check_subset_mask(layer, U, false);
  if (U == layer.full_mask()) throw PreconditionError("factorization needs U != I");
  check_v(layer, U, v);

  const PositionMask base = U | bit(v - 1);
  const auto t = positions_outside(layer, U);
  std::vector<int> residual;  // positions of I \ U \ {i_1..i_v}
  std::vector<int> residual_s;
  for (std::size_t s = 0; s < t.size(); ++s) {
    if (t[s] > v - 1) {
      residual.push_back(t[s]);
      residual_s.push_back(static_cast<int>(s) + 1);
    }
  }

  FactorizationCheck out;
  const int d = std::popcount(U);
  const auto exponent = [&](PositionMask Il) {
    return c_exponent(layer, Il, a, sem) + l_star_within(layer, U, Il, a);
  };
  const auto count = std::size_t{1} << residual.size();
  for (std::size_t g = 0; g < count; ++g) {
    PositionMask Il = base;
    for (std::size_t k = 0; k < residual.size(); ++k) {
      if (g >> k & 1U) Il |= bit(residual[k]);
    }
    const int sign = (std::popcount(Il) + d) % 2 ? -1 : 1;
    out.lhs += QPoly::monomial(sign, exponent(Il));
  }

  out.product = QPoly::constant(1);
  for (int s : residual_s) out.product *= QPoly::one_minus_q_pow(g_exponent(layer, U, v, s, a));
  const int sign = has(U, v - 1) ? 1 : -1;
  out.rhs = QPoly::monomial(sign, exponent(base)) * out.product;
  out.equality = out.lhs == out.rhs;
  out.residual_empty = residual.empty();
  out.npc = npc_holds(layer);
  out.product_zero = out.product.is_zero();
  return out;
}

VerificationReport verify_factorization(const LayerSpec& layer, PositionMask U, int v, const DysonSpec& a,
                                        JStarSemantics sem) {
  Stopwatch clock;
  const FactorizationCheck check = check_factorization(layer, U, v, a, sem);
  VerificationReport r;
  r.identity = "factorization";
  r.params.n = layer.n;
  r.params.a = a.a_vector();
  r.params.I = layer.I;
  r.params.J = layer.J;
  r.params.extra["U"] = layer.select(U);
  r.params.extra["i_v"] = at(layer.I, v - 1);
  r.params.extra["semantics"] = std::string(to_string(sem));
  r.params.extra["npc"] = check.npc;
  r.params.extra["residual_empty"] = check.residual_empty;
  r.params.extra["product"] = check.product.to_string();
  r.holds = check.holds();
  r.lhs = check.lhs.to_string();
  r.rhs = check.rhs.to_string();
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

bool verify_tail_cancel(const LayerSpec& layer, int h, const DysonSpec& a, JStarSemantics sem) {
  check_same_ambient(layer, a);
  const int m = layer.m();
  if (h < 2 || h > m) throw PreconditionError("tail cancellation needs 2 <= h <= m");
  PositionMask U = 0;
  for (int k = h - 1; k < m; ++k) U |= bit(k);
  const PositionMask grown = U | bit(h - 2);
  const int left = c_exponent(layer, U, a, sem) + l_star_within(layer, U, U, a);
  const int right = c_exponent(layer, grown, a, sem) + l_star_within(layer, U, grown, a);
  const int expected = 1 + a.total() - a_sum(layer, U, a);
  return left == right && left == expected;
}

bool lemma_f1_check(int n) {
  if (n < 2 || n > 5) throw PreconditionError("lemma_f1_check needs 2 <= n <= 5");
  // choice[s] in {1..n} \ {s}, enumerated as an odometer over n - 1 options.
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  const auto choice = [&](int s) {
    const int d = digit[static_cast<std::size_t>(s - 1)] + 1;
    return d >= s ? d + 1 : d;
  };
  while (true) {
    bool found = false;
    for (int s = 1; s <= n && !found; ++s) {
      for (int k = s + 1; k <= n && !found; ++k) {
        found = choice(k) <= s && choice(s) >= k;
      }
    }
    if (!found) return false;
    int pos = 0;
    while (pos < n && ++digit[static_cast<std::size_t>(pos)] == n - 1) {
      digit[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) return true;
  }
}

std::map<PositionMask, QPoly> expansion_inner_sums(const LayerSpec& layer, const DysonSpec& a,
                                                   JStarSemantics sem) {
  check_same_ambient(layer, a);
  std::map<PositionMask, QPoly> out;
  const PositionMask full = layer.full_mask();
  for (PositionMask U = 1; U <= full; ++U) {
    QPoly sum;
    const int d = std::popcount(U);
    for (PositionMask Il = 1; Il <= full; ++Il) {
      if ((Il & U) != U) continue;
      const int sign = (std::popcount(Il) + d) % 2 ? -1 : 1;
      sum += QPoly::monomial(sign, c_exponent(layer, Il, a, sem) + l_star_within(layer, U, Il, a));
    }
    out.emplace(U, std::move(sum));
  }
  return out;
}

}  // namespace dysonct
