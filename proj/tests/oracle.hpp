#pragma once

// Reference computations for the tests. Deliberately naive: ordered maps,
// 64-bit coefficients, full expansion with no pruning, and q-multinomials
// built from the Pascal recurrence instead of division. Nothing here
// includes the library.

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

/// exponent of q -> coefficient
using Series = std::map<int, long long>;
/// exponent vector of x_0..x_n
using Exps = std::vector<int>;
using Poly = std::map<Exps, Series>;

inline void clean(Series& s) {
  for (auto it = s.begin(); it != s.end();) it = it->second == 0 ? s.erase(it) : std::next(it);
}

inline Series add(Series x, const Series& y) {
  for (const auto& [e, c] : y) x[e] += c;
  clean(x);
  return x;
}

inline Series mul(const Series& x, const Series& y) {
  Series out;
  for (const auto& [e1, c1] : x)
    for (const auto& [e2, c2] : y) out[e1 + e2] += c1 * c2;
  clean(out);
  return out;
}

inline Series scale_shift(const Series& x, long long c, int shift) {
  Series out;
  for (const auto& [e, v] : x) out[e + shift] = v * c;
  clean(out);
  return out;
}

/// 1 - q^e
inline Series one_minus(int e) { return add(Series{{0, 1}}, Series{{e, -1}}); }

inline long long at_one(const Series& s) {
  long long total = 0;
  for (const auto& [e, c] : s) total += c;
  return total;
}

inline Poly mul(const Poly& f, const Poly& g) {
  Poly out;
  for (const auto& [m1, s1] : f) {
    for (const auto& [m2, s2] : g) {
      Exps m(m1.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
      Series& slot = out[m];
      slot = add(slot, mul(s1, s2));
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

inline Poly unit(int vars) { return Poly{{Exps(static_cast<std::size_t>(vars), 0), Series{{0, 1}}}}; }

/// 1 - q^qexp * x_num / x_den
inline Poly binomial(int vars, int num, int den, int qexp) {
  Exps m(static_cast<std::size_t>(vars), 0);
  m[static_cast<std::size_t>(num)] += 1;
  m[static_cast<std::size_t>(den)] -= 1;
  return Poly{{Exps(static_cast<std::size_t>(vars), 0), Series{{0, 1}}}, {m, Series{{qexp, -1}}}};
}

inline Poly monomial(const Exps& m, const Series& c) { return Poly{{m, c}}; }

/// prod over s < t of (x_s/x_t)_{low[s][t]} (q x_t/x_s)_{high[s][t]}
inline Poly pair_product(const std::vector<std::vector<int>>& low, const std::vector<std::vector<int>>& high) {
  const int vars = static_cast<int>(low.size());
  Poly out = unit(vars);
  for (int s = 0; s < vars; ++s) {
    for (int t = s + 1; t < vars; ++t) {
      for (int k = 0; k < low[s][t]; ++k) out = mul(out, binomial(vars, s, t, k));
      for (int k = 1; k <= high[s][t]; ++k) out = mul(out, binomial(vars, t, s, k));
    }
  }
  return out;
}

/// The q-Dyson product for parameters a_0..a_n.
inline Poly q_dyson(const std::vector<int>& a) {
  const std::size_t vars = a.size();
  std::vector<std::vector<int>> low(vars, std::vector<int>(vars, 0));
  auto high = low;
  for (std::size_t s = 0; s < vars; ++s) {
    for (std::size_t t = s + 1; t < vars; ++t) {
      low[s][t] = a[s];
      high[s][t] = a[t];
    }
  }
  return pair_product(low, high);
}

/// The classical Dyson product, with coefficients as constant series.
inline Poly dyson(const std::vector<int>& a) {
  const int vars = static_cast<int>(a.size());
  Poly out = unit(vars);
  for (int i = 0; i < vars; ++i)
    for (int j = 0; j < vars; ++j)
      if (i != j)
        for (int k = 0; k < a[static_cast<std::size_t>(i)]; ++k) out = mul(out, binomial(vars, i, j, 0));
  return out;
}

inline Series coefficient(const Poly& f, const Exps& m) {
  auto it = f.find(m);
  return it == f.end() ? Series{} : it->second;
}

inline Series constant_term(const Poly& f) {
  return f.empty() ? Series{} : coefficient(f, Exps(f.begin()->first.size(), 0));
}

/// Gaussian binomial [n choose k]_q from [n,k] = [n-1,k-1] + q^k [n-1,k].
inline Series q_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<std::vector<Series>> row(static_cast<std::size_t>(n + 1));
  for (int r = 0; r <= n; ++r) {
    row[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(r + 1));
    row[static_cast<std::size_t>(r)][0] = Series{{0, 1}};
    row[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = Series{{0, 1}};
    for (int c = 1; c < r; ++c) {
      const auto& prev = row[static_cast<std::size_t>(r - 1)];
      row[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          add(prev[static_cast<std::size_t>(c - 1)], scale_shift(prev[static_cast<std::size_t>(c)], 1, c));
    }
  }
  return row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// q-multinomial as a product of Gaussian binomials.
inline Series q_multinomial(const std::vector<int>& a) {
  Series out{{0, 1}};
  int running = 0;
  for (int ai : a) {
    running += ai;
    out = mul(out, q_binomial(running, ai));
  }
  return out;
}

inline long long multinomial(const std::vector<int>& a) {
  return at_one(q_multinomial(a));
}

inline long long factorial(int k) {
  long long out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

/// Coefficient of prod x_j / prod x_i, with I and J as lists of indices.
inline Exps layer_target(int vars, const std::vector<int>& I, const std::vector<int>& J) {
  Exps m(static_cast<std::size_t>(vars), 0);
  for (int i : I) m[static_cast<std::size_t>(i)] += 1;
  for (int j : J) m[static_cast<std::size_t>(j)] -= 1;
  return m;
}

/// Renders like "1 + 2*q - q^3", matching the library's canonical form.
inline std::string render(const Series& s) {
  if (s.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : s) {
    const long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace oracle
