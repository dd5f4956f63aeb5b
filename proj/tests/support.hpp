#pragma once

// Bridges between library types and the oracle's plain containers.

#include "dysonct/laurent.hpp"
#include "dysonct/qpoly.hpp"
#include "oracle.hpp"

#include <random>
#include <vector>

namespace support {

inline oracle::Series to_series(const dysonct::QPoly& p) {
  oracle::Series out;
  for (int e = p.min_exp(); !p.is_zero() && e <= p.max_exp(); ++e) {
    const auto c = p.coeff(e);
    if (c != 0) out[e] = static_cast<long long>(c);
  }
  return out;
}

inline dysonct::QPoly from_series(const oracle::Series& s) {
  dysonct::QPoly out;
  for (const auto& [e, c] : s) out += dysonct::QPoly::monomial(c, e);
  return out;
}

inline oracle::Poly to_poly(const dysonct::LaurentPoly& f) {
  oracle::Poly out;
  for (const auto& [m, c] : f.terms()) out[m.to_vector()] = to_series(c);
  return out;
}

inline dysonct::LaurentPoly from_poly(int n, const oracle::Poly& f) {
  dysonct::LaurentPoly out(n);
  for (const auto& [m, c] : f) out.add_term(dysonct::Monomial(n, m), from_series(c));
  return out;
}

/// All a in {0..amax}^{n+1}.
inline std::vector<std::vector<int>> grid(int n, int amax) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i <= n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      for (int v = 0; v <= amax; ++v) {
        auto a = prefix;
        a.push_back(v);
        next.push_back(a);
      }
    }
    out = std::move(next);
  }
  return out;
}

struct Layout {
  std::vector<int> I;
  std::vector<int> J;
};

/// Every I subset of {0..n} with m_min <= |I| <= min(m_max, n), paired with
/// every weakly increasing J over the complement of I.
inline std::vector<Layout> layouts(int n, int m_min, int m_max) {
  std::vector<Layout> out;
  for (unsigned mask = 0; mask < (1U << (n + 1)); ++mask) {
    std::vector<int> I;
    std::vector<int> rest;
    for (int i = 0; i <= n; ++i) (mask >> i & 1U ? I : rest).push_back(i);
    const int m = static_cast<int>(I.size());
    if (m < m_min || m > m_max || m > n) continue;
    // J as a nondecreasing index sequence into rest.
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    while (true) {
      std::vector<int> J;
      for (auto k : idx) J.push_back(rest[k]);
      out.push_back({I, J});
      int pos = m - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == rest.size()) --pos;
      if (pos < 0) break;
      const auto next = idx[static_cast<std::size_t>(pos)] + 1;
      for (auto k = static_cast<std::size_t>(pos); k < idx.size(); ++k) idx[k] = next;
    }
  }
  return out;
}

/// Random sparse polynomial with small coefficients and exponents.
inline oracle::Series random_series(std::mt19937& rng, int terms = 4) {
  std::uniform_int_distribution<int> exp(-3, 5);
  std::uniform_int_distribution<int> coef(-4, 4);
  oracle::Series s;
  for (int k = 0; k < terms; ++k) s[exp(rng)] += coef(rng);
  oracle::clean(s);
  return s;
}

/// Random polynomial in n + 1 variables; degree_zero forces every monomial
/// to have total degree 0.
inline oracle::Poly random_poly(std::mt19937& rng, int n, int terms, bool degree_zero) {
  std::uniform_int_distribution<int> exp(-2, 2);
  oracle::Poly f;
  for (int k = 0; k < terms; ++k) {
    oracle::Exps m(static_cast<std::size_t>(n + 1));
    int sum = 0;
    for (int i = 0; i < n; ++i) sum += m[static_cast<std::size_t>(i)] = exp(rng);
    m[static_cast<std::size_t>(n)] = degree_zero ? -sum : exp(rng);
    auto c = random_series(rng, 2);
    if (!c.empty()) f[m] = oracle::add(f[m], c);
  }
  for (auto it = f.begin(); it != f.end();) it = it->second.empty() ? f.erase(it) : std::next(it);
  return f;
}

}  // namespace support
