#include "dysonct/ct.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dysonct {

namespace {

using Term = std::pair<Monomial, QPoly>;

/// Factors in multiplication order plus residual exponent bounds:
/// residual_lo[k], residual_hi[k] bound the exponents contributed by
/// factors k, k+1, ..., r-1 of the ordered list.
struct PrunePlan {
  std::vector<const LaurentPoly*> order;
  std::vector<ExponentBox> residual;
  int n = 0;
  bool zero_factor = false;
};

PrunePlan make_plan(std::span<const LaurentPoly> factors, const Monomial& target) {
  PrunePlan plan;
  plan.n = target.n();
  for (const auto& f : factors) {
    if (f.n() != plan.n) throw AmbientMismatch("ct: factor ambient differs from target");
    if (f.is_zero()) plan.zero_factor = true;
    plan.order.push_back(&f);
  }
  std::stable_sort(plan.order.begin(), plan.order.end(),
                   [](const LaurentPoly* x, const LaurentPoly* y) { return x->size() < y->size(); });
  plan.residual.assign(plan.order.size() + 1, ExponentBox{});
  if (plan.zero_factor) return plan;
  for (std::size_t k = plan.order.size(); k-- > 0;) {
    const ExponentBox box = plan.order[k]->exponent_box();
    for (int i = 0; i <= plan.n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      plan.residual[k].lo[idx] = plan.residual[k + 1].lo[idx] + box.lo[idx];
      plan.residual[k].hi[idx] = plan.residual[k + 1].hi[idx] + box.hi[idx];
    }
  }
  return plan;
}

/// True iff target - m lies in the residual box.
bool reachable(const Monomial& m, const Monomial& target, const ExponentBox& box, int n) {
  for (int i = 0; i <= n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const int gap = target[i] - m[i];
    if (gap < box.lo[idx] || gap > box.hi[idx]) return false;
  }
  return true;
}

QPoly extract(const std::vector<Term>& partial, const Monomial& target) {
  for (const auto& [m, c] : partial) {
    if (m == target) return c;
  }
  return {};
}

void drain(LaurentPoly::TermMap& map, std::vector<Term>& out) {
  for (auto& [m, c] : map) {
    if (!c.is_zero()) out.emplace_back(m, std::move(c));
  }
  map.clear();
}

}  // namespace

QPoly ct_of_factor_list_serial(std::span<const LaurentPoly> factors, const Monomial& target,
                               CtStats* stats) {
  const PrunePlan plan = make_plan(factors, target);
  if (plan.zero_factor) return {};
  std::vector<Term> partial;
  if (reachable(Monomial(plan.n), target, plan.residual[0], plan.n)) {
    partial.emplace_back(Monomial(plan.n), QPoly::constant(1));
  }
  CtStats local;
  LaurentPoly::TermMap next;
  for (std::size_t k = 0; k < plan.order.size() && !partial.empty(); ++k) {
    const auto& box = plan.residual[k + 1];
    const auto& factor = plan.order[k]->terms();
    next.reserve(partial.size() * 2);
    for (const auto& [pm, pc] : partial) {
      for (const auto& [fm, fc] : factor) {
        Monomial m = pm + fm;
        if (!reachable(m, target, box, plan.n)) {
          ++local.pruned_terms;
          continue;
        }
        next[m].add_product(pc, fc);
      }
    }
    partial.clear();
    drain(next, partial);
    local.peak_terms = std::max(local.peak_terms, partial.size());
  }
  if (stats) *stats = local;
  return extract(partial, target);
}

QPoly ct_of_factor_list_parallel(std::span<const LaurentPoly> factors, const Monomial& target,
                                 int threads, CtStats* stats) {
#ifndef _OPENMP
  (void)threads;
  return ct_of_factor_list_serial(factors, target, stats);
#else
  const int team = threads > 0 ? threads : omp_get_max_threads();
  const PrunePlan plan = make_plan(factors, target);
  if (plan.zero_factor) return {};
  std::vector<Term> partial;
  if (reachable(Monomial(plan.n), target, plan.residual[0], plan.n)) {
    partial.emplace_back(Monomial(plan.n), QPoly::constant(1));
  }
  const auto parts = static_cast<std::size_t>(team);
  // buckets[t][p]: thread t's contributions whose monomial hashes to part p.
  std::vector<std::vector<LaurentPoly::TermMap>> buckets(parts, std::vector<LaurentPoly::TermMap>(parts));
  std::vector<std::vector<Term>> merged(parts);
  std::vector<std::size_t> pruned(parts, 0);
  std::size_t peak = 0;

  for (std::size_t k = 0; k < plan.order.size() && !partial.empty(); ++k) {
    const auto& box = plan.residual[k + 1];
    const auto& factor = plan.order[k]->terms();
    const auto count = static_cast<std::ptrdiff_t>(partial.size());

#pragma omp parallel num_threads(team)
    {
      const auto tid = static_cast<std::size_t>(omp_get_thread_num());
      auto& mine = buckets[tid];
#pragma omp for schedule(static)
      for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
        const auto& [pm, pc] = partial[static_cast<std::size_t>(idx)];
        for (const auto& [fm, fc] : factor) {
          Monomial m = pm + fm;
          if (!reachable(m, target, box, plan.n)) {
            ++pruned[tid];
            continue;
          }
          mine[m.hash() % parts][m].add_product(pc, fc);
        }
      }
      // Implicit barrier: every thread's buckets are complete.
#pragma omp for schedule(static)
      for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(parts); ++p) {
        const auto part = static_cast<std::size_t>(p);
        LaurentPoly::TermMap& acc = buckets[0][part];
        for (std::size_t t = 1; t < parts; ++t) {
          for (auto& [m, c] : buckets[t][part]) acc[m] += c;
          buckets[t][part].clear();
        }
        merged[part].clear();
        drain(acc, merged[part]);
      }
    }

    partial.clear();
    for (auto& chunk : merged) {
      std::move(chunk.begin(), chunk.end(), std::back_inserter(partial));
      chunk.clear();
    }
    peak = std::max(peak, partial.size());
  }
  if (stats) {
    stats->peak_terms = peak;
    stats->pruned_terms = std::accumulate(pruned.begin(), pruned.end(), std::size_t{0});
  }
  return extract(partial, target);
#endif
}

QPoly ct_of_factor_list(std::span<const LaurentPoly> factors, const Monomial& target,
                        CtStats* stats) {
#ifdef _OPENMP
  if (!omp_in_parallel() && omp_get_max_threads() > 1) {
    return ct_of_factor_list_parallel(factors, target, 0, stats);
  }
#endif
  return ct_of_factor_list_serial(factors, target, stats);
}

LaurentPoly expand_product(std::span<const LaurentPoly> factors, int n) {
  LaurentPoly product = LaurentPoly::one(n);
  for (const auto& f : factors) product *= f;
  return product;
}

QPoly ct_unpruned(std::span<const LaurentPoly> factors, const Monomial& target) {
  return expand_product(factors, target.n()).coeff_of(target);
}

}  // namespace dysonct
