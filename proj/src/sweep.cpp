#include "dysonct/sweep.hpp"

#include "dysonct/dyson.hpp"
#include "dysonct/kadell.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <functional>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dysonct {

const std::vector<std::string>& sweep_identities() {
  static const std::vector<std::string> ids = {"qdyson", "dyson", "firstlayer", "kadell", "kadellq",
                                               "main",   "factorization", "tailcancel", "f1"};
  return ids;
}

void SweepConfig::validate() const {
  const auto& ids = sweep_identities();
  if (std::find(ids.begin(), ids.end(), identity) == ids.end()) {
    throw InvalidParameters("unknown identity '" + identity + "'");
  }
  if (n < 1) throw InvalidParameters("sweep needs n >= 1");
  if (n + 1 > kMaxVariables) throw InvalidParameters("n too large");
  if (amax < 0) throw InvalidParameters("amax must be nonnegative");
  if (jobs < 1) throw InvalidParameters("jobs must be at least 1");
  if (samples < 0) throw InvalidParameters("samples must be nonnegative");
  if (identity == "factorization" && n < 2) throw InvalidParameters("factorization needs n >= 2");
}

nlohmann::ordered_json SweepSummary::to_json() const {
  return {{"total", total}, {"passed", passed}, {"failed", failed}, {"rejected", rejected}, {"seed", seed}};
}

std::vector<std::vector<int>> enumerate_parameters(int n, int amax) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n + 1), 0);
  while (true) {
    out.push_back(a);
    int pos = n;
    while (pos >= 0 && ++a[static_cast<std::size_t>(pos)] > amax) {
      a[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return out;
  }
}

namespace {

void multisets(const std::vector<int>& pool, std::size_t from, int remaining, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = from; k < pool.size(); ++k) {
    cur.push_back(pool[k]);
    multisets(pool, k, remaining - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<LayerSpec> enumerate_layouts(int n, int m_min, int m_max) {
  std::vector<LayerSpec> out;
  const unsigned universe = 1U << (n + 1);
  for (int m = std::max(0, m_min); m <= std::min(m_max, n); ++m) {
    for (unsigned mask = 0; mask < universe; ++mask) {
      if (std::popcount(mask) != m) continue;
      std::vector<int> I;
      std::vector<int> rest;
      for (int i = 0; i <= n; ++i) (mask >> i & 1U ? I : rest).push_back(i);
      std::vector<std::vector<int>> Js;
      std::vector<int> cur;
      multisets(rest, 0, m, cur, Js);
      for (auto& J : Js) out.push_back(LayerSpec::make(n, I, std::move(J)));
    }
  }
  return out;
}

std::uint64_t SeededRng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int SeededRng::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

std::vector<FactorizationInstance> random_factorization_instances(std::uint64_t seed, int count,
                                                                  int n_max, int amax) {
  if (n_max < 2) throw InvalidParameters("factorization instances need n >= 2");
  SeededRng rng(seed);
  std::vector<FactorizationInstance> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = rng.uniform(2, n_max);
    std::vector<int> I;
    std::vector<int> rest;
    for (int i = 0; i <= n; ++i) (rng.uniform(0, 1) ? I : rest).push_back(i);
    if (I.size() < 2 || rest.empty()) continue;
    std::vector<int> J;
    for (std::size_t k = 0; k < I.size(); ++k) {
      J.push_back(rest[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(rest.size()) - 1))]);
    }
    std::sort(J.begin(), J.end());
    FactorizationInstance inst{LayerSpec::make(n, std::move(I), std::move(J)), {}, 0, 1};
    for (int i = 0; i <= n; ++i) inst.a.push_back(rng.uniform(0, amax));
    const int full = static_cast<int>(inst.layer.full_mask());
    inst.U = static_cast<PositionMask>(rng.uniform(1, full - 1));
    inst.v = rng.uniform(1, std::countr_zero(inst.U) + 1);
    out.push_back(std::move(inst));
  }
  return out;
}

namespace {

/// Result slot of one sweep task.
struct Outcome {
  std::optional<VerificationReport> report;
  bool rejected = false;
  std::exception_ptr error;
};

std::vector<Outcome> run_tasks(const std::vector<std::function<Outcome()>>& tasks, int jobs) {
  std::vector<Outcome> out(tasks.size());
  const auto count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      out[idx] = tasks[idx]();
    } catch (...) {
      out[idx].error = std::current_exception();
    }
  }
  return out;
}

Outcome reported(VerificationReport r) { return Outcome{std::move(r), false, nullptr}; }

VerificationReport tail_cancel_report(const LayerSpec& layer, const std::vector<std::vector<int>>& as,
                                      JStarSemantics sem) {
  Stopwatch clock;
  int checks = 0;
  int passed = 0;
  for (const auto& a : as) {
    const DysonSpec spec(layer.n, a);
    for (int h = 2; h <= layer.m(); ++h) {
      ++checks;
      if (verify_tail_cancel(layer, h, spec, sem)) ++passed;
    }
  }
  VerificationReport r;
  r.identity = "tailcancel";
  r.params.n = layer.n;
  r.params.I = layer.I;
  r.params.J = layer.J;
  r.params.extra["samples"] = as.size();
  r.params.extra["semantics"] = std::string(to_string(sem));
  r.holds = passed == checks;
  r.lhs = std::to_string(passed);
  r.rhs = std::to_string(checks);
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport f1_report(int n) {
  Stopwatch clock;
  VerificationReport r;
  r.identity = "f1";
  r.params.n = n;
  r.holds = lemma_f1_check(n);
  r.lhs = r.holds ? "all choice functions contain the factor pair" : "some choice function lacks the pair";
  r.rhs = "all choice functions contain the factor pair";
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

std::vector<std::function<Outcome()>> build_tasks(const SweepConfig& c) {
  std::vector<std::function<Outcome()>> tasks;
  const int m_max = c.m_max < 0 ? c.n : c.m_max;
  const auto sem = c.semantics;
  const auto& id = c.identity;

  if (id == "qdyson" || id == "dyson") {
    for (auto& a : enumerate_parameters(c.n, c.amax)) {
      tasks.emplace_back([a, q = id == "qdyson", n = c.n] {
        const DysonSpec spec(n, a);
        return reported(q ? verify_q_dyson(spec) : verify_dyson(spec));
      });
    }
  } else if (id == "firstlayer" || id == "kadell" || id == "kadellq" || id == "main") {
    const int m_min = id == "firstlayer" || id == "kadellq" ? 1 : 0;
    const auto layouts = enumerate_layouts(c.n, m_min, m_max);
    for (const auto& layer : layouts) {
      for (auto& a : enumerate_parameters(c.n, c.amax)) {
        tasks.emplace_back([layer, a, id, sem]() -> Outcome {
          const DysonSpec spec(layer.n, a);
          if (id == "firstlayer") return reported(verify_first_layer(layer, spec));
          if (id == "kadell") return reported(verify_kadell(layer, spec));
          if (id == "kadellq") return reported(verify_kadell_q(layer, spec));
          if (!npc_holds(layer)) return Outcome{std::nullopt, true, nullptr};
          return reported(verify_main(layer, spec, sem));
        });
      }
    }
  } else if (id == "factorization") {
    const int count = c.samples > 0 ? c.samples : 500;
    for (auto& inst : random_factorization_instances(c.seed, count, c.n, c.amax)) {
      tasks.emplace_back([inst, sem] {
        const DysonSpec spec(inst.layer.n, inst.a);
        return reported(verify_factorization(inst.layer, inst.U, inst.v, spec, sem));
      });
    }
  } else if (id == "tailcancel") {
    const int count = c.samples > 0 ? c.samples : 100;
    SeededRng rng(c.seed);
    for (int n = 2; n <= c.n; ++n) {
      for (const auto& layer : enumerate_layouts(n, 2, std::min(m_max, n))) {
        std::vector<std::vector<int>> as;
        for (int s = 0; s < count; ++s) {
          std::vector<int> a;
          for (int i = 0; i <= n; ++i) a.push_back(rng.uniform(0, c.amax));
          as.push_back(std::move(a));
        }
        tasks.emplace_back([layer, as = std::move(as), sem] { return reported(tail_cancel_report(layer, as, sem)); });
      }
    }
  } else if (id == "f1") {
    for (int n = 2; n <= std::min(c.n, 5); ++n) {
      tasks.emplace_back([n] { return reported(f1_report(n)); });
    }
  }
  return tasks;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  const auto outcomes = run_tasks(build_tasks(config), config.jobs);
  SweepResult result;
  result.summary.seed = config.seed;
  for (const auto& o : outcomes) {
    if (o.error) std::rethrow_exception(o.error);
    ++result.summary.total;
    if (o.rejected) {
      ++result.summary.rejected;
      continue;
    }
    (o.report->holds ? result.summary.passed : result.summary.failed) += 1;
    result.reports.push_back(*o.report);
  }
  return result;
}

void write_json_lines(std::ostream& os, const SweepResult& result) {
  for (const auto& r : result.reports) os << r.to_json_line() << '\n';
  os << result.summary.to_json().dump() << '\n';
}

}  // namespace dysonct
