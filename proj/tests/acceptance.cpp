// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "dysonct/ct.hpp"
#include "dysonct/dyson.hpp"
#include "dysonct/firstlayer.hpp"
#include "dysonct/kadell.hpp"
#include "dysonct/maintheorem.hpp"
#include "dysonct/sweep.hpp"

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace dysonct;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

SweepResult sweep(const std::string& id, int n, int amax, int m_max = -1,
                  JStarSemantics sem = kDefaultSemantics, std::uint64_t seed = 0, int samples = 0) {
  SweepConfig c;
  c.identity = id;
  c.n = n;
  c.amax = amax;
  c.m_max = m_max;
  c.semantics = sem;
  c.seed = seed;
  c.samples = samples;
  return run_sweep(c);
}

std::string counts(const SweepSummary& s) {
  std::ostringstream os;
  os << s.passed << "/" << s.total;
  if (s.rejected > 0) os << " (" << s.rejected << " rejected)";
  return os.str();
}

bool clean(const SweepSummary& s) { return s.failed == 0 && s.passed + s.rejected == s.total; }

Outcome q_dyson_grid() {
  const auto two = sweep("qdyson", 2, 3);
  const auto three = sweep("qdyson", 3, 2);
  return {clean(two.summary) && clean(three.summary) && two.summary.total == 64 && three.summary.total == 81,
          "n=2 a<=3 " + counts(two.summary) + ", n=3 a<=2 " + counts(three.summary)};
}

Outcome dyson_grid() {
  Outcome out;
  for (auto [n, amax] : {std::pair{1, 2}, {2, 2}, {3, 2}, {4, 1}}) {
    const auto r = sweep("dyson", n, amax);
    out.ok = out.ok && clean(r.summary);
    out.detail += "n=" + std::to_string(n) + " " + counts(r.summary) + " ";
  }
  return out;
}

Outcome first_layer_grid() {
  const auto r = sweep("firstlayer", 3, 2, 2);
  int shifted = 0;
  int lower_partner = 0;
  for (const auto& rep : r.reports) {
    if (rep.params.I.front() == 0) continue;
    ++shifted;
    for (int j : rep.params.J) {
      if (j < rep.params.I.front()) {
        ++lower_partner;
        break;
      }
    }
  }
  return {clean(r.summary) && lower_partner > 0,
          "n=3 m<=2 a<=2 " + counts(r.summary) + ", i_1>0 instances " + std::to_string(shifted) +
              ", with a partner below i_1 " + std::to_string(lower_partner)};
}

Outcome classical_first_layer() {
  Outcome out;
  int groups = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : enumerate_parameters(n, 2)) {
      const DysonSpec spec(n, a);
      std::map<std::vector<int>, Integer> seen;
      for (const auto& layer : enumerate_layouts(n, 1, n)) {
        const Integer brute = first_layer_q1_brute(layer, spec);
        if (Rational(brute) != first_layer_q1_closed(layer, spec)) out.ok = false;
        auto [it, fresh] = seen.emplace(layer.I, brute);
        if (fresh) ++groups;
        if (it->second != brute) out.ok = false;
      }
    }
  }
  out.detail = std::to_string(groups) + " (a, I) groups constant across J and equal to the closed sum";
  return out;
}

Outcome kadell_grid() {
  Outcome out;
  int lc_checks = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto r = sweep("kadell", n, 2);
    out.ok = out.ok && clean(r.summary);
    for (const auto& rep : r.reports) {
      if (!rep.params.extra.contains("lc_holds")) continue;
      ++lc_checks;
      out.ok = out.ok && rep.params.extra.at("lc_holds").get<bool>();
    }
    out.detail += "n=" + std::to_string(n) + " " + counts(r.summary) + " ";
  }
  out.detail += "intermediate value checks " + std::to_string(lc_checks);
  return out;
}

Outcome counterexample() {
  const auto r = reproduce_counterexample();
  const QPoly lhs = QPoly::one_minus_q_pow(3) * QPoly(0, {1, 2, 3, 2});
  const QPoly rhs = QPoly::one_minus_q_pow(4) * QPoly(0, {1, 1}) * QPoly(0, {1, 1, 1});
  const bool ok = !r.holds && r.lhs == lhs.to_string() && r.rhs == rhs.to_string() &&
                  r.lhs == "1 + 2*q + 3*q^2 + q^3 - 2*q^4 - 3*q^5 - 2*q^6" &&
                  r.rhs == "1 + 2*q + 2*q^2 + q^3 - q^4 - 2*q^5 - 2*q^6 - q^7";
  return {ok, "LHS=" + r.lhs + "  RHS=" + r.rhs + "  unequal"};
}

Outcome main_grid() {
  Outcome out;
  int set_failures = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto def = sweep("main", n, 2, -1, kDefaultSemantics);
    const auto alt = sweep("main", n, 2, -1, JStarSemantics::set);
    out.ok = out.ok && clean(def.summary);
    set_failures += alt.summary.failed;
    out.detail += "n=" + std::to_string(n) + " " + counts(def.summary) + " ";
  }
  out.detail += "(default " + std::string(to_string(kDefaultSemantics)) + "; set semantics fails " +
                std::to_string(set_failures) + ")";
  return out;
}

Outcome lemma_suite() {
  const auto fact = sweep("factorization", 6, 5, -1, kDefaultSemantics, 20240601, 500);
  int npc_nonempty = 0;
  for (const auto& rep : fact.reports) {
    if (rep.params.extra.at("npc").get<bool>() && !rep.params.extra.at("residual_empty").get<bool>()) ++npc_nonempty;
  }
  const auto tail = sweep("tailcancel", 6, 5, -1, kDefaultSemantics, 7, 100);
  const auto f1 = sweep("f1", 5, 0);
  const bool ok = clean(fact.summary) && fact.summary.total >= 500 && clean(tail.summary) && clean(f1.summary) &&
                  f1.summary.total == 4;
  return {ok, "factorization " + counts(fact.summary) + " (" + std::to_string(npc_nonempty) +
                  " cancellation cases), tail layouts " + counts(tail.summary) + ", choice functions n=2..5 " +
                  counts(f1.summary)};
}

LaurentPoly random_degree_zero(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> exp(-2, 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  LaurentPoly f(n);
  for (int t = 0; t < 6; ++t) {
    std::vector<int> e(static_cast<std::size_t>(n + 1));
    int sum = 0;
    for (int i = 0; i < n; ++i) sum += e[static_cast<std::size_t>(i)] = exp(rng);
    e[static_cast<std::size_t>(n)] = -sum;
    f.add_term(Monomial(n, e), QPoly::monomial(coef(rng), exp(rng)));
  }
  return f;
}

Outcome kernel_properties() {
  int pi_checks = 0;
  int cyclic_checks = 0;
  int kernel_checks = 0;
  bool ok = true;

  std::mt19937 rng(99);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 100; ++t) {
      const auto f = random_degree_zero(rng, n);
      ok = ok && f.pi_action(n + 1) == f;
      ++pi_checks;
    }
  }

  for (int n = 1; n <= 2; ++n) {
    for (const auto& a : enumerate_parameters(n, 2)) {
      std::vector<int> rotated{a.back()};
      rotated.insert(rotated.end(), a.begin(), a.end() - 1);
      const auto base = q_dyson_factors(DysonSpec(n, a));
      const auto turned = q_dyson_factors(DysonSpec(n, rotated));
      for (int t = 0; t < 10; ++t) {
        const auto L = random_degree_zero(rng, n);
        auto lhs = base;
        lhs.push_back(L);
        auto rhs = turned;
        rhs.push_back(L.pi_action(1));
        ok = ok && ct_of_factor_list(lhs, Monomial(n)) == ct_of_factor_list(rhs, Monomial(n));
        ++cyclic_checks;
      }
    }
  }

  // Pruned kernels against a full expansion for every instance of criteria 1-3.
  const auto compare = [&](const std::vector<LaurentPoly>& factors, int n, const std::vector<Monomial>& targets) {
    const LaurentPoly full = expand_product(factors, n);
    for (const auto& t : targets) {
      const QPoly expected = full.coeff_of(t);
      ok = ok && ct_of_factor_list_serial(factors, t) == expected;
      ok = ok && ct_of_factor_list_parallel(factors, t, 2) == expected;
      ++kernel_checks;
    }
  };
  for (auto [n, amax] : {std::pair{2, 3}, {3, 2}}) {
    for (const auto& a : enumerate_parameters(n, amax)) compare(q_dyson_factors(DysonSpec(n, a)), n, {Monomial(n)});
  }
  for (auto [n, amax] : {std::pair{1, 2}, {2, 2}, {3, 2}, {4, 1}}) {
    for (const auto& a : enumerate_parameters(n, amax)) compare(dyson_factors(DysonSpec(n, a)), n, {Monomial(n)});
  }
  std::vector<Monomial> layer_targets;
  for (const auto& layer : enumerate_layouts(3, 1, 2)) layer_targets.push_back(first_layer_target(layer));
  for (const auto& a : enumerate_parameters(3, 2)) {
    const DysonSpec spec(3, a);
    compare(q_dyson_factors(spec), 3, layer_targets);
    compare(dyson_factors(spec), 3, layer_targets);
  }

  return {ok, "full-cycle checks " + std::to_string(pi_checks) + ", cyclic-shift checks " +
                  std::to_string(cyclic_checks) + ", pruned=unpruned checks " + std::to_string(kernel_checks)};
}

struct Criterion {
  int id;
  const char* name;
  double limit_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "q-Dyson constant terms", 120e3, q_dyson_grid},
      {2, "Dyson constant terms", 120e3, dyson_grid},
      {3, "first-layer closed form vs brute force", 600e3, first_layer_grid},
      {4, "classical first layer independent of J", 600e3, classical_first_layer},
      {5, "Kadell identity and intermediate value", 600e3, kadell_grid},
      {6, "q-analogue counterexample", 60e3, counterexample},
      {7, "main identity on non-crossing layouts", 900e3, main_grid},
      {8, "exponent lemma suite", 60e3, lemma_suite},
      {9, "kernel properties", 600e3, kernel_properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    Stopwatch clock;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double ms = clock.elapsed_ms();
    const bool pass = out.ok && ms <= c.limit_ms;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s | %s | %.0f ms (limit %.0f ms)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), ms, c.limit_ms);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
