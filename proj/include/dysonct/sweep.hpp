#pragma once

// Grid and randomized sweeps over the verifiers. Instances are evaluated
// concurrently (OpenMP, `jobs` threads) and reported in grid order.

#include "dysonct/firstlayer.hpp"
#include "dysonct/maintheorem.hpp"
#include "dysonct/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dysonct {

struct SweepConfig {
  std::string identity;  // see sweep_identities()
  int n = 2;
  int amax = 2;
  int m_max = -1;  // -1: up to n
  int jobs = 1;
  std::uint64_t seed = 0;
  int samples = 0;  // randomized suites; 0 picks the identity's default
  JStarSemantics semantics = kDefaultSemantics;
  std::string output;  // JSON-lines path, empty for none

  /// Throws InvalidParameters.
  void validate() const;
};

struct SweepSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int rejected = 0;
  std::uint64_t seed = 0;

  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

struct SweepResult {
  std::vector<VerificationReport> reports;
  SweepSummary summary;
};

const std::vector<std::string>& sweep_identities();

/// All a in {0..amax}^{n+1}, lexicographic.
std::vector<std::vector<int>> enumerate_parameters(int n, int amax);

/// All valid (I, J) with m_min <= |I| <= m_max: I ascending subsets, J
/// weakly increasing tuples over the complement of I.
std::vector<LayerSpec> enumerate_layouts(int n, int m_min, int m_max);

/// Splitmix-style generator with a portable uniform draw, so seeded
/// suites reproduce across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);

 private:
  std::uint64_t state_;
};

/// One random Lemma-style instance: a layer with m >= 2, nonempty U != I,
/// and v with i_v <= min U.
struct FactorizationInstance {
  LayerSpec layer;
  std::vector<int> a;
  PositionMask U = 0;
  int v = 1;
};

std::vector<FactorizationInstance> random_factorization_instances(std::uint64_t seed, int count,
                                                                  int n_max, int amax);

SweepResult run_sweep(const SweepConfig& config);

/// Writes one JSON line per report followed by the summary line.
void write_json_lines(std::ostream& os, const SweepResult& result);

}  // namespace dysonct
