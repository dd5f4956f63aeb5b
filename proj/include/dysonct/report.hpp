#pragma once

#include <nlohmann/json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace dysonct {

inline constexpr const char* kEngineVersion = "dysonct 1.0.0";

/// Outcome of one identity check. A false `holds` is a result, not an error.
struct VerificationReport {
  struct Params {
    int n = 0;
    std::vector<int> a;
    std::vector<int> I;
    std::vector<int> J;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  };

  std::string identity;
  Params params;
  bool holds = false;
  std::string lhs;
  std::string rhs;
  double elapsed_ms = 0.0;
  std::string engine = kEngineVersion;

  [[nodiscard]] nlohmann::ordered_json to_json() const;
  static VerificationReport from_json(const nlohmann::ordered_json& j);
  /// Single-line JSON text.
  [[nodiscard]] std::string to_json_line() const;
  /// "[PASS] qdyson n=2 a=(1,1,1) ..." style line.
  [[nodiscard]] std::string summary_line() const;
};

/// Wall-clock stopwatch in milliseconds.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  [[nodiscard]] double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string format_list(const std::vector<int>& v);

}  // namespace dysonct
