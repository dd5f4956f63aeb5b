#include "dysonct/report.hpp"

#include <sstream>

namespace dysonct {

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  j["params"] = {{"n", params.n},
                 {"a", params.a},
                 {"I", params.I},
                 {"J", params.J},
                 {"extra", params.extra}};
  j["holds"] = holds;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["elapsed_ms"] = elapsed_ms;
  j["engine"] = engine;
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.identity = j.at("identity").get<std::string>();
  const auto& p = j.at("params");
  r.params.n = p.at("n").get<int>();
  r.params.a = p.at("a").get<std::vector<int>>();
  r.params.I = p.at("I").get<std::vector<int>>();
  r.params.J = p.at("J").get<std::vector<int>>();
  r.params.extra = p.at("extra");
  r.holds = j.at("holds").get<bool>();
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.engine = j.at("engine").get<std::string>();
  return r;
}

std::string VerificationReport::to_json_line() const { return to_json().dump(); }

std::string format_list(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

std::string VerificationReport::summary_line() const {
  std::ostringstream os;
  os << (holds ? "[PASS] " : "[FAIL] ") << identity << " n=" << params.n
     << " a=" << format_list(params.a);
  if (!params.I.empty() || !params.J.empty()) {
    os << " I=" << format_list(params.I) << " J=" << format_list(params.J);
  }
  os << "  lhs=" << lhs << "  rhs=" << rhs;
  return os.str();
}

}  // namespace dysonct
