#pragma once

// Dyson and q-Dyson products and brute-force checks of their constant terms.

#include "dysonct/laurent.hpp"
#include "dysonct/report.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace dysonct {

/// Thrown for malformed user parameters (length mismatch, bad layouts, ...).
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters a_0..a_n of a Dyson product.
class DysonSpec {
 public:
  DysonSpec(int n, std::vector<int> a);
  explicit DysonSpec(const std::vector<int>& a) : DysonSpec(static_cast<int>(a.size()) - 1, a) {}

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::span<const int> a() const { return a_; }
  [[nodiscard]] const std::vector<int>& a_vector() const { return a_; }
  [[nodiscard]] int a(int i) const { return a_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] int total() const { return total_; }

 private:
  int n_;
  std::vector<int> a_;
  int total_ = 0;
};

/// For each i < j: (x_i/x_j)_{a_i} and (q x_j/x_i)_{a_j}, each expanded once.
std::vector<LaurentPoly> q_dyson_factors(const DysonSpec& spec);

/// For each ordered i != j: (1 - x_i/x_j), repeated a_i times.
std::vector<LaurentPoly> dyson_factors(const DysonSpec& spec);

/// CT of the q-Dyson product (pruned kernel).
QPoly q_dyson_ct(const DysonSpec& spec);
/// CT of the classical Dyson product.
Integer dyson_ct(const DysonSpec& spec);

VerificationReport verify_q_dyson(const DysonSpec& spec);
VerificationReport verify_dyson(const DysonSpec& spec);

}  // namespace dysonct
