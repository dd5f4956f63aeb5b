#pragma once

// Coefficient extraction from a product of Laurent polynomials.
//
// All three entry points compute coeff_of(f_1 * ... * f_r, target) exactly:
//   ct_of_factor_list_serial   pruned incremental product, single thread
//   ct_of_factor_list_parallel the same pruning, partial products split over
//                              OpenMP threads and merged by hash partition
//   ct_unpruned                plain left fold of lp_mul, then a lookup
// ct_of_factor_list picks the parallel kernel unless called from inside an
// OpenMP parallel region or with a single available thread.

#include "dysonct/laurent.hpp"

#include <cstddef>
#include <span>

namespace dysonct {

/// Counters reported by the pruned kernels.
struct CtStats {
  std::size_t peak_terms = 0;    // largest surviving partial product
  std::size_t pruned_terms = 0;  // candidate terms discarded by the bounds
};

QPoly ct_of_factor_list(std::span<const LaurentPoly> factors, const Monomial& target,
                        CtStats* stats = nullptr);

QPoly ct_of_factor_list_serial(std::span<const LaurentPoly> factors, const Monomial& target,
                               CtStats* stats = nullptr);

/// threads <= 0 uses the OpenMP default team size.
QPoly ct_of_factor_list_parallel(std::span<const LaurentPoly> factors, const Monomial& target,
                                 int threads = 0, CtStats* stats = nullptr);

QPoly ct_unpruned(std::span<const LaurentPoly> factors, const Monomial& target);

/// Full product of the factors (unit polynomial in n + 1 variables if empty).
LaurentPoly expand_product(std::span<const LaurentPoly> factors, int n);

}  // namespace dysonct
