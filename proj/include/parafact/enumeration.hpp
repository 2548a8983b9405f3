#pragma once

// Exhaustive search for factorizations of a fixed matrix into primitive
// parabolic factors with bounded parameters.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "parafact/sl2z.hpp"

namespace parafact {

/// Which sign patterns (eps_1, ..., eps_n) a search keeps.
enum class SignSector {
  plus,   // every eps_i = +1
  minus,  // every eps_i = -1
  equal,  // plus or minus
  mixed,  // not all equal
  any,
};

bool sector_admits(SignSector sector, std::span<const ParabolicParams> params);

/// Canonical primitive parabolic parameters (eps, c, d) with |c|, |d| <= bound,
/// sorted.
std::vector<ParabolicParams> parabolic_params_in_box(Sign eps, std::int64_t bound);

/// Worker count from PARAFACT_WORKERS if set, else the hardware concurrency.
unsigned default_worker_count();

using ParamTuple = std::vector<ParabolicParams>;

/// Every tuple (p_1, ..., p_n) of canonical parameters with |c_i|, |d_i| <= bound,
/// sign pattern admitted by `sector`, and
///   parabolic_matrix(p_n) * ... * parabolic_matrix(p_1) == target.
/// The first n-1 factors are scanned; the last is solved for exactly, so the
/// search covers the whole box. Output is sorted and independent of `workers`.
std::vector<ParamTuple> enumerate_factorizations(const Mat2& target, std::size_t length,
                                                 std::int64_t bound, SignSector sector,
                                                 unsigned workers = 1);

}  // namespace parafact
