#pragma once

// Ordered factorizations into primitive parabolic matrices, the braid (Hurwitz)
// action on them, simultaneous conjugation and orbit exploration.
//
// Convention: factors[0] is applied first, so the product is
//   factors[n-1] * ... * factors[1] * factors[0].

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "parafact/sl2z.hpp"

namespace parafact {

/// Reversed-order product; the empty product is the identity.
Mat2 product(std::span<const Mat2> factors);

struct Factorization {
  std::vector<Mat2> factors;
  Mat2 target;

  /// Builds a factorization whose target is the product of `factors`.
  /// Throws InvalidArgument if any factor is not primitive parabolic.
  static Factorization from_factors(std::vector<Mat2> factors);
  static Factorization from_params(std::span<const ParabolicParams> params);

  std::size_t size() const { return factors.size(); }

  /// Canonical parameters of every factor; throws if a factor is not
  /// primitive parabolic.
  std::vector<ParabolicParams> params() const;

  /// Throws InvalidArgument unless the product equals the target and every
  /// factor is primitive parabolic.
  void validate() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend bool operator<(const Factorization& lhs, const Factorization& rhs);
};

Mat2 product(const Factorization& f);

/// (M_i, M_{i+1}) -> (M_{i+1}, M_{i+1} M_i M_{i+1}^{-1}).
Factorization hurwitz_move(const Factorization& f, std::size_t i);

/// (M_i, M_{i+1}) -> (M_i^{-1} M_{i+1} M_i, M_i); inverse of hurwitz_move.
Factorization inverse_hurwitz_move(const Factorization& f, std::size_t i);

struct ConjugationResult {
  Factorization factorization;
  /// False when `by` commutes with the original target.
  bool target_changed = false;
};

/// Conjugates every factor (and the target) by `by`.
ConjugationResult global_conjugate(const Factorization& f, const Mat2& by);

struct OrbitReport {
  /// Canonical representatives, sorted by their parameter keys.
  std::vector<Factorization> representatives;
  /// Number of move applications performed.
  std::uint64_t move_count = 0;
  bool truncated = false;
  /// Step g of the c-shift quotient (c -> c + k g d); 0 when no shear
  /// conjugator is in play.
  Int shift_step{0};
};

/// Orbit key of a factorization: canonical parameters per factor, with the
/// c-vector shifted by a multiple of shift_step * d to the reduce_mod
/// representative when shift_step != 0.
std::vector<ParabolicParams> orbit_key(const Factorization& f, const Int& shift_step);

/// Breadth-first closure of `start` under hurwitz_move and inverse_hurwitz_move
/// at every index and global_conjugate by each conjugator and its inverse.
/// Conjugators of the form +-[[1,0],[k,1]] act on keys as c -> c + k d; their
/// gcd becomes the shift quotient so that the orbit stays finite. Stops once
/// max_nodes distinct keys are known.
OrbitReport orbit_explore(const Factorization& start, std::span<const Mat2> conjugators,
                          std::size_t max_nodes);

/// True if some representative has the same orbit key as `f`.
bool orbit_contains(const OrbitReport& report, const Factorization& f);

}  // namespace parafact
