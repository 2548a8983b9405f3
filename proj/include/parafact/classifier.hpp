#pragma once

// Classification of focus-focus monodromy factorizations for almost toric
// fibrations on CP^2 with two and three focus-focus points.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parafact/diophantine.hpp"
#include "parafact/enumeration.hpp"
#include "parafact/factorization.hpp"
#include "parafact/matrices.hpp"
#include "parafact/sl2z.hpp"

namespace parafact {

class ClassificationMismatch : public Error {
 public:
  using Error::Error;
};

class RealizationMismatch : public Error {
 public:
  using Error::Error;
};

/// Every fixed quantity the classification depends on. Kept as data so that a
/// single value can be perturbed to exercise the verification suite.
struct PaperConstants {
  Mat2 focus_focus;           // [[1,1],[0,1]]
  Mat2 two_point_boundary;    // [[-7,-1],[1,0]]
  Mat2 three_point_boundary;  // [[1,0],[9,1]]
  Mat2 hyperbola_isometry;    // Z = [[21,-8],[8,-3]]
  Mat2 boundary_action;       // P = [[-8,3],[-3,1]]
  Mat2 sign_exchange;         // S = [[2,-1],[-1,1]]
  Mat2 shear;                 // A = [[1,0],[1,1]]
  Mat2 reflection;            // C = [[-1,0],[0,1]]
  Int corner_k{7};
  Int sphere_self_intersection{9};
  Int torus_self_intersection{9};
  std::vector<std::pair<Int, Int>> base_d_vectors;  // (1,1), (1,2), (2,1)

  static PaperConstants reference();

  /// Names accepted by corrupt(), in declaration order.
  static const std::vector<std::string>& names();

  /// Perturbs the named constant by one unit in one entry. Throws
  /// InvalidArgument for unknown names.
  void corrupt(std::string_view name);
};

/// [[0,1],[1,0]] * [[1,0],[-k,-1]] = [[-k,-1],[1,0]]: boundary monodromy of a
/// corner whose singular sphere has self-intersection k + 2.
Mat2 corner_monodromy(const Int& k);

// ---------------------------------------------------------------------------
// Two focus-focus points

/// Factorization (M_1, M_2) built from a hyperbola point: c from
/// c_from_d_twopoint, factor i has parameters (eps, c_i, d_i).
Factorization twopoint_factorization(Sign eps, const Int& d1, const Int& d2);

struct TwoPointEnumeration {
  std::int64_t bound = 0;
  std::vector<ParamTuple> plus;   // eps_1 = eps_2 = +1
  std::vector<ParamTuple> minus;  // eps_1 = eps_2 = -1
  std::vector<ParamTuple> mixed;  // reported, not interpreted
  /// Pairs from the hyperbola points and the c formula whose parameters lie in
  /// the box, canonicalized.
  std::vector<ParamTuple> parametric_plus;
  bool plus_matches_parametric = false;

  /// eps = -1 hyperbola points with |d| <= coprime_d_bound, each completed by
  /// the c formula; `minus_admissible` lists those with both (c_i, d_i) coprime.
  Int coprime_d_bound{0};
  std::size_t minus_points_checked = 0;
  bool minus_system_holds = true;
  std::vector<HyperbolaSolution> minus_admissible;
};

/// Exhaustive scan of pairs with |c_i|, |d_i| <= bound over every sign pattern,
/// keeping pairs whose product equals `target`.
TwoPointEnumeration enumerate_twopoint(std::int64_t bound, const Int& coprime_d_bound = 10000,
                                       const Mat2& target = matrices::two_point_boundary(),
                                       unsigned workers = 1);

struct TwoPointOrbit {
  HyperbolaSolution representative;
  std::vector<HyperbolaSolution> members;  // in-bound solutions of this orbit
  Factorization factorization;             // built from the representative
};

struct TwoPointClassification {
  std::int64_t bound = 0;
  std::vector<HyperbolaSolution> solutions;  // eps = +1, |d| <= bound
  std::vector<TwoPointOrbit> orbits;
  /// For every in-bound d: conjugating its factorization by the boundary
  /// monodromy gives the factorization of action * d.
  bool action_matches_conjugation = false;
};

/// Canonical representative of the orbit of `v` under the group generated by
/// `action` and -I: minimal max-norm, then lexicographically smallest, with the
/// first nonzero entry positive. Found by descent along the orbit.
HyperbolaSolution twopoint_orbit_representative(const HyperbolaSolution& v,
                                                const Mat2& action = matrices::boundary_action());

/// Partitions the eps = +1 hyperbola points with |d| <= bound into orbits of
/// <action, -I>. Throws ClassificationMismatch unless there are exactly two.
TwoPointClassification classify_twopoint(std::int64_t bound,
                                         const Mat2& action = matrices::boundary_action(),
                                         const Mat2& boundary = matrices::two_point_boundary());

// ---------------------------------------------------------------------------
// Three focus-focus points

/// Factorization with eps = +1, d as given and c = solve_c_threepoint(d).
/// Throws NoSolution when d does not satisfy Markov's equation.
Factorization threepoint_factorization(const Vec3& d);

/// A parameter triple read as a solution of cross(c, d) = markov_rhs(d).
struct ThreePointForm {
  Vec3 c;
  Vec3 d;
  Int shift{0};  // c = solve_c_threepoint(d) + shift * d
};

/// Chooses per-factor signs of (c_i, d_i) so that the vector equation holds.
/// Empty if no sign choice works or d is not a Markov vector.
std::optional<ThreePointForm> threepoint_form(std::span<const ParabolicParams> params);

struct ThreePointEnumeration {
  std::int64_t bound = 0;
  std::vector<ParamTuple> plus;
  std::vector<ParamTuple> minus;
  std::int64_t mixed_bound = 0;
  std::vector<ParamTuple> mixed;  // reported, not interpreted
  /// eps = +1 solutions that do not read as a Markov vector with matching c.
  std::vector<ParamTuple> plus_unexplained;
};

ThreePointEnumeration enumerate_threepoint(std::int64_t bound, std::int64_t mixed_bound,
                                           unsigned workers = 1,
                                           const Mat2& target = matrices::three_point_boundary());

/// (M_1, M_2, M_3) -> (M^{-1} M_3 M, M_1, M_2) with M the target.
Factorization cyclic_realization(const Factorization& f);

/// (M_1, M_2, M_3) -> C^{-1} (M_3^{-1}, M_2^{-1}, M_1^{-1}) C. Per factor
/// (eps, c, d) -> (eps, -c, d) up to order.
Factorization reflection_realization(const Factorization& f,
                                     const Mat2& reflection = matrices::reflection());

/// (M_1, M_2, M_3) -> (M_1^{-1} M_2 M_1, M_1, M_3), followed by the swap of
/// the first two entries (cyclic, then reflection).
Factorization vieta_realization(const Factorization& f,
                                const Mat2& reflection = matrices::reflection());

struct SymmetryReport {
  int depth = 0;
  std::size_t triples = 0;
  std::size_t realizations_checked = 0;
};

/// For every triple of markov_tree(depth): builds threepoint_factorization,
/// applies the three realizations and checks that the product stays `target`,
/// that |d| maps to (d3,d1,d2), (d3,d2,d1) and the middle Vieta jump, and that
/// the result is again an integral solution of the vector equation.
/// Throws RealizationMismatch naming the first offending triple.
SymmetryReport markov_symmetry_realizations(int depth,
                                            const Mat2& target = matrices::three_point_boundary(),
                                            const Mat2& reflection = matrices::reflection());

/// |d| read off canonical parameters of each factor.
Vec3 abs_d_vector(const Factorization& f);

}  // namespace parafact
