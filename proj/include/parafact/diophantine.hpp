#pragma once

// Integer solvers for the two Diophantine reductions of the factorization
// problem: the indefinite binary form -eps(x^2 + y^2) + 3xy = 1 (two focus-focus
// points) and Markov's equation with its cross-product system (three points).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "parafact/sl2z.hpp"

namespace parafact {

/// Thrown when an input violates the equation a routine requires.
class NoSolution : public Error {
 public:
  using Error::Error;
};

/// -eps * (x^2 + y^2) + 3 * x * y
Int hyperbola_form(Sign eps, const Int& x, const Int& y);

/// Integer point (d1, d2) with hyperbola_form(eps, d1, d2) == 1.
struct HyperbolaSolution {
  Sign eps = Sign::plus;
  Int d1{1};
  Int d2{1};

  friend bool operator==(const HyperbolaSolution&, const HyperbolaSolution&) = default;
  friend bool operator<(const HyperbolaSolution& lhs, const HyperbolaSolution& rhs);
};

std::ostream& operator<<(std::ostream& os, const HyperbolaSolution& s);

/// Every solution with |d1|, |d2| <= bound, by scanning the full grid.
/// Lexicographic order in (d1, d2).
std::vector<HyperbolaSolution> hyperbola_brute_force(Sign eps, std::int64_t bound);

/// Same set as hyperbola_brute_force, found row by row by solving the quadratic
/// in d2 exactly. Linear in the bound.
std::vector<HyperbolaSolution> hyperbola_solutions_in_box(Sign eps, const Int& bound);

/// {+-Z^n d : |n| <= n_max, d in {(1,1), (1,2), (2,1)}} for eps = +1, sorted.
std::vector<HyperbolaSolution> hyperbola_generate(std::int64_t n_max);

/// Applies [[2,-1],[-1,1]], taking eps = +1 solutions to eps = -1 solutions.
HyperbolaSolution s_transform(const HyperbolaSolution& sol);
/// Inverse map [[1,1],[1,2]] from eps = -1 back to eps = +1.
HyperbolaSolution s_transform_inverse(const HyperbolaSolution& sol);

struct TwoPointC {
  Int c1;
  Int c2;
  friend bool operator==(const TwoPointC&, const TwoPointC&) = default;
};

/// The unique (c1, c2) completing a hyperbola point to a solution of the
/// two-point system: c1 = 8 d1 - 3 eps d2, c2 = -d2 + 3 eps d1.
/// Throws NoSolution if (eps, d1, d2) is not on the hyperbola.
TwoPointC c_from_d_twopoint(Sign eps, const Int& d1, const Int& d2);

/// The four scalar equations equivalent to M2 * M1 = [[-7,-1],[1,0]] for
/// equal signs (third equation doubled to stay integral).
bool twopoint_system_holds(Sign eps, const Int& c1, const Int& c2, const Int& d1,
                           const Int& d2);

struct Vec3 {
  Int x{0}, y{0}, z{0};

  friend bool operator==(const Vec3&, const Vec3&) = default;
  friend bool operator<(const Vec3& lhs, const Vec3& rhs);
};

Vec3 operator+(const Vec3& lhs, const Vec3& rhs);
Vec3 operator-(const Vec3& lhs, const Vec3& rhs);
Vec3 operator*(const Int& k, const Vec3& v);
std::ostream& operator<<(std::ostream& os, const Vec3& v);

Vec3 cross(const Vec3& lhs, const Vec3& rhs);
Int dot(const Vec3& lhs, const Vec3& rhs);
Int max_norm(const Vec3& v);

/// x^2 + y^2 + z^2 - 3xyz
Int markov_form(const Vec3& d);

/// Positive solution of Markov's equation, entries sorted ascending.
struct MarkovTriple {
  Int d1{1}, d2{1}, d3{1};

  /// Sorts the entries; throws NoSolution unless all are positive and the
  /// equation holds.
  static MarkovTriple make(Int x, Int y, Int z);

  Vec3 vec() const { return {d1, d2, d3}; }

  friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;
  friend bool operator<(const MarkovTriple& lhs, const MarkovTriple& rhs);
};

std::ostream& operator<<(std::ostream& os, const MarkovTriple& t);

/// All sorted triples with largest entry <= max_component, ascending.
/// Throws InvalidArgument for max_component < 1.
std::vector<MarkovTriple> markov_brute_force(const Int& max_component);

/// Replaces entry `index` (0, 1 or 2) by the other root of the quadratic it
/// satisfies. No sorting; v(d) = (d1, 3 d1 d3 - d2, d3) is index 1.
Vec3 vieta_jump(const Vec3& d, int index);

struct MarkovNode {
  MarkovTriple triple;
  std::optional<std::size_t> parent;  // index into the tree vector
  int depth = 0;
};

/// Breadth-first Markov tree rooted at (1,1,1). Children of a node are its
/// sorted Vieta mutations other than the parent, strictly larger in the
/// largest entry, deduplicated and ascending. Depth 0 is the root alone.
/// With max_component set, nodes whose largest entry exceeds it are pruned.
std::vector<MarkovNode> markov_tree(int depth, const std::optional<Int>& max_component = {});

/// Right-hand side 3 (d1, d2 - 3 d1 d3, d3) of the cross-product system.
Vec3 markov_rhs(const Vec3& d);

/// Smallest k minimizing max_i |c_i + k d_i| (k = 0 when d is all zero).
/// c and d must have equal length.
Int minimizing_shift(std::span<const Int> c, std::span<const Int> d);

/// The representative of c modulo d minimizing max_norm(c + k d); ties go to
/// the smaller k.
Vec3 reduce_mod(const Vec3& c, const Vec3& d);

/// Integer solution c of cross(c, d) == markov_rhs(d), reduced with
/// reduce_mod. Empty when d does not satisfy Markov's equation or its entries
/// have a common factor. All solutions are c + k d.
std::optional<Vec3> solve_c_threepoint(const Vec3& d);

/// Extended Euclid: returns g = gcd(a, b) >= 0 with a*x + b*y = g.
struct ExtendedGcd {
  Int g, x, y;
};
ExtendedGcd extended_gcd(const Int& a, const Int& b);

}  // namespace parafact
