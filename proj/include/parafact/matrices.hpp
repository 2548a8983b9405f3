#pragma once

// Fixed matrices of the CP^2 monodromy problem.

#include "parafact/sl2z.hpp"

namespace parafact::matrices {

/// Monodromy around a single focus-focus point, [[1,1],[0,1]].
inline const Mat2& focus_focus() {
  static const Mat2 m{1, 1, 0, 1};
  return m;
}

/// Boundary monodromy for two focus-focus points, [[-7,-1],[1,0]].
inline const Mat2& two_point_boundary() {
  static const Mat2 m{-7, -1, 1, 0};
  return m;
}

/// Boundary monodromy for three focus-focus points, [[1,0],[9,1]].
inline const Mat2& three_point_boundary() {
  static const Mat2 m{1, 0, 9, 1};
  return m;
}

/// Generator of the isometry group of -(x^2 + y^2) + 3xy, [[21,-8],[8,-3]].
inline const Mat2& hyperbola_isometry() {
  static const Mat2 m{21, -8, 8, -3};
  return m;
}

/// Action of conjugation by the two-point boundary monodromy on d-vectors,
/// [[-8,3],[-3,1]].
inline const Mat2& boundary_action() {
  static const Mat2 m{-8, 3, -3, 1};
  return m;
}

/// Maps eps = +1 hyperbola points to eps = -1 points, [[2,-1],[-1,1]].
inline const Mat2& sign_exchange() {
  static const Mat2 m{2, -1, -1, 1};
  return m;
}

/// Shear commuting with the three-point boundary monodromy, [[1,0],[1,1]].
inline const Mat2& shear() {
  static const Mat2 m{1, 0, 1, 1};
  return m;
}

/// Orientation reversal conjugating [[1,0],[9,1]] to its inverse, [[-1,0],[0,1]].
inline const Mat2& reflection() {
  static const Mat2 m{-1, 0, 0, 1};
  return m;
}

}  // namespace parafact::matrices
