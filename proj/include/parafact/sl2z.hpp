#pragma once

// Exact arithmetic on 2x2 unimodular integer matrices and the (eps, c, d)
// parametrization of primitive parabolic elements of SL(2,Z).

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace parafact {

/// Arbitrary precision signed integer used for every public value.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violations: non-unimodular operands, non-coprime parameters,
/// out-of-range indices.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised by fixed-width fast paths when a value leaves the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

enum class Sign : int { minus = -1, plus = 1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign negate(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr Sign operator*(Sign lhs, Sign rhs) {
  return value(lhs) * value(rhs) > 0 ? Sign::plus : Sign::minus;
}
Sign sign_from_int(int v);  // throws InvalidArgument unless v is +1 or -1
std::string to_string(Sign s);  // "+1" / "-1"

/// Row-major [[a, b], [c, d]].
struct Mat2 {
  Int a{1}, b{0}, c{0}, d{1};

  Mat2() = default;
  Mat2(Int a_, Int b_, Int c_, Int d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Mat2 identity() { return {}; }

  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
  bool is_unimodular() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend bool operator<(const Mat2& lhs, const Mat2& rhs);
};

Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
Mat2 operator-(const Mat2& m);
std::ostream& operator<<(std::ostream& os, const Mat2& m);
std::string to_string(const Mat2& m);  // "[[a,b],[c,d]]"

Mat2 transpose(const Mat2& m);

/// Product of two unimodular matrices; throws InvalidArgument otherwise.
Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs);

/// Exact inverse (adjugate divided by the determinant).
Mat2 mat_inv(const Mat2& m);

/// by^{-1} * m * by.
Mat2 conjugate(const Mat2& m, const Mat2& by);

/// Matrix power for any integer exponent (negative exponents use the inverse).
Mat2 mat_pow(const Mat2& m, std::int64_t exponent);

/// Parameters of the primitive parabolic matrix
///   I + eps * [[c*d, d^2], [-c^2, -c*d]]
/// with gcd(c, d) = 1. (c, d) and (-c, -d) give the same matrix; the stored
/// representative has d > 0, or d == 0 and c > 0.
struct ParabolicParams {
  Sign eps = Sign::plus;
  Int c{0};
  Int d{1};

  /// Validates coprimality and canonicalizes the sign of (c, d).
  static ParabolicParams make(Sign eps, Int c, Int d);

  friend bool operator==(const ParabolicParams&, const ParabolicParams&) = default;
  friend bool operator<(const ParabolicParams& lhs, const ParabolicParams& rhs);
};

std::ostream& operator<<(std::ostream& os, const ParabolicParams& p);
std::string to_string(const ParabolicParams& p);  // "eps:c:d"

Mat2 parabolic_matrix(const ParabolicParams& p);

/// Inverse of parabolic_matrix. Empty for the identity, for trace != 2, for
/// det != 1 and for imprimitive parabolics (conjugates of [[1,k],[0,1]], |k| >= 2).
std::optional<ParabolicParams> parabolic_params(const Mat2& m);

/// parabolic_params(conjugate(parabolic_matrix(p), by)). For det(by) = +1 the
/// vector (c, d) maps to by^T (c, d) and eps is kept; det(by) = -1 also flips eps.
ParabolicParams conj_params(const ParabolicParams& p, const Mat2& by);

// Integer helpers shared by the other modules.
Int gcd(const Int& x, const Int& y);
Int abs(const Int& x);
int sign(const Int& x);
/// Floor of the square root for x >= 0.
Int isqrt(const Int& x);
/// Exact square root, or empty when x is not a perfect square.
std::optional<Int> exact_sqrt(const Int& x);
bool fits_int64(const Int& x);
/// Checked narrowing; throws OverflowError.
std::int64_t to_int64(const Int& x);

}  // namespace parafact
