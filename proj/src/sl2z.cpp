#include "parafact/sl2z.hpp"

#include <limits>
#include <sstream>
#include <tuple>

namespace parafact {

Sign sign_from_int(int v) {
  if (v == 1) return Sign::plus;
  if (v == -1) return Sign::minus;
  throw InvalidArgument("sign must be +1 or -1, got " + std::to_string(v));
}

std::string to_string(Sign s) { return s == Sign::plus ? "+1" : "-1"; }

bool Mat2::is_unimodular() const {
  const Int det_value = det();
  return det_value == 1 || det_value == -1;
}

bool operator<(const Mat2& lhs, const Mat2& rhs) {
  return std::tie(lhs.a, lhs.b, lhs.c, lhs.d) < std::tie(rhs.a, rhs.b, rhs.c, rhs.d);
}

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
  return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
          lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.a << ',' << m.b << "],[" << m.c << ',' << m.d << "]]";
}

std::string to_string(const Mat2& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

Mat2 transpose(const Mat2& m) { return {m.a, m.c, m.b, m.d}; }

namespace {

void require_unimodular(const Mat2& m, const char* what) {
  if (!m.is_unimodular()) {
    throw InvalidArgument(std::string(what) + ": matrix " + to_string(m) +
                          " has determinant " + m.det().str() + ", expected +1 or -1");
  }
}

}  // namespace

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs) {
  require_unimodular(lhs, "mat_mul");
  require_unimodular(rhs, "mat_mul");
  return lhs * rhs;
}

Mat2 mat_inv(const Mat2& m) {
  const Int det_value = m.det();
  if (det_value == 1) return {m.d, -m.b, -m.c, m.a};
  if (det_value == -1) return {-m.d, m.b, m.c, -m.a};
  require_unimodular(m, "mat_inv");
  return m;  // unreachable
}

Mat2 conjugate(const Mat2& m, const Mat2& by) { return mat_inv(by) * m * by; }

Mat2 mat_pow(const Mat2& m, std::int64_t exponent) {
  Mat2 base = exponent < 0 ? mat_inv(m) : m;
  // Negating INT64_MIN is undefined; step once before taking the magnitude.
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  Mat2 result;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

ParabolicParams ParabolicParams::make(Sign eps, Int c, Int d) {
  if (gcd(c, d) != 1) {
    throw InvalidArgument("parabolic parameters (" + c.str() + ", " + d.str() +
                          ") are not coprime");
  }
  if (d < 0 || (d == 0 && c < 0)) {
    c = -c;
    d = -d;
  }
  ParabolicParams p;
  p.eps = eps;
  p.c = std::move(c);
  p.d = std::move(d);
  return p;
}

bool operator<(const ParabolicParams& lhs, const ParabolicParams& rhs) {
  const int le = value(lhs.eps);
  const int re = value(rhs.eps);
  return std::tie(le, lhs.c, lhs.d) < std::tie(re, rhs.c, rhs.d);
}

std::ostream& operator<<(std::ostream& os, const ParabolicParams& p) {
  return os << to_string(p.eps) << ':' << p.c << ':' << p.d;
}

std::string to_string(const ParabolicParams& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

Mat2 parabolic_matrix(const ParabolicParams& p) {
  if (gcd(p.c, p.d) != 1) {
    throw InvalidArgument("parabolic_matrix: (" + p.c.str() + ", " + p.d.str() +
                          ") are not coprime");
  }
  const Int cd = p.c * p.d;
  if (p.eps == Sign::plus) return {1 + cd, p.d * p.d, -(p.c * p.c), 1 - cd};
  return {1 - cd, -(p.d * p.d), p.c * p.c, 1 + cd};
}

std::optional<ParabolicParams> parabolic_params(const Mat2& m) {
  if (m.trace() != 2 || m.det() != 1 || m == Mat2::identity()) return std::nullopt;
  // m - I = [[p, q], [r, -p]] = eps * [[c*d, d^2], [-c^2, -c*d]]
  const Int p = m.a - 1;
  const Int& q = m.b;
  const Int& r = m.c;
  const Sign eps = q != 0 ? (q > 0 ? Sign::plus : Sign::minus)
                          : (r < 0 ? Sign::plus : Sign::minus);
  const Int d_sq = value(eps) * q;
  const Int c_sq = -value(eps) * r;
  if (d_sq < 0 || c_sq < 0) return std::nullopt;
  auto d = exact_sqrt(d_sq);
  auto c = exact_sqrt(c_sq);
  if (!d || !c) return std::nullopt;
  // Fix the relative sign of c from the diagonal: eps * c * d == p.
  if (value(eps) * (*c) * (*d) != p) *c = -*c;
  if (value(eps) * (*c) * (*d) != p) return std::nullopt;
  if (gcd(*c, *d) != 1) return std::nullopt;
  return ParabolicParams::make(eps, std::move(*c), std::move(*d));
}

ParabolicParams conj_params(const ParabolicParams& p, const Mat2& by) {
  const Int det_value = by.det();
  if (det_value != 1 && det_value != -1) {
    throw InvalidArgument("conj_params: conjugator " + to_string(by) + " is not unimodular");
  }
  // by^T (c, d); a unimodular change of coordinates keeps gcd(c, d) = 1.
  Int c = by.a * p.c + by.c * p.d;
  Int d = by.b * p.c + by.d * p.d;
  const Sign eps = det_value == 1 ? p.eps : negate(p.eps);
  return ParabolicParams::make(eps, std::move(c), std::move(d));
}

Int gcd(const Int& x, const Int& y) { return boost::multiprecision::gcd(x, y); }

Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

int sign(const Int& x) { return x.sign(); }

Int isqrt(const Int& x) {
  if (x < 0) throw InvalidArgument("isqrt of a negative number");
  return boost::multiprecision::sqrt(x);
}

std::optional<Int> exact_sqrt(const Int& x) {
  if (x < 0) return std::nullopt;
  Int root = boost::multiprecision::sqrt(x);
  if (root * root != x) return std::nullopt;
  return root;
}

bool fits_int64(const Int& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const Int& x) {
  if (!fits_int64(x)) throw OverflowError("integer " + x.str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(x);
}

}  // namespace parafact
