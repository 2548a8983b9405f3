#include "parafact/diophantine.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <tuple>

#include "parafact/matrices.hpp"

namespace parafact {

Int hyperbola_form(Sign eps, const Int& x, const Int& y) {
  return -value(eps) * (x * x + y * y) + 3 * x * y;
}

bool operator<(const HyperbolaSolution& lhs, const HyperbolaSolution& rhs) {
  const int le = value(lhs.eps);
  const int re = value(rhs.eps);
  return std::tie(le, lhs.d1, lhs.d2) < std::tie(re, rhs.d1, rhs.d2);
}

std::ostream& operator<<(std::ostream& os, const HyperbolaSolution& s) {
  return os << '(' << s.d1 << ',' << s.d2 << ")[eps=" << to_string(s.eps) << ']';
}

std::vector<HyperbolaSolution> hyperbola_brute_force(Sign eps, std::int64_t bound) {
  if (bound < 0) throw InvalidArgument("hyperbola_brute_force: negative bound");
  // 5 * bound^2 must fit comfortably in 64 bits.
  constexpr std::int64_t kMaxBound = 1'000'000'000;
  if (bound > kMaxBound) throw OverflowError("hyperbola_brute_force: bound too large for the grid scan");
  const std::int64_t e = value(eps);
  std::vector<HyperbolaSolution> out;
  for (std::int64_t x = -bound; x <= bound; ++x) {
    for (std::int64_t y = -bound; y <= bound; ++y) {
      if (-e * (x * x + y * y) + 3 * x * y == 1) out.push_back({eps, x, y});
    }
  }
  return out;
}

std::vector<HyperbolaSolution> hyperbola_solutions_in_box(Sign eps, const Int& bound) {
  if (bound < 0) throw InvalidArgument("hyperbola_solutions_in_box: negative bound");
  // d2^2 - 3 eps d1 d2 + d1^2 + eps = 0  =>  d2 = (3 eps d1 +- sqrt(5 d1^2 - 4 eps)) / 2
  const int e = value(eps);
  std::vector<HyperbolaSolution> out;
  for (Int x = -bound; x <= bound; ++x) {
    const Int disc = 5 * x * x - 4 * e;
    const auto root = exact_sqrt(disc);
    if (!root) continue;
    std::array<Int, 2> ys;
    std::size_t count = 0;
    for (int s : {-1, 1}) {
      const Int num = 3 * e * x + s * (*root);
      if (num % 2 != 0) continue;
      Int y = num / 2;
      if (abs(y) > bound) continue;
      if (count == 1 && ys[0] == y) continue;
      ys[count++] = std::move(y);
    }
    std::sort(ys.begin(), ys.begin() + count);
    for (std::size_t i = 0; i < count; ++i) out.push_back({eps, x, ys[i]});
  }
  return out;
}

namespace {

HyperbolaSolution apply(const Mat2& m, const HyperbolaSolution& v, Sign eps) {
  return {eps, m.a * v.d1 + m.b * v.d2, m.c * v.d1 + m.d * v.d2};
}

}  // namespace

std::vector<HyperbolaSolution> hyperbola_generate(std::int64_t n_max) {
  if (n_max < 0) throw InvalidArgument("hyperbola_generate: negative depth");
  const Mat2& z = matrices::hyperbola_isometry();
  const Mat2 z_inv = mat_inv(z);
  std::set<HyperbolaSolution> found;
  for (const auto& base : {HyperbolaSolution{Sign::plus, 1, 1}, HyperbolaSolution{Sign::plus, 1, 2},
                           HyperbolaSolution{Sign::plus, 2, 1}}) {
    HyperbolaSolution forward = base;
    HyperbolaSolution backward = base;
    for (std::int64_t n = 0; n <= n_max; ++n) {
      for (const auto* v : {&forward, &backward}) {
        found.insert(*v);
        found.insert({Sign::plus, -v->d1, -v->d2});
      }
      forward = apply(z, forward, Sign::plus);
      backward = apply(z_inv, backward, Sign::plus);
    }
  }
  return {found.begin(), found.end()};
}

HyperbolaSolution s_transform(const HyperbolaSolution& sol) {
  if (sol.eps != Sign::plus) throw InvalidArgument("s_transform expects an eps = +1 solution");
  return apply(matrices::sign_exchange(), sol, Sign::minus);
}

HyperbolaSolution s_transform_inverse(const HyperbolaSolution& sol) {
  if (sol.eps != Sign::minus) {
    throw InvalidArgument("s_transform_inverse expects an eps = -1 solution");
  }
  return apply(mat_inv(matrices::sign_exchange()), sol, Sign::plus);
}

TwoPointC c_from_d_twopoint(Sign eps, const Int& d1, const Int& d2) {
  if (hyperbola_form(eps, d1, d2) != 1) {
    throw NoSolution("c_from_d_twopoint: (" + d1.str() + ", " + d2.str() +
                     ") is not on the eps = " + to_string(eps) + " hyperbola");
  }
  const int e = value(eps);
  return {8 * d1 - 3 * e * d2, -d2 + 3 * e * d1};
}

bool twopoint_system_holds(Sign eps, const Int& c1, const Int& c2, const Int& d1,
                           const Int& d2) {
  const int e = value(eps);
  return hyperbola_form(eps, c1, c2) == 1 && hyperbola_form(eps, d1, d2) == 1 &&
         -2 * e * (c1 * d1 + c2 * d2) + 3 * (c1 * d2 + c2 * d1) == 7 &&
         c1 * d2 - c2 * d1 == 3;
}

bool operator<(const Vec3& lhs, const Vec3& rhs) {
  return std::tie(lhs.x, lhs.y, lhs.z) < std::tie(rhs.x, rhs.y, rhs.z);
}

Vec3 operator+(const Vec3& lhs, const Vec3& rhs) {
  return {lhs.x + rhs.x, lhs.y + rhs.y, lhs.z + rhs.z};
}

Vec3 operator-(const Vec3& lhs, const Vec3& rhs) {
  return {lhs.x - rhs.x, lhs.y - rhs.y, lhs.z - rhs.z};
}

Vec3 operator*(const Int& k, const Vec3& v) { return {k * v.x, k * v.y, k * v.z}; }

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << '(' << v.x << ',' << v.y << ',' << v.z << ')';
}

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

Int dot(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

Int max_norm(const Vec3& v) { return std::max({abs(v.x), abs(v.y), abs(v.z)}); }

Int markov_form(const Vec3& d) {
  return d.x * d.x + d.y * d.y + d.z * d.z - 3 * d.x * d.y * d.z;
}

MarkovTriple MarkovTriple::make(Int x, Int y, Int z) {
  const Vec3 v{x, y, z};
  if (x <= 0 || y <= 0 || z <= 0 || markov_form(v) != 0) {
    std::ostringstream os;
    os << "not a positive Markov triple: " << v;
    throw NoSolution(os.str());
  }
  std::array<Int, 3> s{std::move(x), std::move(y), std::move(z)};
  std::sort(s.begin(), s.end());
  MarkovTriple t;
  t.d1 = std::move(s[0]);
  t.d2 = std::move(s[1]);
  t.d3 = std::move(s[2]);
  return t;
}

bool operator<(const MarkovTriple& lhs, const MarkovTriple& rhs) {
  return std::tie(lhs.d1, lhs.d2, lhs.d3) < std::tie(rhs.d1, rhs.d2, rhs.d3);
}

std::ostream& operator<<(std::ostream& os, const MarkovTriple& t) {
  return os << '(' << t.d1 << ',' << t.d2 << ',' << t.d3 << ')';
}

std::vector<MarkovTriple> markov_brute_force(const Int& max_component) {
  if (max_component < 1) throw InvalidArgument("markov_brute_force: max_component must be >= 1");
  // For d1 <= d2 the largest entry solves d3^2 - 3 d1 d2 d3 + d1^2 + d2^2 = 0.
  std::vector<MarkovTriple> out;
  for (Int a = 1; a <= max_component; ++a) {
    for (Int b = a; b <= max_component; ++b) {
      const Int p = 3 * a * b;
      const Int disc = p * p - 4 * (a * a + b * b);
      if (disc < 0) continue;
      const auto root = exact_sqrt(disc);
      if (!root) continue;
      for (int s : {-1, 1}) {
        const Int num = p + s * (*root);
        if (num % 2 != 0) continue;
        const Int c = num / 2;
        if (c < b || c > max_component) continue;
        if (s == 1 && *root == 0) continue;  // double root already emitted
        MarkovTriple t;
        t.d1 = a;
        t.d2 = b;
        t.d3 = c;
        out.push_back(std::move(t));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Vec3 vieta_jump(const Vec3& d, int index) {
  switch (index) {
    case 0: return {3 * d.y * d.z - d.x, d.y, d.z};
    case 1: return {d.x, 3 * d.x * d.z - d.y, d.z};
    case 2: return {d.x, d.y, 3 * d.x * d.y - d.z};
    default: throw InvalidArgument("vieta_jump: index must be 0, 1 or 2");
  }
}

std::vector<MarkovNode> markov_tree(int depth, const std::optional<Int>& max_component) {
  if (depth < 0) throw InvalidArgument("markov_tree: negative depth");
  std::vector<MarkovNode> tree;
  const MarkovTriple root;
  if (max_component && *max_component < root.d3) return tree;
  tree.push_back({root, std::nullopt, 0});
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (tree[i].depth == depth) continue;
    const MarkovTriple current = tree[i].triple;
    std::vector<MarkovTriple> children;
    for (int index = 0; index < 3; ++index) {
      const Vec3 v = vieta_jump(current.vec(), index);
      MarkovTriple child = MarkovTriple::make(v.x, v.y, v.z);
      if (child.d3 <= current.d3) continue;  // parent side, or no growth
      if (tree[i].parent && child == tree[*tree[i].parent].triple) continue;
      if (max_component && child.d3 > *max_component) continue;
      children.push_back(std::move(child));
    }
    std::sort(children.begin(), children.end());
    children.erase(std::unique(children.begin(), children.end()), children.end());
    for (auto& child : children) tree.push_back({std::move(child), i, tree[i].depth + 1});
  }
  return tree;
}

Vec3 markov_rhs(const Vec3& d) { return 3 * Vec3{d.x, d.y - 3 * d.x * d.z, d.z}; }

Int minimizing_shift(std::span<const Int> c, std::span<const Int> d) {
  if (c.size() != d.size()) throw InvalidArgument("minimizing_shift: length mismatch");
  if (std::all_of(d.begin(), d.end(), [](const Int& x) { return x == 0; })) return 0;
  Int c_norm = 0;
  for (const Int& x : c) c_norm = std::max(c_norm, abs(x));
  const auto f = [&](const Int& k) {
    Int m = 0;
    for (std::size_t i = 0; i < c.size(); ++i) m = std::max(m, abs(c[i] + k * d[i]));
    return m;
  };
  // f is convex in k, so its leftmost integer minimizer is the smallest k with
  // f(k+1) >= f(k). Every minimizer satisfies |k| <= 2|c| + 1.
  Int lo = -(2 * c_norm + 1);
  Int hi = 2 * c_norm + 1;
  while (lo < hi) {
    const Int mid = lo + (hi - lo) / 2;
    if (f(mid + 1) >= f(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

Vec3 reduce_mod(const Vec3& c, const Vec3& d) {
  const std::array<Int, 3> cs{c.x, c.y, c.z};
  const std::array<Int, 3> ds{d.x, d.y, d.z};
  return c + minimizing_shift(cs, ds) * d;
}

ExtendedGcd extended_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = old_r - q * r;
    std::swap(old_r, r);
    old_s = old_s - q * s;
    std::swap(old_s, s);
    old_t = old_t - q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::optional<Vec3> solve_c_threepoint(const Vec3& d) {
  if (markov_form(d) != 0) return std::nullopt;
  // With w . d = 1 and rhs . d = 0: cross(cross(w, rhs), d) = rhs (w . d) - w (rhs . d) = rhs.
  const ExtendedGcd xy = extended_gcd(d.x, d.y);
  const ExtendedGcd full = extended_gcd(xy.g, d.z);
  if (full.g != 1) return std::nullopt;
  const Vec3 w{full.x * xy.x, full.x * xy.y, full.y};
  const Vec3 rhs = markov_rhs(d);
  const Vec3 c = cross(w, rhs);
  return reduce_mod(c, d);
}

}  // namespace parafact
