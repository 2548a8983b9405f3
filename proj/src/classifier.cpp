#include "parafact/classifier.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace parafact {

PaperConstants PaperConstants::reference() {
  PaperConstants k;
  k.focus_focus = matrices::focus_focus();
  k.two_point_boundary = matrices::two_point_boundary();
  k.three_point_boundary = matrices::three_point_boundary();
  k.hyperbola_isometry = matrices::hyperbola_isometry();
  k.boundary_action = matrices::boundary_action();
  k.sign_exchange = matrices::sign_exchange();
  k.shear = matrices::shear();
  k.reflection = matrices::reflection();
  k.corner_k = 7;
  k.sphere_self_intersection = 9;
  k.torus_self_intersection = 9;
  k.base_d_vectors = {{1, 1}, {1, 2}, {2, 1}};
  return k;
}

const std::vector<std::string>& PaperConstants::names() {
  static const std::vector<std::string> kNames = {
      "focus_focus",    "two_point_boundary", "three_point_boundary", "hyperbola_isometry",
      "boundary_action", "sign_exchange",     "shear",                "reflection",
      "corner_k",       "sphere_self_intersection", "torus_self_intersection",
      "base_d_vectors"};
  return kNames;
}

void PaperConstants::corrupt(std::string_view name) {
  const std::map<std::string_view, Mat2*> mats = {
      {"focus_focus", &focus_focus},
      {"two_point_boundary", &two_point_boundary},
      {"three_point_boundary", &three_point_boundary},
      {"hyperbola_isometry", &hyperbola_isometry},
      {"boundary_action", &boundary_action},
      {"sign_exchange", &sign_exchange},
      {"shear", &shear},
      {"reflection", &reflection},
  };
  if (auto it = mats.find(name); it != mats.end()) {
    it->second->b += 1;
  } else if (name == "corner_k") {
    corner_k += 1;
  } else if (name == "sphere_self_intersection") {
    sphere_self_intersection += 1;
  } else if (name == "torus_self_intersection") {
    torus_self_intersection += 1;
  } else if (name == "base_d_vectors") {
    base_d_vectors.at(0).second += 1;
  } else {
    throw InvalidArgument("unknown constant '" + std::string(name) + "'");
  }
}

Mat2 corner_monodromy(const Int& k) {
  const Mat2 swap{0, 1, 1, 0};
  const Mat2 gluing{1, 0, -k, -1};
  return swap * gluing;
}

// ---------------------------------------------------------------------------

Factorization twopoint_factorization(Sign eps, const Int& d1, const Int& d2) {
  const TwoPointC c = c_from_d_twopoint(eps, d1, d2);
  const std::array<ParabolicParams, 2> params{ParabolicParams::make(eps, c.c1, d1),
                                              ParabolicParams::make(eps, c.c2, d2)};
  return Factorization::from_params(params);
}

TwoPointEnumeration enumerate_twopoint(std::int64_t bound, const Int& coprime_d_bound,
                                       const Mat2& target, unsigned workers) {
  if (bound < 0) throw InvalidArgument("enumerate_twopoint: negative bound");
  TwoPointEnumeration result;
  result.bound = bound;
  for (auto& tuple : enumerate_factorizations(target, 2, bound, SignSector::any, workers)) {
    if (sector_admits(SignSector::plus, tuple)) {
      result.plus.push_back(std::move(tuple));
    } else if (sector_admits(SignSector::minus, tuple)) {
      result.minus.push_back(std::move(tuple));
    } else {
      result.mixed.push_back(std::move(tuple));
    }
  }

  std::set<ParamTuple> parametric;
  for (const auto& s : hyperbola_solutions_in_box(Sign::plus, bound)) {
    const TwoPointC c = c_from_d_twopoint(Sign::plus, s.d1, s.d2);
    if (abs(c.c1) > bound || abs(c.c2) > bound) continue;
    if (gcd(c.c1, s.d1) != 1 || gcd(c.c2, s.d2) != 1) continue;
    parametric.insert({ParabolicParams::make(Sign::plus, c.c1, s.d1),
                       ParabolicParams::make(Sign::plus, c.c2, s.d2)});
  }
  result.parametric_plus.assign(parametric.begin(), parametric.end());
  result.plus_matches_parametric = result.parametric_plus == result.plus;

  result.coprime_d_bound = coprime_d_bound;
  for (const auto& s : hyperbola_solutions_in_box(Sign::minus, coprime_d_bound)) {
    ++result.minus_points_checked;
    const TwoPointC c = c_from_d_twopoint(Sign::minus, s.d1, s.d2);
    if (!twopoint_system_holds(Sign::minus, c.c1, c.c2, s.d1, s.d2)) {
      result.minus_system_holds = false;
    }
    if (gcd(c.c1, s.d1) == 1 && gcd(c.c2, s.d2) == 1) result.minus_admissible.push_back(s);
  }
  return result;
}

namespace {

HyperbolaSolution canonical_sign(HyperbolaSolution v) {
  if (v.d1 < 0 || (v.d1 == 0 && v.d2 < 0)) {
    v.d1 = -v.d1;
    v.d2 = -v.d2;
  }
  return v;
}

// Orders by max-norm, then lexicographically.
bool smaller(const HyperbolaSolution& lhs, const HyperbolaSolution& rhs) {
  const Int ln = std::max(abs(lhs.d1), abs(lhs.d2));
  const Int rn = std::max(abs(rhs.d1), abs(rhs.d2));
  return std::tie(ln, lhs.d1, lhs.d2) < std::tie(rn, rhs.d1, rhs.d2);
}

HyperbolaSolution act(const Mat2& m, const HyperbolaSolution& v) {
  return canonical_sign({v.eps, m.a * v.d1 + m.b * v.d2, m.c * v.d1 + m.d * v.d2});
}

}  // namespace

HyperbolaSolution twopoint_orbit_representative(const HyperbolaSolution& v, const Mat2& action) {
  const Mat2 inverse = mat_inv(action);
  HyperbolaSolution best = canonical_sign(v);
  for (;;) {
    HyperbolaSolution forward = act(action, best);
    HyperbolaSolution backward = act(inverse, best);
    HyperbolaSolution next = smaller(forward, backward) ? forward : backward;
    if (!smaller(next, best)) return best;
    best = std::move(next);
  }
}

TwoPointClassification classify_twopoint(std::int64_t bound, const Mat2& action,
                                         const Mat2& boundary) {
  TwoPointClassification result;
  result.bound = bound;
  result.solutions = hyperbola_brute_force(Sign::plus, bound);

  std::map<HyperbolaSolution, std::vector<HyperbolaSolution>,
           bool (*)(const HyperbolaSolution&, const HyperbolaSolution&)>
      orbits(&smaller);
  result.action_matches_conjugation = true;
  for (const auto& s : result.solutions) {
    orbits[twopoint_orbit_representative(s, action)].push_back(s);

    const Factorization f = twopoint_factorization(Sign::plus, s.d1, s.d2);
    const HyperbolaSolution image{Sign::plus, action.a * s.d1 + action.b * s.d2,
                                  action.c * s.d1 + action.d * s.d2};
    if (hyperbola_form(Sign::plus, image.d1, image.d2) != 1) {
      result.action_matches_conjugation = false;
      continue;
    }
    const Factorization expected = twopoint_factorization(Sign::plus, image.d1, image.d2);
    if (global_conjugate(f, boundary).factorization.factors != expected.factors) {
      result.action_matches_conjugation = false;
    }
  }
  for (auto& [rep, members] : orbits) {
    TwoPointOrbit orbit;
    orbit.representative = rep;
    orbit.members = std::move(members);
    orbit.factorization = twopoint_factorization(Sign::plus, rep.d1, rep.d2);
    result.orbits.push_back(std::move(orbit));
  }
  if (result.orbits.size() != 2) {
    throw ClassificationMismatch("expected 2 orbits of two-point solutions within bound " +
                                 std::to_string(bound) + ", found " +
                                 std::to_string(result.orbits.size()));
  }
  return result;
}

// ---------------------------------------------------------------------------

Factorization threepoint_factorization(const Vec3& d) {
  const auto c = solve_c_threepoint(d);
  if (!c) {
    std::ostringstream os;
    os << "no c-vector for d = " << d;
    throw NoSolution(os.str());
  }
  const std::array<ParabolicParams, 3> params{ParabolicParams::make(Sign::plus, c->x, d.x),
                                              ParabolicParams::make(Sign::plus, c->y, d.y),
                                              ParabolicParams::make(Sign::plus, c->z, d.z)};
  return Factorization::from_params(params);
}

std::optional<ThreePointForm> threepoint_form(std::span<const ParabolicParams> params) {
  if (params.size() != 3 || !sector_admits(SignSector::plus, params)) return std::nullopt;
  for (int mask = 0; mask < 8; ++mask) {
    const auto flip = [&](int bit, const Int& x) { return (mask >> bit) & 1 ? Int(-x) : x; };
    const Vec3 c{flip(0, params[0].c), flip(1, params[1].c), flip(2, params[2].c)};
    const Vec3 d{flip(0, params[0].d), flip(1, params[1].d), flip(2, params[2].d)};
    if (cross(c, d) != markov_rhs(d)) continue;
    const auto base = solve_c_threepoint(d);
    if (!base || d.x == 0) return std::nullopt;
    const Vec3 diff = c - *base;
    const Int k = diff.x / d.x;
    if (k * d != diff) return std::nullopt;
    return ThreePointForm{c, d, k};
  }
  return std::nullopt;
}

ThreePointEnumeration enumerate_threepoint(std::int64_t bound, std::int64_t mixed_bound,
                                           unsigned workers, const Mat2& target) {
  ThreePointEnumeration result;
  result.bound = bound;
  result.mixed_bound = mixed_bound;
  result.plus = enumerate_factorizations(target, 3, bound, SignSector::plus, workers);
  result.minus = enumerate_factorizations(target, 3, bound, SignSector::minus, workers);
  result.mixed = enumerate_factorizations(target, 3, mixed_bound, SignSector::mixed, workers);
  for (const auto& tuple : result.plus) {
    const auto form = threepoint_form(tuple);
    if (!form) {
      result.plus_unexplained.push_back(tuple);
      continue;
    }
    const Vec3 abs_d{abs(form->d.x), abs(form->d.y), abs(form->d.z)};
    if (markov_form(abs_d) != 0) result.plus_unexplained.push_back(tuple);
  }
  return result;
}

Factorization cyclic_realization(const Factorization& f) {
  if (f.size() != 3) throw InvalidArgument("cyclic_realization expects three factors");
  const Mat2& m = f.target;
  Factorization out;
  out.factors = {conjugate(f.factors[2], m), f.factors[0], f.factors[1]};
  out.target = f.target;
  return out;
}

Factorization reflection_realization(const Factorization& f, const Mat2& reflection) {
  if (f.size() != 3) throw InvalidArgument("reflection_realization expects three factors");
  Factorization reversed;
  reversed.factors = {mat_inv(f.factors[2]), mat_inv(f.factors[1]), mat_inv(f.factors[0])};
  reversed.target = mat_inv(f.target);
  return global_conjugate(reversed, reflection).factorization;
}

Factorization vieta_realization(const Factorization& f, const Mat2& reflection) {
  if (f.size() != 3) throw InvalidArgument("vieta_realization expects three factors");
  return reflection_realization(cyclic_realization(inverse_hurwitz_move(f, 0)), reflection);
}

Vec3 abs_d_vector(const Factorization& f) {
  const auto params = f.params();
  if (params.size() != 3) throw InvalidArgument("abs_d_vector expects three factors");
  return {params[0].d, params[1].d, params[2].d};
}

SymmetryReport markov_symmetry_realizations(int depth, const Mat2& target,
                                            const Mat2& reflection) {
  SymmetryReport report;
  report.depth = depth;
  const auto fail = [](const MarkovTriple& t, const std::string& what) {
    std::ostringstream os;
    os << what << " for Markov triple " << t;
    throw RealizationMismatch(os.str());
  };
  for (const auto& node : markov_tree(depth)) {
    ++report.triples;
    const Vec3 d = node.triple.vec();
    const Factorization f = threepoint_factorization(d);
    if (product(f) != target) fail(node.triple, "canonical factorization misses the target");

    const std::array<std::tuple<const char*, Factorization, Vec3>, 3> cases{{
        {"cyclic", cyclic_realization(f), Vec3{d.z, d.x, d.y}},
        {"reflection", reflection_realization(f, reflection), Vec3{d.z, d.y, d.x}},
        {"vieta", vieta_realization(f, reflection), vieta_jump(d, 1)},
    }};
    for (const auto& [kind, g, expected] : cases) {
      ++report.realizations_checked;
      const std::string name(kind);
      if (product(g.factors) != target) fail(node.triple, name + " realization changes the product");
      if (abs_d_vector(g) != expected) fail(node.triple, name + " realization induces the wrong d-map");
      if (!threepoint_form(g.params())) fail(node.triple, name + " realization leaves no integral c");
    }
  }
  return report;
}

}  // namespace parafact
