#include "parafact/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>

namespace parafact {

namespace {

struct CheckSpec {
  std::string id;
  std::string anchor;
  std::vector<std::string> constants;
  std::function<void(const PaperConstants&, const VerifyOptions&, CheckResult&)> run;
};

// Records a failed condition; the check fails if any condition fails.
class Conditions {
 public:
  explicit Conditions(CheckResult& r) : result_(r) {}
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (!result_.message.empty()) result_.message += "; ";
    result_.message += what;
  }
  void finish() { result_.passed = result_.message.empty(); }

 private:
  CheckResult& result_;
};

std::set<std::pair<Int, Int>> as_pairs(const std::vector<HyperbolaSolution>& v) {
  std::set<std::pair<Int, Int>> out;
  for (const auto& s : v) out.emplace(s.d1, s.d2);
  return out;
}

std::pair<Int, Int> act(const Mat2& m, const std::pair<Int, Int>& v) {
  return {m.a * v.first + m.b * v.second, m.c * v.first + m.d * v.second};
}

Int max_abs(const std::pair<Int, Int>& v) { return std::max(abs(v.first), abs(v.second)); }

// ---------------------------------------------------------------------------

void check_corner(const PaperConstants& k, const VerifyOptions&, CheckResult& r) {
  Conditions cond(r);
  const Mat2 m = corner_monodromy(k.corner_k);
  r.witness = {{"k", to_json(k.corner_k)}, {"monodromy", to_json(m)}};
  cond.require(k.corner_k == k.sphere_self_intersection - 2,
               "k differs from self-intersection minus 2");
  cond.require(m == k.two_point_boundary, "corner monodromy differs from the two-point boundary");
  cond.finish();
}

void check_twopoint_enumeration(const PaperConstants& k, const VerifyOptions& o, CheckResult& r) {
  Conditions cond(r);
  r.bounds = {{"pair_box", o.bound_2pt}, {"coprime_d_box", o.coprime_d_bound}};
  const auto e = enumerate_twopoint(o.bound_2pt, o.coprime_d_bound, k.two_point_boundary, o.workers);

  // Hyperbola points generated as +-Z^n b from the base vectors.
  const Mat2 z_inv = mat_inv(k.hyperbola_isometry);
  std::set<std::pair<Int, Int>> generated;
  for (const auto& base : k.base_d_vectors) {
    for (const Mat2* step : {&k.hyperbola_isometry, &z_inv}) {
      auto v = base;
      // Z is hyperbolic with spectral radius ~18; 24 steps leave any box in range.
      for (int n = 0; n < 24; ++n) {
        if (max_abs(v) <= o.bound_2pt) {
          generated.insert(v);
          generated.emplace(-v.first, -v.second);
        }
        v = act(*step, v);
      }
    }
  }
  const auto brute = as_pairs(hyperbola_brute_force(Sign::plus, o.bound_2pt));
  cond.require(generated == brute, "Z-orbits of the base vectors miss hyperbola points");

  std::set<ParamTuple> parametric;
  for (const auto& [d1, d2] : generated) {
    if (hyperbola_form(Sign::plus, d1, d2) != 1) {
      cond.require(false, "generated vector is not on the hyperbola");
      continue;
    }
    const TwoPointC c = c_from_d_twopoint(Sign::plus, d1, d2);
    cond.require(twopoint_system_holds(Sign::plus, c.c1, c.c2, d1, d2),
                 "c formula violates the two-point system");
    if (abs(c.c1) > o.bound_2pt || abs(c.c2) > o.bound_2pt) continue;
    parametric.insert({ParabolicParams::make(Sign::plus, c.c1, d1),
                       ParabolicParams::make(Sign::plus, c.c2, d2)});
  }
  const std::set<ParamTuple> scanned(e.plus.begin(), e.plus.end());
  cond.require(!scanned.empty(), "eps = +1 sector is empty");
  cond.require(scanned == parametric, "eps = +1 scan differs from the parametric family");
  cond.require(e.plus_matches_parametric, "eps = +1 scan differs from the row-wise family");

  // S exchanges the two hyperbolas; S and S^{-1} have row sums <= 3.
  const Mat2 s_inv = mat_inv(k.sign_exchange);
  const auto plus_wide = as_pairs(hyperbola_solutions_in_box(Sign::plus, 3 * Int(o.bound_2pt)));
  const auto minus_wide = as_pairs(hyperbola_solutions_in_box(Sign::minus, 3 * Int(o.bound_2pt)));
  const auto minus_box = hyperbola_brute_force(Sign::minus, o.bound_2pt);
  for (const auto& v : brute) {
    cond.require(minus_wide.count(act(k.sign_exchange, v)) == 1,
                 "S does not map an eps = +1 point to eps = -1");
  }
  for (const auto& v : as_pairs(minus_box)) {
    cond.require(plus_wide.count(act(s_inv, v)) == 1,
                 "S^-1 does not map an eps = -1 point to eps = +1");
  }

  cond.require(e.minus.empty(), "eps = -1 sector has admissible pairs in the box");
  cond.require(e.minus_system_holds, "c formula fails the eps = -1 system");
  cond.require(e.minus_admissible.empty(), "an eps = -1 hyperbola point has coprime pairs");
  r.witness = {{"plus_pairs", e.plus.size()},
               {"minus_pairs", e.minus.size()},
               {"mixed_pairs", e.mixed.size()},
               {"minus_points_checked", e.minus_points_checked},
               {"minus_admissible", e.minus_admissible.size()}};
  cond.finish();
}

const Mat2 kPair1First{3, 1, -4, -1};
const Mat2 kPair1Second{3, 4, -1, -1};
const Mat2 kPair2First{6, 1, -25, -4};
const Mat2 kPair2Second{3, 1, -4, -1};

void check_twopoint_matrices(const PaperConstants& k, const VerifyOptions&, CheckResult& r) {
  Conditions cond(r);
  const Factorization pair1 = twopoint_factorization(Sign::plus, 1, 2);
  const Factorization pair2 = twopoint_factorization(Sign::plus, 1, 1);
  cond.require(pair1.factors == std::vector<Mat2>{kPair1First, kPair1Second},
               "d = (1,2) does not give the first pair");
  cond.require(pair2.factors == std::vector<Mat2>{kPair2First, kPair2Second},
               "d = (1,1) does not give the second pair");
  cond.require(kPair1Second * kPair1First == k.two_point_boundary, "first pair product");
  cond.require(kPair2Second * kPair2First == k.two_point_boundary, "second pair product");
  r.witness = {{"pair1", to_json(pair1)}, {"pair2", to_json(pair2)}};
  cond.finish();
}

void check_hurwitz(const PaperConstants&, const VerifyOptions&, CheckResult& r) {
  Conditions cond(r);
  const auto pair2 = Factorization::from_factors({kPair2First, kPair2Second});
  const auto moved = hurwitz_move(pair2, 0);
  cond.require(moved.factors == std::vector<Mat2>{kPair1First, kPair1Second},
               "one move does not take the second pair to the first");
  cond.require(inverse_hurwitz_move(moved, 0) == pair2, "inverse move does not undo it");
  r.witness = {{"moved", to_json(moved)}};
  cond.finish();
}

void check_identities(const PaperConstants& k, const VerifyOptions& o, CheckResult& r) {
  Conditions cond(r);
  r.bounds = {{"isometry_box", o.isometry_box}};
  const Mat2& z = k.hyperbola_isometry;
  const Mat2& p = k.boundary_action;
  const Mat2& a = k.shear;
  const Mat2& m = k.three_point_boundary;
  const Mat2& c = k.reflection;
  cond.require(z.det() == 1 && p.det() == 1 && a.det() == 1 && m.det() == 1,
               "determinant of Z, P, A or M is not 1");
  cond.require(c.det() == -1, "determinant of C is not -1");
  cond.require(p * p * p == -(z * z), "P^3 != -Z^2");
  cond.require(a * m == m * a, "A does not commute with M");
  cond.require(m.is_unimodular() && c.is_unimodular() && conjugate(m, c) == mat_inv(m),
               "C^-1 M C != M^-1");
  cond.require(m == Mat2{1, 0, k.torus_self_intersection, 1},
               "M is not [[1,0],[self-intersection,1]]");

  // Q(Z v) == Q(v) on the box, in 64-bit arithmetic.
  const std::int64_t za = to_int64(z.a), zb = to_int64(z.b), zc = to_int64(z.c),
                     zd = to_int64(z.d);
  if (std::max({std::abs(za), std::abs(zb), std::abs(zc), std::abs(zd)}) > 1'000'000 ||
      o.isometry_box > 100'000) {
    throw OverflowError("isometry sweep would overflow 64 bits");
  }
  const auto q = [](std::int64_t x, std::int64_t y) { return -(x * x + y * y) + 3 * x * y; };
  std::int64_t violations = 0;
  const std::int64_t box = o.isometry_box;
  for (std::int64_t x = -box; x <= box; ++x) {
    for (std::int64_t y = -box; y <= box; ++y) {
      if (q(za * x + zb * y, zc * x + zd * y) != q(x, y)) ++violations;
    }
  }
  cond.require(violations == 0, "Z does not preserve the form");
  r.witness = {{"isometry_violations", violations}, {"p_cubed", to_json(p * p * p)}};
  cond.finish();
}

void check_classification(const PaperConstants& k, const VerifyOptions& o, CheckResult& r) {
  Conditions cond(r);
  r.bounds = {{"classify_box", o.classify_bound}};
  const auto cls = classify_twopoint(o.classify_bound, k.boundary_action, k.two_point_boundary);
  std::vector<std::pair<Int, Int>> reps;
  Json orbits = Json::array();
  for (const auto& orbit : cls.orbits) {
    reps.emplace_back(orbit.representative.d1, orbit.representative.d2);
    orbits.push_back({{"representative", to_json(orbit.representative)},
                      {"members", orbit.members.size()}});
  }
  const std::vector<std::pair<Int, Int>> expected{k.base_d_vectors.at(0), k.base_d_vectors.at(1)};
  cond.require(reps == expected, "orbit representatives differ from the base vectors");
  const HyperbolaSolution third{Sign::plus, k.base_d_vectors.at(2).first,
                                k.base_d_vectors.at(2).second};
  const HyperbolaSolution second{Sign::plus, k.base_d_vectors.at(1).first,
                                 k.base_d_vectors.at(1).second};
  cond.require(twopoint_orbit_representative(third, k.boundary_action) ==
                   twopoint_orbit_representative(second, k.boundary_action),
               "the third base vector is not in the orbit of the second");
  cond.require(cls.action_matches_conjugation, "P-action differs from conjugation by M");
  r.witness = {{"orbits", std::move(orbits)}, {"solutions", cls.solutions.size()}};
  cond.finish();
}

void check_markov(const PaperConstants&, const VerifyOptions& o, CheckResult& r) {
  Conditions cond(r);
  r.bounds = {{"max_component", o.markov_max}};
  std::vector<MarkovTriple> from_tree;
  for (const auto& node : markov_tree(1 << 20, Int(o.markov_max))) from_tree.push_back(node.triple);
  std::sort(from_tree.begin(), from_tree.end());
  const auto brute = markov_brute_force(o.markov_max);
  cond.require(from_tree == brute, "tree and brute force disagree");
  for (const auto& t : brute) {
    cond.require(gcd(t.d1, t.d2) == 1 && gcd(t.d1, t.d3) == 1 && gcd(t.d2, t.d3) == 1,
                 "triple with a common factor");
  }

  const std::vector<std::array<int, 3>> figure{{1, 1, 1},   {1, 1, 2},   {1, 2, 5},
                                               {1, 5, 13},  {2, 5, 29},  {1, 13, 34},
                                               {5, 13, 194}, {2, 29, 169}, {5, 29, 433}};
  std::vector<std::array<int, 3>> levels;
  for (const auto& node : markov_tree(4)) {
    levels.push_back({static_cast<int>(node.triple.d1), static_cast<int>(node.triple.d2),
                      static_cast<int>(node.triple.d3)});
  }
  cond.require(levels == figure, "first five tree levels differ from the figure");
  cond.require(markov_tree(3).size() == 5, "depth-3 tree does not end at (1,5,13), (2,5,29)");
  r.witness = {{"triples", brute.size()}, {"figure_levels", levels}};
  cond.finish();
}

void check_threepoint_products(const PaperConstants& k, const VerifyOptions& o, CheckResult& r) {
  Conditions cond(r);
  r.bounds = {{"max_component", o.product_max}};
  std::size_t count = 0;
  for (const auto& node : markov_tree(1 << 20, Int(o.product_max))) {
    ++count;
    const Factorization f = threepoint_factorization(node.triple.vec());
    cond.require(product(f) == k.three_point_boundary,
                 "product differs for " + to_json(node.triple).dump());
  }
  r.witness = {{"triples", count}};
  cond.finish();
}

void check_threepoint_minus(const PaperConstants& k, const VerifyOptions& o, CheckResult& r) {
  Conditions cond(r);
  r.bounds = {{"triple_box", o.bound_3pt}, {"mixed_box", o.mixed_bound_3pt}};
  const auto e = enumerate_threepoint(o.bound_3pt, o.mixed_bound_3pt, o.workers,
                                      k.three_point_boundary);
  cond.require(e.minus.empty(), "eps = -1 triples found");
  // Positive control: the scan must see the (1,1,1) factorization.
  const ParamTuple control{ParabolicParams::make(Sign::plus, 3, 1),
                           ParabolicParams::make(Sign::plus, 0, 1),
                           ParabolicParams::make(Sign::plus, -3, 1)};
  cond.require(o.bound_3pt < 3 || std::binary_search(e.plus.begin(), e.plus.end(), control),
               "scan misses the d = (1,1,1) factorization");
  cond.require(e.plus_unexplained.empty(), "eps = +1 triple not of Markov form");
  r.witness = {{"plus_triples", e.plus.size()},
               {"minus_triples", e.minus.size()},
               {"mixed_triples", e.mixed.size()}};
  cond.finish();
}

void check_symmetries(const PaperConstants& k, const VerifyOptions& o, CheckResult& r) {
  Conditions cond(r);
  r.bounds = {{"depth", o.symmetry_depth}};
  const auto report = markov_symmetry_realizations(o.symmetry_depth, k.three_point_boundary,
                                                   k.reflection);
  r.witness = {{"triples", report.triples}, {"realizations", report.realizations_checked}};
  cond.finish();
}

ParabolicParams random_params(std::mt19937_64& rng, std::int64_t range) {
  std::uniform_int_distribution<std::int64_t> entry(-range, range);
  std::bernoulli_distribution coin;
  for (;;) {
    const std::int64_t c = entry(rng);
    const std::int64_t d = entry(rng);
    if (std::gcd(c, d) == 1) return ParabolicParams::make(coin(rng) ? Sign::plus : Sign::minus, c, d);
  }
}

Factorization random_factorization(std::mt19937_64& rng, std::size_t length) {
  std::vector<ParabolicParams> params;
  for (std::size_t i = 0; i < length; ++i) params.push_back(random_params(rng, 10));
  return Factorization::from_params(params);
}

void check_properties(const PaperConstants& k, const VerifyOptions& o, CheckResult& r) {
  Conditions cond(r);
  r.bounds = {{"roundtrip_grid", o.roundtrip_grid},
              {"braid_cases", o.braid_cases},
              {"cancel_cases", o.cancel_cases},
              {"transpose_cases", o.transpose_cases}};
  std::mt19937_64 rng(o.seed);
  cond.require(parabolic_matrix(ParabolicParams::make(Sign::plus, 0, 1)) == k.focus_focus,
               "(+1, 0, 1) does not give the focus-focus matrix");

  std::int64_t roundtrip_failures = 0;
  for (std::int64_t c = -o.roundtrip_grid; c <= o.roundtrip_grid; ++c) {
    for (std::int64_t d = -o.roundtrip_grid; d <= o.roundtrip_grid; ++d) {
      if (std::gcd(c, d) != 1) continue;
      for (Sign eps : {Sign::plus, Sign::minus}) {
        const auto p = ParabolicParams::make(eps, c, d);
        const Mat2 m = parabolic_matrix(p);
        if (parabolic_params(m) != p || m.trace() != 2 || m.det() != 1) ++roundtrip_failures;
      }
    }
  }
  cond.require(roundtrip_failures == 0, "parametrization round trip fails");

  int braid_failures = 0;
  for (int i = 0; i < o.braid_cases; ++i) {
    const auto f = random_factorization(rng, 3);
    const auto lhs = hurwitz_move(hurwitz_move(hurwitz_move(f, 0), 1), 0);
    const auto rhs = hurwitz_move(hurwitz_move(hurwitz_move(f, 1), 0), 1);
    if (lhs != rhs) ++braid_failures;
  }
  cond.require(braid_failures == 0, "braid relation fails");

  int cancel_failures = 0;
  std::uniform_int_distribution<std::size_t> length_dist(2, 4);
  for (int i = 0; i < o.cancel_cases; ++i) {
    const auto f = random_factorization(rng, length_dist(rng));
    std::uniform_int_distribution<std::size_t> index(0, f.size() - 2);
    const std::size_t at = index(rng);
    if (inverse_hurwitz_move(hurwitz_move(f, at), at) != f ||
        hurwitz_move(inverse_hurwitz_move(f, at), at) != f) {
      ++cancel_failures;
    }
  }
  cond.require(cancel_failures == 0, "move and inverse move do not cancel");

  const std::array<Mat2, 4> generators{k.focus_focus, mat_inv(k.focus_focus), k.shear,
                                       mat_inv(k.shear)};
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> word_length(0, 10);
  int transpose_failures = 0;
  for (int i = 0; i < o.transpose_cases; ++i) {
    Mat2 by;
    for (int n = word_length(rng); n > 0; --n) by = by * generators[pick(rng)];
    const auto p = random_params(rng, 10);
    const auto q = conj_params(p, by);
    const auto expected = ParabolicParams::make(p.eps, by.a * p.c + by.c * p.d, by.b * p.c + by.d * p.d);
    if (q != expected) ++transpose_failures;
  }
  cond.require(transpose_failures == 0, "conjugation does not act by the transpose");
  r.witness = {{"roundtrip_failures", roundtrip_failures},
               {"braid_failures", braid_failures},
               {"cancel_failures", cancel_failures},
               {"transpose_failures", transpose_failures}};
  cond.finish();
}

const std::vector<CheckSpec>& specs() {
  static const std::vector<CheckSpec> kSpecs = {
      {"corner-construction", "two-point boundary monodromy from the corner gluing, k = 7",
       {"corner_k", "sphere_self_intersection", "two_point_boundary"}, check_corner},
      {"two-point-enumeration",
       "exhaustive pair scan vs hyperbola family; eps = -1 coprimality obstruction",
       {"two_point_boundary", "hyperbola_isometry", "sign_exchange", "base_d_vectors"},
       check_twopoint_enumeration},
      {"two-point-matrices", "explicit matrices of the two two-point solutions",
       {"two_point_boundary"}, check_twopoint_matrices},
      {"hurwitz-move", "one Hurwitz move relates the two two-point solutions", {}, check_hurwitz},
      {"matrix-identities", "P^3 = -Z^2, Z isometry, A and C against the three-point boundary",
       {"three_point_boundary", "hyperbola_isometry", "boundary_action", "shear", "reflection",
        "torus_self_intersection"},
       check_identities},
      {"two-point-classification", "two orbits under conjugation by the boundary monodromy",
       {"two_point_boundary", "boundary_action", "base_d_vectors"}, check_classification},
      {"markov-tree", "Markov tree vs brute force; first levels of the tree", {}, check_markov},
      {"three-point-products", "canonical three-point factorizations multiply to [[1,0],[9,1]]",
       {"three_point_boundary"}, check_threepoint_products},
      {"three-point-negative-sign", "no eps = -1 three-point factorizations in the box",
       {"three_point_boundary"}, check_threepoint_minus},
      {"symmetry-realizations", "cyclic, reflection and Vieta moves on factorizations",
       {"three_point_boundary", "reflection"}, check_symmetries},
      {"property-suites", "round trip, braid relation, move cancellation, transpose law",
       {"focus_focus", "shear"}, check_properties},
  };
  return kSpecs;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<std::string> VerifyReport::failed_ids() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.id);
  }
  return out;
}

Json VerifyReport::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks) {
    list.push_back({{"id", c.id},
                    {"anchor", c.anchor},
                    {"bounds", c.bounds},
                    {"passed", c.passed},
                    {"witness", c.witness},
                    {"message", c.message}});
  }
  return Json{{"all_passed", all_passed()}, {"checks", std::move(list)}};
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> kIds = [] {
    std::vector<std::string> ids;
    for (const auto& s : specs()) ids.push_back(s.id);
    return ids;
  }();
  return kIds;
}

std::vector<std::string> checks_using_constant(const std::string& constant) {
  std::vector<std::string> out;
  for (const auto& s : specs()) {
    if (std::find(s.constants.begin(), s.constants.end(), constant) != s.constants.end()) {
      out.push_back(s.id);
    }
  }
  return out;
}

VerifyReport verify_paper(const PaperConstants& constants, const VerifyOptions& options) {
  VerifyReport report;
  for (const auto& spec : specs()) {
    CheckResult result;
    result.id = spec.id;
    result.anchor = spec.anchor;
    const auto start = std::chrono::steady_clock::now();
    try {
      spec.run(constants, options, result);
    } catch (const std::exception& e) {
      result.passed = false;
      result.message = std::string("exception: ") + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace parafact
