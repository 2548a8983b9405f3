#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "parafact/diophantine.hpp"
#include "parafact/matrices.hpp"

using namespace parafact;

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> pairs(const std::vector<HyperbolaSolution>& v) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& s : v) out.emplace_back(to_int64(s.d1), to_int64(s.d2));
  return out;
}

std::set<std::pair<Int, Int>> pair_set(const std::vector<HyperbolaSolution>& v) {
  std::set<std::pair<Int, Int>> out;
  for (const auto& s : v) out.emplace(s.d1, s.d2);
  return out;
}

Vec3 v3(Int x, Int y, Int z) { return {std::move(x), std::move(y), std::move(z)}; }

}  // namespace

TEST_CASE("hyperbola_brute_force") {
  using P = std::vector<std::pair<std::int64_t, std::int64_t>>;
  CHECK(pairs(hyperbola_brute_force(Sign::plus, 3)) ==
        P{{-2, -1}, {-1, -2}, {-1, -1}, {1, 1}, {1, 2}, {2, 1}});
  CHECK(hyperbola_brute_force(Sign::plus, 0).empty());
  CHECK(pairs(hyperbola_brute_force(Sign::minus, 1)) == P{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
  for (const auto& s : hyperbola_brute_force(Sign::minus, 30)) {
    CHECK(hyperbola_form(Sign::minus, s.d1, s.d2) == 1);
  }
}

TEST_CASE("hyperbola scans agree with the grid oracle") {
  for (std::int64_t eps : {1, -1}) {
    const Sign s = eps > 0 ? Sign::plus : Sign::minus;
    for (std::int64_t bound : {0, 1, 2, 5, 13, 40, 200}) {
      const auto expected = oracle::hyperbola(eps, bound);
      CHECK(pairs(hyperbola_brute_force(s, bound)) == expected);
      CHECK(pairs(hyperbola_solutions_in_box(s, bound)) == expected);
    }
  }
}

TEST_CASE("hyperbola_generate") {
  CHECK(pair_set(hyperbola_generate(0)) == pair_set(hyperbola_brute_force(Sign::plus, 2)));
  const Mat2 z = matrices::hyperbola_isometry();
  CHECK(z.a * 1 + z.b * 1 == 13);
  CHECK(z.c * 1 + z.d * 1 == 5);
  CHECK(hyperbola_form(Sign::plus, 13, 5) == 1);
  const auto generated = hyperbola_generate(8);
  for (const auto& s : generated) CHECK(hyperbola_form(Sign::plus, s.d1, s.d2) == 1);
  for (std::int64_t bound : {1, 10, 100, 1000}) {
    std::set<std::pair<Int, Int>> in_box;
    for (const auto& s : generated) {
      if (abs(s.d1) <= bound && abs(s.d2) <= bound) in_box.emplace(s.d1, s.d2);
    }
    CHECK(in_box == pair_set(hyperbola_solutions_in_box(Sign::plus, bound)));
  }
  CHECK(pair_set(hyperbola_solutions_in_box(Sign::plus, 1000)) ==
        pair_set(hyperbola_brute_force(Sign::plus, 1000)));
}

TEST_CASE("hyperbola solutions beyond 64 bits") {
  const auto big = hyperbola_generate(30);
  CHECK_FALSE(fits_int64(big.back().d1));
  for (const auto& s : big) CHECK(hyperbola_form(Sign::plus, s.d1, s.d2) == 1);
}

TEST_CASE("isometry Z preserves the form on the 10^3 box") {
  const Mat2 z = matrices::hyperbola_isometry();
  const std::int64_t a = to_int64(z.a), b = to_int64(z.b), c = to_int64(z.c), d = to_int64(z.d);
  auto q = [](std::int64_t x, std::int64_t y) { return -(x * x + y * y) + 3 * x * y; };
  std::int64_t bad = 0;
  for (std::int64_t x = -1000; x <= 1000; ++x) {
    for (std::int64_t y = -1000; y <= 1000; ++y) {
      if (q(a * x + b * y, c * x + d * y) != q(x, y)) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("s_transform") {
  auto s = [](Int x, Int y) { return s_transform({Sign::plus, std::move(x), std::move(y)}); };
  CHECK(s(1, 1) == HyperbolaSolution{Sign::minus, 1, 0});
  CHECK(s(1, 2) == HyperbolaSolution{Sign::minus, 0, 1});
  CHECK(s(2, 1) == HyperbolaSolution{Sign::minus, 3, -1});
  CHECK(hyperbola_form(Sign::minus, 3, -1) == 1);
}

TEST_CASE("s_transform is a bijection between the solution sets") {
  // S and S^-1 have row sums 3, so the image of the B box lies in the 3B box.
  const std::int64_t bound = 60;
  const auto plus = hyperbola_brute_force(Sign::plus, bound);
  const auto minus = hyperbola_brute_force(Sign::minus, bound);
  const auto plus_wide = pair_set(hyperbola_brute_force(Sign::plus, 3 * bound));
  const auto minus_wide = pair_set(hyperbola_brute_force(Sign::minus, 3 * bound));
  std::set<std::pair<Int, Int>> images;
  for (const auto& v : plus) {
    const auto w = s_transform(v);
    CHECK(minus_wide.count({w.d1, w.d2}) == 1);
    CHECK(s_transform_inverse(w) == v);
    images.emplace(w.d1, w.d2);
  }
  CHECK(images.size() == plus.size());
  for (const auto& v : minus) {
    const auto w = s_transform_inverse(v);
    CHECK(plus_wide.count({w.d1, w.d2}) == 1);
    CHECK(s_transform(w) == v);
  }
}

TEST_CASE("c_from_d_twopoint") {
  CHECK(c_from_d_twopoint(Sign::plus, 1, 2) == TwoPointC{2, 1});
  CHECK(c_from_d_twopoint(Sign::plus, 1, 1) == TwoPointC{5, 2});
  CHECK(c_from_d_twopoint(Sign::plus, 2, 1) == TwoPointC{13, 5});
  CHECK_THROWS_AS(c_from_d_twopoint(Sign::plus, 1, 3), NoSolution);
  for (Sign eps : {Sign::plus, Sign::minus}) {
    for (const auto& s : hyperbola_brute_force(eps, 200)) {
      const auto c = c_from_d_twopoint(eps, s.d1, s.d2);
      CHECK(twopoint_system_holds(eps, c.c1, c.c2, s.d1, s.d2));
      CHECK(c.c1 * s.d2 - c.c2 * s.d1 == 3);
    }
  }
  CHECK_FALSE(twopoint_system_holds(Sign::plus, 2, 1, 1, 1));
}

TEST_CASE("markov_brute_force") {
  auto triples = [](std::int64_t max) {
    std::vector<std::array<std::int64_t, 3>> out;
    for (const auto& t : markov_brute_force(max)) {
      out.push_back({to_int64(t.d1), to_int64(t.d2), to_int64(t.d3)});
    }
    return out;
  };
  using L = std::vector<std::array<std::int64_t, 3>>;
  CHECK(triples(2) == L{{1, 1, 1}, {1, 1, 2}});
  CHECK(triples(34) == L{{1, 1, 1}, {1, 1, 2}, {1, 2, 5}, {1, 5, 13}, {1, 13, 34}, {2, 5, 29}});
  CHECK(triples(1) == L{{1, 1, 1}});
  CHECK_THROWS_AS(markov_brute_force(0), InvalidArgument);
  for (std::int64_t bound : {1, 5, 30, 100, 200}) CHECK(triples(bound) == oracle::markov(bound));
}

TEST_CASE("MarkovTriple::make") {
  const auto t = MarkovTriple::make(5, 1, 2);
  CHECK(t.vec() == v3(1, 2, 5));
  CHECK_THROWS_AS(MarkovTriple::make(1, 1, 3), NoSolution);
  CHECK_THROWS_AS(MarkovTriple::make(-1, 1, 1), NoSolution);
}

TEST_CASE("vieta_jump") {
  CHECK(vieta_jump(v3(1, 2, 5), 1) == v3(1, 13, 5));
  for (const auto& node : markov_tree(7)) {
    const Vec3 d = node.triple.vec();
    for (int i = 0; i < 3; ++i) {
      CHECK(vieta_jump(vieta_jump(d, i), i) == d);
      CHECK(markov_form(vieta_jump(d, i)) == 0);
    }
  }
}

TEST_CASE("markov_tree") {
  const auto d1 = markov_tree(1);
  REQUIRE(d1.size() == 2);
  CHECK(d1[0].triple.vec() == v3(1, 1, 1));
  CHECK_FALSE(d1[0].parent);
  CHECK(d1[1].triple.vec() == v3(1, 1, 2));
  CHECK(d1[1].parent == std::size_t{0});

  const auto d3 = markov_tree(3);
  REQUIRE(d3.size() == 5);
  CHECK(d3[3].triple.vec() == v3(1, 5, 13));
  CHECK(d3[4].triple.vec() == v3(2, 5, 29));
  CHECK(d3[3].parent == std::size_t{2});
  CHECK(d3[4].parent == std::size_t{2});
  CHECK(d3[2].triple.vec() == v3(1, 2, 5));
  CHECK(markov_tree(0).size() == 1);

  for (std::int64_t bound : {1, 2, 100, 1000}) {
    std::vector<MarkovTriple> tree;
    for (const auto& n : markov_tree(1 << 20, Int(bound))) tree.push_back(n.triple);
    std::sort(tree.begin(), tree.end());
    CHECK(tree == markov_brute_force(bound));
  }
  for (const auto& n : markov_tree(8)) {
    const auto& t = n.triple;
    CHECK(gcd(t.d1, t.d2) == 1);
    CHECK(gcd(t.d2, t.d3) == 1);
    CHECK(gcd(t.d1, t.d3) == 1);
    CHECK(markov_form(t.vec()) == 0);
  }
}

TEST_CASE("markov_tree grows past 64 bits") {
  const auto nodes = markov_tree(12);
  CHECK_FALSE(fits_int64(nodes.back().triple.d3));
  for (const auto& n : nodes) CHECK(markov_form(n.triple.vec()) == 0);
}

TEST_CASE("minimizing_shift and reduce_mod") {
  const std::vector<Int> c{Int(6), Int(0), Int(-3)};
  const std::vector<Int> d{Int(1), Int(1), Int(2)};
  const Int k = minimizing_shift(c, d);
  // Brute-force the shift with the smallest maximal entry; ties to smaller k.
  Int best_k = -100;
  Int best = -1;
  for (int j = -100; j <= 100; ++j) {
    Int m = 0;
    for (int i = 0; i < 3; ++i) m = std::max(m, abs(c[i] + j * d[i]));
    if (best < 0 || m < best) {
      best = m;
      best_k = j;
    }
  }
  CHECK(k == best_k);
  CHECK(reduce_mod(v3(6, 0, -3), v3(1, 1, 2)) == v3(5, -1, -5));
  CHECK(reduce_mod(v3(3, 0, -3), v3(1, 1, 1)) == v3(3, 0, -3));
  // Tie: |1 + k| vs |-1 + k| at k = 0 and k = ... picks the smaller k.
  CHECK(reduce_mod(v3(1, 0, 0), v3(1, 0, 0)) == v3(0, 0, 0));
  CHECK(reduce_mod(v3(1, 0, 0), v3(2, 0, 0)) == v3(-1, 0, 0));
}

TEST_CASE("solve_c_threepoint") {
  const auto c111 = solve_c_threepoint(v3(1, 1, 1));
  REQUIRE(c111);
  CHECK(*c111 == v3(3, 0, -3));
  const auto c112 = solve_c_threepoint(v3(1, 1, 2));
  REQUIRE(c112);
  // Congruent to (6, 0, -3) modulo (1, 1, 2).
  CHECK(*c112 == v3(5, -1, -5));
  CHECK(*c112 - v3(6, 0, -3) == Int(-1) * v3(1, 1, 2));
  CHECK_FALSE(solve_c_threepoint(v3(1, 1, 3)));

  // Hand-solved linear system for d = (1, 1, 1).
  CHECK(cross(v3(3, 0, -3), v3(1, 1, 1)) == markov_rhs(v3(1, 1, 1)));

  for (const auto& n : markov_tree(6)) {
    const Vec3 d = n.triple.vec();
    const auto c = solve_c_threepoint(d);
    REQUIRE(c);
    CHECK(cross(*c, d) == markov_rhs(d));
    CHECK(gcd(c->x, d.x) == 1);
    CHECK(gcd(c->y, d.y) == 1);
    CHECK(gcd(c->z, d.z) == 1);
    CHECK(reduce_mod(*c, d) == *c);
    // Permuted Markov vectors are solvable too.
    const Vec3 p{d.z, d.x, d.y};
    const auto cp = solve_c_threepoint(p);
    REQUIRE(cp);
    CHECK(cross(*cp, p) == markov_rhs(p));
  }
}

TEST_CASE("extended_gcd") {
  for (int a = -20; a <= 20; ++a) {
    for (int b = -20; b <= 20; ++b) {
      const auto e = extended_gcd(a, b);
      CHECK(e.g == gcd(Int(a), Int(b)));
      CHECK(a * e.x + b * e.y == e.g);
    }
  }
}
