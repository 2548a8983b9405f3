#include <doctest.h>

#include "oracles.hpp"
#include "parafact/enumeration.hpp"
#include "parafact/factorization.hpp"
#include "parafact/matrices.hpp"

using namespace parafact;

namespace {

std::set<std::vector<oracle::Params>> as_oracle(const std::vector<ParamTuple>& tuples) {
  std::set<std::vector<oracle::Params>> out;
  for (const auto& t : tuples) {
    std::vector<oracle::Params> v;
    for (const auto& p : t) v.push_back({value(p.eps), to_int64(p.c), to_int64(p.d)});
    out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("parabolic_params_in_box") {
  const auto box = parabolic_params_in_box(Sign::plus, 10);
  CHECK(box.size() == oracle::params_box(10, {1}).size());
  CHECK(std::is_sorted(box.begin(), box.end()));
  for (const auto& p : box) CHECK(p.eps == Sign::plus);
}

TEST_CASE("sector_admits") {
  const ParamTuple plus{ParabolicParams::make(Sign::plus, 0, 1),
                        ParabolicParams::make(Sign::plus, 1, 1)};
  const ParamTuple mixed{ParabolicParams::make(Sign::plus, 0, 1),
                         ParabolicParams::make(Sign::minus, 1, 1)};
  CHECK(sector_admits(SignSector::plus, plus));
  CHECK_FALSE(sector_admits(SignSector::minus, plus));
  CHECK(sector_admits(SignSector::equal, plus));
  CHECK_FALSE(sector_admits(SignSector::mixed, plus));
  CHECK(sector_admits(SignSector::mixed, mixed));
  CHECK_FALSE(sector_admits(SignSector::equal, mixed));
  CHECK(sector_admits(SignSector::any, mixed));
}

TEST_CASE("pairs agree with the naive scan") {
  const std::vector<Mat2> targets{matrices::two_point_boundary(), Mat2{1, 0, 9, 1},
                                  Mat2{1, 4, 0, 1}, Mat2{0, -1, 1, 0}, Mat2{2, 1, 1, 1},
                                  -Mat2::identity()};
  for (const auto& t : targets) {
    for (std::int64_t bound : {1, 3, 9}) {
      const auto got = enumerate_factorizations(t, 2, bound, SignSector::any, 1);
      CHECK(as_oracle(got) == oracle::tuples(oracle::from(t), 2, bound));
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
  }
}

TEST_CASE("triples agree with the naive scan") {
  for (const auto& t : {matrices::three_point_boundary(), matrices::two_point_boundary(),
                        Mat2{1, 3, 0, 1}}) {
    for (std::int64_t bound : {1, 2, 4}) {
      CHECK(as_oracle(enumerate_factorizations(t, 3, bound, SignSector::any, 1)) ==
            oracle::tuples(oracle::from(t), 3, bound));
    }
  }
}

TEST_CASE("sectors partition the full scan") {
  const Mat2 t = matrices::three_point_boundary();
  const auto all = enumerate_factorizations(t, 3, 4, SignSector::any, 1);
  std::size_t split = 0;
  for (auto s : {SignSector::plus, SignSector::minus, SignSector::mixed}) {
    for (const auto& tuple : enumerate_factorizations(t, 3, 4, s, 1)) {
      CHECK(sector_admits(s, tuple));
      CHECK(std::binary_search(all.begin(), all.end(), tuple));
      ++split;
    }
  }
  CHECK(split == all.size());
}

TEST_CASE("output is independent of the worker count") {
  const Mat2 t = matrices::three_point_boundary();
  const auto one = enumerate_factorizations(t, 3, 12, SignSector::plus, 1);
  CHECK_FALSE(one.empty());
  CHECK(enumerate_factorizations(t, 3, 12, SignSector::plus, 3) == one);
  CHECK(enumerate_factorizations(t, 3, 12, SignSector::plus, 8) == one);
}

TEST_CASE("every result multiplies to the target") {
  const Mat2 t = matrices::three_point_boundary();
  for (const auto& tuple : enumerate_factorizations(t, 3, 10, SignSector::any, 2)) {
    CHECK(product(Factorization::from_params(tuple)) == t);
  }
}

TEST_CASE("large targets use the exact path") {
  const Mat2 big = mat_pow(matrices::hyperbola_isometry(), 30);
  CHECK_FALSE(fits_int64(big.a));
  CHECK(enumerate_factorizations(big, 2, 6, SignSector::any, 1).empty());
  // A conjugated pair whose parameters leave the box.
  const Mat2 by = mat_pow(Mat2{1, 0, 1, 1}, 1000000);
  const auto f = Factorization::from_params(
      std::vector{ParabolicParams::make(Sign::plus, 2, 1), ParabolicParams::make(Sign::plus, 1, 2)});
  const Mat2 target = conjugate(f.target, by);
  CHECK(enumerate_factorizations(target, 2, 3, SignSector::plus, 1).empty());
}

TEST_CASE("bad arguments") {
  CHECK_THROWS_AS(enumerate_factorizations(Mat2{1, 1, 1, 1}, 2, 3, SignSector::any, 1),
                  InvalidArgument);
  CHECK_THROWS_AS(enumerate_factorizations(Mat2::identity(), 0, 3, SignSector::any, 1),
                  InvalidArgument);
  CHECK_THROWS_AS(enumerate_factorizations(Mat2::identity(), 2, -1, SignSector::any, 1),
                  InvalidArgument);
}
