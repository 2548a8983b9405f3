#include "parafact/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>

namespace parafact {

bool sector_admits(SignSector sector, std::span<const ParabolicParams> params) {
  const bool all_plus = std::all_of(params.begin(), params.end(),
                                    [](const auto& p) { return p.eps == Sign::plus; });
  const bool all_minus = std::all_of(params.begin(), params.end(),
                                     [](const auto& p) { return p.eps == Sign::minus; });
  switch (sector) {
    case SignSector::plus: return all_plus;
    case SignSector::minus: return all_minus;
    case SignSector::equal: return all_plus || all_minus;
    case SignSector::mixed: return !all_plus && !all_minus;
    case SignSector::any: return true;
  }
  return false;
}

std::vector<ParabolicParams> parabolic_params_in_box(Sign eps, std::int64_t bound) {
  if (bound < 0) throw InvalidArgument("parabolic_params_in_box: negative bound");
  std::vector<ParabolicParams> out;
  for (std::int64_t c = -bound; c <= bound; ++c) {
    for (std::int64_t d = 0; d <= bound; ++d) {
      if (d == 0 && c <= 0) continue;
      if (std::gcd(c, d) != 1) continue;
      ParabolicParams p;
      p.eps = eps;
      p.c = c;
      p.d = d;
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned default_worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PARAFACT_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

namespace {

// Matrices over int64_t for the scan kernel. Only used when an a-priori
// magnitude bound shows that no intermediate value can overflow.
struct SmallMat {
  std::int64_t a, b, c, d;
};

SmallMat mul(const SmallMat& x, const SmallMat& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

// Inverse of a det-1 matrix.
SmallMat inv(const SmallMat& m) { return {m.d, -m.b, -m.c, m.a}; }

std::int64_t small_isqrt(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

struct SmallParams {
  int eps;
  std::int64_t c, d;
};

// Fast version of parabolic_params restricted to the box |c|, |d| <= bound.
std::optional<SmallParams> small_params(const SmallMat& m, std::int64_t bound) {
  if (m.a + m.d != 2) return std::nullopt;
  const std::int64_t p = m.a - 1;
  const std::int64_t q = m.b;
  const std::int64_t r = m.c;
  if (p == 0 && q == 0 && r == 0) return std::nullopt;
  // trace 2 and det 1 together mean p^2 + q r == 0.
  if (p * p + q * r != 0) return std::nullopt;
  const int eps = q != 0 ? (q > 0 ? 1 : -1) : (r < 0 ? 1 : -1);
  const std::int64_t d_sq = eps * q;
  const std::int64_t c_sq = -eps * r;
  if (d_sq < 0 || c_sq < 0) return std::nullopt;
  if (d_sq > bound * bound || c_sq > bound * bound) return std::nullopt;
  const std::int64_t d = small_isqrt(d_sq);
  std::int64_t c = small_isqrt(c_sq);
  if (d * d != d_sq || c * c != c_sq) return std::nullopt;
  if (eps * c * d != p) c = -c;
  if (eps * c * d != p) return std::nullopt;
  if (std::gcd(c, d) != 1) return std::nullopt;
  if (d == 0 && c < 0) c = -c;
  return SmallParams{eps, c, d};
}

SmallMat small_matrix(const ParabolicParams& p) {
  const Mat2 m = parabolic_matrix(p);
  return {static_cast<std::int64_t>(m.a), static_cast<std::int64_t>(m.b),
          static_cast<std::int64_t>(m.c), static_cast<std::int64_t>(m.d)};
}

struct Searcher {
  const std::vector<ParabolicParams>& candidates;
  std::size_t length;
  std::int64_t bound;
  SignSector sector;
  bool small;
  SmallMat small_target;
  Mat2 target;
  std::vector<SmallMat> small_inverses;
  std::vector<Mat2> inverses;

  // residual = target * M_1^{-1} * ... * M_k^{-1}; the remaining factors must
  // multiply to it.
  void extend_small(ParamTuple& prefix, const SmallMat& residual,
                    std::vector<ParamTuple>& out) const {
    if (prefix.size() + 1 == length) {
      auto last = small_params(residual, bound);
      if (!last) return;
      ParabolicParams p;
      p.eps = last->eps > 0 ? Sign::plus : Sign::minus;
      p.c = last->c;
      p.d = last->d;
      prefix.push_back(std::move(p));
      if (sector_admits(sector, prefix)) out.push_back(prefix);
      prefix.pop_back();
      return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      prefix.push_back(candidates[i]);
      extend_small(prefix, mul(residual, small_inverses[i]), out);
      prefix.pop_back();
    }
  }

  void extend_big(ParamTuple& prefix, const Mat2& residual, std::vector<ParamTuple>& out) const {
    if (prefix.size() + 1 == length) {
      auto last = parabolic_params(residual);
      if (!last || abs(last->c) > bound || abs(last->d) > bound) return;
      prefix.push_back(std::move(*last));
      if (sector_admits(sector, prefix)) out.push_back(prefix);
      prefix.pop_back();
      return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      prefix.push_back(candidates[i]);
      extend_big(prefix, residual * inverses[i], out);
      prefix.pop_back();
    }
  }

  void run_first(std::size_t first, std::vector<ParamTuple>& out) const {
    ParamTuple prefix{candidates[first]};
    if (small) {
      extend_small(prefix, mul(small_target, small_inverses[first]), out);
    } else {
      extend_big(prefix, target * inverses[first], out);
    }
  }
};

}  // namespace

std::vector<ParamTuple> enumerate_factorizations(const Mat2& target, std::size_t length,
                                                 std::int64_t bound, SignSector sector,
                                                 unsigned workers) {
  if (length == 0) throw InvalidArgument("enumerate_factorizations: length must be positive");
  if (bound < 0) throw InvalidArgument("enumerate_factorizations: negative bound");
  if (!target.is_unimodular()) {
    throw InvalidArgument("enumerate_factorizations: target " + to_string(target) +
                          " is not unimodular");
  }

  std::vector<ParamTuple> out;
  if (length == 1) {
    if (auto p = parabolic_params(target); p && abs(p->c) <= bound && abs(p->d) <= bound) {
      ParamTuple single{*p};
      if (sector_admits(sector, single)) out.push_back(std::move(single));
    }
    return out;
  }

  // The first n-1 factors range over every sign the sector might use.
  std::vector<ParabolicParams> candidates;
  if (sector != SignSector::minus) candidates = parabolic_params_in_box(Sign::plus, bound);
  if (sector != SignSector::plus) {
    auto minus = parabolic_params_in_box(Sign::minus, bound);
    candidates.insert(candidates.end(), minus.begin(), minus.end());
  }
  if (candidates.empty()) return out;

  // Every residual has entries at most max|target| * (2 (1 + bound^2))^(n-1)
  // and small_params squares residual entries; keep both well inside 63 bits.
  long double magnitude = 1;
  for (const Int* e : {&target.a, &target.b, &target.c, &target.d}) {
    magnitude = std::max(magnitude, static_cast<long double>(abs(*e)));
  }
  const long double factor_entry = 2.0L * (1.0L + static_cast<long double>(bound) * bound);
  for (std::size_t i = 0; i + 1 < length; ++i) magnitude *= factor_entry;
  const long double limit = static_cast<long double>(std::numeric_limits<std::int64_t>::max()) / 8;
  const bool small = magnitude * factor_entry < limit && magnitude * magnitude < limit;

  Searcher searcher{candidates, length, bound, sector, small, {}, target, {}, {}};
  if (small) {
    searcher.small_target = {static_cast<std::int64_t>(target.a), static_cast<std::int64_t>(target.b),
                             static_cast<std::int64_t>(target.c), static_cast<std::int64_t>(target.d)};
    for (const auto& p : candidates) searcher.small_inverses.push_back(inv(small_matrix(p)));
  } else {
    for (const auto& p : candidates) searcher.inverses.push_back(mat_inv(parabolic_matrix(p)));
  }

  workers = std::max(1u, workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) searcher.run_first(i, out);
  } else {
    std::vector<std::vector<ParamTuple>> partial(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = w; i < candidates.size(); i += workers) {
          searcher.run_first(i, partial[w]);
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& part : partial) {
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace parafact
