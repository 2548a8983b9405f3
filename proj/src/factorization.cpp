#include "parafact/factorization.hpp"

#include <deque>
#include <map>
#include <string>

#include "parafact/diophantine.hpp"

namespace parafact {

Mat2 product(std::span<const Mat2> factors) {
  Mat2 result;
  for (const Mat2& m : factors) result = m * result;
  return result;
}

Mat2 product(const Factorization& f) { return product(f.factors); }

Factorization Factorization::from_factors(std::vector<Mat2> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!parabolic_params(factors[i])) {
      throw InvalidArgument("factor " + std::to_string(i) + " " + to_string(factors[i]) +
                            " is not primitive parabolic");
    }
  }
  Factorization f;
  f.target = product(factors);
  f.factors = std::move(factors);
  return f;
}

Factorization Factorization::from_params(std::span<const ParabolicParams> params) {
  std::vector<Mat2> factors;
  factors.reserve(params.size());
  for (const auto& p : params) factors.push_back(parabolic_matrix(p));
  Factorization f;
  f.target = product(factors);
  f.factors = std::move(factors);
  return f;
}

std::vector<ParabolicParams> Factorization::params() const {
  std::vector<ParabolicParams> out;
  out.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto p = parabolic_params(factors[i]);
    if (!p) {
      throw InvalidArgument("factor " + std::to_string(i) + " " + to_string(factors[i]) +
                            " is not primitive parabolic");
    }
    out.push_back(std::move(*p));
  }
  return out;
}

void Factorization::validate() const {
  (void)params();
  const Mat2 p = product(factors);
  if (p != target) {
    throw InvalidArgument("factor product " + to_string(p) + " differs from target " +
                          to_string(target));
  }
}

bool operator<(const Factorization& lhs, const Factorization& rhs) {
  if (lhs.factors != rhs.factors) return lhs.factors < rhs.factors;
  return lhs.target < rhs.target;
}

namespace {

void require_adjacent(const Factorization& f, std::size_t i, const char* what) {
  if (f.factors.size() < 2 || i + 1 >= f.factors.size()) {
    throw InvalidArgument(std::string(what) + ": index " + std::to_string(i) +
                          " out of range for " + std::to_string(f.factors.size()) + " factors");
  }
}

}  // namespace

Factorization hurwitz_move(const Factorization& f, std::size_t i) {
  require_adjacent(f, i, "hurwitz_move");
  Factorization out = f;
  const Mat2& first = f.factors[i];
  const Mat2& second = f.factors[i + 1];
  out.factors[i] = second;
  out.factors[i + 1] = second * first * mat_inv(second);
  return out;
}

Factorization inverse_hurwitz_move(const Factorization& f, std::size_t i) {
  require_adjacent(f, i, "inverse_hurwitz_move");
  Factorization out = f;
  const Mat2& first = f.factors[i];
  const Mat2& second = f.factors[i + 1];
  out.factors[i] = mat_inv(first) * second * first;
  out.factors[i + 1] = first;
  return out;
}

ConjugationResult global_conjugate(const Factorization& f, const Mat2& by) {
  const Mat2 by_inv = mat_inv(by);
  ConjugationResult result;
  result.factorization.factors.reserve(f.factors.size());
  for (const Mat2& m : f.factors) result.factorization.factors.push_back(by_inv * m * by);
  result.factorization.target = by_inv * f.target * by;
  result.target_changed = result.factorization.target != f.target;
  return result;
}

namespace {

/// k for conjugators +-[[1,0],[k,1]] with k != 0, else empty.
std::optional<Int> shear_amount(const Mat2& m) {
  if (m.b != 0 || m.a != m.d || (m.a != 1 && m.a != -1) || m.c == 0) return std::nullopt;
  return abs(m.c);
}

}  // namespace

std::vector<ParabolicParams> orbit_key(const Factorization& f, const Int& shift_step) {
  std::vector<ParabolicParams> key = f.params();
  if (shift_step == 0 || key.empty()) return key;
  std::vector<Int> cs, ds;
  for (const auto& p : key) {
    cs.push_back(p.c);
    ds.push_back(shift_step * p.d);
  }
  const Int k = minimizing_shift(cs, ds);
  if (k != 0) {
    for (std::size_t i = 0; i < key.size(); ++i) key[i].c += k * ds[i];
  }
  return key;
}

OrbitReport orbit_explore(const Factorization& start, std::span<const Mat2> conjugators,
                          std::size_t max_nodes) {
  if (max_nodes == 0) throw InvalidArgument("orbit_explore: max_nodes must be positive");
  OrbitReport report;
  std::vector<Mat2> moves;
  for (const Mat2& by : conjugators) {
    if (!by.is_unimodular()) {
      throw InvalidArgument("orbit_explore: conjugator " + to_string(by) + " is not unimodular");
    }
    moves.push_back(by);
    moves.push_back(mat_inv(by));
    if (auto k = shear_amount(by)) report.shift_step = gcd(report.shift_step, *k);
  }

  using Key = std::vector<ParabolicParams>;
  std::map<Key, Factorization> seen;
  std::deque<Factorization> frontier;

  auto admit = [&](const Factorization& f) {
    Key key = orbit_key(f, report.shift_step);
    if (seen.count(key) != 0) return true;
    if (seen.size() >= max_nodes) {
      report.truncated = true;
      return false;
    }
    Factorization node = Factorization::from_params(key);
    seen.emplace(std::move(key), node);
    frontier.push_back(std::move(node));
    return true;
  };

  admit(start);
  const std::size_t n = start.size();
  while (!frontier.empty() && !report.truncated) {
    const Factorization node = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i + 1 < n && !report.truncated; ++i) {
      ++report.move_count;
      if (!admit(hurwitz_move(node, i))) break;
      ++report.move_count;
      if (!admit(inverse_hurwitz_move(node, i))) break;
    }
    for (const Mat2& by : moves) {
      if (report.truncated) break;
      ++report.move_count;
      if (!admit(global_conjugate(node, by).factorization)) break;
    }
  }

  report.representatives.reserve(seen.size());
  for (auto& [key, f] : seen) report.representatives.push_back(std::move(f));
  return report;
}

bool orbit_contains(const OrbitReport& report, const Factorization& f) {
  const auto key = orbit_key(f, report.shift_step);
  for (const auto& rep : report.representatives) {
    if (orbit_key(rep, report.shift_step) == key) return true;
  }
  return false;
}

}  // namespace parafact
