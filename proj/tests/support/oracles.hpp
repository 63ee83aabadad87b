// Test-only referees. Each one decides its question by a route that shares
// no code with the library path it is compared against.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "irank/irank.hpp"

namespace irank::testing {

/// Leibniz expansion restricted to all-constant permutations.
inline Rational permutation_detc(const IntervalMatrix& mu) {
  const std::size_t n = mu.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    bool constant = true;
    Rational prod = 1;
    for (std::size_t i = 0; i < n && constant; ++i) {
      constant = mu(i, perm[i]).is_constant();
      prod *= mu(i, perm[i]).lo();
    }
    if (!constant) continue;
    int s = 1;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) s = -s;
    total += s * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// gamma >= 0 with gamma * x_i >= y_i, by intersecting the 1-D bounds.
inline bool gamma_by_intersection(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Rational lo = 0;
  std::optional<Rational> hi;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (sgn(xs[i]) == 0) {
      if (sgn(ys[i]) > 0) return false;
    } else if (sgn(xs[i]) > 0) {
      lo = std::max(lo, Rational(ys[i] / xs[i]));
    } else {
      const Rational b = ys[i] / xs[i];
      hi = hi ? std::min(*hi, b) : b;
    }
  }
  return !hi || lo <= *hi;
}

/// Fourier-Motzkin feasibility of {lambda, gamma >= 0} and the rows.
inline bool fm_two_var_feasible(const TwoVarSystem& sys) {
  struct Row {
    Rational alpha, beta, rho;  // alpha*l + beta*g <= rho
  };
  std::vector<Row> rows{{-1, 0, 0}, {0, -1, 0}};
  for (const auto& r : sys.lower_rows) rows.push_back({r.a, r.b, r.z});
  for (const auto& r : sys.upper_rows) rows.push_back({-r.c, -r.d, -r.u});
  // Eliminate lambda.
  std::vector<Row> pos, neg, rest;
  for (const auto& r : rows) {
    if (sgn(r.alpha) > 0) pos.push_back(r);
    else if (sgn(r.alpha) < 0) neg.push_back(r);
    else rest.push_back(r);
  }
  for (const auto& p : pos)
    for (const auto& n : neg) {
      // p/alpha_p + n/(-alpha_n)
      const Rational sp = 1 / p.alpha;
      const Rational sn = -1 / n.alpha;
      rest.push_back({0, p.beta * sp + n.beta * sn, p.rho * sp + n.rho * sn});
    }
  // Now beta*g <= rho only.
  std::vector<Rational> xs, ys;
  for (const auto& r : rest) {
    // -beta * g >= -rho
    xs.push_back(-r.beta);
    ys.push_back(-r.rho);
  }
  return gamma_by_intersection(xs, ys);
}

/// For a square mu: whether some member is singular, using that the
/// determinant is multi-affine so its range over the box is spanned by its
/// vertex values.
inline bool vertex_det_range_contains_zero(const IntervalMatrix& mu) {
  const auto free = nonconstant_entries(mu);
  bool neg = false, pos = false;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
    PointMatrix a = lower_bounds(mu);
    for (std::size_t k = 0; k < free.size(); ++k)
      if ((bits >> k) & 1u) a[free[k]] = mu[free[k]].hi();
    const int s = sgn(determinant(a));
    if (s == 0) return true;
    (s < 0 ? neg : pos) = true;
    if (neg && pos) return true;
  }
  return false;
}

/// Seeded generator of small random interval matrices.
class MatrixGen {
 public:
  explicit MatrixGen(std::uint64_t seed) : gen_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(unsigned percent) { return gen_() % 100 < percent; }

  /// Integer endpoints in [lo, hi]; each entry constant with the given
  /// probability.
  IntervalMatrix integer_matrix(std::size_t p, std::size_t q, std::int64_t lo, std::int64_t hi,
                                unsigned constant_percent) {
    IntervalMatrix mu(p, q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        std::int64_t a = uniform(lo, hi);
        std::int64_t b = coin(constant_percent) ? a : uniform(lo, hi);
        if (a > b) std::swap(a, b);
        mu(i, j) = Interval(Rational(static_cast<long>(a)), Rational(static_cast<long>(b)));
      }
    return mu;
  }

  /// Nonnegative endpoints from {0, 1/2, 1, ..., 4}; retried until reduced.
  IntervalMatrix nonneg_reduced(std::size_t p, std::size_t q) {
    while (true) {
      IntervalMatrix mu(p, q);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) {
          std::int64_t a = uniform(0, 8), b = uniform(0, 8);
          if (a > b) std::swap(a, b);
          mu(i, j) = Interval(ratio(static_cast<long>(a), 2), ratio(static_cast<long>(b), 2));
        }
      if (is_reduced(mu)) return mu;
    }
  }

  /// Outer product x c^T with x, c in {1..4}, widened by up to 1 on each side
  /// (clamped at 0).
  IntervalMatrix fattened_rank_one(std::size_t p, std::size_t q) {
    std::vector<std::int64_t> x(p), c(q);
    for (auto& v : x) v = uniform(1, 4);
    for (auto& v : c) v = uniform(1, 4);
    IntervalMatrix mu(p, q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        const std::int64_t v = x[i] * c[j];
        const std::int64_t lo = std::max<std::int64_t>(1, v - uniform(0, 1));
        mu(i, j) = Interval(Rational(static_cast<long>(lo)), Rational(static_cast<long>(v + uniform(0, 1))));
      }
    return mu;
  }

 private:
  std::mt19937_64 gen_;
};

/// The 3x4 worked example.
inline IntervalMatrix worked_example() {
  auto I = [](long a, long b) { return Interval(a, b); };
  return IntervalMatrix{{I(2, 3), I(1, 6), I(-2, 2), I(-3, -1)},
                        {I(1, 2), I(2, 3), I(-2, 3), I(-2, 3)},
                        {I(1, 4), I(0, 2), I(3, 4), I(-1, 0)}};
}

/// 2x3 matrix satisfying the interval-product condition without a rank-one
/// member.
inline IntervalMatrix bo3_counterexample() {
  return IntervalMatrix{{Interval(-3, ratio(1, 3)), Interval(2, 4), Interval(0, 1)},
                        {Interval(1, 1), Interval(-1, 3), Interval(1, 1)}};
}

}  // namespace irank::testing
