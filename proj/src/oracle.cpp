#include "irank/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "irank/preprocess.hpp"

namespace irank::oracle {
namespace {

PointMatrix vertex(const IntervalMatrix& mu, const std::vector<Entry>& free, std::uint64_t bits) {
  PointMatrix a = lower_bounds(mu);
  for (std::size_t k = 0; k < free.size(); ++k)
    if ((bits >> k) & 1u) a[free[k]] = mu[free[k]].hi();
  return a;
}

constexpr std::uint64_t kSteps = 64;

}  // namespace

std::size_t vertex_max_rank(const IntervalMatrix& mu, std::size_t cap) {
  const auto free = nonconstant_entries(mu);
  if (free.size() > cap || free.size() >= 63) {
    throw CapExceededError(std::to_string(free.size()) + " nonconstant entries exceed vertex cap " +
                           std::to_string(cap));
  }
  const std::size_t full = std::min(mu.rows(), mu.cols());
  std::size_t best = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
    best = std::max(best, exact_rank(vertex(mu, free, bits)));
    if (best == full) break;
  }
  return best;
}

std::optional<RankOneFactors> rank1_feasible_log(const IntervalMatrix& mu) {
  const std::size_t p = mu.rows();
  const std::size_t q = mu.cols();
  if (p == 0 || q == 0) throw PreconditionError("empty matrix");
  for (const Interval& x : mu.values())
    if (sign(x.lo()) < 0) throw PreconditionError("entries must be nonnegative");
  if (!is_reduced(mu)) throw PreconditionError("matrix must be reduced");

  struct Arc {
    std::size_t from;
    std::size_t to;
    Rational factor;
  };
  // Nodes 0..p-1 carry x_i, nodes p..p+q-1 carry 1/c_j.
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const Interval& x = mu(i, j);
      if (sgn(x.hi()) == 0) return std::nullopt;
      arcs.push_back({p + j, i, x.hi()});
      if (sgn(x.lo()) > 0) arcs.push_back({i, p + j, 1 / x.lo()});
    }
  }

  const std::size_t n = p + q;
  std::vector<Rational> dist(n, Rational(1));
  bool changed = true;
  for (std::size_t pass = 0; pass <= n && changed; ++pass) {
    changed = false;
    for (const Arc& a : arcs) {
      Rational cand = dist[a.from] * a.factor;
      if (cand < dist[a.to]) {
        dist[a.to] = std::move(cand);
        changed = true;
      }
    }
  }
  if (changed) return std::nullopt;

  RankOneFactors f;
  f.x.assign(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(p));
  for (std::size_t j = 0; j < q; ++j) f.c.push_back(1 / dist[p + j]);
  f.matrix = PointMatrix(p, q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) f.matrix(i, j) = f.x[i] * f.c[j];
  return f;
}

std::vector<PointMatrix> random_members(const IntervalMatrix& mu, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<PointMatrix> out;
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    PointMatrix a(mu.rows(), mu.cols());
    for (std::size_t i = 0; i < mu.rows(); ++i) {
      for (std::size_t j = 0; j < mu.cols(); ++j) {
        const Interval& x = mu(i, j);
        const Rational t(static_cast<unsigned long>(gen() % (kSteps + 1)), static_cast<unsigned long>(kSteps));
        a(i, j) = x.lo() + x.width() * t;
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

SampleBounds sample_rank_bounds(const IntervalMatrix& mu, std::size_t n, std::uint64_t seed,
                                std::size_t vertex_cap) {
  SampleBounds b;
  bool first = true;
  auto record = [&](const PointMatrix& a) {
    const std::size_t r = exact_rank(a);
    b.min_rank_upper = first ? r : std::min(b.min_rank_upper, r);
    b.max_rank_lower = first ? r : std::max(b.max_rank_lower, r);
    first = false;
    ++b.samples;
  };

  record(midpoints(mu));
  const auto free = nonconstant_entries(mu);
  if (free.size() <= vertex_cap) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) record(vertex(mu, free, bits));
  } else {
    std::mt19937_64 gen(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t s = 0; s < (std::size_t{1} << vertex_cap); ++s) {
      PointMatrix a = lower_bounds(mu);
      for (const Entry& e : free)
        if (gen() & 1u) a[e] = mu[e].hi();
      record(a);
    }
  }
  for (const PointMatrix& a : random_members(mu, n, seed)) record(a);
  return b;
}

std::vector<std::size_t> rank_path(const IntervalMatrix& mu, const PointMatrix& a, const PointMatrix& b) {
  if (!matrix_contains(mu, a) || !matrix_contains(mu, b))
    throw PreconditionError("rank path endpoints must be members of the interval matrix");
  PointMatrix current = a;
  std::vector<std::size_t> ranks{exact_rank(current)};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (current(i, j) == b(i, j)) continue;
      current(i, j) = b(i, j);
      ranks.push_back(exact_rank(current));
    }
  }
  return ranks;
}

}  // namespace irank::oracle
