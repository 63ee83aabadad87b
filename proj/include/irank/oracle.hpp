#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "irank/matrix.hpp"

namespace irank::oracle {

/// Maximum of exact_rank over all endpoint matrices. Throws
/// CapExceededError when mu has more than `cap` nonconstant entries.
std::size_t vertex_max_rank(const IntervalMatrix& mu, std::size_t cap = 20);

/// Positive factors with x_i * c_j in [m_ij, M_ij] for every entry.
struct RankOneFactors {
  std::vector<Rational> x;
  std::vector<Rational> c;
  PointMatrix matrix;
};

/// Decides whether a reduced matrix with nonnegative entries has a member
/// x c^T with positive x, c, by negative-cycle detection on the
/// multiplicative difference-constraint graph
///   x_i <= M_ij / c_j,   1/c_j <= x_i / m_ij   (m_ij > 0 only).
/// Paths carry exact products; a cycle is negative when its product is
/// below 1. Returns factors built from the shortest-path potentials.
std::optional<RankOneFactors> rank1_feasible_log(const IntervalMatrix& mu);

struct SampleBounds {
  /// Smallest sampled rank, an upper bound on the minimal rank.
  std::size_t min_rank_upper = 0;
  /// Largest sampled rank, a lower bound on the maximal rank.
  std::size_t max_rank_lower = 0;
  std::size_t samples = 0;
};

/// Ranks of the midpoint matrix, all vertices (or `vertex_cap`-bounded
/// seeded vertex subset), and n seeded random rational members.
SampleBounds sample_rank_bounds(const IntervalMatrix& mu, std::size_t n, std::uint64_t seed,
                                std::size_t vertex_cap = 12);

/// Deterministic random members of mu (same stream as sample_rank_bounds'
/// random part).
std::vector<PointMatrix> random_members(const IntervalMatrix& mu, std::size_t n, std::uint64_t seed);

/// Ranks along the chain that turns A into B one entry at a time,
/// row-major over the entries where they differ. Consecutive ranks differ
/// by at most 1. Throws PreconditionError unless A and B are members.
std::vector<std::size_t> rank_path(const IntervalMatrix& mu, const PointMatrix& a, const PointMatrix& b);

}  // namespace irank::oracle
