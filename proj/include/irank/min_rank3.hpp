#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irank/matrix.hpp"
#include "irank/preprocess.hpp"

namespace irank {

/// lambda * a + gamma * b <= z
struct LowerRow {
  Rational a, b, z;
};

/// lambda * c + gamma * d >= u
struct UpperRow {
  Rational c, d, u;
};

/// Linear system in two nonnegative unknowns lambda and gamma.
struct TwoVarSystem {
  std::vector<LowerRow> lower_rows;
  std::vector<UpperRow> upper_rows;
};

struct TwoVarPoint {
  Rational lambda;
  Rational gamma;
};

/// Some gamma >= 0 satisfies gamma * x_i >= y_i for all i, decided by the
/// pairwise sign conditions: x_i <= 0 implies y_i <= 0, and
/// y_j x_i >= y_i x_j whenever x_j > 0 > x_i. Throws DimensionError on
/// unequal lengths.
bool gamma_feasible(std::span<const Rational> xs, std::span<const Rational> ys);

/// Exact feasibility of {lambda, gamma >= 0} together with all rows. The
/// region lies in the nonnegative quadrant, so it has no lines and, when
/// nonempty, has a vertex; candidates are the pairwise intersections of the
/// boundary lines (axes included). Returns a feasible point.
std::optional<TwoVarPoint> two_var_feasible(const TwoVarSystem& sys);

/// The closed-form pairwise conditions for the system with the same number
/// k of lower and upper rows, all a and c nonnegative, and some a and some c
/// nonzero. Returns nullopt when those hypotheses fail.
std::optional<bool> corimp_conditions(const TwoVarSystem& sys);

/// Linear dependency found by mrk_le_2: column w equals
/// lambda_sign * lambda * column 0 + gamma_sign * gamma * column v.
struct RankTwoWitness {
  std::size_t v = 1;
  std::size_t w = 2;
  /// 1..4: (lambda, gamma) signs (+,+), (+,-), (-,+), (-,-).
  int sign_case = 1;
  Rational lambda;
  Rational gamma;
  PointMatrix matrix;
};

/// The system whose feasibility is sign case `sign_case` of the column
/// dependency A^(w) = (+-lambda) A^(0) + (+-gamma) A^(v).
TwoVarSystem rank_two_system(const IntervalMatrix& mu, std::size_t v, std::size_t w, int sign_case);

/// For a reduced p x 3 matrix with a nonnegative first column: some member
/// has rank <= 2. Tries (v,w) = (1,2) then (2,1), sign cases 1..4 each;
/// the first feasible system wins. Throws PreconditionError otherwise.
std::optional<RankTwoWitness> mrk_le_2(const IntervalMatrix& mu);

struct MinRankOptions {
  std::optional<std::size_t> h_max;
  std::size_t split_cap = 16;
};

struct MinRankResult {
  std::size_t rank = 0;
  /// A member of rank `rank` (always present when the answer is conclusive).
  std::optional<PointMatrix> witness;
  /// False when the rank-one step ran with a capped h_max.
  bool conclusive = true;
  /// "zero", "rank-one", "small-reduction", "column-dependency", "no-dependency".
  std::string decided_by;
  std::optional<RankTwoWitness> dependency;
  std::size_t cases = 0;
};

/// Minimal rank of a matrix with at most 3 columns. Throws ScopeError for
/// more columns.
MinRankResult min_rank_3col(const IntervalMatrix& mu, const MinRankOptions& options = {});

struct RankRange {
  std::size_t min = 0;
  std::size_t max = 0;
  friend bool operator==(const RankRange&, const RankRange&) = default;
};

struct RankRangeResult {
  RankRange range;
  std::optional<PointMatrix> min_witness;
  PointMatrix max_witness;
  bool conclusive = true;
};

/// (minimal rank, maximal rank) with members attaining both; every rank in
/// between is attained as well. Throws ScopeError for more than 3 columns.
RankRangeResult rank_range(const IntervalMatrix& mu, const MinRankOptions& options = {});

}  // namespace irank
