#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irank/matrix.hpp"
#include "irank/preprocess.hpp"

namespace irank {

/// Every entry contains 0, i.e. the zero matrix is a member.
bool mrk_is_zero(const IntervalMatrix& mu);

/// All size-h multisets of {0, ..., n-1} as nondecreasing sequences, in
/// lexicographic order. There are C(n+h-1, h) of them.
std::vector<std::vector<std::size_t>> multiset_tuples(std::size_t n, std::size_t h);

/// Calls `visit(seq)` for every size-h multiset of {0..n-1} in
/// lexicographic order; stops early when `visit` returns false.
void for_each_multiset(std::size_t n, std::size_t h,
                       const std::function<bool(std::span<const std::size_t>)>& visit);

/// Index data of one product inequality
///   m[r_1,c_1] ... m[r_h,c_h] <= M[r_1,c_{s(1)}] ... M[r_h,c_{s(h)}].
struct TupleFamily {
  std::size_t h = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<std::size_t> sigma;
};

Rational lower_product(const IntervalMatrix& mu, const TupleFamily& t);
Rational upper_product(const IntervalMatrix& mu, const TupleFamily& t);
bool product_inequality_holds(const IntervalMatrix& mu, const TupleFamily& t);

/// Visits every (pair multiset, distinct rearrangement of its columns)
/// combination of size h over a p x q index grid. Stops when `visit`
/// returns false.
void for_each_tuple_family(std::size_t p, std::size_t q, std::size_t h,
                           const std::function<bool(const TupleFamily&)>& visit);

/// 2^(min(p,q)-1), saturated at SIZE_MAX / 2.
std::size_t exact_h_bound(std::size_t p, std::size_t q);

struct RankOneCheck {
  bool holds = true;
  /// A violated inequality when `holds` is false.
  std::optional<TupleFamily> violation;
  std::size_t h_max = 0;
  /// True when h_max is below the exact bound, so `holds == true` is not a
  /// proof of rank-one containment.
  bool capped = false;
};

/// Product-inequality criterion for a reduced matrix with nonnegative
/// entries and at least two rows and columns: the matrix contains a rank-one
/// member iff every inequality with 2 <= h <= h_max holds, h_max being
/// exact_h_bound(p, q).
///
/// Evaluated by a max-times walk recursion over the columns: a permutation
/// splits into cycles, and along one cycle each row choice can be maximized
/// independently, so the criterion holds iff no closed column walk of length
/// h in [2, h_max] has step-ratio product above 1. Walks longer than q are
/// not needed since they split into simple cycles.
RankOneCheck rank_one_nonneg_reduced(const IntervalMatrix& mu,
                                     std::optional<std::size_t> h_max = std::nullopt);

/// Same predicate by direct enumeration of pair multisets and column
/// rearrangements, skipping tuples whose lower product is 0. Exponential;
/// for small shapes and cross-checks.
RankOneCheck rank_one_nonneg_reduced_enumerated(const IntervalMatrix& mu,
                                                std::optional<std::size_t> h_max = std::nullopt);

/// All violated inequalities of exactly size h (enumeration order).
std::vector<TupleFamily> violated_families(const IntervalMatrix& mu, std::size_t h);

struct Bo3Check {
  bool holds = true;
  std::optional<TupleFamily> violation;
};

/// Interval-product intersection condition: for all h in [2, h_max] the
/// products mu[r_k,c_k] and mu[r_k,c_{s(k)}] intersect. Necessary for rank-one
/// containment, not sufficient.
Bo3Check check_bo3(const IntervalMatrix& mu, std::optional<std::size_t> h_max = std::nullopt);

struct RankOneOptions {
  /// Tuple-size cap; nullopt means the exact bound.
  std::optional<std::size_t> h_max;
  std::size_t split_cap = 16;
  bool witness = false;
};

struct RankOneCaseTrace {
  SignCase sign_case;
  ClampResult clamp;
  std::optional<RankOneCheck> check;
};

struct RankOneResult {
  bool contains = false;
  /// False when a positive answer relies on a capped h_max.
  bool conclusive = true;
  std::optional<PointMatrix> witness;
  ReducedForm reduced;
  /// How the answer was reached: "empty-reduction", "single-line",
  /// "sign-cases".
  std::string decided_by;
  std::vector<RankOneCaseTrace> cases;
};

/// Whether some member has rank exactly 1: reduce, normalize the first row
/// and column, split its straddling entries, normalize again, clamp, and
/// apply the product-inequality criterion to every case.
RankOneResult contains_rank_one(const IntervalMatrix& mu, const RankOneOptions& options = {});

}  // namespace irank
