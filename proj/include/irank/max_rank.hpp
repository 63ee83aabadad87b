#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "irank/matrix.hpp"

namespace irank {

/// Partial generalized diagonal: entries (row_indices[t], col_indices[t])
/// with distinct rows (increasing) and distinct columns.
struct PgDiagonal {
  std::vector<std::size_t> row_indices;
  std::vector<std::size_t> col_indices;
  /// Parity of the column sequence; the permutation sign for full length.
  int sign = 1;

  std::size_t length() const { return row_indices.size(); }
};

/// C = (m + M) / 2 and D = (M - m) / 2 entrywise.
struct CenterRadius {
  PointMatrix center;
  PointMatrix radius;
};

CenterRadius center_radius(const IntervalMatrix& mu);

/// Constant part of the determinant: the signed sum over permutations whose
/// whole diagonal is made of constant entries. Equals the determinant of mu
/// with every nonconstant entry replaced by 0. Throws DimensionError for a
/// non-square matrix.
Rational detc(const IntervalMatrix& mu);

/// Every pg-diagonal of length k made of nonconstant entries. k = 0 yields the
/// single empty diagonal.
std::vector<PgDiagonal> totally_nonconstant_diagonals(const IntervalMatrix& mu, std::size_t k);

/// Submatrix on the rows and columns not used by d.
IntervalMatrix complementary_matrix(const IntervalMatrix& mu, const PgDiagonal& d);

/// Whether some member of a square mu is nonsingular. False exactly when mu
/// has no totally nonconstant diagonal of full length and every totally
/// nonconstant diagonal of length below p has a complementary matrix with
/// zero constant determinant. A 0x0 matrix counts as full.
bool square_max_rank_full(const IntervalMatrix& mu);

/// Largest t such that some t x t submatrix is square_max_rank_full,
/// searched from min(p, q) downward.
std::size_t max_rank(const IntervalMatrix& mu);

struct MaxRankResult {
  std::size_t rank = 0;
  /// Rows and columns of the first t x t submatrix found.
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  /// A member of rank `rank`.
  PointMatrix witness;
};

/// max_rank plus a member attaining it, fixing the nonconstant entries of
/// the selected submatrix one at a time to an endpoint that keeps it full.
MaxRankResult max_rank_with_witness(const IntervalMatrix& mu);

/// Sign-pair test on a square matrix: det(C) * det(C - T_x D T_y) > 0 for all
/// x, y in {-1, 1}^p, i.e. every member is nonsingular. Returns false when
/// det(C) = 0. Throws CapExceededError for p > cap.
bool rohn_full_rank_square(const IntervalMatrix& mu, std::size_t cap = 8);

}  // namespace irank
