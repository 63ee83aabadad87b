#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "irank/matrix.hpp"

namespace irank {

/// Result of deleting every row and every column all of whose entries
/// contain 0. The minimal rank is unchanged by the deletion.
struct ReducedForm {
  IntervalMatrix matrix;
  std::vector<std::size_t> kept_rows;
  std::vector<std::size_t> kept_cols;

  bool empty() const { return matrix.empty(); }
};

/// True when every row and every column has an entry excluding 0.
bool is_reduced(const IntervalMatrix& mu);

/// Single pass against the original matrix; rows and columns are removed
/// simultaneously.
ReducedForm reduce(const IntervalMatrix& mu);

/// Places a point matrix of the reduced shape back into the original shape,
/// with zeros in the deleted rows and columns.
PointMatrix embed(const ReducedForm& reduced, std::size_t rows, std::size_t cols,
                  const PointMatrix& a);

enum class SplitChoice { Lower, Upper };

/// One sign-definite (or partially sign-definite) variant of a source
/// matrix: first the recorded splits are applied to the source, then the
/// row and column sign flips.
struct SignCase {
  IntervalMatrix matrix;
  std::vector<bool> row_flips;
  std::vector<bool> col_flips;
  std::map<Entry, SplitChoice> split_choices;
};

/// Rebuilds a case's matrix from the source and the recorded operations.
IntervalMatrix apply_case(const IntervalMatrix& source, const SignCase& c);

/// Maps a point matrix of the case back to a point matrix of the source
/// (undoes the sign flips; splits only shrink entries).
PointMatrix unflip(const SignCase& c, const PointMatrix& a);

/// Entries with lo < 0 < hi, row-major.
std::vector<Entry> straddling_entries(const IntervalMatrix& mu);

/// Straddling entries located in the first row or the first column.
std::vector<Entry> first_line_straddling_entries(const IntervalMatrix& mu);

/// One case per element of the product over `entries` of {[lo,0], [0,hi]},
/// enumerated with the first listed entry varying slowest and Lower before
/// Upper. Entries that do not straddle zero are ignored. Throws
/// CapExceededError when more than `split_cap` entries would be split.
std::vector<SignCase> sign_split_cases(const IntervalMatrix& mu, std::span<const Entry> entries,
                                       std::size_t split_cap = 16);

/// Splits every straddling entry.
std::vector<SignCase> sign_split_cases(const IntervalMatrix& mu, std::size_t split_cap = 16);

/// Splits entries of `base.matrix`; the returned cases keep `base`'s flips
/// and record each split against the original source.
std::vector<SignCase> sign_split_cases(const SignCase& base, std::span<const Entry> entries,
                                       std::size_t split_cap = 16);

/// The identity case of a matrix (no flips, no splits).
SignCase identity_case(const IntervalMatrix& mu);

/// Flips rows and columns by -1 so the first row and column become
/// nonnegative where they are sign-definite: row 0 if (0,0) is nonpositive
/// and nonzero, then every row i >= 1 by (i,0), then every column j >= 1 by
/// (0,j). Zero and straddling entries impose no flip.
SignCase normalize_first_line(const IntervalMatrix& mu);

/// Normalizes an existing case, composing the new flips with its record.
SignCase normalize_first_line(const SignCase& c);

/// Flips rows so that every sign-definite, nonzero first-column entry is
/// nonnegative.
SignCase normalize_first_column(const SignCase& c);

/// Outcome of clamping a matrix with a nonnegative first row and column.
struct ClampResult {
  /// [max(0, m_ij), M_ij] entrywise; empty when some entry is < 0.
  std::optional<IntervalMatrix> matrix;
  /// The strictly negative entry that rules out a rank-one member.
  std::optional<Entry> negative_entry;

  bool rules_out_rank_one() const { return !matrix.has_value(); }
};

/// Requires the first row and column to be nonnegative.
ClampResult clamp_nonneg(const IntervalMatrix& mu);

}  // namespace irank
