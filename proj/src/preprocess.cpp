#include "irank/preprocess.hpp"

#include <string>

namespace irank {
namespace {

bool flipped(const SignCase& c, std::size_t i, std::size_t j) { return c.row_flips[i] != c.col_flips[j]; }

Interval split(const Interval& x, SplitChoice choice) {
  return choice == SplitChoice::Lower ? Interval(x.lo(), 0) : Interval(0, x.hi());
}

SplitChoice opposite(SplitChoice c) {
  return c == SplitChoice::Lower ? SplitChoice::Upper : SplitChoice::Lower;
}

void flip_row(SignCase& c, std::size_t i) {
  c.row_flips[i] = !c.row_flips[i];
  for (std::size_t j = 0; j < c.matrix.cols(); ++j) c.matrix(i, j) = -c.matrix(i, j);
}

void flip_col(SignCase& c, std::size_t j) {
  c.col_flips[j] = !c.col_flips[j];
  for (std::size_t i = 0; i < c.matrix.rows(); ++i) c.matrix(i, j) = -c.matrix(i, j);
}

bool wants_flip(const Interval& x) {
  const SignFlags f = classify(x);
  return f.has(SignFlag::NonPos) && !f.has(SignFlag::Zero);
}

}  // namespace

bool is_reduced(const IntervalMatrix& mu) {
  for (std::size_t i = 0; i < mu.rows(); ++i) {
    bool ok = false;
    for (std::size_t j = 0; j < mu.cols() && !ok; ++j) ok = !mu(i, j).contains_zero();
    if (!ok) return false;
  }
  for (std::size_t j = 0; j < mu.cols(); ++j) {
    bool ok = false;
    for (std::size_t i = 0; i < mu.rows() && !ok; ++i) ok = !mu(i, j).contains_zero();
    if (!ok) return false;
  }
  return true;
}

ReducedForm reduce(const IntervalMatrix& mu) {
  ReducedForm out;
  for (std::size_t i = 0; i < mu.rows(); ++i) {
    for (std::size_t j = 0; j < mu.cols(); ++j) {
      if (!mu(i, j).contains_zero()) {
        out.kept_rows.push_back(i);
        break;
      }
    }
  }
  for (std::size_t j = 0; j < mu.cols(); ++j) {
    for (std::size_t i = 0; i < mu.rows(); ++i) {
      if (!mu(i, j).contains_zero()) {
        out.kept_cols.push_back(j);
        break;
      }
    }
  }
  out.matrix = mu.submatrix(out.kept_rows, out.kept_cols);
  return out;
}

PointMatrix embed(const ReducedForm& reduced, std::size_t rows, std::size_t cols,
                  const PointMatrix& a) {
  if (a.rows() != reduced.kept_rows.size() || a.cols() != reduced.kept_cols.size())
    throw DimensionError("point matrix does not have the reduced shape");
  PointMatrix out(rows, cols, Rational(0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(reduced.kept_rows[r], reduced.kept_cols[c]) = a(r, c);
  return out;
}

SignCase identity_case(const IntervalMatrix& mu) {
  return SignCase{mu, std::vector<bool>(mu.rows(), false), std::vector<bool>(mu.cols(), false), {}};
}

IntervalMatrix apply_case(const IntervalMatrix& source, const SignCase& c) {
  IntervalMatrix out = source;
  for (const auto& [e, choice] : c.split_choices) out[e] = split(source[e], choice);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      if (flipped(c, i, j)) out(i, j) = -out(i, j);
  return out;
}

PointMatrix unflip(const SignCase& c, const PointMatrix& a) {
  PointMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (flipped(c, i, j)) out(i, j) = -out(i, j);
  return out;
}

std::vector<Entry> straddling_entries(const IntervalMatrix& mu) {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j)
      if (classify(mu(i, j)).has(SignFlag::StraddlesZero)) out.push_back({i, j});
  return out;
}

std::vector<Entry> first_line_straddling_entries(const IntervalMatrix& mu) {
  std::vector<Entry> out;
  for (const Entry& e : straddling_entries(mu))
    if (e.row == 0 || e.col == 0) out.push_back(e);
  return out;
}

std::vector<SignCase> sign_split_cases(const SignCase& base, std::span<const Entry> entries,
                                       std::size_t split_cap) {
  std::vector<Entry> targets;
  for (const Entry& e : entries)
    if (classify(base.matrix[e]).has(SignFlag::StraddlesZero)) targets.push_back(e);
  if (targets.size() > split_cap) {
    throw CapExceededError(std::to_string(targets.size()) + " straddling entries exceed split cap " +
                           std::to_string(split_cap));
  }

  const std::size_t n = targets.size();
  std::vector<SignCase> cases;
  cases.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    SignCase c = base;
    for (std::size_t k = 0; k < n; ++k) {
      // Bit for the first target is the most significant one.
      const bool upper = (mask >> (n - 1 - k)) & 1u;
      const SplitChoice here = upper ? SplitChoice::Upper : SplitChoice::Lower;
      const Entry e = targets[k];
      c.matrix[e] = split(base.matrix[e], here);
      c.split_choices[e] = flipped(base, e.row, e.col) ? opposite(here) : here;
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

std::vector<SignCase> sign_split_cases(const IntervalMatrix& mu, std::span<const Entry> entries,
                                       std::size_t split_cap) {
  return sign_split_cases(identity_case(mu), entries, split_cap);
}

std::vector<SignCase> sign_split_cases(const IntervalMatrix& mu, std::size_t split_cap) {
  const auto entries = straddling_entries(mu);
  return sign_split_cases(identity_case(mu), entries, split_cap);
}

SignCase normalize_first_line(const SignCase& base) {
  SignCase c = base;
  if (c.matrix.empty()) return c;
  if (wants_flip(c.matrix(0, 0))) flip_row(c, 0);
  for (std::size_t i = 1; i < c.matrix.rows(); ++i)
    if (wants_flip(c.matrix(i, 0))) flip_row(c, i);
  for (std::size_t j = 1; j < c.matrix.cols(); ++j)
    if (wants_flip(c.matrix(0, j))) flip_col(c, j);
  return c;
}

SignCase normalize_first_line(const IntervalMatrix& mu) { return normalize_first_line(identity_case(mu)); }

SignCase normalize_first_column(const SignCase& base) {
  SignCase c = base;
  if (c.matrix.cols() == 0) return c;
  for (std::size_t i = 0; i < c.matrix.rows(); ++i)
    if (wants_flip(c.matrix(i, 0))) flip_row(c, i);
  return c;
}

ClampResult clamp_nonneg(const IntervalMatrix& mu) {
  for (std::size_t j = 0; j < mu.cols(); ++j)
    if (!mu.empty() && sign(mu(0, j).lo()) < 0) throw PreconditionError("first row is not nonnegative");
  for (std::size_t i = 0; i < mu.rows(); ++i)
    if (!mu.empty() && sign(mu(i, 0).lo()) < 0) throw PreconditionError("first column is not nonnegative");

  ClampResult out;
  IntervalMatrix clamped = mu;
  for (std::size_t i = 0; i < mu.rows(); ++i) {
    for (std::size_t j = 0; j < mu.cols(); ++j) {
      const Interval& x = mu(i, j);
      if (sign(x.hi()) < 0) {
        out.negative_entry = Entry{i, j};
        return out;
      }
      if (sign(x.lo()) < 0) clamped(i, j) = Interval(0, x.hi());
    }
  }
  out.matrix = std::move(clamped);
  return out;
}

}  // namespace irank
