#include "irank/max_rank.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace irank {
namespace {

void require_square(const IntervalMatrix& mu) {
  if (mu.rows() != mu.cols()) throw DimensionError("interval matrix must be square");
}

int parity_sign(const std::vector<std::size_t>& seq) {
  int s = 1;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) s = -s;
  return s;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& used) {
  std::vector<bool> taken(n, false);
  for (std::size_t u : used) taken[u] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!taken[i]) out.push_back(i);
  return out;
}

// Calls visit(rows, cols) for every totally nonconstant diagonal of length k;
// rows are increasing. Stops when visit returns false.
bool visit_diagonals(const IntervalMatrix& mu, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&,
                                              const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = mu.rows();
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<bool> col_used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t next_row) -> bool {
    if (rows.size() == k) return visit(rows, cols);
    // Not enough rows left to finish.
    for (std::size_t i = next_row; i + (k - rows.size()) <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (col_used[j] || mu(i, j).is_constant()) continue;
        rows.push_back(i);
        cols.push_back(j);
        col_used[j] = true;
        const bool go_on = extend(i + 1);
        col_used[j] = false;
        rows.pop_back();
        cols.pop_back();
        if (!go_on) return false;
      }
    }
    return true;
  };
  return extend(0);
}

void for_each_subset(std::size_t n, std::size_t t, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(t);
  for (std::size_t a = 0; a < t; ++a) idx[a] = a;
  while (true) {
    if (!visit(idx)) return;
    std::size_t a = t;
    while (a > 0 && idx[a - 1] == n - t + a - 1) --a;
    if (a == 0) return;
    ++idx[a - 1];
    for (std::size_t b = a; b < t; ++b) idx[b] = idx[b - 1] + 1;
  }
}

}  // namespace

CenterRadius center_radius(const IntervalMatrix& mu) {
  CenterRadius cr{PointMatrix(mu.rows(), mu.cols()), PointMatrix(mu.rows(), mu.cols())};
  for (std::size_t i = 0; i < mu.rows(); ++i) {
    for (std::size_t j = 0; j < mu.cols(); ++j) {
      cr.center(i, j) = mu(i, j).midpoint();
      cr.radius(i, j) = mu(i, j).width() / 2;
    }
  }
  return cr;
}

Rational detc(const IntervalMatrix& mu) {
  require_square(mu);
  PointMatrix constant_part(mu.rows(), mu.cols(), Rational(0));
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j)
      if (mu(i, j).is_constant()) constant_part(i, j) = mu(i, j).lo();
  return determinant(std::move(constant_part));
}

std::vector<PgDiagonal> totally_nonconstant_diagonals(const IntervalMatrix& mu, std::size_t k) {
  require_square(mu);
  std::vector<PgDiagonal> out;
  if (k > mu.rows()) return out;
  visit_diagonals(mu, k, [&](const auto& rows, const auto& cols) {
    out.push_back({rows, cols, parity_sign(cols)});
    return true;
  });
  return out;
}

IntervalMatrix complementary_matrix(const IntervalMatrix& mu, const PgDiagonal& d) {
  require_square(mu);
  return mu.submatrix(complement(mu.rows(), d.row_indices), complement(mu.cols(), d.col_indices));
}

bool square_max_rank_full(const IntervalMatrix& mu) {
  require_square(mu);
  const std::size_t n = mu.rows();
  if (n == 0) return true;
  if (n > 63) throw CapExceededError("matrix too large for diagonal enumeration");

  bool full_diagonal = false;
  visit_diagonals(mu, n, [&](const auto&, const auto&) {
    full_diagonal = true;
    return false;
  });
  if (full_diagonal) return true;

  // detc of a complementary matrix depends only on the removed index sets.
  std::map<std::pair<std::uint64_t, std::uint64_t>, bool> nonzero_detc;
  bool found = false;
  for (std::size_t k = 0; k < n && !found; ++k) {
    visit_diagonals(mu, k, [&](const auto& rows, const auto& cols) {
      std::uint64_t row_mask = 0;
      std::uint64_t col_mask = 0;
      for (std::size_t r : rows) row_mask |= std::uint64_t{1} << r;
      for (std::size_t c : cols) col_mask |= std::uint64_t{1} << c;
      auto [it, inserted] = nonzero_detc.try_emplace({row_mask, col_mask}, false);
      if (inserted) {
        const IntervalMatrix sub = mu.submatrix(complement(n, rows), complement(n, cols));
        it->second = sgn(detc(sub)) != 0;
      }
      found = it->second;
      return !found;
    });
  }
  return found;
}

namespace {

bool find_full_submatrix(const IntervalMatrix& mu, std::size_t t, std::vector<std::size_t>& rows_out,
                         std::vector<std::size_t>& cols_out) {
  bool found = false;
  for_each_subset(mu.rows(), t, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(mu.cols(), t, [&](const std::vector<std::size_t>& cols) {
      if (square_max_rank_full(mu.submatrix(rows, cols))) {
        rows_out = rows;
        cols_out = cols;
        found = true;
      }
      return !found;
    });
    return !found;
  });
  return found;
}

}  // namespace

std::size_t max_rank(const IntervalMatrix& mu) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t t = std::min(mu.rows(), mu.cols()); t >= 1; --t)
    if (find_full_submatrix(mu, t, rows, cols)) return t;
  return 0;
}

MaxRankResult max_rank_with_witness(const IntervalMatrix& mu) {
  MaxRankResult out;
  out.witness = lower_bounds(mu);
  for (std::size_t t = std::min(mu.rows(), mu.cols()); t >= 1; --t) {
    if (!find_full_submatrix(mu, t, out.rows, out.cols)) continue;
    out.rank = t;
    // The determinant of the submatrix is affine in each entry, so if it is
    // not identically zero on the box it stays so after pinning some entry
    // to one of its two endpoints.
    IntervalMatrix sub = mu.submatrix(out.rows, out.cols);
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = 0; b < t; ++b) {
        if (sub(a, b).is_constant()) continue;
        const Interval original = sub(a, b);
        sub(a, b) = Interval::point(original.lo());
        if (!square_max_rank_full(sub)) sub(a, b) = Interval::point(original.hi());
      }
    }
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t b = 0; b < t; ++b) out.witness(out.rows[a], out.cols[b]) = sub(a, b).lo();
    return out;
  }
  return out;
}

bool rohn_full_rank_square(const IntervalMatrix& mu, std::size_t cap) {
  require_square(mu);
  const std::size_t n = mu.rows();
  if (n > cap) throw CapExceededError("sign-pair test limited to " + std::to_string(cap) + " rows");
  const CenterRadius cr = center_radius(mu);
  const Rational det_center = determinant(cr.center);
  if (sgn(det_center) == 0) return false;
  for (std::uint64_t xs = 0; xs < (std::uint64_t{1} << n); ++xs) {
    for (std::uint64_t ys = 0; ys < (std::uint64_t{1} << n); ++ys) {
      PointMatrix shifted = cr.center;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const bool negative = (((xs >> i) ^ (ys >> j)) & 1u) != 0;
          // (T_x D T_y)_ij = x_i D_ij y_j
          if (negative) shifted(i, j) += cr.radius(i, j);
          else shifted(i, j) -= cr.radius(i, j);
        }
      }
      if (sgn(det_center) * sgn(determinant(std::move(shifted))) <= 0) return false;
    }
  }
  return true;
}

}  // namespace irank
