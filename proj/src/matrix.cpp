#include "irank/matrix.hpp"

#include <utility>

namespace irank {

IntervalMatrix make_interval_matrix(const PointMatrix& lower, const PointMatrix& upper) {
  if (lower.rows() != upper.rows() || lower.cols() != upper.cols())
    throw DimensionError("minima and maxima matrices differ in shape");
  IntervalMatrix mu(lower.rows(), lower.cols());
  for (std::size_t i = 0; i < lower.rows(); ++i)
    for (std::size_t j = 0; j < lower.cols(); ++j) mu(i, j) = Interval(lower(i, j), upper(i, j));
  return mu;
}

IntervalMatrix degenerate(const PointMatrix& a) { return make_interval_matrix(a, a); }

namespace {

template <class F>
PointMatrix map_entries(const IntervalMatrix& mu, F f) {
  PointMatrix out(mu.rows(), mu.cols());
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j) out(i, j) = f(mu(i, j));
  return out;
}

// Row-reduces in place; returns the rank and the determinant sign/scale
// bookkeeping through `det` when requested.
std::size_t eliminate(PointMatrix& a, Rational* det) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  if (det) *det = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a(pivot, c)) == 0) ++pivot;
    if (pivot == rows) {
      if (det) *det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot, k), a(rank, k));
      if (det) *det = -*det;
    }
    const Rational p = a(rank, c);
    if (det) *det *= p;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      const Rational factor = a(r, c) / p;
      for (std::size_t k = c; k < cols; ++k) a(r, k) -= factor * a(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

PointMatrix lower_bounds(const IntervalMatrix& mu) {
  return map_entries(mu, [](const Interval& x) { return x.lo(); });
}

PointMatrix upper_bounds(const IntervalMatrix& mu) {
  return map_entries(mu, [](const Interval& x) { return x.hi(); });
}

PointMatrix midpoints(const IntervalMatrix& mu) {
  return map_entries(mu, [](const Interval& x) { return x.midpoint(); });
}

std::vector<Entry> nonconstant_entries(const IntervalMatrix& mu) {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j)
      if (!mu(i, j).is_constant()) out.push_back({i, j});
  return out;
}

bool matrix_contains(const IntervalMatrix& mu, const PointMatrix& a) {
  if (mu.rows() != a.rows() || mu.cols() != a.cols())
    throw DimensionError("point matrix shape differs from interval matrix shape");
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j)
      if (!mu(i, j).contains(a(i, j))) return false;
  return true;
}

std::size_t exact_rank(PointMatrix a) { return eliminate(a, nullptr); }

Rational determinant(PointMatrix a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
  Rational det;
  const std::size_t rank = eliminate(a, &det);
  return rank == a.rows() ? det : Rational(0);
}

PointMatrix identity(std::size_t n) {
  PointMatrix id(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

namespace {

template <class M>
std::string render(const M& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      s += j ? ", " : "";
      s += to_string(m(i, j));
    }
  }
  return s + "]";
}

}  // namespace

std::string to_string(const PointMatrix& a) { return render(a); }
std::string to_string(const IntervalMatrix& mu) { return render(mu); }

}  // namespace irank
