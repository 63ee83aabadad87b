#include "irank/min_rank3.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "irank/max_rank.hpp"
#include "irank/rank_one.hpp"

namespace irank {

bool gamma_feasible(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw DimensionError("gamma_feasible: length mismatch");
  const std::size_t k = xs.size();
  for (std::size_t i = 0; i < k; ++i)
    if (sgn(xs[i]) <= 0 && sgn(ys[i]) > 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(xs[i]) >= 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(xs[j]) <= 0) continue;
      if (ys[j] * xs[i] < ys[i] * xs[j]) return false;
    }
  }
  return true;
}

namespace {

int sgn_of(const Rational& x) { return sgn(x); }
int sgn_of(std::int64_t x) { return (x > 0) - (x < 0); }

// Integer coefficients up to this size keep every product below in range.
constexpr long kSmall = 4096;

bool small_integer(const Rational& x) {
  return x.get_den() == 1 && x.get_num() <= kSmall && x.get_num() >= -kSmall;
}

template <class T>
struct Lower {
  T a, b, z;
};

template <class T>
struct Upper {
  T c, d, u;
};

// Exact integer copy of the system when every coefficient is small.
bool to_small(const TwoVarSystem& sys, std::vector<Lower<std::int64_t>>& lo,
              std::vector<Upper<std::int64_t>>& up) {
  lo.reserve(sys.lower_rows.size());
  up.reserve(sys.upper_rows.size());
  for (const LowerRow& r : sys.lower_rows) {
    if (!small_integer(r.a) || !small_integer(r.b) || !small_integer(r.z)) return false;
    lo.push_back({r.a.get_num().get_si(), r.b.get_num().get_si(), r.z.get_num().get_si()});
  }
  for (const UpperRow& r : sys.upper_rows) {
    if (!small_integer(r.c) || !small_integer(r.d) || !small_integer(r.u)) return false;
    up.push_back({r.c.get_num().get_si(), r.d.get_num().get_si(), r.u.get_num().get_si()});
  }
  return true;
}

std::vector<Lower<Rational>> rational_lower(const TwoVarSystem& sys) {
  std::vector<Lower<Rational>> out;
  for (const LowerRow& r : sys.lower_rows) out.push_back({r.a, r.b, r.z});
  return out;
}

std::vector<Upper<Rational>> rational_upper(const TwoVarSystem& sys) {
  std::vector<Upper<Rational>> out;
  for (const UpperRow& r : sys.upper_rows) out.push_back({r.c, r.d, r.u});
  return out;
}

// alpha * lambda + beta * gamma <= rho
template <class T>
struct HalfPlane {
  T alpha, beta, rho;
};

// A vertex as (l / det, g / det).
template <class T>
struct Vertex {
  T l, g, det;
};

template <class T>
std::optional<Vertex<T>> feasible_vertex(const std::vector<Lower<T>>& lo, const std::vector<Upper<T>>& up) {
  std::vector<HalfPlane<T>> planes;
  planes.reserve(2 + lo.size() + up.size());
  planes.push_back({T(-1), T(0), T(0)});
  planes.push_back({T(0), T(-1), T(0)});
  for (const auto& r : lo) {
    if (sgn_of(r.a) == 0 && sgn_of(r.b) == 0) {
      if (sgn_of(r.z) < 0) return std::nullopt;
      continue;
    }
    planes.push_back({r.a, r.b, r.z});
  }
  for (const auto& r : up) {
    if (sgn_of(r.c) == 0 && sgn_of(r.d) == 0) {
      if (sgn_of(r.u) > 0) return std::nullopt;
      continue;
    }
    planes.push_back({T(-r.c), T(-r.d), T(-r.u)});
  }

  for (std::size_t s = 0; s < planes.size(); ++s) {
    for (std::size_t t = s + 1; t < planes.size(); ++t) {
      const HalfPlane<T>& e = planes[s];
      const HalfPlane<T>& f = planes[t];
      T det = e.alpha * f.beta - e.beta * f.alpha;
      if (sgn_of(det) == 0) continue;
      T l = e.rho * f.beta - e.beta * f.rho;
      T g = e.alpha * f.rho - e.rho * f.alpha;
      if (sgn_of(det) < 0) {
        det = -det;
        l = -l;
        g = -g;
      }
      const bool ok = std::all_of(planes.begin(), planes.end(), [&](const HalfPlane<T>& h) {
        return h.alpha * l + h.beta * g <= h.rho * det;
      });
      if (ok) return Vertex<T>{std::move(l), std::move(g), std::move(det)};
    }
  }
  return std::nullopt;
}

template <class T>
bool corimp(const std::vector<Lower<T>>& lo, const std::vector<Upper<T>>& up) {
  const std::size_t k = lo.size();
  // D(i,r) = a_i d_r - b_i c_r,  E(i,r) = a_i u_r - c_r z_i
  std::vector<T> D(k * k), E(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < k; ++r) {
      D[i * k + r] = lo[i].a * up[r].d - lo[i].b * up[r].c;
      E[i * k + r] = lo[i].a * up[r].u - up[r].c * lo[i].z;
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    if (sgn_of(lo[i].b) >= 0 && sgn_of(lo[i].z) < 0) return false;
    for (std::size_t j = 0; j < k; ++j)
      if (sgn_of(lo[i].b) > 0 && sgn_of(lo[j].b) < 0 && lo[i].b * lo[j].z < lo[j].b * lo[i].z) return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < k; ++r) {
      const T& d_ir = D[i * k + r];
      const T& e_ir = E[i * k + r];
      if (sgn_of(d_ir) <= 0 && sgn_of(e_ir) > 0) return false;
      for (std::size_t j = 0; j < k; ++j) {
        const T& b_j = lo[j].b;
        const T& z_j = lo[j].z;
        if (sgn_of(b_j) < 0 && sgn_of(d_ir) < 0 && z_j * d_ir > b_j * e_ir) return false;
        if (sgn_of(b_j) > 0 && sgn_of(d_ir) > 0 && z_j * d_ir < b_j * e_ir) return false;
        if (sgn_of(d_ir) >= 0) continue;
        for (std::size_t s = 0; s < k; ++s) {
          const T& d_js = D[j * k + s];
          if (sgn_of(d_js) > 0 && d_ir * E[j * k + s] < d_js * e_ir) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::optional<TwoVarPoint> two_var_feasible(const TwoVarSystem& sys) {
  std::vector<Lower<std::int64_t>> lo;
  std::vector<Upper<std::int64_t>> up;
  if (to_small(sys, lo, up)) {
    const auto v = feasible_vertex(lo, up);
    if (!v) return std::nullopt;
    return TwoVarPoint{ratio(v->l, v->det), ratio(v->g, v->det)};
  }
  const auto v = feasible_vertex(rational_lower(sys), rational_upper(sys));
  if (!v) return std::nullopt;
  return TwoVarPoint{v->l / v->det, v->g / v->det};
}

std::optional<bool> corimp_conditions(const TwoVarSystem& sys) {
  const auto& lo = sys.lower_rows;
  const auto& up = sys.upper_rows;
  const std::size_t k = lo.size();
  if (k == 0 || up.size() != k) return std::nullopt;
  bool some_a = false;
  bool some_c = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(lo[i].a) < 0 || sgn(up[i].c) < 0) return std::nullopt;
    some_a = some_a || sgn(lo[i].a) != 0;
    some_c = some_c || sgn(up[i].c) != 0;
  }
  if (!some_a || !some_c) return std::nullopt;

  std::vector<Lower<std::int64_t>> slo;
  std::vector<Upper<std::int64_t>> sup;
  if (to_small(sys, slo, sup)) return corimp(slo, sup);
  return corimp(rational_lower(sys), rational_upper(sys));
}

TwoVarSystem rank_two_system(const IntervalMatrix& mu, std::size_t v, std::size_t w, int sign_case) {
  if (sign_case < 1 || sign_case > 4) throw PreconditionError("sign case must be 1..4");
  const bool lambda_neg = sign_case >= 3;
  const bool gamma_neg = sign_case == 2 || sign_case == 4;
  TwoVarSystem sys;
  for (std::size_t i = 0; i < mu.rows(); ++i) {
    const Interval& x0 = mu(i, 0);
    const Interval& xv = mu(i, v);
    const Interval& xw = mu(i, w);
    // Smallest and largest value of (+-lambda) x0 + (+-gamma) xv.
    sys.lower_rows.push_back({lambda_neg ? Rational(-x0.hi()) : x0.lo(),
                              gamma_neg ? Rational(-xv.hi()) : xv.lo(), xw.hi()});
    sys.upper_rows.push_back({lambda_neg ? Rational(-x0.lo()) : x0.hi(),
                              gamma_neg ? Rational(-xv.lo()) : xv.hi(), xw.lo()});
  }
  return sys;
}

namespace {

PointMatrix realize_dependency(const IntervalMatrix& mu, std::size_t v, std::size_t w, const Rational& ls,
                               const Rational& gs) {
  PointMatrix a = lower_bounds(mu);
  for (std::size_t i = 0; i < mu.rows(); ++i) {
    const Interval& x0 = mu(i, 0);
    const Interval& xv = mu(i, v);
    const Interval& xw = mu(i, w);
    const Interval range = ls * x0 + gs * xv;
    const Rational target = std::max(range.lo(), xw.lo());
    if (target > range.hi() || target > xw.hi())
      throw std::logic_error("column dependency is not realizable in row " + std::to_string(i));
    // Segment between the corners attaining range.lo() and range.hi().
    const Rational lo0 = sgn(ls) >= 0 ? x0.lo() : x0.hi();
    const Rational hi0 = sgn(ls) >= 0 ? x0.hi() : x0.lo();
    const Rational lov = sgn(gs) >= 0 ? xv.lo() : xv.hi();
    const Rational hiv = sgn(gs) >= 0 ? xv.hi() : xv.lo();
    Rational t = 0;
    if (range.hi() != range.lo()) t = (target - range.lo()) / (range.hi() - range.lo());
    a(i, 0) = lo0 + t * (hi0 - lo0);
    a(i, v) = lov + t * (hiv - lov);
    a(i, w) = ls * a(i, 0) + gs * a(i, v);
  }
  return a;
}

}  // namespace

std::optional<RankTwoWitness> mrk_le_2(const IntervalMatrix& mu) {
  if (mu.cols() != 3) throw PreconditionError("mrk_le_2 needs exactly 3 columns");
  if (!is_reduced(mu)) throw PreconditionError("mrk_le_2 needs a reduced matrix");
  for (std::size_t i = 0; i < mu.rows(); ++i)
    if (sign(mu(i, 0).lo()) < 0) throw PreconditionError("first column must be nonnegative");

  constexpr std::pair<std::size_t, std::size_t> kOrders[] = {{1, 2}, {2, 1}};
  for (const auto& [v, w] : kOrders) {
    for (int sign_case = 1; sign_case <= 4; ++sign_case) {
      const auto point = two_var_feasible(rank_two_system(mu, v, w, sign_case));
      if (!point) continue;
      RankTwoWitness wit;
      wit.v = v;
      wit.w = w;
      wit.sign_case = sign_case;
      wit.lambda = point->lambda;
      wit.gamma = point->gamma;
      const Rational ls = sign_case >= 3 ? Rational(-point->lambda) : point->lambda;
      const Rational gs = (sign_case == 2 || sign_case == 4) ? Rational(-point->gamma) : point->gamma;
      wit.matrix = realize_dependency(mu, v, w, ls, gs);
      return wit;
    }
  }
  return std::nullopt;
}

MinRankResult min_rank_3col(const IntervalMatrix& mu, const MinRankOptions& options) {
  if (mu.cols() > 3) throw ScopeError("minimal rank is only decided for at most 3 columns");
  MinRankResult out;
  if (mrk_is_zero(mu)) {
    out.rank = 0;
    out.decided_by = "zero";
    out.witness = PointMatrix(mu.rows(), mu.cols(), Rational(0));
    return out;
  }

  const RankOneResult one = contains_rank_one(mu, {options.h_max, options.split_cap, true});
  if (one.contains) {
    out.rank = 1;
    out.decided_by = "rank-one";
    out.witness = one.witness;
    out.conclusive = one.conclusive;
    return out;
  }

  const ReducedForm& reduced = one.reduced;
  const IntervalMatrix& red = reduced.matrix;
  if (std::min(red.rows(), red.cols()) <= 2) {
    out.rank = 2;
    out.decided_by = "small-reduction";
    out.witness = embed(reduced, mu.rows(), mu.cols(), midpoints(red));
    return out;
  }

  std::vector<Entry> column_straddles;
  for (const Entry& e : straddling_entries(red))
    if (e.col == 0) column_straddles.push_back(e);
  const auto cases = sign_split_cases(identity_case(red), column_straddles, options.split_cap);
  for (const SignCase& split : cases) {
    ++out.cases;
    const SignCase c = normalize_first_column(split);
    if (auto dep = mrk_le_2(c.matrix)) {
      out.rank = 2;
      out.decided_by = "column-dependency";
      out.witness = embed(reduced, mu.rows(), mu.cols(), unflip(c, dep->matrix));
      out.dependency = std::move(dep);
      return out;
    }
  }
  out.rank = 3;
  out.decided_by = "no-dependency";
  out.witness = midpoints(mu);
  return out;
}

RankRangeResult rank_range(const IntervalMatrix& mu, const MinRankOptions& options) {
  RankRangeResult out;
  const MinRankResult lo = min_rank_3col(mu, options);
  const MaxRankResult hi = max_rank_with_witness(mu);
  out.range = {lo.rank, hi.rank};
  out.min_witness = lo.witness;
  out.max_witness = hi.witness;
  out.conclusive = lo.conclusive;
  return out;
}

}  // namespace irank
