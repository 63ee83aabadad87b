#include "irank/rank_one.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "irank/oracle.hpp"

namespace irank {

bool mrk_is_zero(const IntervalMatrix& mu) {
  for (const Interval& x : mu.values())
    if (!x.contains_zero()) return false;
  return true;
}

void for_each_multiset(std::size_t n, std::size_t h,
                       const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (n == 0) return;
  std::vector<std::size_t> seq(h, 0);
  while (true) {
    if (!visit(seq)) return;
    // Rightmost position that can still grow.
    std::size_t k = h;
    while (k > 0 && seq[k - 1] == n - 1) --k;
    if (k == 0) return;
    const std::size_t next = seq[k - 1] + 1;
    std::fill(seq.begin() + static_cast<std::ptrdiff_t>(k - 1), seq.end(), next);
  }
}

std::vector<std::vector<std::size_t>> multiset_tuples(std::size_t n, std::size_t h) {
  std::vector<std::vector<std::size_t>> out;
  for_each_multiset(n, h, [&](std::span<const std::size_t> s) {
    out.emplace_back(s.begin(), s.end());
    return true;
  });
  return out;
}

Rational lower_product(const IntervalMatrix& mu, const TupleFamily& t) {
  Rational prod = 1;
  for (std::size_t k = 0; k < t.h; ++k) prod *= mu(t.rows[k], t.cols[k]).lo();
  return prod;
}

Rational upper_product(const IntervalMatrix& mu, const TupleFamily& t) {
  Rational prod = 1;
  for (std::size_t k = 0; k < t.h; ++k) prod *= mu(t.rows[k], t.cols[t.sigma[k]]).hi();
  return prod;
}

bool product_inequality_holds(const IntervalMatrix& mu, const TupleFamily& t) {
  return lower_product(mu, t) <= upper_product(mu, t);
}

void for_each_tuple_family(std::size_t p, std::size_t q, std::size_t h,
                           const std::function<bool(const TupleFamily&)>& visit) {
  TupleFamily t;
  t.h = h;
  t.rows.resize(h);
  t.cols.resize(h);
  t.sigma.resize(h);
  bool keep_going = true;
  for_each_multiset(p * q, h, [&](std::span<const std::size_t> pairs) {
    for (std::size_t k = 0; k < h; ++k) {
      t.rows[k] = pairs[k] / q;
      t.cols[k] = pairs[k] % q;
    }
    // Distinct rearrangements of the column multiset; sigma maps each slot to
    // an unused position holding the wanted column.
    std::vector<std::size_t> target = t.cols;
    std::sort(target.begin(), target.end());
    do {
      std::vector<bool> used(h, false);
      for (std::size_t k = 0; k < h; ++k) {
        for (std::size_t l = 0; l < h; ++l) {
          if (!used[l] && t.cols[l] == target[k]) {
            used[l] = true;
            t.sigma[k] = l;
            break;
          }
        }
      }
      if (!visit(t)) {
        keep_going = false;
        return false;
      }
    } while (std::next_permutation(target.begin(), target.end()));
    return keep_going;
  });
}

std::size_t exact_h_bound(std::size_t p, std::size_t q) {
  const std::size_t m = std::min(p, q);
  if (m == 0) return 0;
  if (m - 1 >= std::numeric_limits<std::size_t>::digits - 2)
    return std::numeric_limits<std::size_t>::max() / 2;
  return std::size_t{1} << (m - 1);
}

namespace {

void require_nonneg_reduced(const IntervalMatrix& mu) {
  if (mu.rows() < 2 || mu.cols() < 2) throw PreconditionError("need at least two rows and two columns");
  for (const Interval& x : mu.values())
    if (sign(x.lo()) < 0) throw PreconditionError("entries must be nonnegative");
  if (!is_reduced(mu)) throw PreconditionError("matrix must be reduced");
}

// Element of the max-times semiring on [0, +inf]; 0 absorbs +inf because a
// zero lower bound makes the whole inequality trivially true.
struct Ratio {
  bool infinite = false;
  Rational value{0};

  bool is_zero() const { return !infinite && sgn(value) == 0; }
};

Ratio times(const Ratio& a, const Ratio& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.infinite || b.infinite) return {true, 0};
  return {false, a.value * b.value};
}

bool greater(const Ratio& a, const Ratio& b) {
  if (a.infinite) return !b.infinite;
  if (b.infinite) return false;
  return a.value > b.value;
}

bool exceeds_one(const Ratio& a) { return a.infinite || a.value > 1; }

struct Step {
  Ratio weight;
  std::size_t row = 0;
};

}  // namespace

RankOneCheck rank_one_nonneg_reduced(const IntervalMatrix& mu, std::optional<std::size_t> h_max) {
  require_nonneg_reduced(mu);
  const std::size_t p = mu.rows();
  const std::size_t q = mu.cols();
  RankOneCheck out;
  const std::size_t exact = exact_h_bound(p, q);
  out.h_max = h_max.value_or(exact);
  out.capped = out.h_max < exact;

  // step(j, k): best ratio m[i,j] / M[i,k] over rows i with m[i,j] > 0.
  Matrix<Step> step(q, q);
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t k = 0; k < q; ++k) {
      Step best;
      for (std::size_t i = 0; i < p; ++i) {
        const Rational& lo = mu(i, j).lo();
        if (sgn(lo) == 0) continue;
        const Rational& hi = mu(i, k).hi();
        Ratio r = sgn(hi) == 0 ? Ratio{true, 0} : Ratio{false, lo / hi};
        if (greater(r, best.weight)) best = {std::move(r), i};
      }
      step(j, k) = std::move(best);
    }
  }

  const std::size_t last = std::min(out.h_max, q);
  // current(s, e): best product over walks of the current length from s to e;
  // parent[len - 1](s, e) is the node preceding e on the best walk of length len.
  std::vector<Matrix<std::size_t>> parent;
  Matrix<Ratio> current(q, q);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t k = 0; k < q; ++k) current(j, k) = step(j, k).weight;
  parent.emplace_back(q, q, 0);

  for (std::size_t h = 2; h <= last; ++h) {
    Matrix<Ratio> next(q, q);
    Matrix<std::size_t> via(q, q, 0);
    for (std::size_t s = 0; s < q; ++s) {
      for (std::size_t e = 0; e < q; ++e) {
        Ratio best;
        std::size_t arg = 0;
        for (std::size_t mid = 0; mid < q; ++mid) {
          Ratio r = times(current(s, mid), step(mid, e).weight);
          if (greater(r, best)) {
            best = std::move(r);
            arg = mid;
          }
        }
        next(s, e) = std::move(best);
        via(s, e) = arg;
      }
    }
    current = std::move(next);
    parent.push_back(std::move(via));

    for (std::size_t s = 0; s < q; ++s) {
      if (!exceeds_one(current(s, s))) continue;
      // Recover the closed walk s = n_0 -> n_1 -> ... -> n_h = s.
      std::vector<std::size_t> nodes(h + 1);
      nodes[h] = s;
      for (std::size_t len = h; len >= 2; --len) nodes[len - 1] = parent[len - 1](s, nodes[len]);
      nodes[0] = s;
      TupleFamily t;
      t.h = h;
      for (std::size_t k = 0; k < h; ++k) {
        t.rows.push_back(step(nodes[k], nodes[k + 1]).row);
        t.cols.push_back(nodes[k]);
        t.sigma.push_back((k + 1) % h);
      }
      out.holds = false;
      out.violation = std::move(t);
      return out;
    }
  }
  return out;
}

RankOneCheck rank_one_nonneg_reduced_enumerated(const IntervalMatrix& mu, std::optional<std::size_t> h_max) {
  require_nonneg_reduced(mu);
  RankOneCheck out;
  const std::size_t exact = exact_h_bound(mu.rows(), mu.cols());
  out.h_max = h_max.value_or(exact);
  out.capped = out.h_max < exact;
  for (std::size_t h = 2; h <= out.h_max && out.holds; ++h) {
    for_each_tuple_family(mu.rows(), mu.cols(), h, [&](const TupleFamily& t) {
      const Rational lhs = lower_product(mu, t);
      if (sgn(lhs) == 0) return true;
      if (lhs > upper_product(mu, t)) {
        out.holds = false;
        out.violation = t;
        return false;
      }
      return true;
    });
  }
  return out;
}

std::vector<TupleFamily> violated_families(const IntervalMatrix& mu, std::size_t h) {
  std::vector<TupleFamily> out;
  for_each_tuple_family(mu.rows(), mu.cols(), h, [&](const TupleFamily& t) {
    if (!product_inequality_holds(mu, t)) out.push_back(t);
    return true;
  });
  return out;
}

Bo3Check check_bo3(const IntervalMatrix& mu, std::optional<std::size_t> h_max) {
  Bo3Check out;
  const std::size_t bound = h_max.value_or(exact_h_bound(mu.rows(), mu.cols()));
  for (std::size_t h = 2; h <= bound && out.holds; ++h) {
    for_each_tuple_family(mu.rows(), mu.cols(), h, [&](const TupleFamily& t) {
      Interval left = Interval::point(1);
      Interval right = Interval::point(1);
      for (std::size_t k = 0; k < h; ++k) {
        left = left * mu(t.rows[k], t.cols[k]);
        right = right * mu(t.rows[k], t.cols[t.sigma[k]]);
      }
      if (!intersects(left, right)) {
        out.holds = false;
        out.violation = t;
        return false;
      }
      return true;
    });
  }
  return out;
}

namespace {

// Nonzero member value of an interval that is not [0,0].
Rational nonzero_point(const Interval& x) { return sgn(x.hi()) != 0 ? x.hi() : x.lo(); }

// Closest member value to 0.
Rational smallest_point(const Interval& x) {
  if (x.contains_zero()) return 0;
  return sgn(x.lo()) > 0 ? x.lo() : x.hi();
}

}  // namespace

RankOneResult contains_rank_one(const IntervalMatrix& mu, const RankOneOptions& options) {
  RankOneResult out;
  out.reduced = reduce(mu);
  const IntervalMatrix& red = out.reduced.matrix;

  if (out.reduced.empty()) {
    out.decided_by = "empty-reduction";
    for (std::size_t i = 0; i < mu.rows() && !out.contains; ++i) {
      for (std::size_t j = 0; j < mu.cols(); ++j) {
        if (classify(mu(i, j)).has(SignFlag::Zero)) continue;
        out.contains = true;
        if (options.witness) {
          PointMatrix a(mu.rows(), mu.cols(), Rational(0));
          a(i, j) = nonzero_point(mu(i, j));
          out.witness = std::move(a);
        }
        break;
      }
    }
    return out;
  }

  if (red.rows() == 1 || red.cols() == 1) {
    out.decided_by = "single-line";
    out.contains = true;
    if (options.witness) {
      PointMatrix a(red.rows(), red.cols());
      for (std::size_t i = 0; i < red.rows(); ++i)
        for (std::size_t j = 0; j < red.cols(); ++j) a(i, j) = smallest_point(red(i, j));
      out.witness = embed(out.reduced, mu.rows(), mu.cols(), a);
    }
    return out;
  }

  out.decided_by = "sign-cases";
  const SignCase base = normalize_first_line(red);
  const auto entries = first_line_straddling_entries(base.matrix);
  for (const SignCase& split : sign_split_cases(base, entries, options.split_cap)) {
    RankOneCaseTrace trace{normalize_first_line(split), {}, std::nullopt};
    trace.clamp = clamp_nonneg(trace.sign_case.matrix);
    if (trace.clamp.rules_out_rank_one()) {
      out.cases.push_back(std::move(trace));
      continue;
    }
    const IntervalMatrix clamped = *trace.clamp.matrix;
    trace.check = rank_one_nonneg_reduced(clamped, options.h_max);
    const bool holds = trace.check->holds;
    const bool capped = trace.check->capped;
    const SignCase sign_case = trace.sign_case;
    out.cases.push_back(std::move(trace));
    if (!holds) continue;

    out.contains = true;
    out.conclusive = !capped;
    if (options.witness) {
      if (auto factors = oracle::rank1_feasible_log(clamped)) {
        out.witness = embed(out.reduced, mu.rows(), mu.cols(), unflip(sign_case, factors->matrix));
        out.conclusive = true;
      }
    }
    if (out.conclusive) break;
  }
  return out;
}

}  // namespace irank
