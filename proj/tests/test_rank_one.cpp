#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irank/irank.hpp"
#include "support/oracles.hpp"

using namespace irank;

namespace {

Interval I(long a, long b) { return Interval(a, b); }

IntervalMatrix mu_prime_clamped() {
  return {{I(2, 3), I(1, 6), I(0, 2), I(1, 3)}, {I(1, 2), I(2, 3), I(0, 3), I(0, 2)}, {I(1, 4), I(0, 2), I(3, 4), I(0, 1)}};
}

void check_witness(const IntervalMatrix& mu, const RankOneResult& r) {
  REQUIRE(r.witness);
  CHECK(matrix_contains(mu, *r.witness));
  CHECK(exact_rank(*r.witness) == 1);
}

}  // namespace

TEST_CASE("mrk_is_zero") {
  CHECK(mrk_is_zero(IntervalMatrix(2, 3, I(-1, 1))));
  CHECK_FALSE(mrk_is_zero(IntervalMatrix{{I(-1, 1), I(1, 2)}}));
  CHECK_FALSE(mrk_is_zero(testing::worked_example()));
}

TEST_CASE("multiset_tuples") {
  using V = std::vector<std::vector<std::size_t>>;
  CHECK(multiset_tuples(2, 2) == V{{0, 0}, {0, 1}, {1, 1}});
  CHECK(multiset_tuples(3, 1) == V{{0}, {1}, {2}});
  CHECK(multiset_tuples(3, 2).size() == 6);
  CHECK(multiset_tuples(4, 3).size() == 20);
  CHECK(multiset_tuples(5, 4).size() == 70);
}

TEST_CASE("exact_h_bound") {
  CHECK(exact_h_bound(2, 2) == 2);
  CHECK(exact_h_bound(3, 4) == 4);
  CHECK(exact_h_bound(5, 4) == 8);
}

TEST_CASE("product criterion on the clamped worked example") {
  const IntervalMatrix mu = mu_prime_clamped();
  const RankOneCheck c = rank_one_nonneg_reduced(mu);
  CHECK_FALSE(c.holds);
  REQUIRE(c.violation);
  CHECK_FALSE(product_inequality_holds(mu, *c.violation));

  // m11 m22 m33 = 12 > 8 = M21 M32 M13 (one-based) is among the size-3 violations.
  const TupleFamily diagonal{3, {0, 1, 2}, {0, 1, 2}, {}};
  bool found = false;
  for (const TupleFamily& t : violated_families(mu, 3)) {
    if (t.rows != diagonal.rows || t.cols != diagonal.cols) continue;
    // Right-hand columns: row 0 -> col 2, row 1 -> col 0, row 2 -> col 1.
    if (t.cols[t.sigma[0]] == 2 && t.cols[t.sigma[1]] == 0 && t.cols[t.sigma[2]] == 1) {
      CHECK(lower_product(mu, t) == 12);
      CHECK(upper_product(mu, t) == 8);
      found = true;
    }
  }
  CHECK(found);
  CHECK_FALSE(rank_one_nonneg_reduced_enumerated(mu).holds);
}

TEST_CASE("product criterion small cases") {
  IntervalMatrix unit(3, 3, I(0, 1));
  for (std::size_t i = 0; i < 3; ++i) unit(i, i) = I(1, 1);
  CHECK(rank_one_nonneg_reduced(unit).holds == oracle::rank1_feasible_log(unit).has_value());

  const IntervalMatrix two{{I(2, 3), I(1, 6)}, {I(1, 2), I(2, 3)}};
  const bool expected = oracle::rank1_feasible_log(two).has_value();
  CHECK(expected);
  CHECK(rank_one_nonneg_reduced(two).holds == expected);

  CHECK_THROWS_AS(rank_one_nonneg_reduced(IntervalMatrix{{I(1, 2), I(1, 2)}}), PreconditionError);
  CHECK_THROWS_AS(rank_one_nonneg_reduced(IntervalMatrix{{I(-1, 2), I(1, 2)}, {I(1, 2), I(1, 2)}}), PreconditionError);
}

TEST_CASE("walk recursion agrees with literal enumeration") {
  testing::MatrixGen gen(31);
  int violated = 0;
  for (int n = 0; n < 250; ++n) {
    const auto p = static_cast<std::size_t>(gen.uniform(2, 3));
    const auto q = static_cast<std::size_t>(gen.uniform(2, 3));
    const IntervalMatrix mu = gen.nonneg_reduced(p, q);
    const RankOneCheck fast = rank_one_nonneg_reduced(mu);
    const RankOneCheck slow = rank_one_nonneg_reduced_enumerated(mu);
    CHECK(fast.holds == slow.holds);
    if (!fast.holds) {
      ++violated;
      CHECK_FALSE(product_inequality_holds(mu, *fast.violation));
      CHECK(fast.violation->h >= 2);
      CHECK(fast.violation->h <= fast.h_max);
    }
    // Capped runs only look at shorter tuples.
    CHECK(rank_one_nonneg_reduced(mu, 2).holds == rank_one_nonneg_reduced_enumerated(mu, 2).holds);
  }
  CHECK(violated > 20);
}

TEST_CASE("necessity on fattened outer products") {
  testing::MatrixGen gen(3);
  for (int n = 0; n < 200; ++n) {
    const IntervalMatrix mu = gen.fattened_rank_one(static_cast<std::size_t>(gen.uniform(2, 4)),
                                                    static_cast<std::size_t>(gen.uniform(2, 4)));
    CHECK(rank_one_nonneg_reduced(mu).holds);
    CHECK(check_bo3(mu, 2).holds);
  }
}

TEST_CASE("contains_rank_one pipeline") {
  SUBCASE("worked example has no rank-one member") {
    const RankOneResult r = contains_rank_one(testing::worked_example());
    CHECK_FALSE(r.contains);
    CHECK(r.decided_by == "sign-cases");
    REQUIRE(r.cases.size() == 2);
    CHECK(r.cases[0].clamp.rules_out_rank_one());
    REQUIRE(r.cases[1].check);
    CHECK_FALSE(r.cases[1].check->holds);
  }
  SUBCASE("bo3 counterexample") {
    CHECK_FALSE(contains_rank_one(testing::bo3_counterexample()).contains);
  }
  SUBCASE("degenerate rank-one point matrix") {
    const PointMatrix a{{1, 2}, {2, 4}};
    const RankOneResult r = contains_rank_one(degenerate(a), {std::nullopt, 16, true});
    CHECK(r.contains);
    REQUIRE(r.witness);
    CHECK(*r.witness == a);
  }
  SUBCASE("empty reduction") {
    const IntervalMatrix mu{{I(-1, 1), I(0, 0)}, {I(0, 0), I(0, 0)}};
    const RankOneResult r = contains_rank_one(mu, {std::nullopt, 16, true});
    CHECK(r.contains);
    CHECK(r.decided_by == "empty-reduction");
    check_witness(mu, r);
    CHECK_FALSE(contains_rank_one(IntervalMatrix(2, 2, I(0, 0))).contains);
  }
  SUBCASE("single reduced line") {
    const IntervalMatrix mu{{I(1, 2), I(-1, 1)}, {I(-1, 1), I(-2, 2)}, {I(-3, 3), I(0, 0)}};
    const RankOneResult r = contains_rank_one(mu, {std::nullopt, 16, true});
    CHECK(r.contains);
    CHECK(r.decided_by == "single-line");
    check_witness(mu, r);
  }
  SUBCASE("capped positive answers are flagged") {
    // 3x3 needs h up to 4; capping at 2 can miss the size-3 violation.
    IntervalMatrix mu = mu_prime_clamped();
    const RankOneResult r = contains_rank_one(mu, {std::size_t{2}, 16, false});
    if (r.contains) CHECK_FALSE(r.conclusive);
  }
}

TEST_CASE("contains_rank_one symmetry and monotonicity") {
  testing::MatrixGen gen(17);
  int positives = 0;
  for (int n = 0; n < 200; ++n) {
    const IntervalMatrix mu = gen.integer_matrix(3, 3, -3, 3, 30);
    const RankOneResult r = contains_rank_one(mu, {std::nullopt, 16, true});
    if (r.contains) {
      ++positives;
      check_witness(mu, r);
    }
    // Negating a row and swapping two columns.
    IntervalMatrix moved = mu;
    for (std::size_t j = 0; j < 3; ++j) moved(1, j) = -mu(1, j);
    for (std::size_t i = 0; i < 3; ++i) std::swap(moved(i, 0), moved(i, 2));
    CHECK(contains_rank_one(moved).contains == r.contains);
    CHECK(contains_rank_one(mu.transpose()).contains == r.contains);
    // Widening one entry.
    IntervalMatrix wide = mu;
    wide(0, 1) = Interval(mu(0, 1).lo() - 1, mu(0, 1).hi() + 1);
    if (r.contains) CHECK(contains_rank_one(wide).contains);
    if (!check_bo3(mu).holds) CHECK_FALSE(r.contains);
  }
  CHECK(positives > 10);
}

TEST_CASE("check_bo3") {
  CHECK(check_bo3(testing::bo3_counterexample()).holds);
  const Bo3Check c = check_bo3(mu_prime_clamped());
  CHECK_FALSE(c.holds);
  // The size-3 inequality separates the interval products too.
  const IntervalMatrix mu = mu_prime_clamped();
  Interval left = Interval::point(1), right = Interval::point(1);
  const std::size_t rows[3] = {0, 1, 2}, cols[3] = {0, 1, 2}, rhs[3] = {2, 0, 1};
  for (int k = 0; k < 3; ++k) {
    left = left * mu(rows[k], cols[k]);
    right = right * mu(rows[k], rhs[k]);
  }
  CHECK(left == I(12, 36));
  CHECK(right == I(0, 8));
  CHECK_FALSE(intersects(left, right));
}
