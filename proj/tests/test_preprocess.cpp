#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irank/irank.hpp"
#include "support/oracles.hpp"

using namespace irank;

namespace {

Interval I(long a, long b) { return Interval(a, b); }

// Intermediate matrices of the worked example.
IntervalMatrix mu_prime() {
  return {{I(2, 3), I(1, 6), I(0, 2), I(1, 3)}, {I(1, 2), I(2, 3), I(-2, 3), I(-3, 2)}, {I(1, 4), I(0, 2), I(3, 4), I(0, 1)}};
}
IntervalMatrix mu_second() {
  return {{I(2, 3), I(1, 6), I(-2, 0), I(1, 3)}, {I(1, 2), I(2, 3), I(-2, 3), I(-3, 2)}, {I(1, 4), I(0, 2), I(3, 4), I(0, 1)}};
}
IntervalMatrix mu_third() {
  return {{I(2, 3), I(1, 6), I(0, 2), I(1, 3)}, {I(1, 2), I(2, 3), I(-3, 2), I(-3, 2)}, {I(1, 4), I(0, 2), I(-4, -3), I(0, 1)}};
}
IntervalMatrix mu_prime_clamped() {
  return {{I(2, 3), I(1, 6), I(0, 2), I(1, 3)}, {I(1, 2), I(2, 3), I(0, 3), I(0, 2)}, {I(1, 4), I(0, 2), I(3, 4), I(0, 1)}};
}

}  // namespace

TEST_CASE("reduce") {
  SUBCASE("everything contains zero") {
    const ReducedForm r = reduce(IntervalMatrix(3, 2, I(-1, 1)));
    CHECK(r.empty());
    CHECK(r.kept_rows.empty());
    CHECK(r.kept_cols.empty());
  }
  SUBCASE("already reduced") {
    const IntervalMatrix mu = testing::worked_example();
    const ReducedForm r = reduce(mu);
    CHECK(r.matrix == mu);
    CHECK(r.kept_rows == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.kept_cols == std::vector<std::size_t>{0, 1, 2, 3});
  }
  SUBCASE("rows and columns judged against the original") {
    const IntervalMatrix mu{{I(1, 2), I(-1, 1)}, {I(-1, 0), I(-1, 1)}};
    const ReducedForm r = reduce(mu);
    CHECK(r.matrix == IntervalMatrix{{I(1, 2)}});
    CHECK(r.kept_rows == std::vector<std::size_t>{0});
    CHECK(r.kept_cols == std::vector<std::size_t>{0});
  }
}

TEST_CASE("reduce is idempotent") {
  testing::MatrixGen gen(11);
  for (int n = 0; n < 300; ++n) {
    const auto mu = gen.integer_matrix(static_cast<std::size_t>(gen.uniform(1, 4)),
                                       static_cast<std::size_t>(gen.uniform(1, 4)), -2, 2, 30);
    const ReducedForm once = reduce(mu);
    const ReducedForm twice = reduce(once.matrix);
    CHECK(twice.matrix == once.matrix);
    CHECK((once.empty() || is_reduced(once.matrix)));
  }
}

TEST_CASE("sign_split_cases") {
  SUBCASE("no straddling entries") {
    const IntervalMatrix mu{{I(1, 2), I(-3, -1)}};
    const auto cases = sign_split_cases(mu);
    REQUIRE(cases.size() == 1);
    CHECK(cases[0].matrix == mu);
  }
  SUBCASE("one straddling entry, lower first") {
    const IntervalMatrix mu{{I(-1, 2)}};
    const auto cases = sign_split_cases(mu);
    REQUIRE(cases.size() == 2);
    CHECK(cases[0].matrix(0, 0) == I(-1, 0));
    CHECK(cases[1].matrix(0, 0) == I(0, 2));
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(sign_split_cases(IntervalMatrix(3, 3, I(-1, 1)), 8), CapExceededError);
    CHECK(sign_split_cases(IntervalMatrix(2, 2, I(-1, 1)), 4).size() == 16);
  }
}

TEST_CASE("worked example intermediate matrices") {
  const IntervalMatrix mu = testing::worked_example();
  const SignCase base = normalize_first_line(mu);
  // Column 4 flips; the straddling (1,3) entry imposes nothing yet.
  CHECK(base.col_flips == std::vector<bool>{false, false, false, true});
  const auto straddles = first_line_straddling_entries(base.matrix);
  REQUIRE(straddles.size() == 1);
  CHECK(straddles[0] == Entry{0, 2});

  const auto cases = sign_split_cases(base, straddles);
  REQUIRE(cases.size() == 2);
  CHECK(cases[0].matrix == mu_second());
  CHECK(cases[1].matrix == mu_prime());

  const SignCase third = normalize_first_line(cases[0]);
  CHECK(third.matrix == mu_third());
  CHECK(normalize_first_line(cases[1]).matrix == mu_prime());

  const ClampResult no = clamp_nonneg(third.matrix);
  CHECK(no.rules_out_rank_one());
  CHECK(*no.negative_entry == Entry{2, 2});

  const ClampResult yes = clamp_nonneg(mu_prime());
  REQUIRE(yes.matrix);
  CHECK(*yes.matrix == mu_prime_clamped());

  for (const SignCase& c : {cases[0], cases[1], third}) CHECK(apply_case(mu, c) == c.matrix);
}

TEST_CASE("normalize_first_line") {
  const IntervalMatrix nonneg{{I(1, 2), I(0, 1)}, {I(0, 3), I(-5, -4)}};
  const SignCase same = normalize_first_line(nonneg);
  CHECK(same.matrix == nonneg);
  CHECK(same.row_flips == std::vector<bool>{false, false});

  const SignCase one = normalize_first_line(IntervalMatrix{{I(-2, -1)}});
  CHECK(one.row_flips == std::vector<bool>{true});
  CHECK(one.matrix(0, 0) == I(1, 2));

  // Zero entries impose no flip.
  const SignCase zero = normalize_first_line(IntervalMatrix{{I(0, 0), I(-2, -1)}, {I(-3, 0), I(1, 1)}});
  CHECK(zero.row_flips == std::vector<bool>{false, true});
  CHECK(zero.col_flips == std::vector<bool>{false, true});
}

TEST_CASE("clamp_nonneg") {
  const IntervalMatrix mu{{I(1, 2), I(0, 1)}, {I(0, 3), I(4, 5)}};
  CHECK(*clamp_nonneg(mu).matrix == mu);
  CHECK_THROWS_AS(clamp_nonneg(IntervalMatrix{{I(-1, 2)}}), PreconditionError);
}

TEST_CASE("sign cases reproduce their matrices and preserve ranks") {
  testing::MatrixGen gen(5);
  for (int n = 0; n < 150; ++n) {
    const auto mu = gen.integer_matrix(3, 3, -3, 3, 20);
    auto cases = sign_split_cases(mu, 16);
    for (const SignCase& c : cases) {
      const SignCase norm = normalize_first_line(c);
      CHECK(apply_case(mu, norm) == norm.matrix);
      for (const PointMatrix& a : oracle::random_members(norm.matrix, 2, static_cast<std::uint64_t>(n))) {
        const PointMatrix back = unflip(norm, a);
        CHECK(matrix_contains(mu, back));
        CHECK(exact_rank(back) == exact_rank(a));
      }
    }
    // Split soundness: every member lies in some case.
    for (const PointMatrix& a : oracle::random_members(mu, 5, 99 + static_cast<std::uint64_t>(n))) {
      bool found = false;
      for (const SignCase& c : cases) found = found || matrix_contains(c.matrix, a);
      CHECK(found);
    }
  }
}
