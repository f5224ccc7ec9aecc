#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fsn/counterexample.hpp"
#include "random_instances.hpp"

using namespace fsn;
using exactq::Matrix;
using exactq::Rational;
using exactq::Vector;
using namespace fsn::counterexample;

namespace {
Rational q(long n, long d = 1) { return exactq::make_rational(n, d); }
const Sequence kOne = Sequence::constant(1);
const Sequence kSucc{{}, 1, 1};  // m + 1
}  // namespace

TEST_CASE("sequences") {
  Sequence s{{q(2), q(1, 3)}, q(1, 2), q(1)};
  CHECK(s.at(0) == 2);
  CHECK(s.at(1) == q(1, 3));
  CHECK(s.at(4) == 3);
  CHECK_THROWS(validate_object(s));  // 1/3 < 1
  CHECK_NOTHROW(validate_weight(s));
  CHECK_THROWS(validate_weight(Sequence{{}, -1, 5}));
}

TEST_CASE("degree") {
  CHECK(degree(7, kOne) == 1);
  CHECK(degree(3, derived_object(kOne)) == 4);
  CHECK(degree(2, Sequence::constant(1, {q(1), q(1), q(7, 2)})) == 4);
}

TEST_CASE("closed form values") {
  auto cf = closed_form_value(kOne, kOne, 10);
  CHECK(cf.upper_bound == 1);
  CHECK(cf.exact);

  cf = closed_form_value(kOne, kSucc, 10);
  CHECK(cf.upper_bound == q(1, 11));
  CHECK(cf.infimum == 0);
  CHECK_FALSE(cf.attained);
  CHECK_FALSE(cf.exact);

  // Oracle values (direct minimization over m < 3000 in Python).
  Sequence w2{{q(7, 2), q(1)}, q(1, 3), q(4, 3)};
  cf = closed_form_value(w2, w2, 2);
  CHECK(cf.infimum == q(7, 9));
  CHECK(cf.attained);
  CHECK_FALSE(cf.exact);
  CHECK(closed_form_value(w2, w2, 3).exact);

  Sequence v3{{q(1)}, q(1, 2), q(0)};
  cf = closed_form_value(v3, w2, 0);
  CHECK(cf.infimum == q(1, 4));
  CHECK(cf.exact);

  // (m/2 + 10) / (m + 1) decreases to 1/2 without reaching it
  cf = closed_form_value(Sequence{{}, q(1, 2), q(10)}, kSucc, 100);
  CHECK(cf.infimum == q(1, 2));
  CHECK_FALSE(cf.attained);
}

TEST_CASE("closed form is nonincreasing in m_max") {
  testing::Rng rng(51);
  for (int t = 0; t < 30; ++t) {
    Sequence v{{}, testing::nonnegative_rational(rng), testing::nonnegative_rational(rng)};
    Sequence w{{}, testing::nonnegative_rational(rng), 1 + testing::nonnegative_rational(rng)};
    Rational prev = closed_form_value(v, w, 0).upper_bound;
    for (std::size_t m = 1; m < 20; ++m) {
      auto cf = closed_form_value(v, w, m);
      CHECK(cf.upper_bound <= prev);
      CHECK(cf.infimum <= cf.upper_bound);
      prev = cf.upper_bound;
    }
  }
}

TEST_CASE("brute force oracle") {
  CHECK(brute_force_value(3, kOne, kOne) == seminorm::Extended(q(1)));
  CHECK(brute_force_value(3, kOne, kSucc) == seminorm::Extended(q(1, 4)));
  CHECK(brute_force_value(3, kOne, kSucc, 0) == seminorm::Extended(q(0)));
  CHECK(brute_force_value(3, kOne, kSucc, 2) == seminorm::Extended(q(1, 2)));
  // other objects in the truncation change nothing
  CHECK(brute_force_value(3, kOne, {kOne, kSucc}, 1) == seminorm::Extended(q(1, 4)));
  CHECK_THROWS_AS(brute_force_value(80, kOne, kOne), InstanceTooLarge);
}

TEST_CASE("truncated category") {
  auto cat = truncated_category(2, {kSucc});
  CHECK(cat.objects.size() == 4);
  CHECK(cat.generators.size() == 3);
  CHECK(cat.generators[2].matrix == exactq::Matrix{{q(3)}});
  CHECK(fincat::validate(cat).ok());
}

TEST_CASE("gap demo") {
  auto g = gap_demo(kOne, 64);
  CHECK(g.w == kSucc);
  CHECK(g.lower_bound_w == 1);
  CHECK(g.lower_bound_certified);
  REQUIRE(g.rows.size() == 64);
  for (const auto& row : g.rows) {
    CHECK(row.upper_bound == Rational(1, static_cast<unsigned long>(row.m + 1)));
    CHECK(row.holds);
  }

  g = gap_demo(Sequence::constant(0), 8);
  CHECK(g.w == Sequence{{}, 0, 1});
  CHECK(g.lower_bound_w == 1);
  for (const auto& row : g.rows) {
    CHECK(row.upper_bound == 0);
  }

  g = gap_demo(Sequence::constant(q(3, 2), {q(2), q(1, 3), q(5)}), 10);
  CHECK(g.lower_bound_certified);
  CHECK(g.all_rows_hold);
  CHECK(g.rows[0].upper_bound == q(1, 6));   // (1/3) / ⌈4/3⌉
  CHECK(g.rows[1].upper_bound == q(5, 11));  // 5 / 11
  CHECK_THROWS(gap_demo(Sequence{{}, 1, 0}, 3));
}
