/*
 * Copyright 2026 The fuzzfta authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fuzzfta/fuzzy_number.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fuzzfta/errors.hpp"

using namespace fuzzfta;

TEST_CASE("shape constructors validate their parameters") {
  CHECK_NOTHROW(Triangular(1.0, 2.0, 3.0));
  CHECK_NOTHROW(Triangular(2.0, 2.0, 2.0));
  CHECK_THROWS_AS(Triangular(2.0, 1.0, 3.0), ValidationError);
  CHECK_THROWS_AS(Triangular(1.0, 3.0, 2.0), ValidationError);

  CHECK_NOTHROW(Trapezoidal(1.0, 2.0, 2.0, 3.0));
  CHECK_THROWS_AS(Trapezoidal(1.0, 2.5, 2.0, 3.0), ValidationError);

  CHECK_NOTHROW(Gaussian(0.5, 0.2));
  CHECK_THROWS_AS(Gaussian(0.5, 0.0), ValidationError);
  CHECK_THROWS_AS(Gaussian(0.5, -1.0), ValidationError);

  const double nan = std::nan("");
  CHECK_THROWS_AS(Triangular(nan, 2.0, 3.0), ValidationError);
  CHECK_THROWS_AS(Gaussian(nan, 1.0), ValidationError);
}

TEST_CASE("triangular membership ramps between the corners") {
  FuzzyNumber f = Triangular(1.0, 2.0, 4.0);
  CHECK(membership(f, 0.5) == 0.0);
  CHECK(membership(f, 1.0) == 0.0);
  CHECK(membership(f, 1.5) == doctest::Approx(0.5));
  CHECK(membership(f, 2.0) == 1.0);
  CHECK(membership(f, 3.0) == doctest::Approx(0.5));
  CHECK(membership(f, 4.0) == 0.0);
  CHECK(membership(f, 5.0) == 0.0);

  FuzzyNumber point = Triangular(2.0, 2.0, 2.0);
  CHECK(membership(point, 2.0) == 1.0);
  CHECK(membership(point, 2.0 + 1e-9) == 0.0);
}

TEST_CASE("trapezoidal membership has a unit plateau") {
  FuzzyNumber f = Trapezoidal(0.0, 1.0, 3.0, 4.0);
  CHECK(membership(f, 0.5) == doctest::Approx(0.5));
  CHECK(membership(f, 1.0) == 1.0);
  CHECK(membership(f, 2.0) == 1.0);
  CHECK(membership(f, 3.0) == 1.0);
  CHECK(membership(f, 3.5) == doctest::Approx(0.5));
  CHECK(membership(f, 4.5) == 0.0);
}

TEST_CASE("gaussian membership follows the bell curve") {
  FuzzyNumber f = Gaussian(0.5, 0.1);
  CHECK(membership(f, 0.5) == 1.0);
  CHECK(membership(f, 0.6) == doctest::Approx(std::exp(-0.5)));
  CHECK(membership(f, 0.3) == doctest::Approx(std::exp(-2.0)));
  CHECK(membership(f, 1.5) == doctest::Approx(std::exp(-50.0)));
  CHECK(membership(f, 1.5) > 0.0);
}

TEST_CASE("alpha cuts of the convex shapes") {
  FuzzyNumber tri = Triangular(1.0, 2.0, 3.0);
  Interval half = alpha_cut(tri, 0.5);
  CHECK(half.lo == doctest::Approx(1.5));
  CHECK(half.hi == doctest::Approx(2.5));
  CHECK(alpha_cut(tri, 1.0) == Interval(2.0, 2.0));
  CHECK(alpha_cut(tri, 0.0) == Interval(1.0, 3.0));

  FuzzyNumber trap = Trapezoidal(0.0, 1.0, 3.0, 4.0);
  CHECK(alpha_cut(trap, 1.0) == Interval(1.0, 3.0));
  CHECK(alpha_cut(trap, 0.0) == Interval(0.0, 4.0));
  Interval tq = alpha_cut(trap, 0.25);
  CHECK(tq.lo == doctest::Approx(0.25));
  CHECK(tq.hi == doctest::Approx(3.75));

  FuzzyNumber gauss = Gaussian(0.5, 0.1);
  CHECK(alpha_cut(gauss, 1.0) == Interval(0.5, 0.5));
  Interval ge = alpha_cut(gauss, std::exp(-0.5));
  CHECK(ge.lo == doctest::Approx(0.4));
  CHECK(ge.hi == doctest::Approx(0.6));
  // The gaussian has unbounded support, so the 0-cut does not exist.
  CHECK_THROWS_AS(alpha_cut(gauss, 0.0), std::invalid_argument);

  CHECK_THROWS_AS(alpha_cut(tri, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(alpha_cut(tri, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(alpha_cut(FuzzyNumber(DiscreteFuzzy::singleton(0.5)), 0.5),
                  MethodError);
}

TEST_CASE("alpha cuts at the top level match the mode exactly") {
  // The two ramp formulas can round one ulp apart at alpha = 1; the cut must
  // collapse to the plateau itself.
  FuzzyNumber trap = Trapezoidal(0.052, 0.234, 0.286, 0.468);
  Interval top = alpha_cut(trap, 1.0);
  CHECK(top.lo == 0.234);
  CHECK(top.hi == 0.286);

  FuzzyNumber gauss = Gaussian(0.007, 0.0028);
  Interval gtop = alpha_cut(gauss, 1.0);
  CHECK(gtop.lo == 0.007);
  CHECK(gtop.hi == 0.007);
}

TEST_CASE("alpha cuts are nested as alpha grows") {
  FuzzyNumber shapes[] = {Triangular(0.1, 0.3, 0.9),
                          Trapezoidal(0.0, 0.2, 0.4, 1.0),
                          Gaussian(0.4, 0.05)};
  for (const FuzzyNumber& f : shapes) {
    Interval prev = alpha_cut(f, 0.05);
    for (int k = 2; k <= 20; ++k) {
      Interval cur = alpha_cut(f, 0.05 * k);
      CHECK(cur.lo >= prev.lo);
      CHECK(cur.hi <= prev.hi);
      prev = cur;
    }
  }
}

TEST_CASE("discrete fuzzy canonicalizes its entries") {
  DiscreteFuzzy d({{0.8, 1.0}, {0.5, 0.7}});
  REQUIRE(d.size() == 2);
  CHECK(d.support()[0].value == 0.5);
  CHECK(d.support()[0].membership == 0.7);
  CHECK(d.support()[1].value == 0.8);
  CHECK(d.support()[1].membership == 1.0);
  CHECK(d.support_extent() == Interval(0.5, 0.8));

  CHECK(d.membership(0.5) == 0.7);
  CHECK(d.membership(0.5 + 1e-10) == 0.7);
  CHECK(d.membership(0.6) == 0.0);

  // Values closer than the merge tolerance collapse to one entry with the
  // larger membership.
  DiscreteFuzzy merged({{0.5, 0.3}, {0.5 + 1e-12, 0.9}, {0.7, 1.0}});
  REQUIRE(merged.size() == 2);
  CHECK(merged.membership(0.5) == 0.9);

  CHECK_THROWS_AS(DiscreteFuzzy({}), ValidationError);
  CHECK_THROWS_AS(DiscreteFuzzy({{0.5, 0.0}}), ValidationError);
  CHECK_THROWS_AS(DiscreteFuzzy({{0.5, 1.5}}), ValidationError);
  CHECK_THROWS_AS(DiscreteFuzzy({{std::nan(""), 1.0}}), ValidationError);
}

TEST_CASE("has_interval_cuts and support_intersects_unit") {
  CHECK(has_interval_cuts(FuzzyNumber(Triangular(0, 1, 2))));
  CHECK(has_interval_cuts(FuzzyNumber(Gaussian(0.5, 0.1))));
  CHECK_FALSE(has_interval_cuts(FuzzyNumber(DiscreteFuzzy::singleton(0.5))));

  CHECK(support_intersects_unit(FuzzyNumber(Triangular(0.5, 1.5, 2.5))));
  CHECK_FALSE(support_intersects_unit(FuzzyNumber(Triangular(1.5, 2.0, 2.5))));
  CHECK(support_intersects_unit(FuzzyNumber(Gaussian(5.0, 1.0))));
  CHECK(support_intersects_unit(FuzzyNumber(DiscreteFuzzy({{-1.0, 0.5}, {0.5, 1.0}}))));
  CHECK_FALSE(support_intersects_unit(FuzzyNumber(DiscreteFuzzy::singleton(1.5))));
}

TEST_CASE("zadeh_binary extends the scalar operators") {
  DiscreteFuzzy a({{0.1, 0.5}, {0.2, 1.0}});
  DiscreteFuzzy b({{0.3, 1.0}, {0.4, 0.25}});

  // 0.1+0.4 and 0.2+0.3 collide on 0.5, so three distinct sums remain.
  DiscreteFuzzy sum = zadeh_binary(BinOp::kAdd, a, b);
  REQUIRE(sum.size() == 3);
  CHECK(sum.membership(0.4) == 0.5);
  CHECK(sum.membership(0.5) == 1.0);
  CHECK(sum.membership(0.6) == 0.25);

  DiscreteFuzzy prod = zadeh_binary(BinOp::kMul, a, b);
  CHECK(prod.membership(0.2 * 0.3) == 1.0);
  CHECK(prod.membership(0.1 * 0.3) == 0.5);
  CHECK(prod.membership(0.2 * 0.4) == 0.25);

  DiscreteFuzzy diff = zadeh_binary(BinOp::kSub, b, a);
  CHECK(diff.membership(0.1) == 1.0);
  CHECK(diff.membership(0.3) == 0.25);
}

TEST_CASE("zadeh_binary keeps the best membership among colliding pairs") {
  // 0.2 + 0.3 and 0.1 + 0.4 both land on 0.5; sup-min keeps the larger
  // of min(1, 0.5) and min(0.5, 0.25).
  DiscreteFuzzy a({{0.1, 0.5}, {0.2, 1.0}});
  DiscreteFuzzy b({{0.3, 0.5}, {0.4, 0.25}});
  DiscreteFuzzy sum = zadeh_binary(BinOp::kAdd, a, b);
  CHECK(sum.membership(0.5) == 0.5);
}

TEST_CASE("discrete complement maps v to 1 - v") {
  DiscreteFuzzy d({{0.1, 0.5}, {0.4, 1.0}});
  DiscreteFuzzy c = complement(d);
  REQUIRE(c.size() == 2);
  CHECK(c.membership(0.9) == 0.5);
  CHECK(c.membership(0.6) == 1.0);
}

TEST_CASE("discrete_equal compares supports and memberships") {
  DiscreteFuzzy a({{0.25, 1.0}, {1.0, 1.0}});
  DiscreteFuzzy b({{0.25 + 1e-12, 1.0}, {1.0, 1.0}});
  DiscreteFuzzy c({{0.25, 1.0}, {0.5, 1.0}, {1.0, 1.0}});
  DiscreteFuzzy d({{0.25, 0.5}, {1.0, 1.0}});

  CHECK(discrete_equal(a, b));
  CHECK_FALSE(discrete_equal(a, c));
  CHECK_FALSE(discrete_equal(a, d));
  CHECK(discrete_equal(a, d, DiscreteFuzzy::kMergeTol, 0.5));
}
