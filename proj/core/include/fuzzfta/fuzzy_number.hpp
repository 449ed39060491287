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

#ifndef FUZZFTA_FUZZY_NUMBER_HPP
#define FUZZFTA_FUZZY_NUMBER_HPP

#include <variant>
#include <vector>

#include "fuzzfta/interval.hpp"

namespace fuzzfta {

/// Triangular fuzzy number with support [a, d] and mode b (a <= b <= d).
/// The degenerate case a == b == d is the indicator of a crisp point.
struct Triangular {
  double a;
  double b;
  double d;

  Triangular(double a_, double b_, double d_);
};

/// Trapezoidal fuzzy number with support [a, d] and plateau [b, c]
/// (a <= b <= c <= d). Corner memberships are fixed to
/// membership(a) = membership(d) = 0 and membership(b) = membership(c) = 1.
struct Trapezoidal {
  double a;
  double b;
  double c;
  double d;

  Trapezoidal(double a_, double b_, double c_, double d_);
};

/// Gaussian fuzzy number exp(-(x - mean)^2 / (2 dev^2)); dev must be > 0.
/// Its membership is strictly positive everywhere, so the 0-cut is unbounded
/// and alpha grids must stay within (0, 1].
struct Gaussian {
  double mean;
  double dev;

  Gaussian(double mean_, double dev_);
};

/// Fuzzy element with finite support: a value -> membership map with all
/// memberships in (0, 1]. Values closer than kMergeTol are merged at
/// construction, keeping the highest membership.
class DiscreteFuzzy {
 public:
  struct Entry {
    double value;
    double membership;
  };

  static constexpr double kMergeTol = 1e-9;

  explicit DiscreteFuzzy(std::vector<Entry> entries);

  static DiscreteFuzzy singleton(double value, double membership = 1.0) {
    return DiscreteFuzzy({{value, membership}});
  }

  /// Entries sorted by value, pairwise more than kMergeTol apart.
  const std::vector<Entry>& support() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Stored membership of the entry matching x within kMergeTol, else 0.
  double membership(double x) const;

  Interval support_extent() const {
    return {entries_.front().value, entries_.back().value};
  }

 private:
  std::vector<Entry> entries_;
};

using FuzzyNumber = std::variant<Triangular, Trapezoidal, Gaussian, DiscreteFuzzy>;

/// Membership degree of x in f (total over all shapes).
double membership(const FuzzyNumber& f, double x);

/// Closed alpha-cut {x : membership(f, x) >= alpha} for the convex shapes.
/// alpha must lie in (0, 1]; additionally alpha = 0 is accepted for
/// triangular/trapezoidal shapes (returning the support hull [a, d]).
/// Throws MethodError for DiscreteFuzzy: finite supports have no
/// interval-valued cuts and must go through the exact discrete path.
Interval alpha_cut(const FuzzyNumber& f, double alpha);

/// True for the convex continuous shapes (tri/trap/gauss).
bool has_interval_cuts(const FuzzyNumber& f);

/// True if some value with positive membership lies in [0, 1]; used to
/// validate failure-possibility attributions.
bool support_intersects_unit(const FuzzyNumber& f);

/// Zadeh extension of op over two finite supports: for each output value the
/// membership is the max over producing pairs of min(x[xi], y[yj]). Exact,
/// since the supremum over a finite set is attained.
DiscreteFuzzy zadeh_binary(BinOp op, const DiscreteFuzzy& x, const DiscreteFuzzy& y);

/// Zadeh extension of v -> 1 - v.
DiscreteFuzzy complement(const DiscreteFuzzy& x);

/// True when supports match within tolerance and memberships match exactly.
bool discrete_equal(const DiscreteFuzzy& a, const DiscreteFuzzy& b,
                    double value_tol = DiscreteFuzzy::kMergeTol,
                    double membership_tol = 0.0);

}  // namespace fuzzfta

#endif  // FUZZFTA_FUZZY_NUMBER_HPP
