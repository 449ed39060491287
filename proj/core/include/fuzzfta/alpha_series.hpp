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

#ifndef FUZZFTA_ALPHA_SERIES_HPP
#define FUZZFTA_ALPHA_SERIES_HPP

#include <utility>
#include <vector>

#include "fuzzfta/fuzzy_number.hpp"
#include "fuzzfta/interval.hpp"

namespace fuzzfta {

/// Horizontally discretized fuzzy number: one closed interval per alpha level
/// on the uniform grid {1/n, 2/n, ..., 1}. All series taking part in one
/// computation must share the same grid; there is no silent resampling.
class AlphaCutSeries {
 public:
  struct Level {
    double alpha;
    Interval cut;
  };

  /// cuts[k] is the cut at alpha = (k+1)/n_cuts; cuts.size() must equal n_cuts.
  AlphaCutSeries(int n_cuts, std::vector<Interval> cuts);

  /// Series whose every level is the same interval (crisp or seed value).
  static AlphaCutSeries constant(int n_cuts, const Interval& value);

  int n_cuts() const { return n_cuts_; }
  const std::vector<Level>& levels() const { return levels_; }
  const Interval& cut(int k) const { return levels_[static_cast<std::size_t>(k)].cut; }

  /// The alpha = 1 row (modal interval).
  const Interval& top() const { return levels_.back().cut; }
  /// The alpha = 1/n row (widest stored cut, the support extent on the grid).
  const Interval& bottom() const { return levels_.front().cut; }

  bool is_nested() const;
  bool within_unit() const;

 private:
  int n_cuts_;
  std::vector<Level> levels_;
};

/// Evaluates the closed-form cuts of a convex fuzzy number on the grid.
/// clamp_to_unit applies the probability-ingestion clamp to every row.
/// Discrete inputs are rejected (MethodError): they go through the exact path.
AlphaCutSeries discretize(const FuzzyNumber& f, int n_cuts, bool clamp_to_unit);

/// Row-wise interval arithmetic; both operands must share the grid.
AlphaCutSeries series_op(BinOp op, const AlphaCutSeries& x, const AlphaCutSeries& y);

/// Row-wise [lo, hi] -> [1 - hi, 1 - lo]; requires probability semantics.
AlphaCutSeries complement(const AlphaCutSeries& x);

/// Membership polyline: (lower_k, alpha_k) in increasing alpha followed by
/// (upper_k, alpha_k) in decreasing alpha, suitable for direct plotting.
std::vector<std::pair<double, double>> to_membership_samples(const AlphaCutSeries& x);

/// Grid-resolution membership reconstruction: the highest alpha whose cut
/// contains x, or 0 when no stored cut does.
double sampled_membership(const AlphaCutSeries& x, double value);

}  // namespace fuzzfta

#endif  // FUZZFTA_ALPHA_SERIES_HPP
