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

#include "fuzzfta/alpha_series.hpp"

#include <stdexcept>
#include <string>

#include "fuzzfta/errors.hpp"

namespace fuzzfta {

AlphaCutSeries::AlphaCutSeries(int n_cuts, std::vector<Interval> cuts) : n_cuts_(n_cuts) {
  if (n_cuts < 1) {
    throw std::invalid_argument("AlphaCutSeries: n_cuts must be >= 1, got " +
                                std::to_string(n_cuts));
  }
  if (cuts.size() != static_cast<std::size_t>(n_cuts)) {
    throw std::invalid_argument("AlphaCutSeries: expected " + std::to_string(n_cuts) +
                                " cuts, got " + std::to_string(cuts.size()));
  }
  levels_.reserve(cuts.size());
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const double alpha = static_cast<double>(k + 1) / static_cast<double>(n_cuts);
    levels_.push_back(Level{alpha, cuts[k]});
  }
}

AlphaCutSeries AlphaCutSeries::constant(int n_cuts, const Interval& value) {
  return AlphaCutSeries(n_cuts, std::vector<Interval>(static_cast<std::size_t>(n_cuts), value));
}

bool AlphaCutSeries::is_nested() const {
  for (std::size_t k = 1; k < levels_.size(); ++k) {
    if (!levels_[k - 1].cut.contains(levels_[k].cut)) return false;
  }
  return true;
}

bool AlphaCutSeries::within_unit() const {
  // Nested or not, every row must individually sit inside [0, 1].
  for (const Level& lv : levels_) {
    if (lv.cut.lo < 0.0 || lv.cut.hi > 1.0) return false;
  }
  return true;
}

AlphaCutSeries discretize(const FuzzyNumber& f, int n_cuts, bool clamp_to_unit) {
  if (std::holds_alternative<DiscreteFuzzy>(f)) {
    throw MethodError(
        "discretize: discrete fuzzy numbers have no interval cuts; "
        "use the exact discrete path");
  }
  if (n_cuts < 1) {
    throw std::invalid_argument("discretize: n_cuts must be >= 1, got " +
                                std::to_string(n_cuts));
  }
  std::vector<Interval> cuts;
  cuts.reserve(static_cast<std::size_t>(n_cuts));
  for (int k = 1; k <= n_cuts; ++k) {
    const double alpha = static_cast<double>(k) / static_cast<double>(n_cuts);
    Interval cut = alpha_cut(f, alpha);
    if (clamp_to_unit) cut = clamp_unit(cut);
    cuts.push_back(cut);
  }
  return AlphaCutSeries(n_cuts, std::move(cuts));
}

AlphaCutSeries series_op(BinOp op, const AlphaCutSeries& x, const AlphaCutSeries& y) {
  if (x.n_cuts() != y.n_cuts()) {
    throw std::invalid_argument("series_op: grid mismatch, " + std::to_string(x.n_cuts()) +
                                " vs " + std::to_string(y.n_cuts()) + " cuts");
  }
  std::vector<Interval> cuts;
  cuts.reserve(x.levels().size());
  for (std::size_t k = 0; k < x.levels().size(); ++k) {
    cuts.push_back(interval_op(op, x.levels()[k].cut, y.levels()[k].cut));
  }
  return AlphaCutSeries(x.n_cuts(), std::move(cuts));
}

AlphaCutSeries complement(const AlphaCutSeries& x) {
  std::vector<Interval> cuts;
  cuts.reserve(x.levels().size());
  for (const AlphaCutSeries::Level& lv : x.levels()) {
    cuts.push_back(complement_unit(lv.cut));
  }
  return AlphaCutSeries(x.n_cuts(), std::move(cuts));
}

std::vector<std::pair<double, double>> to_membership_samples(const AlphaCutSeries& x) {
  std::vector<std::pair<double, double>> samples;
  samples.reserve(2 * x.levels().size());
  for (const AlphaCutSeries::Level& lv : x.levels()) {
    samples.emplace_back(lv.cut.lo, lv.alpha);
  }
  for (auto it = x.levels().rbegin(); it != x.levels().rend(); ++it) {
    samples.emplace_back(it->cut.hi, it->alpha);
  }
  return samples;
}

double sampled_membership(const AlphaCutSeries& x, double value) {
  // Cuts are nested, so scan from the top; the first containing cut wins.
  for (auto it = x.levels().rbegin(); it != x.levels().rend(); ++it) {
    if (it->cut.contains(value)) return it->alpha;
  }
  return 0.0;
}

}  // namespace fuzzfta
