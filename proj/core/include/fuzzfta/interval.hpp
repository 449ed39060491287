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

#ifndef FUZZFTA_INTERVAL_HPP
#define FUZZFTA_INTERVAL_HPP

#include <algorithm>
#include <stdexcept>

namespace fuzzfta {

enum class BinOp { kAdd, kSub, kMul };

/// Closed interval [lo, hi] on the real line.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double point) : lo(point), hi(point) {}  // NOLINT(runtime/explicit)
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi)) {
      throw std::invalid_argument("interval requires lo <= hi");
    }
  }

  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

inline Interval operator+(const Interval& x, const Interval& y) {
  return {x.lo + y.lo, x.hi + y.hi};
}

inline Interval operator-(const Interval& x, const Interval& y) {
  return {x.lo - y.hi, x.hi - y.lo};
}

inline Interval operator*(const Interval& x, const Interval& y) {
  const double ll = x.lo * y.lo;
  const double lh = x.lo * y.hi;
  const double hl = x.hi * y.lo;
  const double hh = x.hi * y.hi;
  return {std::min(std::min(ll, lh), std::min(hl, hh)),
          std::max(std::max(ll, lh), std::max(hl, hh))};
}

inline Interval interval_op(BinOp op, const Interval& x, const Interval& y) {
  switch (op) {
    case BinOp::kAdd:
      return x + y;
    case BinOp::kSub:
      return x - y;
    case BinOp::kMul:
      return x * y;
  }
  throw std::invalid_argument("unknown interval operation");
}

/// Clamps both endpoints into [0, 1]. Applied when an interval carries
/// probability semantics; never part of the generic arithmetic above.
inline Interval clamp_unit(const Interval& x) {
  return {std::clamp(x.lo, 0.0, 1.0), std::clamp(x.hi, 0.0, 1.0)};
}

/// [lo, hi] -> [1 - hi, 1 - lo]; requires probability semantics.
inline Interval complement_unit(const Interval& x) {
  return {1.0 - x.hi, 1.0 - x.lo};
}

}  // namespace fuzzfta

#endif  // FUZZFTA_INTERVAL_HPP
