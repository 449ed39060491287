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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fuzzfta/errors.hpp"

namespace fuzzfta {

namespace {

// Shared piecewise-linear membership; a triangular number is the b == c case.
double trapezoid_membership(double a, double b, double c, double d, double x) {
  if (x < a || x > d) return 0.0;
  if (x >= b && x <= c) return 1.0;
  if (x < b) return (x - a) / (b - a);  // a < b here, since a <= x < b
  return (d - x) / (d - c);             // c < x <= d, so c < d
}

Interval trapezoid_cut(double a, double b, double c, double d, double alpha) {
  // The two ramps round independently, so at alpha = 1 they can land one
  // ulp apart (even crossed); return the plateau itself instead.
  if (alpha == 1.0) return {b, c};
  return {(b - a) * alpha + a, d - (d - c) * alpha};
}

void check_alpha_range(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
}

}  // namespace

Triangular::Triangular(double a_, double b_, double d_) : a(a_), b(b_), d(d_) {
  if (!(a <= b && b <= d) || !std::isfinite(a) || !std::isfinite(d)) {
    throw ValidationError("triangular fuzzy number requires finite a <= b <= d");
  }
}

Trapezoidal::Trapezoidal(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
  if (!(a <= b && b <= c && c <= d) || !std::isfinite(a) || !std::isfinite(d)) {
    throw ValidationError("trapezoidal fuzzy number requires finite a <= b <= c <= d");
  }
}

Gaussian::Gaussian(double mean_, double dev_) : mean(mean_), dev(dev_) {
  if (!(dev > 0.0) || !std::isfinite(mean) || !std::isfinite(dev)) {
    throw ValidationError(
        "gaussian fuzzy number requires a finite mean and dev > 0; model a "
        "crisp value as a degenerate triangular or a singleton discrete number");
  }
}

DiscreteFuzzy::DiscreteFuzzy(std::vector<Entry> entries) {
  if (entries.empty()) {
    throw ValidationError("discrete fuzzy number needs a nonempty support");
  }
  for (const Entry& e : entries) {
    if (!(e.membership > 0.0 && e.membership <= 1.0)) {
      throw ValidationError("discrete memberships must lie in (0, 1]");
    }
    if (!std::isfinite(e.value)) {
      throw ValidationError("discrete support values must be finite");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return x.value < y.value || (x.value == y.value && x.membership < y.membership);
  });
  // Chain-merge values closer than kMergeTol; the representative is the
  // member with the highest membership (ties resolved to the smaller value).
  entries_.reserve(entries.size());
  std::size_t i = 0;
  while (i < entries.size()) {
    std::size_t j = i;
    Entry best = entries[i];
    while (j + 1 < entries.size() &&
           entries[j + 1].value - entries[j].value <= kMergeTol) {
      ++j;
      if (entries[j].membership > best.membership) best = entries[j];
    }
    entries_.push_back(best);
    i = j + 1;
  }
}

double DiscreteFuzzy::membership(double x) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), x,
      [](const Entry& e, double v) { return e.value < v; });
  if (it != entries_.end() && std::abs(it->value - x) <= kMergeTol) {
    return it->membership;
  }
  if (it != entries_.begin() && std::abs(std::prev(it)->value - x) <= kMergeTol) {
    return std::prev(it)->membership;
  }
  return 0.0;
}

double membership(const FuzzyNumber& f, double x) {
  return std::visit(
      [x](const auto& shape) -> double {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Triangular>) {
          if (shape.a == shape.d) return x == shape.b ? 1.0 : 0.0;
          return trapezoid_membership(shape.a, shape.b, shape.b, shape.d, x);
        } else if constexpr (std::is_same_v<T, Trapezoidal>) {
          if (shape.a == shape.d) return x == shape.b ? 1.0 : 0.0;
          return trapezoid_membership(shape.a, shape.b, shape.c, shape.d, x);
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          const double z = (x - shape.mean) / shape.dev;
          return std::exp(-0.5 * z * z);
        } else {
          return shape.membership(x);
        }
      },
      f);
}

Interval alpha_cut(const FuzzyNumber& f, double alpha) {
  return std::visit(
      [alpha](const auto& shape) -> Interval {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Triangular>) {
          check_alpha_range(alpha);
          return trapezoid_cut(shape.a, shape.b, shape.b, shape.d, alpha);
        } else if constexpr (std::is_same_v<T, Trapezoidal>) {
          check_alpha_range(alpha);
          return trapezoid_cut(shape.a, shape.b, shape.c, shape.d, alpha);
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          check_alpha_range(alpha);
          if (alpha == 0.0) {
            throw std::invalid_argument(
                "alpha = 0 rejected for gaussian fuzzy numbers: the 0-cut is "
                "unbounded");
          }
          const double radius = shape.dev * std::sqrt(-2.0 * std::log(alpha));
          return {shape.mean - radius, shape.mean + radius};
        } else {
          throw MethodError(
              "alpha-cuts of a discrete fuzzy number are not intervals; use "
              "the exact discrete path");
        }
      },
      f);
}

bool has_interval_cuts(const FuzzyNumber& f) {
  return !std::holds_alternative<DiscreteFuzzy>(f);
}

bool support_intersects_unit(const FuzzyNumber& f) {
  return std::visit(
      [](const auto& shape) -> bool {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Triangular>) {
          return shape.a <= 1.0 && shape.d >= 0.0;
        } else if constexpr (std::is_same_v<T, Trapezoidal>) {
          return shape.a <= 1.0 && shape.d >= 0.0;
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          return true;  // strictly positive everywhere
        } else {
          for (const auto& e : shape.support()) {
            if (e.value >= 0.0 && e.value <= 1.0) return true;
          }
          return false;
        }
      },
      f);
}

DiscreteFuzzy zadeh_binary(BinOp op, const DiscreteFuzzy& x, const DiscreteFuzzy& y) {
  std::vector<DiscreteFuzzy::Entry> out;
  out.reserve(x.size() * y.size());
  for (const auto& ex : x.support()) {
    for (const auto& ey : y.support()) {
      double v = 0.0;
      switch (op) {
        case BinOp::kAdd:
          v = ex.value + ey.value;
          break;
        case BinOp::kSub:
          v = ex.value - ey.value;
          break;
        case BinOp::kMul:
          v = ex.value * ey.value;
          break;
      }
      out.push_back({v, std::min(ex.membership, ey.membership)});
    }
  }
  return DiscreteFuzzy(std::move(out));
}

DiscreteFuzzy complement(const DiscreteFuzzy& x) {
  std::vector<DiscreteFuzzy::Entry> out;
  out.reserve(x.size());
  for (const auto& e : x.support()) {
    out.push_back({1.0 - e.value, e.membership});
  }
  return DiscreteFuzzy(std::move(out));
}

bool discrete_equal(const DiscreteFuzzy& a, const DiscreteFuzzy& b,
                    double value_tol, double membership_tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.support()[i].value - b.support()[i].value) > value_tol) {
      return false;
    }
    if (std::abs(a.support()[i].membership - b.support()[i].membership) >
        membership_tol) {
      return false;
    }
  }
  return true;
}

}  // namespace fuzzfta
