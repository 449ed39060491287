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

#ifndef FUZZFTA_RESULT_IO_HPP
#define FUZZFTA_RESULT_IO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzfta/alpha_series.hpp"
#include "fuzzfta/fuzzy_number.hpp"

namespace fuzzfta {

/// One analysis outcome; exactly one of crisp/series/discrete is set.
struct AnalysisResult {
  std::string model;
  std::string method;  // cutset | bu | bdd | bu-alpha | bu-discrete | exact
  std::string scheme;  // fuzzification family, empty when none was applied
  int n_cuts = 0;      // alpha-grid resolution, 0 for non-series results

  std::optional<double> crisp;
  std::optional<AlphaCutSeries> series;
  std::optional<DiscreteFuzzy> discrete;
};

/// 17 significant digits, enough to reproduce any double exactly; all file
/// outputs use this so reruns are byte-identical.
std::string format_number(double value);

/// Compact human-facing formatting (12 significant digits).
std::string format_brief(double value);

/// {"model":...,"method":...[,"scheme":...][,"n_cuts":...],
///  "value":... | "levels":[{"alpha","lower","upper"}...]
///             | "support":[{"value","membership"}...]}
std::string to_json(const AnalysisResult& result);

/// Headers by payload: "value", "alpha,lower,upper", or "value,membership".
std::string to_csv(const AnalysisResult& result);

/// Plot-ready membership curves, one labelled series per scheme plus a
/// single-point "crisp" marker.
struct FigureSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, membership)
};

struct FigureBundle {
  std::string model;
  std::vector<FigureSeries> series;
};

/// CSV with a "label,x,membership" header; an empty bundle is header-only.
std::string to_csv(const FigureBundle& bundle);
std::string to_json(const FigureBundle& bundle);

}  // namespace fuzzfta

#endif  // FUZZFTA_RESULT_IO_HPP
