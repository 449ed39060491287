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

#include "fuzzfta/result_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace fuzzfta {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void check_payload(const AnalysisResult& result) {
  const int set = (result.crisp ? 1 : 0) + (result.series ? 1 : 0) + (result.discrete ? 1 : 0);
  if (set != 1) {
    throw std::logic_error("AnalysisResult must carry exactly one payload");
  }
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_brief(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string to_json(const AnalysisResult& result) {
  check_payload(result);
  std::string out = "{\"model\":\"" + json_escape(result.model) + "\",\"method\":\"" +
                    json_escape(result.method) + "\"";
  if (!result.scheme.empty()) {
    out += ",\"scheme\":\"" + json_escape(result.scheme) + "\"";
  }
  if (result.crisp) {
    out += ",\"value\":" + format_number(*result.crisp);
  } else if (result.series) {
    out += ",\"n_cuts\":" + std::to_string(result.series->n_cuts());
    out += ",\"levels\":[";
    bool first = true;
    for (const AlphaCutSeries::Level& lv : result.series->levels()) {
      if (!first) out += ",";
      first = false;
      out += "{\"alpha\":" + format_number(lv.alpha) + ",\"lower\":" + format_number(lv.cut.lo) +
             ",\"upper\":" + format_number(lv.cut.hi) + "}";
    }
    out += "]";
  } else {
    out += ",\"support\":[";
    bool first = true;
    for (const DiscreteFuzzy::Entry& e : result.discrete->support()) {
      if (!first) out += ",";
      first = false;
      out += "{\"value\":" + format_number(e.value) +
             ",\"membership\":" + format_number(e.membership) + "}";
    }
    out += "]";
  }
  out += "}\n";
  return out;
}

std::string to_csv(const AnalysisResult& result) {
  check_payload(result);
  if (result.crisp) {
    return "value\n" + format_number(*result.crisp) + "\n";
  }
  if (result.series) {
    std::string out = "alpha,lower,upper\n";
    for (const AlphaCutSeries::Level& lv : result.series->levels()) {
      out += format_number(lv.alpha) + "," + format_number(lv.cut.lo) + "," +
             format_number(lv.cut.hi) + "\n";
    }
    return out;
  }
  std::string out = "value,membership\n";
  for (const DiscreteFuzzy::Entry& e : result.discrete->support()) {
    out += format_number(e.value) + "," + format_number(e.membership) + "\n";
  }
  return out;
}

std::string to_csv(const FigureBundle& bundle) {
  std::string out = "label,x,membership\n";
  for (const FigureSeries& s : bundle.series) {
    for (const auto& [x, mu] : s.points) {
      out += s.label + "," + format_number(x) + "," + format_number(mu) + "\n";
    }
  }
  return out;
}

std::string to_json(const FigureBundle& bundle) {
  std::string out = "{\"model\":\"" + json_escape(bundle.model) + "\",\"series\":[";
  bool first_series = true;
  for (const FigureSeries& s : bundle.series) {
    if (!first_series) out += ",";
    first_series = false;
    out += "{\"label\":\"" + json_escape(s.label) + "\",\"points\":[";
    bool first_point = true;
    for (const auto& [x, mu] : s.points) {
      if (!first_point) out += ",";
      first_point = false;
      out += "{\"x\":" + format_number(x) + ",\"membership\":" + format_number(mu) + "}";
    }
    out += "]}";
  }
  out += "]}\n";
  return out;
}

}  // namespace fuzzfta
