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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "doctest.h"
#include "fuzzfta/errors.hpp"
#include "fuzzfta/fuzzify.hpp"
#include "fuzzfta/result_io.hpp"
#include "fuzzfta/runner.hpp"
#include "json.hpp"

using namespace fuzzfta;

namespace {

Model roadtrip() {
  return parse_model(
      "toplevel trip;\n"
      "trip and a backup;\n"
      "backup or b c;\n"
      "a prob=0.8;\n"
      "b prob=0.1;\n"
      "c prob=0.4;\n",
      "roadtrip");
}

}  // namespace

TEST_CASE("scheme names round-trip") {
  CHECK(scheme_kind_from_name("tri") == SchemeKind::kTri);
  CHECK(scheme_kind_from_name("trap") == SchemeKind::kTrap);
  CHECK(scheme_kind_from_name("gauss") == SchemeKind::kGauss);
  CHECK(scheme_kind_from_name("mix") == SchemeKind::kMix);
  CHECK_THROWS_AS(scheme_kind_from_name("bogus"), ValidationError);
  CHECK(std::string(scheme_name(SchemeKind::kTrap)) == "trap");
}

TEST_CASE("fuzzify_value widens a point estimate") {
  FuzzyNumber t = fuzzify_value(0.5, SchemeKind::kTri);
  const auto& tri = std::get<Triangular>(t);
  CHECK(tri.a == doctest::Approx(0.1));
  CHECK(tri.b == 0.5);
  CHECK(tri.d == doctest::Approx(0.9));

  FuzzyNumber tr = fuzzify_value(0.5, SchemeKind::kTrap);
  const auto& trap = std::get<Trapezoidal>(tr);
  CHECK(trap.a == doctest::Approx(0.1));
  CHECK(trap.b == doctest::Approx(0.45));
  CHECK(trap.c == doctest::Approx(0.55));
  CHECK(trap.d == doctest::Approx(0.9));

  FuzzyNumber g = fuzzify_value(0.5, SchemeKind::kGauss);
  const auto& gauss = std::get<Gaussian>(g);
  CHECK(gauss.mean == 0.5);
  CHECK(gauss.dev == doctest::Approx(0.2));

  // p = 0 collapses tri/trap to a crisp point but breaks the gaussian.
  CHECK_NOTHROW(fuzzify_value(0.0, SchemeKind::kTri));
  CHECK_THROWS_AS(fuzzify_value(0.0, SchemeKind::kGauss), ValidationError);
}

TEST_CASE("fuzzify maps a whole attribution") {
  Model m = roadtrip();
  Attribution wide = fuzzify(m.attribution, FuzzificationScheme::uniform(SchemeKind::kTri),
                             m.tree);
  CHECK(wide.size() == 3);
  const auto& tri = std::get<Triangular>(wide.fuzzy("b"));
  CHECK(tri.b == 0.1);

  // Fuzzifying an already fuzzy attribution is refused.
  CHECK_THROWS_AS(fuzzify(wide, FuzzificationScheme::uniform(SchemeKind::kTri), m.tree),
                  ValidationError);
}

TEST_CASE("mix schemes demand exactly one assignment per basic event") {
  Model m = roadtrip();
  FuzzificationScheme scheme = parse_mix_map("a tri\nb trap\nc gauss\n");
  Attribution wide = fuzzify(m.attribution, scheme, m.tree);
  CHECK(std::holds_alternative<Triangular>(wide.fuzzy("a")));
  CHECK(std::holds_alternative<Trapezoidal>(wide.fuzzy("b")));
  CHECK(std::holds_alternative<Gaussian>(wide.fuzzy("c")));

  FuzzificationScheme missing = parse_mix_map("a tri\nb trap\n");
  CHECK_THROWS_AS(fuzzify(m.attribution, missing, m.tree), ValidationError);

  FuzzificationScheme stray = parse_mix_map("a tri\nb trap\nc gauss\nghost tri\n");
  CHECK_THROWS_AS(fuzzify(m.attribution, stray, m.tree), ValidationError);
}

TEST_CASE("mix map parsing reports the offending line") {
  CHECK_NOTHROW(parse_mix_map("# comment\n\na tri\n  b   gauss  # inline\n"));
  auto expect_line = [](const std::string& text, int line) {
    try {
      parse_mix_map(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_line("a tri\nb nonsense\n", 2);
  expect_line("a tri\na trap\n", 2);
  expect_line("a tri extra\n", 1);
  expect_line("a\n", 1);
  expect_line("a mix\n", 1);
  CHECK_THROWS_AS(parse_mix_map(""), ParseError);
  CHECK_THROWS_AS(load_mix_map("/nonexistent/mix.map"), ParseError);
}

TEST_CASE("file numbers reproduce every double exactly") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-12, 3);
  for (int i = 0; i < 200; ++i) {
    double v = mantissa(rng) * std::pow(10.0, exponent(rng));
    std::string s = format_number(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(std::strtod(format_number(0.1 + 0.2).c_str(), nullptr) == 0.1 + 0.2);
}

TEST_CASE("json output carries the payload that was set") {
  AnalysisResult crisp;
  crisp.model = "roadtrip";
  crisp.method = "bu";
  crisp.crisp = 0.368;
  auto j = nlohmann::json::parse(to_json(crisp));
  CHECK(j["model"] == "roadtrip");
  CHECK(j["method"] == "bu");
  CHECK(j["value"] == 0.368);
  CHECK_FALSE(j.contains("scheme"));
  CHECK_FALSE(j.contains("levels"));

  AnalysisResult series;
  series.model = "m";
  series.method = "bu-alpha";
  series.scheme = "tri";
  series.n_cuts = 4;
  series.series = discretize(Triangular(0.1, 0.2, 0.3), 4, true);
  auto js = nlohmann::json::parse(to_json(series));
  CHECK(js["scheme"] == "tri");
  CHECK(js["n_cuts"] == 4);
  REQUIRE(js["levels"].size() == 4);
  CHECK(js["levels"][3]["alpha"] == 1.0);
  CHECK(js["levels"][3]["lower"] == 0.2);
  CHECK(js["levels"][0]["upper"] == doctest::Approx(0.275));

  AnalysisResult discrete;
  discrete.model = "m";
  discrete.method = "exact";
  discrete.discrete = DiscreteFuzzy({{0.23, 0.7}, {0.368, 1.0}});
  auto jd = nlohmann::json::parse(to_json(discrete));
  REQUIRE(jd["support"].size() == 2);
  CHECK(jd["support"][0]["value"] == 0.23);
  CHECK(jd["support"][0]["membership"] == 0.7);
}

TEST_CASE("csv output picks the header from the payload") {
  AnalysisResult crisp;
  crisp.model = "m";
  crisp.method = "bu";
  crisp.crisp = 0.368;
  std::string c = to_csv(crisp);
  CHECK(c.rfind("value\n", 0) == 0);

  AnalysisResult series;
  series.model = "m";
  series.method = "bu-alpha";
  series.n_cuts = 3;
  series.series = discretize(Triangular(0.1, 0.2, 0.3), 3, true);
  std::string s = to_csv(series);
  CHECK(s.rfind("alpha,lower,upper\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 4);

  AnalysisResult discrete;
  discrete.model = "m";
  discrete.method = "exact";
  discrete.discrete = DiscreteFuzzy({{0.5, 1.0}});
  std::string d = to_csv(discrete);
  CHECK(d.rfind("value,membership\n", 0) == 0);
}

TEST_CASE("emitters are deterministic") {
  AnalysisResult series;
  series.model = "m";
  series.method = "bu-alpha";
  series.n_cuts = 50;
  series.series = discretize(Gaussian(0.37, 0.021), 50, true);
  CHECK(to_json(series) == to_json(series));
  CHECK(to_csv(series) == to_csv(series));
}

TEST_CASE("figure bundles serialize with labels") {
  FigureBundle empty;
  empty.model = "m";
  CHECK(to_csv(empty) == "label,x,membership\n");

  Model m = roadtrip();
  RunOptions opt;
  opt.n_cuts = 10;
  FigureBundle bundle = figure_bundle(m, opt);
  std::vector<std::string> labels;
  for (const auto& s : bundle.series) labels.push_back(s.label);
  CHECK(labels == std::vector<std::string>{"u_tri", "u_trap", "u_gauss", "crisp"});

  // The crisp marker is a single point at membership 1.
  const FigureSeries& crisp = bundle.series.back();
  REQUIRE(crisp.points.size() == 1);
  CHECK(crisp.points[0].first == doctest::Approx(0.368).epsilon(1e-12));
  CHECK(crisp.points[0].second == 1.0);

  auto j = nlohmann::json::parse(to_json(bundle));
  CHECK(j["model"] == "roadtrip");
  REQUIRE(j["series"].size() == 4);
  CHECK(j["series"][0]["label"] == "u_tri");
  CHECK(j["series"][0]["points"].size() == 20);

  std::string csv = to_csv(bundle);
  CHECK(csv.rfind("label,x,membership\n", 0) == 0);
  CHECK(csv.find("u_gauss,") != std::string::npos);
}

TEST_CASE("runner routes methods and schemes") {
  Model m = roadtrip();

  RunOptions crisp_opt;
  crisp_opt.method = "bdd";
  AnalysisResult crisp = run_crisp(m, crisp_opt);
  REQUIRE(crisp.crisp.has_value());
  CHECK(*crisp.crisp == doctest::Approx(0.368).epsilon(1e-12));
  crisp_opt.method = "bogus";
  CHECK_THROWS_AS(run_crisp(m, crisp_opt), ValidationError);

  RunOptions tri_opt;
  tri_opt.scheme = "tri";
  tri_opt.n_cuts = 25;
  AnalysisResult fuzzy = run_fuzzy(m, tri_opt);
  REQUIRE(fuzzy.series.has_value());
  CHECK(fuzzy.method == "bu-alpha");
  CHECK(fuzzy.scheme == "tri");
  CHECK(fuzzy.n_cuts == 25);
  CHECK(fuzzy.series->n_cuts() == 25);
  CHECK(fuzzy.series->top().lo == doctest::Approx(0.368).epsilon(1e-9));

  // Without a scheme an all-crisp model folds to a discrete singleton.
  RunOptions plain;
  AnalysisResult singleton = run_fuzzy(m, plain);
  REQUIRE(singleton.discrete.has_value());
  CHECK(singleton.method == "bu-discrete");
  REQUIRE(singleton.discrete->size() == 1);

  RunOptions mix_opt;
  mix_opt.scheme = "mix";
  CHECK_THROWS_AS(run_fuzzy(m, mix_opt), ValidationError);

  RunOptions exact_opt;
  exact_opt.exact = true;
  AnalysisResult exact = run_fuzzy(m, exact_opt);
  CHECK(exact.method == "exact");
  REQUIRE(exact.discrete.has_value());
  CHECK(exact.discrete->support()[0].value == doctest::Approx(0.368).epsilon(1e-12));

  CHECK(summary_line(crisp).find("0.368") != std::string::npos);
  CHECK(summary_line(fuzzy).find("n_cuts=25") != std::string::npos);
  CHECK(summary_line(exact).find("{") != std::string::npos);
}
