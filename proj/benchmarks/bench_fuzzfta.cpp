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

#include <benchmark/benchmark.h>

#include <string>

#include "fuzzfta/alpha_series.hpp"
#include "fuzzfta/bdd.hpp"
#include "fuzzfta/crisp_analysis.hpp"
#include "fuzzfta/ft_parser.hpp"
#include "fuzzfta/fuzzify.hpp"
#include "fuzzfta/fuzzy_analysis.hpp"

namespace {

std::string data_file(const char* name) {
  return std::string(FUZZFTA_DATA_DIR) + "/" + name;
}

const fuzzfta::Model& model_csd() {
  static const fuzzfta::Model m = fuzzfta::load_model(data_file("CSD.ft"));
  return m;
}

const fuzzfta::Model& model_lstf() {
  static const fuzzfta::Model m = fuzzfta::load_model(data_file("LSTF.ft"));
  return m;
}

void BM_CrispBottomUpCsd(benchmark::State& state) {
  const fuzzfta::Model& m = model_csd();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzfta::unreliability_bottom_up(m.tree, m.attribution));
  }
}
BENCHMARK(BM_CrispBottomUpCsd);

void BM_CrispBottomUpLstf(benchmark::State& state) {
  const fuzzfta::Model& m = model_lstf();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzfta::unreliability_bottom_up(m.tree, m.attribution));
  }
}
BENCHMARK(BM_CrispBottomUpLstf);

void BM_BddBuildLstf(benchmark::State& state) {
  const fuzzfta::Model& m = model_lstf();
  for (auto _ : state) {
    fuzzfta::Bdd bdd = fuzzfta::build_bdd(m.tree);
    benchmark::DoNotOptimize(bdd.node_count());
  }
}
BENCHMARK(BM_BddBuildLstf);

void BM_BddEvalLstf(benchmark::State& state) {
  const fuzzfta::Model& m = model_lstf();
  const fuzzfta::Bdd bdd = fuzzfta::build_bdd(m.tree);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzfta::unreliability_bdd(bdd, m.attribution));
  }
}
BENCHMARK(BM_BddEvalLstf);

void BM_AlphaFoldCsd(benchmark::State& state) {
  const fuzzfta::Model& m = model_csd();
  const fuzzfta::Attribution wide = fuzzfta::fuzzify(
      m.attribution, fuzzfta::FuzzificationScheme::uniform(fuzzfta::SchemeKind::kTri),
      m.tree);
  const int n_cuts = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzfta::fuzzy_unreliability_bu_alpha(m.tree, wide, n_cuts));
  }
}
BENCHMARK(BM_AlphaFoldCsd)->Arg(100)->Arg(1000);

void BM_AlphaFoldLstf(benchmark::State& state) {
  const fuzzfta::Model& m = model_lstf();
  const fuzzfta::Attribution wide = fuzzfta::fuzzify(
      m.attribution, fuzzfta::FuzzificationScheme::uniform(fuzzfta::SchemeKind::kGauss),
      m.tree);
  const int n_cuts = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzfta::fuzzy_unreliability_bu_alpha(m.tree, wide, n_cuts));
  }
}
BENCHMARK(BM_AlphaFoldLstf)->Arg(100)->Arg(1000);

void BM_SeriesMul(benchmark::State& state) {
  const int n_cuts = static_cast<int>(state.range(0));
  const fuzzfta::AlphaCutSeries x =
      fuzzfta::discretize(fuzzfta::Triangular(0.1, 0.2, 0.4), n_cuts, true);
  const fuzzfta::AlphaCutSeries y =
      fuzzfta::discretize(fuzzfta::Gaussian(0.5, 0.05), n_cuts, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzfta::series_op(fuzzfta::BinOp::kMul, x, y));
  }
}
BENCHMARK(BM_SeriesMul)->Arg(100)->Arg(1000)->Arg(10000);

void BM_ZadehMul(benchmark::State& state) {
  const int support = static_cast<int>(state.range(0));
  std::vector<fuzzfta::DiscreteFuzzy::Entry> xs, ys;
  for (int i = 0; i < support; ++i) {
    const double t = (i + 1.0) / (support + 1.0);
    xs.push_back({0.3 * t, 1.0 - 0.5 * t});
    ys.push_back({0.6 * t, 0.25 + 0.5 * t});
  }
  const fuzzfta::DiscreteFuzzy x(xs);
  const fuzzfta::DiscreteFuzzy y(ys);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzfta::zadeh_binary(fuzzfta::BinOp::kMul, x, y));
  }
}
BENCHMARK(BM_ZadehMul)->Arg(8)->Arg(32)->Arg(128);

void BM_ExactEnumeration(benchmark::State& state) {
  // Five basic events with three-point supports: 243 combinations over the
  // cut set table of a small tree.
  const fuzzfta::Model m = fuzzfta::parse_model(
      "toplevel top;\n"
      "top or g1 g2;\n"
      "g1 and a b;\n"
      "g2 and c g3;\n"
      "g3 or d e;\n"
      "a discrete=0.1:0.5,0.2:1,0.3:0.5;\n"
      "b discrete=0.2:0.25,0.4:1,0.6:0.25;\n"
      "c discrete=0.1:1,0.5:0.75,0.9:0.5;\n"
      "d discrete=0.3:0.5,0.5:1,0.7:0.5;\n"
      "e discrete=0.2:1,0.4:0.5,0.8:0.25;\n",
      "bench");
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzzfta::fuzzy_unreliability_exact(m.tree, m.attribution));
  }
}
BENCHMARK(BM_ExactEnumeration);

}  // namespace

BENCHMARK_MAIN();
