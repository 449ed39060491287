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

#include "fuzzfta/runner.hpp"

#include <fstream>

#include "fuzzfta/crisp_analysis.hpp"
#include "fuzzfta/errors.hpp"
#include "fuzzfta/fuzzify.hpp"

namespace fuzzfta {

namespace {

Attribution apply_scheme(const Model& model, const RunOptions& opt, std::string* scheme_used) {
  if (opt.scheme.empty()) {
    scheme_used->clear();
    return model.attribution;
  }
  FuzzificationScheme scheme;
  const SchemeKind kind = scheme_kind_from_name(opt.scheme);
  if (kind == SchemeKind::kMix) {
    if (opt.mix_map_path.empty()) {
      throw ValidationError("the mix scheme needs a mix map file");
    }
    scheme = load_mix_map(opt.mix_map_path);
  } else {
    scheme = FuzzificationScheme::uniform(kind);
  }
  *scheme_used = opt.scheme;
  return fuzzify(model.attribution, scheme, model.tree);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  out << text;
}

}  // namespace

AnalysisResult run_crisp(const Model& model, const RunOptions& opt) {
  AnalysisResult result;
  result.model = model.name;
  result.method = opt.method;
  if (opt.method == "cutset") {
    result.crisp = unreliability_cutset(model.tree, model.attribution, opt.cutset_bound);
  } else if (opt.method == "bu") {
    result.crisp = unreliability_bottom_up(model.tree, model.attribution);
  } else if (opt.method == "bdd") {
    const Bdd bdd = build_bdd(model.tree, opt.order, opt.node_cap);
    result.crisp = unreliability_bdd(bdd, model.attribution);
  } else {
    throw ValidationError("unknown crisp method '" + opt.method +
                          "' (expected cutset, bu, or bdd)");
  }
  return result;
}

AnalysisResult run_fuzzy(const Model& model, const RunOptions& opt) {
  AnalysisResult result;
  result.model = model.name;
  const Attribution attribution = apply_scheme(model, opt, &result.scheme);
  if (opt.exact) {
    result.method = "exact";
    result.discrete = fuzzy_unreliability_exact(model.tree, attribution, opt.cutset_bound,
                                                opt.support_product_cap);
  } else if (attribution.any_discrete() || attribution.all_crisp()) {
    result.method = "bu-discrete";
    result.discrete = fuzzy_unreliability_bu_discrete(model.tree, attribution);
  } else {
    result.method = "bu-alpha";
    result.n_cuts = opt.n_cuts;
    result.series = fuzzy_unreliability_bu_alpha(model.tree, attribution, opt.n_cuts);
  }
  return result;
}

void write_outputs(const AnalysisResult& result, const RunOptions& opt) {
  if (!opt.json_out.empty()) write_file(opt.json_out, to_json(result));
  if (!opt.csv_out.empty()) write_file(opt.csv_out, to_csv(result));
}

std::string summary_line(const AnalysisResult& result) {
  std::string line = result.model + " " + result.method;
  if (!result.scheme.empty()) line += " scheme=" + result.scheme;
  if (result.crisp) {
    return line + " unreliability = " + format_brief(*result.crisp);
  }
  if (result.series) {
    const AlphaCutSeries& s = *result.series;
    line += " n_cuts=" + std::to_string(s.n_cuts());
    line += ": core [" + format_brief(s.top().lo) + ", " + format_brief(s.top().hi) + "]";
    line += ", widest cut [" + format_brief(s.bottom().lo) + ", " + format_brief(s.bottom().hi) +
            "] at alpha=" + format_brief(s.levels().front().alpha);
    return line;
  }
  line += ": {";
  bool first = true;
  for (const DiscreteFuzzy::Entry& e : result.discrete->support()) {
    if (!first) line += ", ";
    first = false;
    line += format_brief(e.value) + " / " + format_brief(e.membership);
  }
  return line + "}";
}

FigureBundle figure_bundle(const Model& model, const RunOptions& opt) {
  FigureBundle bundle;
  bundle.model = model.name;

  auto add_scheme = [&](const std::string& label, const FuzzificationScheme& scheme) {
    const Attribution widened = fuzzify(model.attribution, scheme, model.tree);
    const AlphaCutSeries series =
        fuzzy_unreliability_bu_alpha(model.tree, widened, opt.n_cuts);
    bundle.series.push_back({label, to_membership_samples(series)});
  };
  add_scheme("u_tri", FuzzificationScheme::uniform(SchemeKind::kTri));
  add_scheme("u_trap", FuzzificationScheme::uniform(SchemeKind::kTrap));
  add_scheme("u_gauss", FuzzificationScheme::uniform(SchemeKind::kGauss));
  if (!opt.mix_map_path.empty()) {
    add_scheme("u_mix", load_mix_map(opt.mix_map_path));
  }

  const double crisp = unreliability_bottom_up(model.tree, model.attribution);
  bundle.series.push_back({"crisp", {{crisp, 1.0}}});
  return bundle;
}

}  // namespace fuzzfta
