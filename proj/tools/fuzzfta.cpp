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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fuzzfta/crisp_analysis.hpp"
#include "fuzzfta/errors.hpp"
#include "fuzzfta/ft_parser.hpp"
#include "fuzzfta/fuzzy_analysis.hpp"
#include "fuzzfta/result_io.hpp"
#include "fuzzfta/runner.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) {
      if (start < csv.size()) out.push_back(csv.substr(start));
      break;
    }
    if (comma > start) out.push_back(csv.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

std::size_t node_cap_default() {
  const char* env = std::getenv("FUZZFTA_NODE_CAP");
  if (env == nullptr || *env == '\0') return fuzzfta::kDefaultBddNodeCap;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || cap == 0) {
    throw fuzzfta::ValidationError(std::string("FUZZFTA_NODE_CAP='") + env +
                                   "' is not a positive integer");
  }
  return static_cast<std::size_t>(cap);
}

std::string discrete_line(const fuzzfta::DiscreteFuzzy& d) {
  std::string out = "{";
  bool first = true;
  for (const fuzzfta::DiscreteFuzzy::Entry& e : d.support()) {
    if (!first) out += ", ";
    first = false;
    out += fuzzfta::format_brief(e.value) + " / " + fuzzfta::format_brief(e.membership);
  }
  return out + "}";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantitative fault tree analysis with fuzzy failure possibilities"};
  app.require_subcommand(1);

  std::string validate_file;
  CLI::App* validate = app.add_subcommand("validate", "parse and validate a .ft model");
  validate->add_option("file", validate_file, "model file (.ft)")->required();

  std::string cutsets_file;
  std::size_t cutsets_bound = fuzzfta::kDefaultCutSetBound;
  CLI::App* cutsets = app.add_subcommand("cutsets", "list the satisfying outcomes");
  cutsets->add_option("file", cutsets_file, "model file (.ft)")->required();
  cutsets->add_option("--bound", cutsets_bound,
                      "max basic events for exhaustive enumeration");

  std::string crisp_file, crisp_order;
  fuzzfta::RunOptions crisp_opt;
  CLI::App* crisp = app.add_subcommand("crisp", "crisp top event probability");
  crisp->add_option("file", crisp_file, "model file (.ft)")->required();
  crisp->add_option("--method", crisp_opt.method, "cutset | bu | bdd")
      ->default_val("bu");
  crisp->add_option("--order", crisp_order, "bdd variable order, comma separated");
  crisp->add_option("--node-cap", crisp_opt.node_cap, "bdd node table cap");
  crisp->add_option("--bound", crisp_opt.cutset_bound, "cutset enumeration bound");
  crisp->add_option("--json", crisp_opt.json_out, "write the result as JSON");
  crisp->add_option("--csv", crisp_opt.csv_out, "write the result as CSV");

  std::string fuzzy_file;
  fuzzfta::RunOptions fuzzy_opt;
  CLI::App* fuzzy = app.add_subcommand("fuzzy", "fuzzy top event possibility");
  fuzzy->add_option("file", fuzzy_file, "model file (.ft)")->required();
  fuzzy->add_option("--scheme", fuzzy_opt.scheme,
                    "widen crisp probabilities: tri | trap | gauss | mix");
  fuzzy->add_option("--mix-map", fuzzy_opt.mix_map_path, "per-event scheme file for mix");
  fuzzy->add_option("--ncuts", fuzzy_opt.n_cuts, "alpha grid resolution")
      ->default_val(fuzzfta::kDefaultNCuts);
  fuzzy->add_flag("--exact", fuzzy_opt.exact, "exact enumeration over finite supports");
  fuzzy->add_option("--bound", fuzzy_opt.cutset_bound, "cutset enumeration bound");
  fuzzy->add_option("--support-cap", fuzzy_opt.support_product_cap,
                    "cap on enumerated support combinations");
  fuzzy->add_option("--json", fuzzy_opt.json_out, "write the result as JSON");
  fuzzy->add_option("--csv", fuzzy_opt.csv_out, "write the result as CSV");

  std::string cx_file, cx_order;
  CLI::App* cx = app.add_subcommand(
      "counterexample", "compare per-node diagram evaluation against the exact result");
  cx->add_option("file", cx_file, "model file (.ft); omit for the built-in instance");
  cx->add_option("--order", cx_order, "bdd variable order, comma separated");

  std::string export_file, export_format = "csv", export_out, export_mix;
  int export_ncuts = fuzzfta::kDefaultNCuts;
  CLI::App* exp = app.add_subcommand("export", "membership curves for plotting");
  exp->add_option("file", export_file, "model file (.ft)")->required();
  exp->add_option("--format", export_format, "csv | json")->default_val("csv");
  exp->add_option("--out", export_out, "output path")->required();
  exp->add_option("--ncuts", export_ncuts, "alpha grid resolution");
  exp->add_option("--mix-map", export_mix, "include a u_mix series from this map");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      const fuzzfta::Model model = fuzzfta::load_model(validate_file);
      std::cout << "ok: " << model.name << ": " << model.tree.nodes().size() << " nodes, "
                << model.tree.basic_event_count() << " basic events, "
                << (model.tree.is_tree_structured() ? "tree" : "dag") << "\n";
    } else if (*cutsets) {
      const fuzzfta::Model model = fuzzfta::load_model(cutsets_file);
      for (const fuzzfta::SafetyEvent& ev : fuzzfta::cut_sets(model.tree, cutsets_bound)) {
        std::cout << ev.to_string() << "\n";
      }
    } else if (*crisp) {
      if (crisp->count("--node-cap") == 0) crisp_opt.node_cap = node_cap_default();
      crisp_opt.order = split_csv(crisp_order);
      const fuzzfta::Model model = fuzzfta::load_model(crisp_file);
      const fuzzfta::AnalysisResult result = fuzzfta::run_crisp(model, crisp_opt);
      fuzzfta::write_outputs(result, crisp_opt);
      std::cout << fuzzfta::format_brief(*result.crisp) << "\n";
    } else if (*fuzzy) {
      const fuzzfta::Model model = fuzzfta::load_model(fuzzy_file);
      const fuzzfta::AnalysisResult result = fuzzfta::run_fuzzy(model, fuzzy_opt);
      fuzzfta::write_outputs(result, fuzzy_opt);
      std::cout << fuzzfta::summary_line(result) << "\n";
    } else if (*cx) {
      fuzzfta::Model model;
      std::vector<std::string> order;
      if (cx_file.empty()) {
        model = fuzzfta::counterexample_model();
        order = fuzzfta::counterexample_order();
      } else {
        model = fuzzfta::load_model(cx_file);
      }
      if (!cx_order.empty()) order = split_csv(cx_order);
      const fuzzfta::CounterexampleReport report =
          fuzzfta::fuzzy_bdd_counterexample(model.tree, model.attribution, order);
      std::cout << "model: " << model.name << "\n";
      std::cout << "per-node diagram: " << discrete_line(report.naive_bdd) << "\n";
      std::cout << "exact:            " << discrete_line(report.exact) << "\n";
      std::cout << "results differ: " << (report.differ ? "yes" : "no") << "\n";
    } else if (*exp) {
      if (export_format != "csv" && export_format != "json") {
        throw fuzzfta::ValidationError("unknown export format '" + export_format +
                                       "' (expected csv or json)");
      }
      fuzzfta::RunOptions opt;
      opt.n_cuts = export_ncuts;
      opt.mix_map_path = export_mix;
      const fuzzfta::Model model = fuzzfta::load_model(export_file);
      const fuzzfta::FigureBundle bundle = fuzzfta::figure_bundle(model, opt);
      write_file(export_out,
                 export_format == "csv" ? fuzzfta::to_csv(bundle) : fuzzfta::to_json(bundle));
      std::cout << "wrote " << export_out << "\n";
    }
  } catch (const fuzzfta::Error& e) {
    std::cerr << "error (" << fuzzfta::category_name(e.category()) << "): " << e.what() << "\n";
    return fuzzfta::category_exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
