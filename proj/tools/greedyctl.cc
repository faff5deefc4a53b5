// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// greedyctl: greedy traces, class audits, ratio tables, the built-in check
// matrix and instance generation from the command line.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "greedy/errors.h"
#include "greedy/experiments.h"
#include "greedy/instance.h"
#include "greedy/rational.h"

namespace {

using greedy::Rational;
using nlohmann::json;

struct InstanceFlags {
  std::string family;
  std::string instance_path;
  std::string params;
};

void AddInstanceFlags(CLI::App* cmd, InstanceFlags* flags) {
  cmd->add_option("--family", flags->family, "Family tag (with --params)");
  cmd->add_option("--instance", flags->instance_path, "Instance descriptor JSON file");
  cmd->add_option("--params", flags->params, "Family parameters: key=value,...");
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw greedy::ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

greedy::Instance Load(const InstanceFlags& flags) {
  if (!flags.instance_path.empty() == !flags.family.empty()) {
    throw greedy::ParseError("give exactly one of --instance and --family");
  }
  if (!flags.instance_path.empty()) {
    try {
      return greedy::LoadInstance(greedy::ParseDescriptor(ReadFile(flags.instance_path)));
    } catch (const greedy::ParseError& e) {
      throw greedy::ParseError(flags.instance_path + ": " + e.what());
    }
  }
  return greedy::LoadInstance(greedy::DescriptorFromParams(flags.family, flags.params));
}

std::vector<Rational> ParseRationalList(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(greedy::ParseRational(item));
  }
  return out;
}

// "2,4,8" or ranges "2-6" (inclusive), mixed freely.
std::vector<int> ParseKList(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const size_t dash = item.find('-', 1);
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int lo = std::stoi(item.substr(0, dash));
        const int hi = std::stoi(item.substr(dash + 1));
        for (int k = lo; k <= hi; ++k) out.push_back(k);
      }
    } catch (const std::logic_error&) {
      throw greedy::ParseError("bad k list entry '" + item + "'");
    }
  }
  return out;
}

void Emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw greedy::ParseError("cannot write '" + path + "'");
  out << text;
}

greedy::Scope ParseScope(const std::string& s) {
  if (s == "weak") return greedy::Scope::kWeak;
  if (s == "strong") return greedy::Scope::kStrong;
  throw greedy::ParseError("scope must be weak or strong, not '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy approximability toolkit"};
  app.require_subcommand(1);

  InstanceFlags inst_flags;
  std::string out_path;
  std::string tie = "instance";
  int k = 0;
  bool decimals = false;

  CLI::App* trace = app.add_subcommand("trace", "Greedy trace as CSV");
  AddInstanceFlags(trace, &inst_flags);
  trace->add_option("--k", k, "Cardinality budget")->required();
  trace->add_option("--tie", tie, "lowest, highest, priority:<list> or instance");
  trace->add_flag("--decimals", decimals, "Append decimal columns");
  trace->add_option("--out", out_path, "Output file (default stdout)");

  std::string scope = "weak";
  std::string alphas;
  std::string gammas;
  CLI::App* audit = app.add_subcommand("audit", "Class audits as JSON");
  AddInstanceFlags(audit, &inst_flags);
  audit->add_option("--scope", scope, "weak (greedy chain) or strong (all X)");
  audit->add_option("--tie", tie, "lowest, highest, priority:<list> or instance");
  audit->add_option("--alphas", alphas, "Comma-separated alphas");
  audit->add_option("--gammas", gammas, "Comma-separated gammas");
  audit->add_option("--out", out_path, "Output file (default stdout)");

  std::string family = "critical";
  std::string ks;
  std::string table_gammas = "1";
  std::string table_alphas = "1";
  std::string table_tie = "lowest";
  double tolerance = 1e-2;
  int max_n = 0;
  std::string gnuplot;
  CLI::App* table = app.add_subcommand("ratio-table", "Measured vs closed-form ratios as CSV");
  table->add_option("--family", family, "critical or lower_bound_flow");
  table->add_option("--k", ks, "k values, e.g. 2,4,8 or 2-6");
  table->add_option("--gammas", table_gammas, "Comma-separated gammas");
  table->add_option("--alphas", table_alphas, "Comma-separated alphas");
  table->add_option("--tie", table_tie, "lowest, highest or priority:<list>");
  table->add_option("--tolerance", tolerance, "Limit-proximity tolerance");
  table->add_option("--max-n", max_n, "Largest ground set measured by brute force");
  table->add_option("--gnuplot", gnuplot, "Also write a gnuplot script here");
  table->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<std::string> only;
  bool list = false;
  CLI::App* verify = app.add_subcommand("verify-paper", "Run the built-in check matrix");
  verify->add_option("--only", only, "Run only these check ids (may be empty)")
      ->expected(0, -1);
  verify->add_flag("--list", list, "List check ids and exit");
  verify->add_option("--out", out_path, "Output file (default stdout)");

  CLI::App* gen = app.add_subcommand("gen-instance", "Expanded instance descriptor as JSON");
  AddInstanceFlags(gen, &inst_flags);
  gen->add_option("--out", out_path, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (trace->parsed()) {
      const greedy::Instance inst = Load(inst_flags);
      Emit(greedy::RunTrace(inst, k, greedy::ResolveTie(inst, tie), decimals), out_path);
    } else if (audit->parsed()) {
      const greedy::Instance inst = Load(inst_flags);
      greedy::AuditBundleOptions options;
      options.scope = ParseScope(scope);
      options.tie = greedy::ResolveTie(inst, tie);
      options.alphas = ParseRationalList(alphas);
      options.gammas = ParseRationalList(gammas);
      Emit(greedy::RunAudit(inst, options).dump(2) + "\n", out_path);
    } else if (table->parsed()) {
      greedy::RatioTableSpec spec;
      spec.family = family;
      spec.gammas = ParseRationalList(table_gammas);
      spec.alphas = ParseRationalList(table_alphas);
      spec.ks = ParseKList(ks);
      spec.tie = greedy::TiePolicy::Parse(table_tie, greedy::GroundSet(greedy::kMaxGroundSize));
      spec.tolerance = tolerance;
      if (max_n > 0) spec.max_measured_n = max_n;
      Emit(greedy::RunRatioTable(spec), out_path);
      if (!gnuplot.empty()) {
        Emit(greedy::GnuplotScript(out_path.empty() ? "ratio_table.csv" : out_path),
             gnuplot);
      }
    } else if (verify->parsed()) {
      if (list) {
        for (const std::string& id : greedy::VerifyCheckIds()) std::cout << id << "\n";
        return 0;
      }
      std::optional<std::vector<std::string>> filter;
      if (verify->count("--only") > 0) {
        filter.emplace();
        for (const std::string& id : only) {
          if (!id.empty()) filter->push_back(id);
        }
      }
      const json report = greedy::ToJson(greedy::RunVerify(filter));
      Emit(report.dump(2) + "\n", out_path);
      return report["pass"].get<bool>() ? 0 : 1;
    } else if (gen->parsed()) {
      const greedy::Instance inst = Load(inst_flags);
      Emit(greedy::ExpandDescriptor(inst).dump(2) + "\n", out_path);
    }
  } catch (const greedy::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
