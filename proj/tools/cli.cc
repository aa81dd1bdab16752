// Copyright 2026 The fairwe Authors.
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

#include "cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fairwe/analytics.h"
#include "fairwe/builtin_examples.h"
#include "fairwe/concepts.h"
#include "fairwe/curve.h"
#include "fairwe/error.h"
#include "fairwe/io.h"
#include "fairwe/population.h"
#include "fairwe/random_instance.h"
#include "fairwe/solver.h"

namespace fairwe::cli {
namespace {

namespace fs = std::filesystem;

struct CommonOptions {
  std::string population_file;
  std::string example;
  double tol = 1e-9;
  std::string algorithm = "curve";
  bool eo_unnormalized = false;
  std::uint64_t seed = 1;
};

Json ReadJson(const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

Population LoadPopulation(const CommonOptions& opts) {
  if (!opts.example.empty()) return BuiltinPopulation(opts.example);
  if (opts.population_file.empty()) {
    throw Error(ErrorCode::kIoError, "need --population FILE or --example NAME");
  }
  return PopulationFromJson(ReadJson(opts.population_file));
}

ConceptSpec LoadConcept(const std::string& path, const CommonOptions& opts) {
  return ConceptFromJson(ReadJson(path), opts.eo_unnormalized);
}

std::string Dump(const Json& json) { return json.dump(2) + "\n"; }

template <class Writer>
std::string Render(Writer&& write) {
  std::ostringstream ss;
  write(ss);
  return ss.str();
}

WeSolveResult Solve(const Population& pop, const UtilityTable& u,
                    const CommonOptions& opts) {
  return opts.algorithm == "bisection" ? SolveWeBisection(pop, u)
                                       : SolveWe(pop, u);
}

int CmdSolve(const CommonOptions& opts, const std::string& concept_file,
             const std::string& out_dir, std::ostream& out) {
  const Population pop = LoadPopulation(opts);
  const ConceptSpec spec = LoadConcept(concept_file, opts);
  const UtilityTable u = MakeUtility(spec, pop);
  const WeSolveResult result = Solve(pop, u, opts);
  const AuditReport audit = Audit(pop, u, result.classifier);

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  WriteFile(dir / "classifier.csv",
            Render([&](std::ostream& s) { WriteClassifierCsv(s, result.classifier); }));
  WriteFile(dir / "result.json", Dump(ToJson(result)));
  WriteFile(dir / "audit.json", Dump(ToJson(audit)));

  out << "concept:   " << ConceptName(spec) << "\n"
      << "algorithm: " << AlgorithmName(result.algorithm) << "\n"
      << "revenue:   " << FormatNumber(result.revenue) << "\n"
      << "w*:        " << FormatNumber(result.w_star) << "\n"
      << "welfare:   " << FormatNumber(result.welfare[0]) << ", "
      << FormatNumber(result.welfare[1]) << "\n"
      << "lambda:    " << FormatNumber(result.lambda[0]) << ", "
      << FormatNumber(result.lambda[1]) << "\n"
      << "WE gap:    " << FormatNumber(audit.we_gap)
      << (audit.we_gap <= opts.tol ? " (within tol)" : " (EXCEEDS tol)") << "\n";
  return kOk;
}

int CmdCurve(const CommonOptions& opts, const std::string& concept_file,
             int group, const std::string& out_csv, std::string objective_csv,
             std::ostream& out) {
  const Group g = GroupFromInt(group);
  const Population pop = LoadPopulation(opts);
  const UtilityTable u = MakeUtility(LoadConcept(concept_file, opts), pop);
  const ConcaveCurve c0 = WelfareCurve(pop, u, Group::k0);
  const ConcaveCurve c1 = WelfareCurve(pop, u, Group::k1);
  const ConcaveCurve& curve = g == Group::k0 ? c0 : c1;
  if (objective_csv.empty()) {
    fs::path p(out_csv);
    objective_csv =
        (p.parent_path() / (p.stem().string() + "_F" + p.extension().string()))
            .string();
  }
  WriteFile(out_csv, Render([&](std::ostream& s) { WriteCurveCsv(s, curve); }));
  WriteFile(objective_csv, Render([&](std::ostream& s) {
              WriteObjectiveCsv(s, pop, c0, c1);
            }));
  out << "group " << group << ": " << curve.breakpoints.size()
      << " breakpoints, w_max = " << FormatNumber(curve.w_max()) << "\n";
  return kOk;
}

Json CompareRow(const std::string& name, const Population& pop,
                const UtilityTable& measure, const Classifier& c,
                double reference_revenue) {
  const AuditReport audit = Audit(pop, measure, c);
  Json row = ToJson(audit);
  row["concept"] = name;
  row["revenue_delta"] = audit.revenue - reference_revenue;
  // Concept name first for readability.
  Json ordered{{"concept", name}};
  for (const auto& [key, value] : row.items()) {
    if (key != "concept") ordered[key] = value;
  }
  return ordered;
}

int CmdCompare(const CommonOptions& opts, const std::string& measure_file,
               const std::string& custom_file, const std::string& out_json,
               std::ostream& out) {
  const Population pop = LoadPopulation(opts);
  const ConceptSpec measure_spec = LoadConcept(measure_file, opts);
  const UtilityTable measure = MakeUtility(measure_spec, pop);

  const ThresholdSolution unc = SolveUnconstrained(pop);
  std::vector<std::pair<std::string, Classifier>> policies;
  policies.emplace_back("unconstrained", unc.classifier);
  policies.emplace_back("unawareness", SolveUnaware(pop).classifier);
  policies.emplace_back(
      "demographic_parity",
      Solve(pop, MakeUtility(DemographicParity{}, pop), opts).classifier);
  const ConceptSpec eo = EqualOpportunity{!opts.eo_unnormalized};
  policies.emplace_back(ConceptName(eo),
                        Solve(pop, MakeUtility(eo, pop), opts).classifier);
  if (!custom_file.empty()) {
    const ConceptSpec custom = LoadConcept(custom_file, opts);
    policies.emplace_back(
        "custom:" + ConceptName(custom),
        Solve(pop, MakeUtility(custom, pop), opts).classifier);
  }

  Json rows = Json::array();
  out << "concept                         revenue        W(0)           W(1)\n";
  for (const auto& [name, c] : policies) {
    Json row = CompareRow(name, pop, measure, c, unc.revenue);
    char line[160];
    std::snprintf(line, sizeof(line), "%-31s %-14s %-14s %s\n", name.c_str(),
                  FormatNumber(row["revenue"].get<double>()).c_str(),
                  FormatNumber(row["group_welfare"][0].get<double>()).c_str(),
                  FormatNumber(row["group_welfare"][1].get<double>()).c_str());
    out << line;
    rows.push_back(std::move(row));
  }
  const Json table{{"measurement", ToJson(measure_spec)}, {"rows", rows}};
  if (!out_json.empty()) WriteFile(out_json, Dump(table));
  return kOk;
}

int CmdExamples(const std::string& which, double tol, std::ostream& out) {
  const std::vector<ExampleCheck> checks = RunBuiltinExample(which, tol);
  bool all_pass = true;
  for (const ExampleCheck& check : checks) {
    all_pass = all_pass && check.pass;
    out << (check.pass ? "PASS " : "FAIL ") << check.example << ": "
        << check.description << "  expected "
        << (check.strictly_below ? "< " : "") << FormatNumber(check.expected)
        << ", computed " << FormatNumber(check.computed) << "\n";
  }
  out << (all_pass ? "all checks passed" : "MISMATCH") << "\n";
  return all_pass ? kOk : kExampleMismatch;
}

int CmdIngest(const std::string& samples_csv, const std::string& alpha_file,
              const std::string& out_json, std::ostream& out) {
  std::ifstream in(samples_csv, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + samples_csv);
  const std::vector<SampleRow> rows = ParseSamplesCsv(in);
  const AlphaTable alphas = AlphaTableFromJson(ReadJson(alpha_file));
  const Population pop = FromSamples(rows, alphas);
  WriteFile(out_json, Dump(ToJson(pop)));
  out << "ingested " << rows.size() << " rows into " << pop.size()
      << " cells\n";
  return kOk;
}

int CmdSelfCheck(const CommonOptions& opts, int count, std::ostream& out) {
  std::mt19937_64 rng(opts.seed);
  int failures = 0;
  constexpr UtilityKind kKinds[] = {
      UtilityKind::kDemographicParity, UtilityKind::kEqualOpportunity,
      UtilityKind::kGoodOnly, UtilityKind::kRandom};
  for (int n = 0; n < count; ++n) {
    const Population pop = RandomPopulation(rng);
    const UtilityKind kind = kKinds[n % 4];
    const UtilityTable u = DrawUtility(rng, pop, kind);
    const TheoremCheck check = CheckTheorem1(pop, u);
    const WeSolveResult curve = SolveWe(pop, u);
    const WeSolveResult bisect = SolveWeBisection(pop, u);
    const bool ok = check.welfare_ok && check.pointwise_ok &&
                    std::abs(curve.revenue - bisect.revenue) <= opts.tol &&
                    std::abs(curve.welfare[0] - curve.welfare[1]) <= opts.tol;
    if (!ok) {
      ++failures;
      out << "FAIL instance " << n << " (" << UtilityKindName(kind) << ")\n";
    }
  }
  out << count - failures << "/" << count << " random instances passed (seed "
      << opts.seed << ")\n";
  return failures == 0 ? kOk : kExampleMismatch;
}

void AddPopulationOptions(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--population", opts.population_file, "Population JSON file");
  cmd->add_option("--example", opts.example,
                  "Built-in population (ex1, unaware, dp_harm, eo_harm)");
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Revenue-optimal welfare-equalizing lending classifiers"};
  app.require_subcommand(1);
  CommonOptions opts;
  app.add_option("--tol", opts.tol, "Report tolerance")->capture_default_str();
  app.add_option("--algorithm", opts.algorithm, "Solver: curve or bisection")
      ->check(CLI::IsMember({"curve", "bisection"}))
      ->capture_default_str();
  app.add_flag("--eo-unnormalized", opts.eo_unnormalized,
               "Use u = 1{y=1} for equal opportunity without group scaling");
  app.add_option("--seed", opts.seed, "Seed for randomized subcommands");

  std::string concept_file, out_path, objective_path, measure_file,
      custom_file, samples_file, alpha_file, which = "all";
  int group = 0;
  int count = 200;

  auto* solve = app.add_subcommand("solve", "Solve for the optimal WE classifier");
  AddPopulationOptions(solve, opts);
  solve->add_option("--concept", concept_file, "Concept JSON file")->required();
  solve->add_option("--out", out_path, "Output directory")->required();

  auto* curve = app.add_subcommand("curve", "Export revenue-welfare curves");
  AddPopulationOptions(curve, opts);
  curve->add_option("--concept", concept_file, "Concept JSON file")->required();
  curve->add_option("--group", group, "Protected group (0 or 1)")->required();
  curve->add_option("--out", out_path, "w,R CSV for the group")->required();
  curve->add_option("--objective-out", objective_path,
                    "w,F CSV for the mixed objective (default <out>_F.csv)");

  auto* compare = app.add_subcommand("compare", "Compare fairness concepts");
  AddPopulationOptions(compare, opts);
  compare->add_option("--measure", measure_file, "Measurement concept JSON")
      ->required();
  compare->add_option("--custom", custom_file, "Extra concept JSON to compare");
  compare->add_option("--out", out_path, "Comparison JSON");

  auto* examples = app.add_subcommand("examples", "Reproduce built-in examples");
  examples->add_option("which", which, "ex1 | unaware | dp_harm | eo_harm | all")
      ->check(CLI::IsMember({"ex1", "unaware", "dp_harm", "eo_harm", "all"}));

  auto* ingest = app.add_subcommand("ingest", "Build a population from samples");
  ingest->add_option("--samples", samples_file, "Samples CSV")->required();
  ingest->add_option("--alpha", alpha_file, "Alpha table JSON")->required();
  ingest->add_option("--out", out_path, "Population JSON")->required();

  auto* selfcheck =
      app.add_subcommand("selfcheck", "Randomized solver and theorem checks");
  selfcheck->add_option("--count", count, "Number of random instances");

  // Global options are accepted after the subcommand as well.
  for (CLI::App* sub : {solve, curve, compare, examples, ingest, selfcheck}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIoError;
  }

  try {
    if (*solve) return CmdSolve(opts, concept_file, out_path, out);
    if (*curve) {
      return CmdCurve(opts, concept_file, group, out_path, objective_path, out);
    }
    if (*compare) {
      return CmdCompare(opts, measure_file, custom_file, out_path, out);
    }
    if (*examples) return CmdExamples(which, opts.tol, out);
    if (*ingest) return CmdIngest(samples_file, alpha_file, out_path, out);
    if (*selfcheck) return CmdSelfCheck(opts, count, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kIoError || e.code() == ErrorCode::kParseError
               ? kIoError
               : kValidationError;
  } catch (const fs::filesystem_error& e) {
    err << "error: IoError: " << e.what() << "\n";
    return kIoError;
  }
  return kValidationError;
}

}  // namespace fairwe::cli
