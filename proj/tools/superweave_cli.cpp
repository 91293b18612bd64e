// Copyright 2026 The superweave Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// superweave: frame bounds, weaving checks and example generators.
//
//   superweave bounds FILE [--riesz] [--super] [--tol T]
//   superweave weave-check FILE FILE... [--mode frame|riesz] [--super]
//       [--limit N] [--samples N] [--seed S] [--tol T] [--threads K] [--out F]
//   superweave construct NAME --out-dir DIR [--dim D] [--n N] [--P P]
//       [--eps E] [--shift-reading]
//   superweave reproduce [--tol T] [--out F]
//
// Reports go to stdout (or --out), diagnostics to stderr.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "superweave/acceptance.hpp"
#include "superweave/commands.hpp"

namespace {

using superweave::Json;

void emit(const Json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << superweave::dump(doc);
  } else {
    superweave::write_json_file(out_path, doc);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frame bounds and (super) weaving checks for finite families"};
  app.require_subcommand(1);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Optimal frame or Riesz bounds of one file");
  std::string bounds_path;
  bool bounds_riesz = false;
  bool bounds_super = false;
  double bounds_tol = superweave::kDefaultFrameTol;
  bounds->add_option("file", bounds_path, "Frame or superframe document")->required();
  bounds->add_flag("--riesz", bounds_riesz, "Riesz-sequence bounds (Gram spectrum)");
  bounds->add_flag("--super", bounds_super, "Treat the file as a superframe");
  bounds->add_option("--tol", bounds_tol, "Relative verdict cutoff");

  // weave-check
  auto* weave = app.add_subcommand("weave-check", "Decide whether families are woven");
  std::vector<std::string> weave_paths;
  std::string mode = "frame";
  bool weave_super = false;
  superweave::WeavingOptions wopt;
  std::string weave_out;
  weave->add_option("files", weave_paths, "Two or more family documents")->required();
  weave->add_option("--mode", mode, "frame or riesz")
      ->check(CLI::IsMember({"frame", "riesz"}));
  weave->add_flag("--super", weave_super, "Inputs are superframes");
  weave->add_option("--limit", wopt.limit, "Exhaustive scan threshold on distinct weavings");
  weave->add_option("--samples", wopt.samples, "Random partitions in sampled mode");
  weave->add_option("--seed", wopt.seed, "Seed for sampled mode");
  weave->add_option("--tol", wopt.tol, "Relative verdict cutoff");
  weave->add_option("--threads", wopt.threads, "Worker threads")->check(CLI::PositiveNumber);
  weave->add_option("--out", weave_out, "Write the report here instead of stdout");

  // construct
  auto* construct = app.add_subcommand("construct", "Write a standard example to disk");
  std::string name;
  std::string out_dir;
  superweave::ConstructParams prm;
  bool shift_reading = false;
  construct->add_option("name", name, "Construction name")
      ->required()
      ->check(CLI::IsMember(superweave::construction_names()));
  construct->add_option("--out-dir", out_dir, "Output directory")->required();
  construct->add_option("--dim", prm.dim, "Truncation dimension d");
  construct->add_option("--n", prm.n, "Index count (example-4.10; default dim - 2)");
  construct->add_option("--P", prm.P, "Operator-series truncation (example-4.10)");
  construct->add_option("--eps", prm.eps, "epsilon (example-4.10)");
  construct->add_flag("--shift-reading", shift_reading,
                      "Read T_p^1 as a right shift instead of prefix annihilation");

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "Run every reproduction check");
  std::optional<double> repro_tol;
  std::string repro_out;
  reproduce->add_option("--tol", repro_tol, "Override every stated tolerance");
  reproduce->add_option("--out", repro_out, "Write a JSON summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : superweave::exit_code::kError;
  }

  try {
    if (*bounds) {
      const auto out = superweave::cmd_bounds(bounds_path, bounds_riesz, bounds_super, bounds_tol);
      emit(out.document, "");
      return out.exit_code;
    }
    if (*weave) {
      wopt.mode = mode == "riesz" ? superweave::WeavingMode::kRiesz
                                  : superweave::WeavingMode::kFrame;
      const auto out = superweave::cmd_weave_check(weave_paths, wopt, weave_super);
      emit(out.document, weave_out);
      return out.exit_code;
    }
    if (*construct) {
      if (shift_reading) prm.reading = superweave::ShiftReading::kRightShift;
      const Json manifest = superweave::cmd_construct(name, prm, out_dir);
      emit(manifest, "");
      return superweave::exit_code::kOk;
    }
    if (*reproduce) {
      superweave::acceptance::Options opt;
      opt.tol = repro_tol;
      bool all = true;
      std::vector<superweave::acceptance::CriterionResult> results;
      for (const auto& fn : superweave::acceptance::all_criteria()) {
        results.push_back(superweave::acceptance::run_timed(fn, opt));
        std::cout << superweave::acceptance::format_line(results.back()) << "\n";
        all = all && results.back().passed;
      }
      std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
      if (!repro_out.empty())
        superweave::write_json_file(repro_out, superweave::acceptance::to_json(results));
      return all ? superweave::exit_code::kOk : superweave::exit_code::kNegative;
    }
  } catch (const std::exception& e) {
    std::cerr << "superweave: " << e.what() << "\n";
    return superweave::exit_code::kError;
  }
  return superweave::exit_code::kError;
}
