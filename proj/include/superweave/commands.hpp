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

#ifndef SUPERWEAVE_COMMANDS_HPP_
#define SUPERWEAVE_COMMANDS_HPP_

// Implementations behind the `superweave` subcommands. Each returns the
// report document and the process exit code; the tool only does I/O.

#include <cmath>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "superweave/constructions.hpp"
#include "superweave/frame.hpp"
#include "superweave/io.hpp"
#include "superweave/weaving.hpp"

namespace superweave {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kNegative = 2;      // not a frame / not woven
inline constexpr int kInconclusive = 3;  // sampled scan found no failure
}  // namespace exit_code

struct CommandOutput {
  Json document;
  int exit_code = exit_code::kOk;
};

inline CommandOutput cmd_bounds(const std::string& path, bool riesz,
                                bool super, double tol = kDefaultFrameTol) {
  CommandOutput out;
  Json& doc = out.document;
  doc["input"] = path;
  bool positive = false;
  auto measure = [&](const FrameFamily& f) {
    const BoundsReport r = riesz ? riesz_sequence_bounds(f, tol) : frame_bounds(f, tol);
    return r;
  };
  if (super) {
    const SuperFrameFamily s = load_super_file(path);
    const BoundsReport joint = measure(direct_sum(s));
    doc["super"] = true;
    doc["dim"] = s.ambient_dim();
    doc["size"] = s.size();
    doc["bounds"] = to_json(joint);
    Json comps = Json::array();
    for (const FrameFamily& c : s.components()) comps.push_back(to_json(measure(c)));
    doc["components"] = std::move(comps);
    positive = riesz ? joint.is_riesz_sequence : joint.is_frame;
  } else {
    const FrameFamily f = load_frame_file(path);
    const BoundsReport r = measure(f);
    doc["super"] = false;
    doc["dim"] = f.dim();
    doc["size"] = f.size();
    doc["bounds"] = to_json(r);
    positive = riesz ? r.is_riesz_sequence : r.is_frame;
  }
  out.exit_code = positive ? exit_code::kOk : exit_code::kNegative;
  return out;
}

inline int weaving_exit_code(const WeavingReport& r) {
  if (!r.woven()) return exit_code::kNegative;
  return r.exhaustive ? exit_code::kOk : exit_code::kInconclusive;
}

inline CommandOutput cmd_weave_check(const std::vector<std::string>& paths,
                                     const WeavingOptions& opt, bool super) {
  if (paths.size() < 2) throw Error("weave-check: need at least two input files");
  CommandOutput out;
  Json inputs = Json::array();
  for (const auto& p : paths) inputs.push_back(p);
  if (super) {
    std::vector<SuperFrameFamily> supers;
    for (const auto& p : paths) supers.push_back(load_super_file(p));
    const SuperWeavingReport rep = super_weaving_check(supers, opt);
    out.document["inputs"] = std::move(inputs);
    out.document["super"] = true;
    out.document["report"] = to_json(rep);
    out.exit_code = weaving_exit_code(rep.joint);
  } else {
    std::vector<FrameFamily> fams;
    for (const auto& p : paths) fams.push_back(load_frame_file(p));
    const WeavingReport rep = weaving_check(fams, opt);
    out.document["inputs"] = std::move(inputs);
    out.document["super"] = false;
    out.document["report"] = to_json(rep);
    out.exit_code = weaving_exit_code(rep);
  }
  return out;
}

struct ConstructParams {
  std::size_t dim = 2;
  std::size_t n = 0;  // example-4.10 only; 0 means dim - 2
  std::size_t P = 8;
  double eps = 0.3;
  ShiftReading reading = ShiftReading::kPrefixAnnihilation;
};

inline const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = {
      "example-3.3", "example-3.4", "remark-4.5", "theorem-3.9", "example-4.10"};
  return names;
}

/// Writes the generated families plus manifest.json into out_dir and
/// returns the manifest.
inline Json cmd_construct(const std::string& name, const ConstructParams& prm,
                          const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  Json manifest;
  manifest["construction"] = name;
  manifest["index_convention"] =
      "files are 0-based (vector k is index k+1 in the 1-based numbering "
      "used by every *_1based field of this manifest); raw partition strings "
      "are 0-based";
  Json params;
  params["dim"] = prm.dim;
  Json files = Json::array();
  Json expected;

  auto emit = [&](const std::string& file, const Json& doc) {
    write_json_file((fs::path(out_dir) / file).string(), doc);
    files.push_back(file);
  };

  if (name == "example-3.3") {
    const SuperFramePair p = gen_example_3_3(prm.dim);
    emit("F.json", to_json(p[0]));
    emit("G.json", to_json(p[1]));
    params["n"] = p[0].size();
    expected["mode"] = "frame";
    expected["woven"] = true;
    expected["universal_bounds"] = {1.0, 2.0};
  } else if (name == "example-3.4") {
    const SuperFramePair p = gen_example_3_4(prm.dim);
    emit("F.json", to_json(p[0]));
    emit("G.json", to_json(p[1]));
    params["n"] = p[0].size();
    expected["mode"] = "frame";
    expected["woven"] = false;
    expected["failing_partition_1based"] = {{"1", "I \\ {5,6}"}, {"2", {5, 6}}};
    expected["kernel_vector"] = "(-e_1) (+) e_1";
    expected["component_woven"] = true;
    expected["component_universal_bounds"] = {1.0, 3.0};
  } else if (name == "remark-4.5") {
    const SuperFrameFamily s = gen_remark_4_5(prm.dim);
    emit("F.json", to_json(s));
    params["n"] = s.size();
    expected["joint"] = {{"riesz_basis", true}, {"riesz_bounds", {1.0, 1.0}}};
    expected["components_riesz_sequence"] = false;
  } else if (name == "theorem-3.9") {
    const auto comps = example_3_4_components(prm.dim);
    const SuperFramePair p =
        interleave_theorem_3_9(comps[0][0], comps[0][1], comps[1][0], comps[1][1]);
    emit("F.json", to_json(p[0]));
    emit("G.json", to_json(p[1]));
    params["inputs"] = "component pairs of example-3.4 at the same dim";
    params["n"] = p[0].size();
    expected["mode"] = "frame";
    expected["woven"] = true;
    expected["universal_bounds"] = {1.0, 3.0};
  } else if (name == "example-4.10") {
    const std::size_t n = prm.n == 0 ? (prm.dim >= 2 ? prm.dim - 2 : 0) : prm.n;
    const Example410 ex = gen_example_4_10(prm.dim, n, prm.P, prm.eps, prm.reading);
    emit("F1.json", to_json(ex.supers[0]));
    emit("F2.json", to_json(ex.supers[1]));
    params["n"] = n;
    params["P"] = prm.P;
    params["eps"] = prm.eps;
    params["shift_reading"] = prm.reading == ShiftReading::kPrefixAnnihilation
                                  ? "prefix-annihilation"
                                  : "right-shift";
    params["riesz_component_1based"] = ex.config.riesz_component + 1;
    expected["mode"] = "riesz";
    expected["woven_riesz"] = true;
    expected["lambdas"] = ex.config.lambdas;
    expected["lambda_threshold"] = ex.config.threshold();
  } else {
    throw Error("construct: unknown construction \"" + name + "\"");
  }
  manifest["parameters"] = std::move(params);
  manifest["files"] = std::move(files);
  manifest["expected"] = std::move(expected);
  write_json_file((fs::path(out_dir) / "manifest.json").string(), manifest);
  return manifest;
}

}  // namespace superweave

#endif  // SUPERWEAVE_COMMANDS_HPP_
