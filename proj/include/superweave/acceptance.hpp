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

#ifndef SUPERWEAVE_ACCEPTANCE_HPP_
#define SUPERWEAVE_ACCEPTANCE_HPP_

// End-to-end reproduction checks, shared by the acceptance test binary and
// `superweave reproduce`.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "superweave/commands.hpp"
#include "superweave/constructions.hpp"
#include "superweave/frame.hpp"
#include "superweave/io.hpp"
#include "superweave/weaving.hpp"

namespace superweave::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string measured;
  std::string expected;
  double seconds = 0.0;
};

struct Options {
  // Replaces every stated numeric tolerance when set.
  std::optional<double> tol;
  // Scratch space for the CLI determinism check.
  std::string work_dir =
      (std::filesystem::temp_directory_path() / "superweave-acceptance").string();
};

namespace detail {

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

inline double tol_or(const Options& o, double stated) { return o.tol.value_or(stated); }

inline WeavingOptions exhaustive_options(WeavingMode mode, bool collapse) {
  WeavingOptions w;
  w.mode = mode;
  w.limit = std::uint64_t{1} << 26;
  w.collapse_identical = collapse;
  return w;
}

inline Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

inline FrameFamily random_family(std::mt19937_64& rng, std::size_t d,
                                 std::size_t n) {
  std::vector<CVector> v;
  for (std::size_t k = 0; k < n; ++k) {
    CVector x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = gaussian(rng);
    v.push_back(std::move(x));
  }
  return FrameFamily(d, std::move(v));
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Gram-Schmidt on a complex Gaussian matrix.
inline FrameFamily random_orthonormal_basis(std::mt19937_64& rng, std::size_t d) {
  std::vector<CVector> q;
  while (q.size() < d) {
    CVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = gaussian(rng);
    for (const CVector& u : q) v -= inner(v, u) * u;
    const double nv = v.norm();
    if (nv < 1e-6) continue;
    v *= 1.0 / nv;
    q.push_back(std::move(v));
  }
  return FrameFamily(d, std::move(q));
}

inline CVector random_unit(std::mt19937_64& rng, std::size_t d) {
  CVector v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = gaussian(rng);
  v *= 1.0 / v.norm();
  return v;
}

inline FrameFamily random_real_family(std::mt19937_64& rng, std::size_t d,
                                      std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<CVector> v;
  for (std::size_t k = 0; k < n; ++k) {
    CVector x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = g(rng);
    v.push_back(std::move(x));
  }
  return FrameFamily(d, std::move(v));
}

// For a real family S is real symmetric, so real unit vectors reach both
// extremes of the Rayleigh quotient.
inline CVector random_real_unit(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVector v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = g(rng);
  v *= 1.0 / v.norm();
  return v;
}

inline double energy(const FrameFamily& f, const CVector& x) {
  double s = 0.0;
  for (const CVector& fk : f.vectors()) s += std::norm(inner(x, fk));
  return s;
}

}  // namespace detail

/// example-3.3 at d = 3: all 2^12 partitions, universal bounds (1, 2).
inline CriterionResult criterion_example_3_3(const Options& o) {
  const double tol = detail::tol_or(o, 1e-9);
  const SuperFramePair p = gen_example_3_3(3);
  const std::vector<FrameFamily> sums = {direct_sum(p[0]), direct_sum(p[1])};
  const WeavingReport r =
      weaving_check(sums, detail::exhaustive_options(WeavingMode::kFrame, false));
  CriterionResult c{1, "example-3.3 woven with universal bounds (1, 2)", false, {}, {}, 0.0};
  c.passed = r.exhaustive && r.partitions_checked == 4096 && r.woven() &&
             std::abs(r.universal_lower - 1.0) <= tol &&
             std::abs(r.universal_upper - 2.0) <= tol;
  c.measured = "(" + detail::fmt(r.universal_lower) + ", " +
               detail::fmt(r.universal_upper) + ") over " +
               std::to_string(r.partitions_checked) + " partitions";
  c.expected = "(1, 2) +- " + detail::fmt(tol) + " over 4096 partitions";
  return c;
}

/// example-3.4 at d = 2: not woven; sigma = I \ {5,6} fails with kernel
/// (-e_1) (+) e_1.
inline CriterionResult criterion_example_3_4(const Options& o) {
  const double tol = detail::tol_or(o, 1e-9);
  const double vtol = detail::tol_or(o, 1e-6);
  const SuperFramePair p = gen_example_3_4(2);
  const std::vector<FrameFamily> sums = {direct_sum(p[0]), direct_sum(p[1])};
  const WeavingReport r =
      weaving_check(sums, detail::exhaustive_options(WeavingMode::kFrame, false));
  PartitionAssignment minus56 = PartitionAssignment::constant(12, 2, 0);
  minus56[4] = minus56[5] = 1;  // 1-based 5, 6 to the G family
  const double at_minus56 = weaving_bounds(sums, minus56, WeavingMode::kFrame).lower;
  double overlap = 0.0;
  if (r.witness_vector) {
    const CVector target{-1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0), 0.0};
    const double nv = r.witness_vector->norm();
    overlap = std::abs(inner(*r.witness_vector, target)) / nv;
  }
  CriterionResult c{2, "example-3.4 not woven, witness (-e1)+(e1)", false, {}, {}, 0.0};
  c.passed = r.exhaustive && !r.woven() && at_minus56 <= tol &&
             r.witness_vector.has_value() && overlap >= 1.0 - vtol;
  c.measured = "woven=" + std::string(r.woven() ? "true" : "false") +
               ", lower at I\\{5,6} = " + detail::fmt(at_minus56) +
               ", witness partition " + r.worst_lower_partition.to_string() +
               ", |<v,w>| = " + detail::fmt(overlap);
  c.expected = "not woven, lower <= " + detail::fmt(tol) + ", |<v,w>| >= 1 - " +
               detail::fmt(vtol);
  return c;
}

/// Both component pairs of example-3.4 woven with bounds (1, 3).
inline CriterionResult criterion_example_3_7(const Options& o) {
  const double tol = detail::tol_or(o, 1e-9);
  const auto comps = example_3_4_components(2);
  bool ok = true;
  std::string measured;
  for (std::size_t j = 0; j < 2; ++j) {
    const std::vector<FrameFamily> pair = {comps[j][0], comps[j][1]};
    const WeavingReport r =
        weaving_check(pair, detail::exhaustive_options(WeavingMode::kFrame, false));
    ok = ok && r.exhaustive && r.woven() &&
         std::abs(r.universal_lower - 1.0) <= tol &&
         std::abs(r.universal_upper - 3.0) <= tol;
    measured += (j ? ", " : "") + std::string("H") + std::to_string(j + 1) + ": (" +
                detail::fmt(r.universal_lower) + ", " + detail::fmt(r.universal_upper) + ")";
  }
  CriterionResult c{3, "example-3.4 component pairs woven with bounds (1, 3)", false, {}, {}, 0.0};
  c.passed = ok;
  c.measured = measured;
  c.expected = "H1, H2: (1, 3) +- " + detail::fmt(tol);
  return c;
}

/// Interleaving the example-3.4 component pairs gives woven superframes (1, 3).
inline CriterionResult criterion_theorem_3_9(const Options& o) {
  const double tol = detail::tol_or(o, 1e-9);
  const auto comps = example_3_4_components(2);
  const SuperFramePair p =
      interleave_theorem_3_9(comps[0][0], comps[0][1], comps[1][0], comps[1][1]);
  const std::vector<SuperFrameFamily> supers = {p[0], p[1]};
  const SuperWeavingReport r =
      super_weaving_check(supers, detail::exhaustive_options(WeavingMode::kFrame, true));
  CriterionResult c{4, "interleaved superframes woven with (min A, max B) = (1, 3)", false, {}, {}, 0.0};
  c.passed = r.joint.exhaustive && r.joint.woven() &&
             std::abs(r.joint.universal_lower - 1.0) <= tol &&
             std::abs(r.joint.universal_upper - 3.0) <= tol;
  c.measured = "(" + detail::fmt(r.joint.universal_lower) + ", " +
               detail::fmt(r.joint.universal_upper) + "), " +
               std::to_string(r.joint.partitions_checked) +
               " distinct weavings covering 2^" + std::to_string(p[0].size());
  c.expected = "(1, 3) +- " + detail::fmt(tol);
  return c;
}

/// remark-4.5: joint Riesz basis (1, 1), components singular Grams.
inline CriterionResult criterion_remark_4_5(const Options& o) {
  const double tol = detail::tol_or(o, 1e-10);
  const SuperFrameFamily s = gen_remark_4_5(3);
  const BoundsReport joint = riesz_sequence_bounds(direct_sum(s));
  double comp_min = 0.0;
  for (const FrameFamily& comp : s.components())
    comp_min = std::max(comp_min, hermitian_eig(gram(comp)).min());
  CriterionResult c{5, "remark-4.5 joint Riesz basis, components not Riesz", false, {}, {}, 0.0};
  c.passed = joint.is_riesz_basis && std::abs(joint.lower - 1.0) <= tol &&
             std::abs(joint.upper - 1.0) <= tol && comp_min <= tol;
  c.measured = "joint (" + detail::fmt(joint.lower) + ", " + detail::fmt(joint.upper) +
               "), max component lambda_min(G) = " + detail::fmt(comp_min);
  c.expected = "joint (1, 1) +- " + detail::fmt(tol) + ", component lambda_min <= " +
               detail::fmt(tol);
  return c;
}

/// example-4.10 at d = 10, n = 6, P = 8, eps = 0.3.
inline CriterionResult criterion_example_4_10(const Options&) {
  const Example410 ex = gen_example_4_10(10, 6, 8, 0.3);
  const std::vector<FrameFamily> sums = {direct_sum(ex.supers[0]),
                                         direct_sum(ex.supers[1])};
  const WeavingReport r =
      weaving_check(sums, detail::exhaustive_options(WeavingMode::kRiesz, false));
  const double limit = 1.0 / std::sqrt(3.0);
  CriterionResult c{6, "example-4.10 lambdas < 1/sqrt(3), woven Riesz", false, {}, {}, 0.0};
  c.passed = ex.config.lambdas[0] < limit && ex.config.lambdas[1] < limit &&
             r.exhaustive && r.partitions_checked == 64 && r.universal_lower > 0.0;
  c.measured = "lambda1 = " + detail::fmt(ex.config.lambdas[0]) +
               ", lambda2 = " + detail::fmt(ex.config.lambdas[1]) +
               ", universal Riesz bounds (" + detail::fmt(r.universal_lower) + ", " +
               detail::fmt(r.universal_upper) + ") over " +
               std::to_string(r.partitions_checked) + " partitions";
  c.expected = "lambda_i < " + detail::fmt(limit) + ", universal_lower > 0";
  return c;
}

/// Component weaving bounds sit inside the super weaving bounds.
inline CriterionResult criterion_component_sandwich(const Options&) {
  std::mt19937_64 rng(35);
  std::size_t violations = 0;
  std::size_t checks = 0;
  std::size_t instances = 0;
  std::size_t rejected = 0;
  while (instances < 50) {
    const std::size_t d1 = detail::uniform(rng, 1, 3);
    const std::size_t d2 = detail::uniform(rng, 1, 3);
    const std::size_t n = detail::uniform(rng, d1 + d2, 6);
    std::vector<SuperFrameFamily> supers;
    for (int i = 0; i < 2; ++i)
      supers.emplace_back(std::vector<FrameFamily>{
          detail::random_family(rng, d1, n), detail::random_family(rng, d2, n)});
    const SuperWeavingReport sr =
        super_weaving_check(supers, detail::exhaustive_options(WeavingMode::kFrame, true));
    if (!sr.joint.woven()) {
      ++rejected;
      continue;
    }
    ++instances;
    const std::vector<FrameFamily> sums = {direct_sum(supers[0]), direct_sum(supers[1])};
    for (const PartitionAssignment& p : enumerate_partitions(n, 2)) {
      const BoundsReport joint = weaving_bounds(sums, p, WeavingMode::kFrame);
      const double slack = 1e-12 * std::max(1.0, joint.upper);
      for (std::size_t j = 0; j < 2; ++j) {
        const std::vector<FrameFamily> comp = {supers[0].component(j),
                                               supers[1].component(j)};
        const BoundsReport b = weaving_bounds(comp, p, WeavingMode::kFrame);
        ++checks;
        if (b.lower < joint.lower - slack || b.upper > joint.upper + slack) ++violations;
      }
    }
  }
  CriterionResult c{7, "component weavings sandwiched by super weavings", false, {}, {}, 0.0};
  c.passed = violations == 0;
  c.measured = std::to_string(violations) + " violations in " + std::to_string(checks) +
               " partition/component checks over 50 woven instances (" +
               std::to_string(rejected) + " non-woven draws skipped)";
  c.expected = "0 violations";
  return c;
}

/// Every weaving's upper bound <= 2^{L-1} max_k B_k.
inline CriterionResult criterion_bessel_bound(const Options&) {
  std::mt19937_64 rng(38);
  std::size_t violations = 0;
  std::size_t checks = 0;
  double worst_ratio = 0.0;
  for (int inst = 0; inst < 50; ++inst) {
    const std::size_t L = detail::uniform(rng, 2, 3);
    const std::size_t m = detail::uniform(rng, 2, 3);
    const std::size_t n = detail::uniform(rng, 1, 5);
    std::vector<std::size_t> dims;
    for (std::size_t j = 0; j < L; ++j) dims.push_back(detail::uniform(rng, 1, 3));
    std::vector<SuperFrameFamily> supers;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<FrameFamily> comps;
      for (std::size_t j = 0; j < L; ++j)
        comps.push_back(detail::random_family(rng, dims[j], n));
      supers.emplace_back(std::move(comps));
    }
    const SuperWeavingReport sr =
        super_weaving_check(supers, detail::exhaustive_options(WeavingMode::kFrame, true));
    double max_b = 0.0;
    for (const WeavingReport& cr : sr.components) max_b = std::max(max_b, cr.universal_upper);
    const double bound = std::pow(2.0, static_cast<double>(L) - 1.0) * max_b;
    std::vector<FrameFamily> sums;
    for (const auto& s : supers) sums.push_back(direct_sum(s));
    for (const PartitionAssignment& p : enumerate_partitions(n, m)) {
      const double up = weaving_bounds(sums, p, WeavingMode::kFrame).upper;
      ++checks;
      if (up > bound * (1.0 + 1e-12)) ++violations;
      worst_ratio = std::max(worst_ratio, up / bound);
    }
  }
  CriterionResult c{8, "Bessel weaving bound 2^(L-1) max B_k", false, {}, {}, 0.0};
  c.passed = violations == 0;
  c.measured = std::to_string(violations) + " violations in " + std::to_string(checks) +
               " weavings, max upper/bound = " + detail::fmt(worst_ratio);
  c.expected = "0 violations";
  return c;
}

/// Spectral frame bounds against a sampled Rayleigh-quotient oracle.
inline CriterionResult criterion_oracle_equivalence(const Options& o) {
  const double tol = detail::tol_or(o, 1e-9);
  constexpr double kClose = 0.05;
  std::mt19937_64 rng(9);
  std::size_t bracket_fail = 0;
  std::size_t close_fail = 0;
  double worst_gap = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = detail::uniform(rng, 1, 4);
    const std::size_t n = detail::uniform(rng, 1, 8);
    const FrameFamily f = detail::random_real_family(rng, d, n);
    const BoundsReport b = frame_bounds(f);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int s = 0; s < 10000; ++s) {
      const double e = detail::energy(f, detail::random_real_unit(rng, d));
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    if (lo < b.lower - tol || hi > b.upper + tol) ++bracket_fail;
    const double gap = std::max(lo - b.lower, b.upper - hi) / b.upper;
    worst_gap = std::max(worst_gap, gap);
    if (gap > kClose) ++close_fail;
  }
  CriterionResult c{9, "spectral bounds match sampled Rayleigh quotients", false, {}, {}, 0.0};
  c.passed = bracket_fail == 0 && close_fail == 0;
  c.measured = std::to_string(bracket_fail) + " bracket failures, " +
               std::to_string(close_fail) + " closeness failures, worst gap = " +
               detail::fmt(worst_gap) + " of the upper bound";
  c.expected = "samples within [lower - " + detail::fmt(tol) + ", upper + " +
               detail::fmt(tol) + "], extremes within 5%";
  return c;
}

/// perturbation_lambda(X, X) = 0 and (X, (1 - t) X) = t.
inline CriterionResult criterion_perturbation(const Options& o) {
  const double tol = detail::tol_or(o, 1e-10);
  std::mt19937_64 rng(10);
  const FrameFamily x = detail::random_orthonormal_basis(rng, 4);
  const double same = perturbation_lambda(x, x).lambda;
  bool ok = same == 0.0;
  std::string measured = "lambda(X,X) = " + detail::fmt(same);
  for (double t : {0.1, 0.5, 0.9}) {
    std::vector<CVector> y;
    for (const CVector& v : x.vectors()) y.push_back((1.0 - t) * v);
    const double lam = perturbation_lambda(x, FrameFamily(4, y)).lambda;
    ok = ok && std::abs(lam - t) <= tol;
    measured += ", t=" + detail::fmt(t) + ": " + detail::fmt(lam);
  }
  CriterionResult c{10, "perturbation constant of scaled orthonormal bases", false, {}, {}, 0.0};
  c.passed = ok;
  c.measured = measured;
  c.expected = "0 exactly; t +- " + detail::fmt(tol);
  return c;
}

/// weave-check reports for --threads 1 and --threads 8 are byte-identical.
inline CriterionResult criterion_determinism(const Options& o) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(o.work_dir) / "example-3.3";
  ConstructParams prm;
  prm.dim = 3;
  cmd_construct("example-3.3", prm, dir.string());
  const std::vector<std::string> paths = {(dir / "F.json").string(),
                                          (dir / "G.json").string()};
  WeavingOptions w;
  w.threads = 1;
  const CommandOutput one = cmd_weave_check(paths, w, true);
  w.threads = 8;
  const CommandOutput eight = cmd_weave_check(paths, w, true);
  const std::string a = dump(one.document);
  const std::string b = dump(eight.document);
  CriterionResult c{11, "weave-check byte-identical for 1 and 8 threads", false, {}, {}, 0.0};
  c.passed = a == b && one.exit_code == exit_code::kOk;
  c.measured = std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
               " bytes, " + (a == b ? "identical" : "different") + ", exit " +
               std::to_string(one.exit_code);
  c.expected = "identical, exit 0";
  return c;
}

inline std::vector<std::function<CriterionResult(const Options&)>> all_criteria() {
  return {criterion_example_3_3,     criterion_example_3_4,
          criterion_example_3_7,     criterion_theorem_3_9,
          criterion_remark_4_5,      criterion_example_4_10,
          criterion_component_sandwich, criterion_bessel_bound,
          criterion_oracle_equivalence, criterion_perturbation,
          criterion_determinism};
}

inline CriterionResult run_timed(
    const std::function<CriterionResult(const Options&)>& fn, const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r = fn(o);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::vector<CriterionResult> run_all(const Options& o = {}) {
  std::vector<CriterionResult> out;
  for (const auto& fn : all_criteria()) out.push_back(run_timed(fn, o));
  return out;
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
     << " | measured: " << r.measured << " | expected: " << r.expected;
  return os.str();
}

inline Json to_json(const std::vector<CriterionResult>& rs) {
  Json arr = Json::array();
  for (const auto& r : rs) {
    Json j;
    j["criterion"] = r.id;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["measured"] = r.measured;
    j["expected"] = r.expected;
    arr.push_back(std::move(j));
  }
  Json doc;
  bool all = true;
  for (const auto& r : rs) all = all && r.passed;
  doc["all_passed"] = all;
  doc["criteria"] = std::move(arr);
  return doc;
}

}  // namespace superweave::acceptance

#endif  // SUPERWEAVE_ACCEPTANCE_HPP_
