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

#ifndef SUPERWEAVE_WEAVING_HPP_
#define SUPERWEAVE_WEAVING_HPP_

// Woven verdicts for families of frames and of superframes.
//
// A weaving of m families {f_k^i} under a partition p takes f_k^{p[k]} at
// every index k. The families are woven when every weaving is a frame (or,
// in Riesz mode, a Riesz sequence) with partition-independent bounds. Over
// a finite index set the optimal universal bounds are the min of the lower
// bounds and the max of the upper bounds over all m^n partitions.
//
// Indices where every family carries the identical vector do not affect the
// weaving, so the scan only enumerates the remaining "free" indices and
// pins the others to block 0. The result equals the scan over all m^n
// partitions.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "superweave/frame.hpp"
#include "superweave/linalg.hpp"
#include "superweave/partition.hpp"

namespace superweave {

enum class WeavingMode { kFrame, kRiesz };

inline const char* to_string(WeavingMode m) {
  return m == WeavingMode::kFrame ? "frame" : "riesz";
}

struct WeavingOptions {
  WeavingMode mode = WeavingMode::kFrame;
  // Exhaustive when the number of distinct weavings is <= limit.
  std::uint64_t limit = std::uint64_t{1} << 20;
  std::uint64_t samples = 4096;
  std::uint64_t seed = 0;
  double tol = kDefaultFrameTol;
  unsigned threads = 1;
  int descent_steps = 200;
  // Skip indices where all families agree (exact reduction).
  bool collapse_identical = true;
};

struct WeavingReport {
  double universal_lower = 0.0;
  double universal_upper = 0.0;
  WeavingMode mode = WeavingMode::kFrame;
  bool exhaustive = false;
  std::uint64_t partitions_checked = 0;
  std::optional<std::uint64_t> partitions_total;  // m^n, nullopt on overflow
  std::size_t free_indices = 0;
  std::size_t num_families = 0;
  PartitionAssignment worst_lower_partition;
  PartitionAssignment worst_upper_partition;
  std::optional<CVector> witness_vector;
  double tol = kDefaultFrameTol;

  bool woven() const { return above_cutoff(universal_lower, universal_upper, tol); }
};

struct SuperWeavingReport {
  WeavingReport joint;
  std::vector<WeavingReport> components;  // one per atomic space
};

namespace detail {

inline void check_families(std::span<const FrameFamily> families) {
  if (families.empty()) throw Error("weaving: no families given");
  const std::size_t n = families.front().size();
  const std::size_t d = families.front().dim();
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (families[i].size() != n || families[i].dim() != d) {
      throw Error("weaving: family " + std::to_string(i) + " has shape " +
                  std::to_string(families[i].dim()) + "x" +
                  std::to_string(families[i].size()) + ", expected " +
                  std::to_string(d) + "x" + std::to_string(n));
    }
  }
}

inline void check_partition(std::span<const FrameFamily> families,
                            const PartitionAssignment& p) {
  if (p.size() != families.front().size())
    throw Error("weaving: partition length does not match index count");
  if (p.num_blocks() != families.size())
    throw Error("weaving: partition block count does not match family count");
}

}  // namespace detail

/// Index-preserving selection: vector k comes from families[p[k]].
inline FrameFamily weave(std::span<const FrameFamily> families,
                         const PartitionAssignment& p) {
  detail::check_families(families);
  detail::check_partition(families, p);
  std::vector<CVector> out;
  out.reserve(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out.push_back(families[p[k]][k]);
  return FrameFamily(families.front().dim(), std::move(out));
}

/// Frame (or Riesz) bounds of one weaving.
inline BoundsReport weaving_bounds(std::span<const FrameFamily> families,
                                   const PartitionAssignment& p,
                                   WeavingMode mode,
                                   double tol = kDefaultFrameTol) {
  const FrameFamily w = weave(families, p);
  return mode == WeavingMode::kFrame ? frame_bounds(w, tol)
                                     : riesz_sequence_bounds(w, tol);
}

/// Evaluates extreme eigenvalues of weavings from precomputed pieces.
class WeavingEvaluator {
 public:
  WeavingEvaluator(std::span<const FrameFamily> families, WeavingMode mode)
      : families_(families.begin(), families.end()), mode_(mode) {
    detail::check_families(families_);
    m_ = families_.size();
    n_ = families_.front().size();
    d_ = families_.front().dim();
    if (mode_ == WeavingMode::kFrame) {
      outer_.reserve(m_ * n_);
      for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
          FrameFamily one(d_, {families_[i][k]});
          outer_.push_back(frame_operator(one));
        }
    } else {
      // cross_[(i*n + k) * m*n + (i2*n + j)] = <f_k^i, f_j^{i2}>
      const std::size_t mn = m_ * n_;
      cross_.resize(mn * mn);
      for (std::size_t a = 0; a < mn; ++a)
        for (std::size_t b = 0; b < mn; ++b)
          cross_[a * mn + b] =
              inner(families_[a / n_][a % n_], families_[b / n_][b % n_]);
    }
  }

  std::size_t num_families() const { return m_; }
  std::size_t size() const { return n_; }
  WeavingMode mode() const { return mode_; }
  std::span<const FrameFamily> families() const { return families_; }

  CMatrix matrix(const PartitionAssignment& p) const {
    if (mode_ == WeavingMode::kFrame) {
      CMatrix s(d_, d_);
      for (std::size_t k = 0; k < n_; ++k) s += outer_[p[k] * n_ + k];
      return s;
    }
    const std::size_t mn = m_ * n_;
    CMatrix g(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        g(j, k) = cross_[(p[k] * n_ + k) * mn + (p[j] * n_ + j)];
    return g;
  }

  std::pair<double, double> bounds(const PartitionAssignment& p) const {
    const EigenResult e = hermitian_eig(matrix(p), kDefaultEigTol, false);
    return {std::max(0.0, e.min()), std::max(0.0, e.max())};
  }

  /// Unit eigenvector of the smallest eigenvalue, phase-normalized so that
  /// its first largest-magnitude coordinate is real and positive.
  CVector lowest_eigenvector(const PartitionAssignment& p) const {
    const EigenResult e = hermitian_eig(matrix(p));
    CVector v = e.eigenvectors->column(0);
    double big = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) big = std::max(big, std::abs(v[i]));
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (std::abs(v[i]) >= big * (1.0 - 1e-9)) {
        v *= std::conj(v[i]) / std::abs(v[i]);
        v[i] = std::abs(v[i]);
        break;
      }
    }
    return v;
  }

 private:
  std::vector<FrameFamily> families_;
  WeavingMode mode_;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::vector<CMatrix> outer_;
  std::vector<Complex> cross_;
};

namespace detail {

struct Evaluated {
  PartitionAssignment partition;
  double lower = 0.0;
  double upper = 0.0;
};

inline std::vector<std::size_t> free_positions(
    std::span<const FrameFamily> families, bool collapse) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < families.front().size(); ++k) {
    bool all_same = collapse;
    for (std::size_t i = 1; all_same && i < families.size(); ++i)
      all_same = families[i][k] == families[0][k];
    if (!all_same) out.push_back(k);
  }
  return out;
}

// Evaluates every partition of `batch` in place; results do not depend on
// the thread count because each slot is written by exactly one worker.
inline void evaluate_batch(const WeavingEvaluator& ev,
                           std::vector<Evaluated>& batch, unsigned threads) {
  const std::size_t count = batch.size();
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      auto [lo, hi] = ev.bounds(batch[r].partition);
      batch[r].lower = lo;
      batch[r].upper = hi;
    }
  };
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (t == 1) {
    work(0, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + t - 1) / t;
  for (std::size_t w = 0; w < t; ++w) {
    const std::size_t b = w * chunk;
    const std::size_t e = std::min(count, b + chunk);
    if (b < e) pool.emplace_back(work, b, e);
  }
  for (auto& th : pool) th.join();
}

inline PartitionAssignment assignment_from_digits(
    std::uint64_t rank, const std::vector<std::size_t>& free, std::size_t n,
    std::size_t m) {
  std::vector<std::uint32_t> blocks(n, 0);
  for (std::size_t f = free.size(); f-- > 0;) {
    blocks[free[f]] = static_cast<std::uint32_t>(rank % m);
    rank /= m;
  }
  return PartitionAssignment(std::move(blocks), m);
}

inline WeavingReport aggregate(const WeavingEvaluator& ev,
                               const std::vector<Evaluated>& all,
                               const WeavingOptions& opt) {
  WeavingReport rep;
  rep.mode = opt.mode;
  rep.tol = opt.tol;
  rep.num_families = ev.num_families();
  rep.partitions_checked = all.size();
  rep.universal_lower = std::numeric_limits<double>::infinity();
  rep.universal_upper = 0.0;
  for (const Evaluated& e : all) {
    rep.universal_lower = std::min(rep.universal_lower, e.lower);
    rep.universal_upper = std::max(rep.universal_upper, e.upper);
  }
  // Near-ties (within the verdict tolerance) go to the colex-smallest
  // partition so that round-off never decides the witness.
  const double tie = opt.tol * std::max(1.0, rep.universal_upper);
  const Evaluated* lo_best = nullptr;
  const Evaluated* hi_best = nullptr;
  for (const Evaluated& e : all) {
    if (e.lower <= rep.universal_lower + tie &&
        (!lo_best || colex_less(e.partition, lo_best->partition)))
      lo_best = &e;
    if (e.upper >= rep.universal_upper - tie &&
        (!hi_best || colex_less(e.partition, hi_best->partition)))
      hi_best = &e;
  }
  rep.worst_lower_partition = lo_best->partition;
  rep.worst_upper_partition = hi_best->partition;
  if (!rep.woven()) {
    rep.witness_vector = ev.lowest_eigenvector(rep.worst_lower_partition);
  }
  return rep;
}

}  // namespace detail

/// Universal bounds over all weavings of `families`; exhaustive when the
/// number of distinct weavings fits under opt.limit, otherwise seeded
/// sampling plus greedy single-index descent from the worst sample.
inline WeavingReport weaving_check(std::span<const FrameFamily> families,
                                   const WeavingOptions& opt = {}) {
  detail::check_families(families);
  if (opt.limit == 0 && opt.samples == 0)
    throw Error("weaving_check: limit and samples are both zero");
  const WeavingEvaluator ev(families, opt.mode);
  const std::size_t n = ev.size();
  const std::size_t m = ev.num_families();
  const std::vector<std::size_t> free =
      detail::free_positions(families, opt.collapse_identical);
  const std::optional<std::uint64_t> distinct = partition_count(free.size(), m);

  std::vector<detail::Evaluated> all;
  bool exhaustive = false;
  if (distinct && *distinct <= opt.limit) {
    exhaustive = true;
    all.resize(*distinct);
    for (std::uint64_t r = 0; r < *distinct; ++r)
      all[r].partition = detail::assignment_from_digits(r, free, n, m);
    detail::evaluate_batch(ev, all, opt.threads);
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint32_t> pick(
        0, static_cast<std::uint32_t>(m - 1));
    std::vector<detail::Evaluated> batch;
    for (std::uint32_t b = 0; b < m; ++b)
      batch.push_back({PartitionAssignment::constant(n, m, b)});
    for (std::uint64_t s = 0; s < opt.samples; ++s) {
      std::vector<std::uint32_t> blocks(n, 0);
      for (std::size_t k : free) blocks[k] = pick(rng);
      batch.push_back({PartitionAssignment(std::move(blocks), m)});
    }
    detail::evaluate_batch(ev, batch, opt.threads);
    all = std::move(batch);

    std::size_t cur = 0;
    for (std::size_t r = 1; r < all.size(); ++r)
      if (all[r].lower < all[cur].lower) cur = r;
    detail::Evaluated current = all[cur];
    for (int step = 0; step < opt.descent_steps; ++step) {
      std::vector<detail::Evaluated> nbrs;
      for (std::size_t k : free)
        for (std::uint32_t b = 0; b < m; ++b) {
          if (b == current.partition[k]) continue;
          PartitionAssignment p = current.partition;
          p[k] = b;
          nbrs.push_back({std::move(p)});
        }
      if (nbrs.empty()) break;
      detail::evaluate_batch(ev, nbrs, opt.threads);
      std::size_t best = 0;
      for (std::size_t r = 1; r < nbrs.size(); ++r)
        if (nbrs[r].lower < nbrs[best].lower) best = r;
      const bool improved = nbrs[best].lower < current.lower;
      const detail::Evaluated next = nbrs[best];
      all.insert(all.end(), nbrs.begin(), nbrs.end());
      if (!improved) break;
      current = next;
    }
  }

  WeavingReport rep = detail::aggregate(ev, all, opt);
  rep.exhaustive = exhaustive;
  rep.partitions_total = partition_count(n, m);
  rep.free_indices = free.size();
  return rep;
}

/// Joint verdict on the direct sums plus one report per atomic space.
inline SuperWeavingReport super_weaving_check(
    std::span<const SuperFrameFamily> supers, const WeavingOptions& opt = {}) {
  if (supers.empty()) throw Error("super_weaving_check: no superframes given");
  const auto dims = supers.front().component_dims();
  const std::size_t n = supers.front().size();
  for (std::size_t i = 0; i < supers.size(); ++i) {
    if (supers[i].component_dims() != dims || supers[i].size() != n) {
      throw Error("super_weaving_check: superframe " + std::to_string(i) +
                  " differs in component count, dims or index count");
    }
  }
  std::vector<FrameFamily> sums;
  for (const auto& s : supers) sums.push_back(direct_sum(s));
  SuperWeavingReport out;
  out.joint = weaving_check(sums, opt);
  for (std::size_t j = 0; j < dims.size(); ++j) {
    std::vector<FrameFamily> comp;
    for (const auto& s : supers) comp.push_back(s.component(j));
    out.components.push_back(weaving_check(comp, opt));
  }
  return out;
}

}  // namespace superweave

#endif  // SUPERWEAVE_WEAVING_HPP_
