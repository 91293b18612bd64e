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

#ifndef SUPERWEAVE_PARTITION_HPP_
#define SUPERWEAVE_PARTITION_HPP_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superweave/linalg.hpp"

namespace superweave {

/// Assignment of every index k in [0, n) to one of m blocks. Block i holds
/// the indices sigma_i taken from the i-th family; empty blocks are allowed.
class PartitionAssignment {
 public:
  PartitionAssignment() = default;
  PartitionAssignment(std::vector<std::uint32_t> blocks, std::size_t num_blocks)
      : blocks_(std::move(blocks)), num_blocks_(num_blocks) {
    if (num_blocks_ == 0) throw Error("PartitionAssignment: m must be >= 1");
    for (std::uint32_t b : blocks_) {
      if (b >= num_blocks_) {
        throw Error("PartitionAssignment: block " + std::to_string(b) +
                    " out of range for m = " + std::to_string(num_blocks_));
      }
    }
  }

  /// Every index in block `block`.
  static PartitionAssignment constant(std::size_t n, std::size_t m,
                                      std::uint32_t block) {
    return PartitionAssignment(std::vector<std::uint32_t>(n, block), m);
  }

  std::size_t size() const { return blocks_.size(); }
  std::size_t num_blocks() const { return num_blocks_; }
  std::uint32_t operator[](std::size_t k) const { return blocks_[k]; }
  std::uint32_t& operator[](std::size_t k) { return blocks_[k]; }
  const std::vector<std::uint32_t>& blocks() const { return blocks_; }

  /// 0-based indices that belong to `block`.
  std::vector<std::size_t> indices_of(std::uint32_t block) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      if (blocks_[k] == block) out.push_back(k);
    return out;
  }

  /// Digits "0102..." when m <= 10, otherwise comma-separated block numbers.
  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (num_blocks_ <= 10) {
        s.push_back(static_cast<char>('0' + blocks_[k]));
      } else {
        if (k) s.push_back(',');
        s += std::to_string(blocks_[k]);
      }
    }
    return s;
  }

  friend bool operator==(const PartitionAssignment&,
                         const PartitionAssignment&) = default;

 private:
  std::vector<std::uint32_t> blocks_;
  std::size_t num_blocks_ = 1;
};

/// Colexicographic order: the last index is the most significant digit.
/// This is the tie-break order for worst-case witnesses.
inline bool colex_less(const PartitionAssignment& a,
                       const PartitionAssignment& b) {
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

/// m^n, or nullopt when it does not fit in 64 bits.
inline std::optional<std::uint64_t> partition_count(std::size_t n,
                                                    std::size_t m) {
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m != 0 && count > std::numeric_limits<std::uint64_t>::max() / m)
      return std::nullopt;
    count *= m;
  }
  return count;
}

/// The r-th assignment in lexicographic order (index 0 most significant).
inline PartitionAssignment partition_from_rank(std::uint64_t rank,
                                               std::size_t n, std::size_t m) {
  std::vector<std::uint32_t> blocks(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    blocks[k] = static_cast<std::uint32_t>(rank % m);
    rank /= m;
  }
  return PartitionAssignment(std::move(blocks), m);
}

/// Lexicographic stream of all m^n assignments.
class PartitionRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PartitionAssignment;
    using difference_type = std::ptrdiff_t;
    using pointer = const PartitionAssignment*;
    using reference = const PartitionAssignment&;

    iterator() = default;
    iterator(PartitionAssignment first, bool done)
        : current_(std::move(first)), done_(done) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      // Odometer increment from the last index.
      std::size_t k = current_.size();
      while (k-- > 0) {
        if (current_[k] + 1 < current_.num_blocks()) {
          ++current_[k];
          return *this;
        }
        current_[k] = 0;
      }
      done_ = true;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }

    friend bool operator==(const iterator& a, const iterator& b) {
      if (a.done_ || b.done_) return a.done_ == b.done_;
      return a.current_ == b.current_;
    }

   private:
    PartitionAssignment current_;
    bool done_ = true;
  };

  PartitionRange(std::size_t n, std::size_t m) : n_(n), m_(m) {}

  iterator begin() const {
    return iterator(PartitionAssignment::constant(n_, m_, 0), false);
  }
  iterator end() const { return iterator(); }

 private:
  std::size_t n_;
  std::size_t m_;
};

/// All m^n assignments, lexicographic (for n = 2, m = 2: 00, 01, 10, 11).
inline PartitionRange enumerate_partitions(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw Error("enumerate_partitions: need n >= 1, m >= 1");
  if (!partition_count(n, m)) {
    throw Error("enumerate_partitions: m^n = " + std::to_string(m) + "^" +
                std::to_string(n) +
                " overflows a 64-bit count; use sampled mode instead");
  }
  return PartitionRange(n, m);
}

}  // namespace superweave

#endif  // SUPERWEAVE_PARTITION_HPP_
