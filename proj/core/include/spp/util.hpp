// Copyright 2026 The sppsolve Authors
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

#ifndef SPPSOLVE_UTIL_HPP
#define SPPSOLVE_UTIL_HPP

#include <bit>
#include <chrono>
#include <cstdint>
#include <vector>

namespace spp {

// Fixed-size bitset over [0, size). Used for element coverage masks and
// column membership sets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const noexcept { return size_; }

  bool test(int i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) noexcept {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  bool intersects(const Bitset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & other.words_[k]) return true;
    }
    return false;
  }

  void set_union(const Bitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      words_[k] |= other.words_[k];
    }
  }

  void set_difference(const Bitset& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      words_[k] &= ~other.words_[k];
    }
  }

  int count() const noexcept {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  // True when all of [0, size) is set.
  bool full() const noexcept { return count() == size_; }

  bool operator==(const Bitset& other) const noexcept {
    return size_ == other.size_ && words_ == other.words_;
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

class StopWatch {
 public:
  StopWatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace spp

#endif  // SPPSOLVE_UTIL_HPP
