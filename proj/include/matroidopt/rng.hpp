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

#ifndef MATROIDOPT_RNG_HPP
#define MATROIDOPT_RNG_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "matroidopt/types.hpp"

namespace matroidopt {

// Seedable generator with portable derived draws. The raw stream is
// std::mt19937_64, whose output sequence the standard pins down exactly;
// bounded draws use rejection sampling instead of
// std::uniform_int_distribution, whose mapping is implementation-defined.
// Same seed, same draws, on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased draw from {0, ..., n-1}.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw InputError("empty range for random draw");
    // Reject values under 2^64 mod n so every residue is equally likely.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % n;
    }
  }

  // Inclusive range draw.
  long long uniform_int(long long lo, long long hi) {
    if (lo > hi) throw InputError("empty range for random draw");
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<long long>(below(span));
  }

  // Fisher-Yates; consumes exactly size-1 bounded draws.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace matroidopt

#endif  // MATROIDOPT_RNG_HPP
