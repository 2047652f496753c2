// Copyright 2026 The simplegames Authors
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

#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "game.hpp"

namespace sg {

/// Mask of W 64-bit words with value semantics, for search loops where the
/// voter count is fixed (W = 1 up to 6 voters, 2/4/8 for 7/8/9).
template <std::size_t W>
struct FixedMask {
  std::array<std::uint64_t, W> w{};

  friend FixedMask operator&(const FixedMask& a, const FixedMask& b) {
    FixedMask r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
  friend FixedMask operator|(const FixedMask& a, const FixedMask& b) {
    FixedMask r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = a.w[i] | b.w[i];
    return r;
  }
  friend FixedMask operator^(const FixedMask& a, const FixedMask& b) {
    FixedMask r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = a.w[i] ^ b.w[i];
    return r;
  }
  /// a & ~b
  friend FixedMask andnot(const FixedMask& a, const FixedMask& b) {
    FixedMask r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = a.w[i] & ~b.w[i];
    return r;
  }
  friend FixedMask majority(const FixedMask& a, const FixedMask& b, const FixedMask& c) {
    FixedMask r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = (a.w[i] & b.w[i]) | ((a.w[i] | b.w[i]) & c.w[i]);
    return r;
  }
  bool none() const {
    std::uint64_t acc = 0;
    for (auto x : w) acc |= x;
    return acc == 0;
  }
  bool test(Coalition c) const { return (w[c >> 6] >> (c & 63)) & 1u; }

  friend bool operator==(const FixedMask&, const FixedMask&) = default;
  /// Integer order (high word first), matching Game ordering.
  friend bool operator<(const FixedMask& a, const FixedMask& b) {
    for (std::size_t i = W; i-- > 0;) {
      if (a.w[i] != b.w[i]) return a.w[i] < b.w[i];
    }
    return false;
  }

  static FixedMask from_game(const Game& g) {
    FixedMask m;
    const auto words = g.words();
    for (std::size_t i = 0; i < words.size() && i < W; ++i) m.w[i] = words[i];
    return m;
  }

  Game to_game(int n) const {
    std::vector<std::uint64_t> words(detail::word_count(n));
    for (std::size_t i = 0; i < words.size(); ++i) words[i] = w[i];
    return detail::make_game(n, std::move(words));
  }
};

struct FixedMaskHash {
  template <std::size_t W>
  std::size_t operator()(const FixedMask<W>& m) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (auto x : m.w) {
      h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

/// Calls f(std::integral_constant<std::size_t, W>) with W words for n voters.
template <class F>
decltype(auto) with_mask_width(int n, F&& f) {
  switch (n) {
    case 1: case 2: case 3: case 4: case 5: case 6: return f(std::integral_constant<std::size_t, 1>{});
    case 7: return f(std::integral_constant<std::size_t, 2>{});
    case 8: return f(std::integral_constant<std::size_t, 4>{});
    case 9: return f(std::integral_constant<std::size_t, 8>{});
    default: break;
  }
  throw game_error(errc::too_large, std::to_string(n) + " voters is beyond the search engine's range");
}

}  // namespace sg
