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

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "algebra.hpp"
#include "canonical.hpp"
#include "decomposition.hpp"
#include "fixed_mask.hpp"
#include "parallel.hpp"

namespace sg {

struct SearchOptions {
  int threads = 1;
  /// 0 selects the operation's default budget.
  std::uint64_t budget = 0;
  /// For 7..9 powerful voters: once bounded layering shows the value
  /// exceeds 2, search layers 0..2 for a witness of 3 (raising the lower
  /// bound to 4 when none exists).
  bool certify_third_layer = false;
};

enum class ClosureKind { median, chi };

inline const char* to_string(ClosureKind k) { return k == ClosureKind::median ? "median" : "chi"; }

/// Games grouped by the iteration at which the closure first produces them.
struct LayeredUniverse {
  int n = 0;
  ClosureKind kind = ClosureKind::median;
  std::vector<std::vector<Game>> layers;
  std::unordered_map<Game, int> index;
  /// Stopped at the layer cap rather than by exhaustion.
  bool bounded = false;

  std::optional<int> layer_of(const Game& g) const {
    auto it = index.find(g);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const { return index.size(); }
  int top_layer() const { return static_cast<int>(layers.size()) - 1; }

  /// Every member of layers 0..k, in layer order.
  std::vector<Game> members_through(int k) const {
    std::vector<Game> out;
    for (int i = 0; i <= k && i < static_cast<int>(layers.size()); ++i) {
      out.insert(out.end(), layers[static_cast<std::size_t>(i)].begin(), layers[static_cast<std::size_t>(i)].end());
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Oracle: self-dual monotone functions by choosing one winner per
// complementary pair.

namespace detail {

inline std::vector<std::uint64_t> enumerate_selfdual_masks(int n) {
  const Coalition full = full_coalition(n);
  std::vector<Coalition> reps;
  for (Coalition a = 0; a <= full; ++a) {
    if (!(a & voter_bit(n - 1))) reps.push_back(a);
  }
  std::stable_sort(reps.begin(), reps.end(), [](Coalition a, Coalition b) { return std::popcount(a) < std::popcount(b); });
  std::uint64_t value = 0, assigned = 0;
  std::vector<std::uint64_t> out;
  auto consistent = [&](Coalition x) {
    const bool wx = (value >> x) & 1u;
    for (int v = 0; v < n; ++v) {
      const Coalition b = x ^ voter_bit(v);
      if (!((assigned >> b) & 1u)) continue;
      const bool wb = (value >> b) & 1u;
      if (x & voter_bit(v)) {
        if (wb && !wx) return false;
      } else if (wx && !wb) {
        return false;
      }
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == reps.size()) {
      out.push_back(value);
      return;
    }
    const Coalition a = reps[k], ac = full ^ a;
    assigned |= (std::uint64_t{1} << a) | (std::uint64_t{1} << ac);
    for (Coalition winner : {a, ac}) {
      value |= std::uint64_t{1} << winner;
      if (consistent(a) && consistent(ac)) self(self, k + 1);
      value &= ~(std::uint64_t{1} << winner);
    }
    assigned &= ~((std::uint64_t{1} << a) | (std::uint64_t{1} << ac));
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Every ipsodual game on n labeled voters, ordered by mask.
inline std::vector<Game> enumerate_ipsodual(int n) {
  detail::check_voter_count(n, kMaxEnumerationVoters);
  std::vector<Game> out;
  for (std::uint64_t m : detail::enumerate_selfdual_masks(n)) out.push_back(detail::make_game(n, {m}));
  return out;
}

// ---------------------------------------------------------------------------
// Layered closures

namespace detail {

template <std::size_t W>
std::vector<std::vector<FixedMask<W>>> closure_layers(int n, ClosureKind kind, int max_layer,
                                                      std::optional<std::size_t> target, int threads) {
  using Mask = FixedMask<W>;
  std::vector<Mask> dictators;
  for (int v = 1; v <= n; ++v) dictators.push_back(Mask::from_game(Game::dictator(n, v)));
  std::vector<std::vector<Mask>> layers;
  std::vector<Mask> all;
  std::unordered_set<Mask, FixedMaskHash> known;
  auto sorted_dicts = dictators;
  std::sort(sorted_dicts.begin(), sorted_dicts.end());
  layers.push_back(sorted_dicts);
  all = sorted_dicts;
  known.insert(all.begin(), all.end());

  const int workers = std::max(threads, 1);
  for (int k = 1; max_layer < 0 || k <= max_layer; ++k) {
    if (target && known.size() >= *target) break;
    const std::size_t begin = all.size() - layers.back().size();
    const std::size_t end = all.size();
    std::unordered_set<Mask, FixedMaskHash> fresh;
    const std::size_t chunk = static_cast<std::size_t>(workers) * 4;
    for (std::size_t lo = begin; lo < end; lo += chunk) {
      const std::size_t hi = std::min(end, lo + chunk);
      std::vector<std::unordered_set<Mask, FixedMaskHash>> local(static_cast<std::size_t>(workers));
      parallel_for(lo, hi, workers, [&](std::size_t top, int w) {
        auto& out = local[static_cast<std::size_t>(w)];
        const Mask& c = all[top];
        auto record = [&](const Mask& m) {
          if (!known.count(m) && !fresh.count(m)) out.insert(m);
        };
        if (kind == ClosureKind::median) {
          for (std::size_t j = 0; j < top; ++j) {
            const Mask& b = all[j];
            const Mask bc_and = b & c, bc_or = b | c;
            for (std::size_t i = 0; i < j; ++i) record(bc_and | (all[i] & bc_or));
          }
        } else {
          for (std::size_t i = 0; i < top; ++i) {
            const Mask both = all[i] & c, either = all[i] | c;
            for (const Mask& d : dictators) record(both | (either & d));
          }
        }
      });
      for (auto& s : local) fresh.insert(s.begin(), s.end());
      if (target && known.size() + fresh.size() >= *target) break;
    }
    if (fresh.empty()) break;
    std::vector<Mask> layer(fresh.begin(), fresh.end());
    std::sort(layer.begin(), layer.end());
    all.insert(all.end(), layer.begin(), layer.end());
    known.insert(layer.begin(), layer.end());
    layers.push_back(std::move(layer));
  }
  return layers;
}

inline LayeredUniverse build_universe(ClosureKind kind, int n, int max_layer, int threads) {
  if (max_layer < 0) {
    detail::check_voter_count(n, kMaxClosureVoters);
  } else if (n > kMaxClosureVoters) {
    detail::check_voter_count(n, kMaxBoundedClosureVoters);
    if (max_layer > kMaxBoundedLayer) {
      throw game_error(errc::too_large, "closure on " + std::to_string(n) + " voters is capped at layer " +
                                            std::to_string(kMaxBoundedLayer));
    }
  } else {
    detail::check_voter_count(n, kMaxClosureVoters);
  }
  std::optional<std::size_t> target;
  if (n <= kMaxEnumerationVoters) target = detail::enumerate_selfdual_masks(n).size();
  LayeredUniverse u;
  u.n = n;
  u.kind = kind;
  with_mask_width(n, [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    auto layers = closure_layers<W>(n, kind, max_layer, target, threads);
    for (auto& layer : layers) {
      std::vector<Game> games;
      games.reserve(layer.size());
      for (const auto& m : layer) games.push_back(m.to_game(n));
      u.layers.push_back(std::move(games));
    }
  });
  for (std::size_t k = 0; k < u.layers.size(); ++k) {
    for (const Game& g : u.layers[k]) u.index.emplace(g, static_cast<int>(k));
  }
  u.bounded = !(target && u.size() == *target) && max_layer >= 0 && u.top_layer() == max_layer;
  return u;
}

}  // namespace detail

/// Layer k holds the games first obtained as a median of three games from
/// layers below k; layer 0 holds the dictatorships. max_layer < 0 runs to
/// exhaustion (n ≤ 6); otherwise n ≤ 9 with max_layer ≤ 2.
inline LayeredUniverse close_under_median(int n, int max_layer = -1, const SearchOptions& opts = {}) {
  return detail::build_universe(ClosureKind::median, n, max_layer, opts.threads);
}

/// As close_under_median, with χ_a over every voter a as the step.
inline LayeredUniverse close_under_chi(int n, int max_layer = -1, const SearchOptions& opts = {}) {
  return detail::build_universe(ClosureKind::chi, n, max_layer, opts.threads);
}

/// Process-wide memo of closures; results do not depend on thread count.
inline std::shared_ptr<const LayeredUniverse> shared_closure(ClosureKind kind, int n, int max_layer,
                                                              const SearchOptions& opts = {}) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const LayeredUniverse>> cache;
  if (n <= kMaxClosureVoters) max_layer = -1;
  const auto key = std::tuple{static_cast<int>(kind), n, max_layer};
  std::lock_guard lock(mu);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto u = std::make_shared<const LayeredUniverse>(detail::build_universe(kind, n, max_layer, opts.threads));
  cache.emplace(key, u);
  return u;
}

// ---------------------------------------------------------------------------
// Inverse searches

namespace detail {

inline std::uint64_t budget_or(const SearchOptions& opts, std::uint64_t fallback) {
  return opts.budget == 0 ? fallback : opts.budget;
}

inline void require_pool(const Game& s, std::span<const Game> pool) {
  for (const Game& g : pool) require_same_voters(s, g);
}

}  // namespace detail

/// Some (A, B, C) from the pool with m(A, B, C) = S. Pairs are filtered by
/// A∩B ⊆ S ⊆ A∪B; C must then agree with S wherever A and B differ. The
/// lexicographically first pair (by pool index) is returned.
inline std::optional<std::array<Game, 3>> inverse_median_search(const Game& s, std::span<const Game> pool,
                                                                const SearchOptions& opts = {}) {
  detail::require_pool(s, pool);
  if (pool.empty()) return std::nullopt;
  const std::uint64_t budget = detail::budget_or(opts, kDefaultPairBudget);
  const std::size_t p = pool.size();
  if (static_cast<double>(p) * static_cast<double>(p + 1) / 2 > static_cast<double>(budget)) {
    throw game_error(errc::budget_exceeded, "pool of " + std::to_string(p) + " games exceeds the pair budget");
  }
  return with_mask_width(s.voters(), [&](auto width) -> std::optional<std::array<Game, 3>> {
    constexpr std::size_t W = decltype(width)::value;
    using Mask = FixedMask<W>;
    const Mask target = Mask::from_game(s);
    std::vector<Mask> masks;
    for (const Game& g : pool) masks.push_back(Mask::from_game(g));
    const int workers = std::max(opts.threads, 1);
    std::vector<std::optional<std::array<std::size_t, 3>>> found(p);
    const std::size_t chunk = static_cast<std::size_t>(workers) * 8;
    for (std::size_t lo = 0; lo < p; lo += chunk) {
      const std::size_t hi = std::min(p, lo + chunk);
      detail::parallel_for(lo, hi, workers, [&](std::size_t i, int) {
        const Mask& a = masks[i];
        for (std::size_t j = i; j < p; ++j) {
          const Mask& b = masks[j];
          if (!andnot(a & b, target).none() || !andnot(target, a | b).none()) continue;
          const Mask diff = a ^ b;
          for (std::size_t k = 0; k < p; ++k) {
            if (((masks[k] ^ target) & diff).none()) {
              found[i] = std::array<std::size_t, 3>{i, j, k};
              return;
            }
          }
        }
      });
      for (std::size_t i = lo; i < hi; ++i) {
        if (found[i]) {
          const auto [a, b, c] = *found[i];
          return std::array<Game, 3>{pool[a], pool[b], pool[c]};
        }
      }
    }
    return std::nullopt;
  });
}

struct ChiWitness {
  int voter;
  Game first;
  Game second;
};

/// Some voter a and pool games X, Y with χ_a(X, Y) = S.
inline std::optional<ChiWitness> inverse_chi_search(const Game& s, std::span<const Game> pool,
                                                   const SearchOptions& opts = {}) {
  detail::require_pool(s, pool);
  if (pool.empty()) return std::nullopt;
  const std::uint64_t budget = detail::budget_or(opts, kDefaultPairBudget);
  const std::size_t p = pool.size();
  if (static_cast<double>(p) * static_cast<double>(s.voters()) > static_cast<double>(budget)) {
    throw game_error(errc::budget_exceeded, "pool of " + std::to_string(p) + " games exceeds the search budget");
  }
  return with_mask_width(s.voters(), [&](auto width) -> std::optional<ChiWitness> {
    constexpr std::size_t W = decltype(width)::value;
    using Mask = FixedMask<W>;
    const Mask target = Mask::from_game(s);
    std::vector<Mask> masks;
    for (const Game& g : pool) masks.push_back(Mask::from_game(g));
    for (int a = 1; a <= s.voters(); ++a) {
      const Mask with_a = Mask::from_game(Game::dictator(s.voters(), a));
      const Mask all = Mask::from_game(Game::hat1(s.voters()));
      const Mask without_a = andnot(all, with_a);
      // First game: must win where S wins without a, must lose where S loses with a.
      const Mask must_win = andnot(target, with_a);
      const Mask must_lose = andnot(with_a, target);
      std::vector<std::optional<std::size_t>> partner(p);
      detail::parallel_for(0, p, opts.threads, [&](std::size_t i, int) {
        const Mask& x = masks[i];
        if (!andnot(must_win, x).none() || !(x & must_lose).none()) return;
        const Mask care = (without_a & (target | x)) | (with_a & andnot(all, target & x));
        for (std::size_t j = 0; j < p; ++j) {
          if (((masks[j] ^ target) & care).none()) {
            partner[i] = j;
            return;
          }
        }
      });
      for (std::size_t i = 0; i < p; ++i) {
        if (partner[i]) return ChiWitness{a, pool[i], pool[*partner[i]]};
      }
    }
    return std::nullopt;
  });
}

/// A map f from the voters of `t` to the voters of `s` with quotient(t, f)
/// = s, found by depth-first assignment of offices. A partial map is cut as
/// soon as some coalition's outcome is already forced to disagree with s.
inline std::optional<VoterMap> is_quotient(const Game& s, const Game& t, const SearchOptions& opts = {}) {
  const int m = t.voters();
  const int n = s.voters();
  if (m > kMaxPermutationVoters) {
    throw game_error(errc::too_large, "source game has " + std::to_string(m) + " voters");
  }
  const std::uint64_t budget = detail::budget_or(opts, kDefaultQuotientBudget);
  const std::size_t count = std::size_t{1} << n;
  const Coalition all_offices = detail::full_coalition(m);
  // preimage[d][A]: offices among the first d whose voter lies in A.
  std::vector<std::vector<Coalition>> preimage(static_cast<std::size_t>(m + 1), std::vector<Coalition>(count, 0));
  std::vector<int> image(static_cast<std::size_t>(m), 0);
  std::uint64_t nodes = 0;
  auto feasible = [&](int d) {
    const Coalition unassigned = all_offices & ~detail::full_coalition(d);
    const auto& pre = preimage[static_cast<std::size_t>(d)];
    for (std::size_t a = 0; a < count; ++a) {
      const bool wins = s.wins(static_cast<Coalition>(a));
      if (!wins && t.wins(pre[a])) return false;
      if (wins && !t.wins(pre[a] | unassigned)) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, int d) -> bool {
    if (++nodes > budget) {
      throw game_error(errc::budget_exceeded, "quotient search exceeded " + std::to_string(budget) + " nodes");
    }
    if (!feasible(d)) return false;
    if (d == m) return true;
    for (int v = 0; v < n; ++v) {
      image[static_cast<std::size_t>(d)] = v;
      const auto& prev = preimage[static_cast<std::size_t>(d)];
      auto& next = preimage[static_cast<std::size_t>(d + 1)];
      for (std::size_t a = 0; a < count; ++a) next[a] = prev[a] | ((a >> v) & 1u ? voter_bit(d) : 0);
      if (self(self, d + 1)) return true;
    }
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  return VoterMap(n, image);
}

// ---------------------------------------------------------------------------
// Weight and depth

struct MeasureBounds {
  int lower = 0;
  std::optional<int> upper;
  bool exact() const { return upper && *upper == lower; }
};

namespace detail {

inline MeasureBounds measure_bounds(ClosureKind kind, const Game& s, const SearchOptions& opts);

/// 1 + the largest part upper bound over the canonical split of s
/// (substitution triple or choice split), when every part has one.
inline std::optional<int> split_upper_bound(ClosureKind kind, const Game& s, const SearchOptions& opts) {
  std::vector<Game> parts;
  try {
    if (kind == ClosureKind::median) {
      const auto triple = median_decompose(s);
      parts.assign(triple.begin(), triple.end());
    } else {
      const auto split = chi_decompose(s);
      parts = {split.joined, split.opposed};
    }
  } catch (const game_error&) {
    return std::nullopt;
  }
  SearchOptions plain = opts;
  plain.certify_third_layer = false;
  int worst = 0;
  for (const Game& p : parts) {
    const auto b = measure_bounds(kind, p, plain);
    if (!b.upper) return std::nullopt;
    worst = std::max(worst, *b.upper);
  }
  return worst + 1;
}

inline MeasureBounds measure_bounds(ClosureKind kind, const Game& s, const SearchOptions& opts) {
  if (!is_ipsodual(s)) throw game_error(errc::not_ipsodual, std::string(to_string(kind)) + " layering needs an ipsodual game");
  const Game core = strip_dummies(s).game;
  const int k = core.voters();
  if (k <= kMaxClosureVoters) {
    const auto u = shared_closure(kind, k, -1, opts);
    const auto layer = u->layer_of(core);
    if (!layer) throw std::logic_error("ipsodual game missing from its closure");
    return {*layer, *layer};
  }
  if (k > kMaxBoundedClosureVoters) {
    throw game_error(errc::too_large, std::to_string(k) + " powerful voters exceeds the bounded closure range");
  }
  const auto u = shared_closure(kind, k, kMaxBoundedLayer, opts);
  if (const auto layer = u->layer_of(core)) return {*layer, *layer};
  MeasureBounds b{kMaxBoundedLayer + 1, split_upper_bound(kind, core, opts)};
  if (opts.certify_third_layer && !b.exact()) {
    const auto pool = u->members_through(kMaxBoundedLayer);
    const bool found = kind == ClosureKind::median ? inverse_median_search(core, pool, opts).has_value()
                                                   : inverse_chi_search(core, pool, opts).has_value();
    if (found) {
      b.upper = kMaxBoundedLayer + 1;
    } else {
      b.lower = kMaxBoundedLayer + 2;
    }
  }
  return b;
}

inline int exact_measure(ClosureKind kind, const Game& s, const SearchOptions& opts) {
  const auto b = measure_bounds(kind, s, opts);
  if (!b.exact()) {
    throw unresolved_error(b.lower, std::string(to_string(kind)) + " layer is at least " + std::to_string(b.lower));
  }
  return b.lower;
}

}  // namespace detail

/// Median iterations needed from the dictatorships; dummies are ignored.
inline MeasureBounds weight_bounds(const Game& s, const SearchOptions& opts = {}) {
  return detail::measure_bounds(ClosureKind::median, s, opts);
}

/// Choice iterations needed from the dictatorships (minimum game-tree height).
inline MeasureBounds depth_bounds(const Game& s, const SearchOptions& opts = {}) {
  return detail::measure_bounds(ClosureKind::chi, s, opts);
}

inline int weight(const Game& s, const SearchOptions& opts = {}) {
  return detail::exact_measure(ClosureKind::median, s, opts);
}

inline int depth(const Game& s, const SearchOptions& opts = {}) {
  return detail::exact_measure(ClosureKind::chi, s, opts);
}

/// W(1..n_max): the largest weight of an n-voter ipsodual game.
inline std::vector<int> W_table(int n_max, const SearchOptions& opts = {}) {
  detail::check_voter_count(n_max, kMaxClosureVoters);
  std::vector<int> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(shared_closure(ClosureKind::median, n, -1, opts)->top_layer());
  return out;
}

/// D(1..n_max): the largest depth of an n-voter ipsodual game.
inline std::vector<int> D_table(int n_max, const SearchOptions& opts = {}) {
  detail::check_voter_count(n_max, kMaxClosureVoters);
  std::vector<int> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(shared_closure(ClosureKind::chi, n, -1, opts)->top_layer());
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism census

/// Canonical forms of the ipsodual games whose voters are all powerful,
/// keyed by voter count 1..n_powerful_max.
inline std::map<int, std::vector<Game>> iso_census(int n_powerful_max) {
  detail::check_voter_count(n_powerful_max, kMaxEnumerationVoters);
  std::map<int, std::vector<Game>> out;
  for (int k = 1; k <= n_powerful_max; ++k) {
    std::set<Game> classes;
    for (const Game& g : enumerate_ipsodual(k)) {
      if (powerful_voters(g) == detail::full_coalition(k)) classes.insert(canonical_form(g));
    }
    out[k] = std::vector<Game>(classes.begin(), classes.end());
  }
  return out;
}

}  // namespace sg
