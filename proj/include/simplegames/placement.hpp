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

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "expr.hpp"
#include "fixed_mask.hpp"

namespace sg {

/// Where one catalog leaf of an expression landed: voter i of the leaf's
/// own game sits at target voter image[i] (both 0-based; dummies omitted).
struct LeafPlacement {
  std::string text;
  std::vector<std::pair<int, int>> image;
  Game placed;
};

struct PlacementSolution {
  Game value;
  std::vector<LeafPlacement> leaves;
};

namespace detail {

inline void for_each_injection(int k, int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> image(static_cast<std::size_t>(k));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto go = [&](auto&& self, int i) -> void {
    if (i == k) {
      f(image);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      image[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  go(go, 0);
}

template <std::size_t W>
class PlacementSolver {
 public:
  using Mask = FixedMask<W>;

  PlacementSolver(const GameExpr& e, int n, const NamedResolver& resolve, std::uint64_t budget, bool relabel_quota)
      : n_(n), budget_(budget), relabel_quota_(relabel_quota) {
    all_ = Mask::from_game(Game::hat1(n));
    root_ = build(e, resolve);
  }

  std::optional<PlacementSolution> solve(const Game& target) {
    const Mask t = Mask::from_game(target);
    std::optional<PlacementSolution> out;
    run(root_, all_, t, [&](const Mask& value) {
      PlacementSolution s{value.to_game(n_), {}};
      for (const auto& leaf : leaves_) {
        const auto& c = leaf.candidates[leaf.chosen];
        s.leaves.push_back(LeafPlacement{leaf.text, c.image, c.mask.to_game(n_)});
      }
      out = std::move(s);
      return true;
    });
    return out;
  }

 private:
  struct Candidate {
    Mask mask;
    std::vector<std::pair<int, int>> image;
  };
  struct Leaf {
    std::string text;
    std::vector<Candidate> candidates;
    std::size_t chosen = 0;
  };
  struct Node {
    enum class Kind { fixed, free, median, chi } kind;
    Mask value{};
    Mask dict{};
    std::size_t leaf = 0;
    std::vector<int> children;
  };
  using Cont = std::function<bool(const Mask&)>;

  bool is_free(const GameExpr& e) const {
    return e.kind() == GameExpr::Kind::named || (relabel_quota_ && e.kind() == GameExpr::Kind::quota);
  }

  bool has_free(const GameExpr& e) const {
    if (is_free(e)) return true;
    for (const auto& a : e.args()) {
      if (has_free(a)) return true;
    }
    return false;
  }

  int build(const GameExpr& e, const NamedResolver& resolve) {
    Node node;
    if (!has_free(e)) {
      node.kind = Node::Kind::fixed;
      node.value = Mask::from_game(evaluate(e, n_, resolve));
    } else if (is_free(e)) {
      node.kind = Node::Kind::free;
      node.leaf = leaves_.size();
      const Game base = e.kind() == GameExpr::Kind::named ? resolve(e.name(), e.primes()) : compile(e.quota_game());
      leaves_.push_back(Leaf{e.format(), candidates_for(base), 0});
    } else if (e.kind() == GameExpr::Kind::median || e.kind() == GameExpr::Kind::chi) {
      node.kind = e.kind() == GameExpr::Kind::median ? Node::Kind::median : Node::Kind::chi;
      if (node.kind == Node::Kind::chi) node.dict = Mask::from_game(Game::dictator(n_, e.voter()));
      for (const auto& a : e.args()) node.children.push_back(build(a, resolve));
    } else {
      throw game_error(errc::parse_error, "placement search supports only m and chi above catalog leaves");
    }
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

  std::vector<Candidate> candidates_for(const Game& g) {
    if (g.voters() > n_) {
      throw game_error(errc::mismatched_voter_count, "leaf has more voters than the target");
    }
    const auto powerful = voters_of(powerful_voters(g));
    const int k = static_cast<int>(powerful.size());
    std::vector<Candidate> out;
    std::unordered_set<Mask, FixedMaskHash> seen;
    for_each_injection(k, n_, [&](const std::vector<int>& image) {
      std::vector<int> full(static_cast<std::size_t>(g.voters()), image.empty() ? 0 : image.front());
      for (int i = 0; i < k; ++i) full[static_cast<std::size_t>(powerful[static_cast<std::size_t>(i)] - 1)] = image[static_cast<std::size_t>(i)];
      const Mask m = Mask::from_game(quotient(g, VoterMap(n_, full)));
      if (!seen.insert(m).second) return;
      Candidate c{m, {}};
      for (int i = 0; i < k; ++i) c.image.emplace_back(powerful[static_cast<std::size_t>(i)] - 1, image[static_cast<std::size_t>(i)]);
      out.push_back(std::move(c));
    });
    return out;
  }

  void tick() {
    if (++steps_ > budget_) {
      throw game_error(errc::budget_exceeded, "placement search exceeded " + std::to_string(budget_) + " steps");
    }
  }

  static bool agrees(const Mask& x, const Mask& care, const Mask& val) { return ((x ^ val) & care).none(); }

  // Calls k(x) for every value x of node `id` agreeing with val on care.
  bool run(int id, const Mask& care, const Mask& val, const Cont& k) {
    const Node& node = nodes_[static_cast<std::size_t>(id)];
    switch (node.kind) {
      case Node::Kind::fixed:
        tick();
        return agrees(node.value, care, val) && k(node.value);
      case Node::Kind::free: {
        Leaf& leaf = leaves_[node.leaf];
        for (std::size_t i = 0; i < leaf.candidates.size(); ++i) {
          tick();
          if (!agrees(leaf.candidates[i].mask, care, val)) continue;
          leaf.chosen = i;
          if (k(leaf.candidates[i].mask)) return true;
        }
        return false;
      }
      case Node::Kind::chi: {
        const Mask& d = node.dict;
        const Mask off = andnot(all_, d);
        // Off the mover's coalitions the choice is x∧y, on them x∨y.
        const Mask x_care = care & ((off & val) | andnot(d, val));
        return run(node.children[0], x_care, val, [&](const Mask& x) {
          const Mask y_care = care & ((off & (val | x)) | (d & andnot(all_, val & x)));
          return run(node.children[1], y_care, val, [&](const Mask& y) { return k(majority(x, y, d)); });
        });
      }
      case Node::Kind::median:
        return run(node.children[0], Mask{}, val, [&](const Mask& x) {
          return run(node.children[1], care & (x ^ val), val, [&](const Mask& y) {
            return run(node.children[2], care & (x ^ y), val, [&](const Mask& z) { return k(majority(x, y, z)); });
          });
        });
    }
    return false;
  }

  int n_;
  std::uint64_t budget_;
  bool relabel_quota_;
  std::uint64_t steps_ = 0;
  Mask all_{};
  std::vector<Node> nodes_;
  std::vector<Leaf> leaves_;
  int root_ = 0;
};

}  // namespace detail

/// Places every catalog leaf of `e` by an injective relabeling of its
/// powerful voters onto the target's voters so that `e` evaluates to
/// `target` exactly. Quota and dictator leaves stay where they are unless
/// relabel_quota is set, in which case quota leaves move too.
inline std::optional<PlacementSolution> solve_placement(const GameExpr& e, const Game& target,
                                                        const NamedResolver& resolve, std::uint64_t budget,
                                                        bool relabel_quota = false) {
  return with_mask_width(target.voters(), [&](auto width) -> std::optional<PlacementSolution> {
    constexpr std::size_t W = decltype(width)::value;
    return detail::PlacementSolver<W>(e, target.voters(), resolve, budget, relabel_quota).solve(target);
  });
}

}  // namespace sg
