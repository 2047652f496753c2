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

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "algebra.hpp"

namespace sg {

/// Perfect-information game tree. Internal nodes name the player to move,
/// leaves name the winner. Subtrees may be shared.
class GameTree {
 public:
  struct Node {
    int label;
    std::vector<std::shared_ptr<const Node>> children;
  };
  using NodePtr = std::shared_ptr<const Node>;

  explicit GameTree(NodePtr root) : root_(std::move(root)) {}

  static GameTree leaf(int label) { return GameTree(make_leaf(label)); }

  static NodePtr make_leaf(int label) { return std::make_shared<const Node>(Node{label, {}}); }

  static NodePtr make_node(int label, std::vector<NodePtr> children) {
    if (children.size() == 1) return children.front();
    if (children.empty()) throw game_error(errc::arity_mismatch, "internal node without children");
    return std::make_shared<const Node>(Node{label, std::move(children)});
  }

  /// Binary chain for a k-way choice: mover(mover(mover(c1,c2),c3),c4).
  static NodePtr make_binary_choice(int label, const std::vector<NodePtr>& children) {
    if (children.empty()) throw game_error(errc::arity_mismatch, "choice without options");
    NodePtr acc = children.front();
    for (std::size_t i = 1; i < children.size(); ++i) {
      acc = std::make_shared<const Node>(Node{label, {acc, children[i]}});
    }
    return acc;
  }

  const NodePtr& root() const noexcept { return root_; }

  int height() const {
    std::unordered_map<const Node*, int> memo;
    auto go = [&](auto&& self, const NodePtr& node) -> int {
      if (node->children.empty()) return 0;
      if (auto it = memo.find(node.get()); it != memo.end()) return it->second;
      int h = 0;
      for (const auto& c : node->children) h = std::max(h, self(self, c));
      return memo[node.get()] = h + 1;
    };
    return go(go, root_);
  }

  int max_label() const {
    std::unordered_map<const Node*, int> memo;
    auto go = [&](auto&& self, const NodePtr& node) -> int {
      if (auto it = memo.find(node.get()); it != memo.end()) return it->second;
      int m = node->label;
      for (const auto& c : node->children) m = std::max(m, self(self, c));
      return memo[node.get()] = m;
    };
    return go(go, root_);
  }

  /// Text form `1(2(4,5),3(6,7))`; a leaf is a bare label.
  std::string format() const {
    std::string out;
    auto go = [&](auto&& self, const NodePtr& node) -> void {
      out += std::to_string(node->label);
      if (node->children.empty()) return;
      out += '(';
      for (std::size_t i = 0; i < node->children.size(); ++i) {
        if (i > 0) out += ',';
        self(self, node->children[i]);
      }
      out += ')';
    };
    go(go, root_);
    return out;
  }

  /// Parses `label(child, ...)` and the alternative `(label; child, ...)`.
  static GameTree parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> NodePtr {
      throw game_error(errc::parse_error, why + " at offset " + std::to_string(pos) + " in tree '" +
                                              std::string(text) + "'");
    };
    auto skip = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&]() -> int {
      skip();
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos || pos - start > 4) fail("expected a label");
      return std::stoi(std::string(text.substr(start, pos - start)));
    };
    auto children = [&](auto&& node_fn) {
      std::vector<NodePtr> out;
      while (true) {
        out.push_back(node_fn());
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          return out;
        }
        fail("expected ',' or ')'");
      }
    };
    auto node = [&](auto&& self) -> NodePtr {
      skip();
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        const int label = number();
        skip();
        if (pos >= text.size() || text[pos] != ';') fail("expected ';'");
        ++pos;
        auto kids = children([&] { return self(self); });
        if (kids.size() < 2) fail("internal node needs at least two children");
        return std::make_shared<const Node>(Node{label, std::move(kids)});
      }
      const int label = number();
      skip();
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        auto kids = children([&] { return self(self); });
        if (kids.size() < 2) fail("internal node needs at least two children");
        return std::make_shared<const Node>(Node{label, std::move(kids)});
      }
      return make_leaf(label);
    };
    NodePtr root = node(node);
    skip();
    if (pos != text.size()) fail("trailing characters");
    return GameTree(std::move(root));
  }

 private:
  NodePtr root_;
};

/// Coalitions that can force the winner to be one of their members.
/// Multi-way choices fold left into binary choices by the same mover.
inline Game win_type(const GameTree& tree, int n) {
  detail::check_voter_count(n);
  std::unordered_map<const GameTree::Node*, Game> memo;
  auto go = [&](auto&& self, const GameTree::NodePtr& node) -> Game {
    if (auto it = memo.find(node.get()); it != memo.end()) return it->second;
    if (node->label < 1 || node->label > n) {
      throw game_error(errc::label_out_of_range,
                       "label " + std::to_string(node->label) + " not in 1.." + std::to_string(n));
    }
    Game result = Game::dictator(n, node->label);
    if (!node->children.empty()) {
      result = self(self, node->children.front());
      for (std::size_t i = 1; i < node->children.size(); ++i) {
        result = chi(node->label, result, self(self, node->children[i]));
      }
    }
    memo.emplace(node.get(), result);
    return result;
  };
  return go(go, tree.root());
}

}  // namespace sg
