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
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "expr.hpp"
#include "game_tree.hpp"
#include "quota.hpp"

namespace sg {

/// Dem_3^d: majority of three copies of Dem_3^(d-1) on disjoint blocks.
/// Dem_3^0 is the one-voter game.
inline Game dem3_power(int d) {
  if (d < 0 || d > kMaxCatalogPower) {
    throw game_error(errc::too_large, "Dem_3^" + std::to_string(d) + " is outside 0.." + std::to_string(kMaxCatalogPower));
  }
  Game g = Game::dictator(1, 1);
  const Game maj = compile(QuotaGame{{1, 1, 1}, 2});
  for (int level = 1; level <= d; ++level) {
    const int block = g.voters();
    const int n = 3 * block;
    std::vector<Game> inner;
    for (int b = 0; b < 3; ++b) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = (v + b * block) % n;
      inner.push_back(relabel(with_voters(g, n), perm));
    }
    g = compound(maj, inner);
  }
  return g;
}

/// Complete binary tree of height k with nodes numbered breadth first
/// (children of i are 2i and 2i+1).
inline GameTree binary_tree(int k) {
  if (k < 0 || k > kMaxCatalogPower) {
    throw game_error(errc::too_large, "B_" + std::to_string(k) + " is outside 0.." + std::to_string(kMaxCatalogPower));
  }
  auto build = [&](auto&& self, int node, int level) -> GameTree::NodePtr {
    if (level == k) return GameTree::make_leaf(node);
    return GameTree::make_binary_choice(node, {self(self, 2 * node, level + 1), self(self, 2 * node + 1, level + 1)});
  };
  return GameTree(build(build, 1, 0));
}

inline Game bk_game(int k) {
  return win_type(binary_tree(k), (1 << (k + 1)) - 1);
}

/// Lines of the projective plane over Z_2, as 1-based triples.
inline constexpr std::array<std::array<int, 3>, 7> kFanoLines{{
    {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6},
}};

/// A coalition wins if it contains a line.
inline Game fano_game() {
  std::vector<Coalition> lines;
  for (const auto& l : kFanoLines) lines.push_back(coalition_of({l[0], l[1], l[2]}));
  return Game::upward_closure(7, lines);
}

/// Faces of the icosahedron, 0-based vertices. Vertex 0 is the top, 1..5
/// the upper ring, 6 the bottom and 7..11 the lower ring; v and v+6 are
/// antipodal.
inline constexpr std::array<std::array<int, 3>, 20> kIcosahedronFaces{{
    {0, 1, 2},  {0, 1, 5},  {0, 2, 3},  {0, 3, 4},   {0, 4, 5},   {1, 2, 10}, {1, 5, 9},
    {1, 9, 10}, {2, 3, 11}, {2, 10, 11}, {3, 4, 7},  {3, 7, 11},  {4, 5, 8},  {4, 7, 8},
    {5, 8, 9},  {6, 7, 8},  {6, 7, 11}, {6, 8, 9},   {6, 9, 10},  {6, 10, 11},
}};

/// Six voters, one per axis of opposite vertices; a coalition wins if its
/// axes contain a face.
inline Game icosahedral_game() {
  std::vector<Coalition> faces;
  for (const auto& f : kIcosahedronFaces) {
    faces.push_back(voter_bit(f[0] % 6) | voter_bit(f[1] % 6) | voter_bit(f[2] % 6));
  }
  return Game::upward_closure(6, faces);
}

/// Median decompositions defining the six-voter games S_{6,21}..S_{6,30}.
inline constexpr std::array<const char*, 10> kS6Definitions{
    "m((100000)_1,(120101)_3,(012110)_3)", "m((100000)_1,(221110)_4,(010112)_3)",
    "m((031111)_4,(102110)_3,(310111)_4)", "m((021110)_3,(102101)_3,(210110)_3)",
    "m((031111)_4,(102101)_3,(310111)_4)", "m((021110)_3,(203112)_5,(210110)_3)",
    "m((000001)_1,(111000)_2,(001110)_2)", "m((110001)_2,(101010)_2,(011100)_2)",
    "m((200111)_3,(020111)_3,(002111)_3)", "m((302112)_5,(230121)_5,(023211)_5)",
};

inline Game s6(int k) {
  if (k < 21 || k > 30) throw game_error(errc::bad_index, "S_{6," + std::to_string(k) + "} is not in 21..30");
  return evaluate(GameExpr::parse(kS6Definitions[static_cast<std::size_t>(k - 21)]), 6);
}

namespace detail {

inline std::string catalog_key(std::string_view name) {
  std::string out;
  for (char ch : name) {
    if (ch == '{' || ch == '}' || ch == '_' || ch == '.' || ch == ',' || std::isspace(static_cast<unsigned char>(ch))) continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

}  // namespace detail

/// Catalog lookup by name: dem3, dem3^d, b_k, fano, icosa (or I), s6.k
/// (or S_{6,k}). Spelling is case-, brace- and underscore-insensitive.
inline std::optional<Game> catalog_game(std::string_view name) {
  const std::string key = detail::catalog_key(name);
  auto number = [](std::string_view digits) -> std::optional<int> {
    if (digits.empty() || digits.size() > 2) return std::nullopt;
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    }
    return std::stoi(std::string(digits));
  };
  if (key == "fano") return fano_game();
  if (key == "i" || key == "icosa" || key == "icosahedral") return icosahedral_game();
  if (key == "dem3") return dem3_power(1);
  if (key.rfind("dem3^", 0) == 0) {
    if (auto d = number(std::string_view(key).substr(5))) return dem3_power(*d);
    return std::nullopt;
  }
  if (key.size() >= 2 && key[0] == 'b') {
    if (auto k = number(std::string_view(key).substr(1))) return bk_game(*k);
    return std::nullopt;
  }
  if (key.size() == 4 && key.rfind("s6", 0) == 0) {
    if (auto k = number(std::string_view(key).substr(2))) return s6(*k);
  }
  return std::nullopt;
}

/// NamedResolver over the catalog; primes are ignored (the base game).
inline Game resolve_catalog(const std::string& name, int) {
  if (auto g = catalog_game(name)) return *g;
  throw game_error(errc::parse_error, "unknown catalog game '" + name + "'");
}

}  // namespace sg
