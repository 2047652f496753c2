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

#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "simplegames/canonical.hpp"
#include "simplegames/game.hpp"

using sg::Coalition;
using sg::Game;

TEST_CASE("every truth table on up to three voters is accepted exactly when monotone") {
  for (int n = 1; n <= 3; ++n) {
    const unsigned size = 1u << n;
    int accepted = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
      oracle::Table t{n, std::vector<bool>(size)};
      for (unsigned a = 0; a < size; ++a) t.win[a] = (mask >> a) & 1u;
      if (oracle::monotone(t)) {
        const Game g = Game::from_words(n, {mask});
        CHECK(oracle::from_game(g) == t);
        CHECK(oracle::from_game(sg::dual(g)) == oracle::dual(t));
        CHECK(sg::is_ipsodual(g) == oracle::self_dual(t));
        ++accepted;
      } else {
        CHECK_THROWS_AS(Game::from_words(n, {mask}), sg::monotonicity_error);
      }
    }
    const int dedekind[] = {0, 3, 6, 20};
    CHECK(accepted == dedekind[n]);
  }
}

TEST_CASE("monotone four-voter games match the oracle count") {
  int accepted = 0, selfdual = 0;
  for (std::uint64_t mask = 0; mask < (1u << 16); ++mask) {
    oracle::Table t{4, std::vector<bool>(16)};
    for (unsigned a = 0; a < 16; ++a) t.win[a] = (mask >> a) & 1u;
    if (!oracle::monotone(t)) continue;
    ++accepted;
    const Game g = Game::from_words(4, {mask});
    const auto c = sg::classify(g);
    REQUIRE(c.is_ipsodual == oracle::self_dual(t));
    selfdual += c.is_ipsodual;
  }
  CHECK(accepted == 168);
  CHECK(selfdual == 12);
}

TEST_CASE("hex round trip and layout") {
  const Game maj = Game::from_hex(3, "E8");
  CHECK(maj.wins(0b011));
  CHECK(!maj.wins(0b001));
  CHECK(maj.hex() == "E8");
  CHECK(Game::dictator(2, 1).hex() == "A");
  CHECK(Game::dictator(2, 2).hex() == "C");
  const Game big = Game::dictator(8, 3);
  CHECK(Game::from_hex(8, big.hex()) == big);
  CHECK_THROWS_AS(Game::from_hex(3, "E"), sg::game_error);
  CHECK_THROWS_AS(Game::from_hex(3, "17"), sg::monotonicity_error);
}

TEST_CASE("constructors") {
  const std::vector<Coalition> gens{0b011, 0b101, 0b110};
  const Game maj = Game::upward_closure(3, gens);
  CHECK(maj.hex() == "E8");
  const std::vector<Coalition> exact{0b011, 0b101, 0b110, 0b111};
  CHECK(Game::from_coalitions(3, exact) == maj);
  const std::vector<Coalition> broken{0b011};
  CHECK_THROWS_AS(Game::from_coalitions(3, broken), sg::monotonicity_error);
  CHECK(Game::hat0(3).winning_count() == 0);
  CHECK(Game::hat1(3).winning_count() == 8);
  CHECK_THROWS_AS(Game::dictator(3, 4), sg::game_error);
  CHECK_THROWS_AS(Game::dictator(0, 1), sg::game_error);
  CHECK(Game::from_predicate(3, [](Coalition a) { return std::popcount(a) >= 2; }) == maj);
}

TEST_CASE("monotonicity error carries a witness") {
  try {
    Game::from_hex(2, "2");
    FAIL("accepted a non-monotone mask");
  } catch (const sg::monotonicity_error& e) {
    CHECK(e.coalition() == 0b01);
    CHECK(e.voter() == 1);
    CHECK(e.code() == sg::errc::not_monotone);
  }
}

TEST_CASE("minimal winning, maximal losing, dummies") {
  const Game g = Game::upward_closure(4, std::vector<Coalition>{0b0011, 0b0101});
  const auto mw = sg::min_winning(g);
  CHECK(mw == std::vector<Coalition>{0b0011, 0b0101});
  for (Coalition l : sg::max_losing(g)) {
    CHECK(!g.wins(l));
    for (int v = 0; v < 4; ++v) {
      if (!(l & (1u << v))) CHECK(g.wins(l | (1u << v)));
    }
  }
  CHECK(sg::powerful_voters(g) == 0b0111);
  const auto core = sg::strip_dummies(g);
  CHECK(core.game.voters() == 3);
  CHECK(core.original == std::vector<int>{0, 1, 2});
  CHECK(sg::add_dummy(core.game) == g);
}

TEST_CASE("classification of small games") {
  const Game maj = Game::from_hex(3, "E8");
  const auto c = sg::classify(maj);
  CHECK(c.is_simple);
  CHECK(c.is_strong);
  CHECK(c.is_ipsodual);
  const auto u = sg::classify(Game::upward_closure(3, std::vector<Coalition>{0b111}));
  CHECK(u.is_simple);
  CHECK(!u.is_strong);
  const auto o = sg::classify(Game::upward_closure(3, std::vector<Coalition>{0b001, 0b010}));
  CHECK(!o.is_simple);
  CHECK(o.is_strong);
}

TEST_CASE("relabel and isomorphism") {
  const Game g = Game::upward_closure(4, std::vector<Coalition>{0b0011, 0b0101});
  const std::vector<int> perm{3, 2, 1, 0};
  const Game h = sg::relabel(g, perm);
  CHECK(h.wins(0b1100));
  CHECK(h.wins(0b1010));
  CHECK(sg::is_isomorphic(g, h));
  const auto iso = sg::find_isomorphism(g, h);
  REQUIRE(iso);
  CHECK(sg::relabel(g, *iso) == h);
  CHECK(sg::canonical_form(g) == sg::canonical_form(h));
  CHECK(!sg::is_isomorphic(g, Game::from_hex(4, "FEE8")));
}

TEST_CASE("isomorphism classes of four-voter games agree with brute-force orbits") {
  std::set<oracle::Table> orbits;
  std::set<Game> canon;
  for (std::uint64_t mask = 0; mask < (1u << 16); ++mask) {
    oracle::Table t{4, std::vector<bool>(16)};
    for (unsigned a = 0; a < 16; ++a) t.win[a] = (mask >> a) & 1u;
    if (!oracle::monotone(t)) continue;
    std::vector<int> p{0, 1, 2, 3};
    oracle::Table best = t;
    do {
      oracle::Table r{4, std::vector<bool>(16)};
      for (unsigned a = 0; a < 16; ++a) {
        unsigned b = 0;
        for (int v = 0; v < 4; ++v) {
          if ((a >> v) & 1u) b |= 1u << p[v];
        }
        r.win[b] = t.win[a];
      }
      best = std::min(best, r);
    } while (std::next_permutation(p.begin(), p.end()));
    orbits.insert(best);
    canon.insert(sg::canonical_form(Game::from_words(4, {mask})));
  }
  CHECK(orbits.size() == 30);
  CHECK(canon.size() == orbits.size());
}
