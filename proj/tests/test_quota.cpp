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

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "simplegames/quota.hpp"
#include "simplegames/quota_lp.hpp"
#include "simplegames/search.hpp"

using sg::Game;
using sg::QuotaGame;

TEST_CASE("quota strings") {
  CHECK(sg::parse_quota("(2111)_3") == QuotaGame{{2, 1, 1, 1}, 3});
  CHECK(sg::parse_quota("(2,1,1,1)_{3}") == QuotaGame{{2, 1, 1, 1}, 3});
  CHECK(sg::parse_quota("(10,1)_{10}") == QuotaGame{{10, 1}, 10});
  CHECK(sg::format_quota({{2, 1, 1, 1}, 3}) == "(2111)_3");
  CHECK(sg::format_quota({{10, 1}, 10}) == "(10,1)_10");
  CHECK_THROWS_AS(sg::parse_quota("2111_3"), sg::game_error);
  CHECK_THROWS_AS(sg::parse_quota("(2111)"), sg::game_error);
  CHECK_THROWS_AS(sg::parse_quota("(21a1)_3"), sg::game_error);
}

TEST_CASE("compiled quota games match a direct weight count") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    QuotaGame q;
    int total = 0;
    for (int i = 0; i < n; ++i) {
      q.weights.push_back(static_cast<int>(rng() % 10));
      total += q.weights.back();
    }
    q.quota = static_cast<int>(rng() % (total + 2));
    const Game g = sg::compile(q);
    for (sg::Coalition a = 0; a < (1u << n); ++a) {
      int w = 0;
      for (int v = 0; v < n; ++v) {
        if ((a >> v) & 1u) w += q.weights[static_cast<std::size_t>(v)];
      }
      REQUIRE(g.wins(a) == (w >= q.quota));
    }
  }
}

TEST_CASE("exact LP recognition agrees with brute-force weights on every game up to four voters") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : oracle::monotone_functions(n)) {
      const Game g = oracle::to_game(t);
      const auto q = sg::is_quota_game(g);
      const bool brute = oracle::has_small_weights(t, 5);
      REQUIRE(q.has_value() == brute);
      if (q) CHECK(sg::compile(*q) == g);
    }
  }
}

TEST_CASE("exact LP recognition on five-voter ipsodual games") {
  int quota_count = 0;
  for (const Game& g : sg::enumerate_ipsodual(5)) {
    const auto q = sg::is_quota_game(g);
    const bool brute = oracle::has_small_weights(oracle::from_game(g), 6);
    if (brute) REQUIRE(q.has_value());
    if (q) {
      CHECK(sg::compile(*q) == g);
      if (!brute) CHECK(*std::max_element(q->weights.begin(), q->weights.end()) > 6);
      ++quota_count;
    }
  }
  CHECK(quota_count == 81);
}

TEST_CASE("non-weighted games are rejected") {
  const Game two_pairs = Game::upward_closure(4, std::vector<sg::Coalition>{0b0011, 0b1100});
  CHECK_FALSE(sg::is_quota_game(two_pairs));
  CHECK_THROWS_AS(sg::is_quota_game(Game::dictator(9, 1)), sg::game_error);
}
