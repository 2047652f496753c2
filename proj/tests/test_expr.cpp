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

#include "simplegames/catalog.hpp"
#include "simplegames/expr.hpp"

using sg::Game;
using sg::GameExpr;

TEST_CASE("parsing the table notation") {
  const Game maj = sg::compile({{1, 1, 1}, 2});
  CHECK(sg::evaluate(GameExpr::parse("m(1,2,3)")) == maj);
  CHECK(sg::evaluate(GameExpr::parse("m(dict_1, dict_2, dict_3)")) == maj);
  CHECK(sg::evaluate(GameExpr::parse("m((100)_1,(010)_1,(001)_1)")) == maj);
  CHECK(sg::evaluate(GameExpr::parse("\\chi_{3}((100)_{1},(010)_{1})")) == maj);
  CHECK(sg::evaluate(GameExpr::parse("\xCF\x87_3(1,2)")) == maj);
  CHECK(sg::evaluate(GameExpr::parse("chi_3(1,2)")) == sg::chi(3, Game::dictator(3, 1), Game::dictator(3, 2)));
  CHECK(sg::evaluate(GameExpr::parse("(111)_2[1,2,3]")) == maj);
  CHECK(sg::evaluate(GameExpr::parse("or(and(1,2),and(1,3),and(2,3))")) == maj);
  CHECK(sg::evaluate(GameExpr::parse("m(1,2,hat0)"), 2) == Game::upward_closure(2, std::vector<sg::Coalition>{3}));
  CHECK(sg::evaluate(GameExpr::parse("m(1,2,\xC4\xA5" "1)"), 2) ==
        Game::upward_closure(2, std::vector<sg::Coalition>{1, 2}));
}

TEST_CASE("format round trip") {
  for (const char* text : {"m(dict_1,dict_2,dict_3)", "chi_2((2111)_3,m(dict_1,dict_3,dict_4))",
                           "and(dict_1,or(dict_2,dict_3))", "(111)_2[dict_1,hat1,dict_2]", "S_{6,21}",
                           "m(S_{6,21},S'_{6,21},S''_{6,21})"}) {
    const GameExpr e = GameExpr::parse(text);
    CHECK(e.format() == text);
    CHECK(GameExpr::parse(e.format()).format() == e.format());
  }
  const GameExpr primed = GameExpr::parse("S''_{6,21}");
  CHECK(primed.kind() == GameExpr::Kind::named);
  CHECK(primed.name() == "S_{6,21}");
  CHECK(primed.primes() == 2);
}

TEST_CASE("parse errors") {
  for (const char* text : {"", "m(1,2)", "chi_x(1,2)", "chi_1(1,2,3)", "m(1,2,3", "foo(1)", "m(1,2,3))", "(12"}) {
    CHECK_THROWS_AS(GameExpr::parse(text), sg::game_error);
  }
  CHECK_THROWS_AS(sg::evaluate(GameExpr::parse("S_{6,21}")), sg::game_error);
}

TEST_CASE("voter counts and dummy padding") {
  const GameExpr e = GameExpr::parse("m(1,(0111)_2,4)");
  CHECK(sg::min_voters(e) == 4);
  const Game g = sg::evaluate(e, 6);
  CHECK(g.voters() == 6);
  CHECK(sg::powerful_voters(g) == 0b001111);
  CHECK(sg::verify_expr(e, g));
  CHECK(!sg::verify_expr(GameExpr::parse("m(1,2,4)"), g));
  CHECK(!sg::verify_expr(GameExpr::parse("chi_7(1,2)"), g));
  CHECK(sg::min_voters(GameExpr::parse("chi_5(1,2)")) == 5);
}

TEST_CASE("catalog leaves resolve through the resolver") {
  const GameExpr e = GameExpr::parse("m(S_{6,21},S_{6,21},1)");
  CHECK(sg::evaluate(e, sg::resolve_catalog) == sg::s6(21));
  CHECK(sg::evaluate(GameExpr::parse("Fano"), sg::resolve_catalog) == sg::fano_game());
}
