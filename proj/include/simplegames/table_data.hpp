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
#include <string_view>

namespace sg {

/// One row of the classification table of strong simple games with up to
/// nine powerful voters. Weight and depth carry a flag when the table marks
/// them as uncertain.
struct Table1Row {
  enum Flag : unsigned { kHeart = 1, kStar = 2, kStarQ = 4, kWeightQ = 8, kDepthQ = 16 };

  int row;
  int n;
  std::string_view label;
  int w;
  int d;
  std::string_view median_expr;
  std::string_view chi_expr;
  unsigned flags;

  bool has(Flag f) const { return (flags & f) != 0; }
};

// clang-format off
inline constexpr std::array<Table1Row, 38> kTable1{{
    {1, 1, "(1)_{1}", 0, 0,
     "",
     "",
     Table1Row::kHeart},
    {2, 3, "(111)_{2}", 1, 1,
     "m((100)_{1},(010)_{1},(001)_{1})",
     "\\chi_{3}((100)_{1},(010)_{1})",
     Table1Row::kHeart},
    {3, 4, "(2111)_{3}", 2, 2,
     "m((1110)_2,(1101)_2,(1011)_2)",
     "\\chi_{4}((1000)_{1},(1110)_{2})",
     0},
    {4, 5, "(22111)_{4}", 2, 2,
     "m((11100)_2, (11010)_2, (11001)_2)",
     "\\chi_{5}((11100)_{2},(11010)_{2})",
     0},
    {5, 5, "(31111)_{4}", 2, 2,
     "m((10000)_1, (11100)_2, (10011)_2)",
     "\\chi_{1}((11100)_{2}, (10011)_{2})",
     Table1Row::kStar},
    {6, 5, "(32211)_{5}", 2, 3,
     "m((11100)_2, (11010)_2, (10101)_2)",
     "\\chi_{5}((21110)_{3}, (11100)_{2})",
     0},
    {7, 5, "(11111)_{3}", 3, 3,
     "m((20111)_3,(12011)_3,(01211)_3)",
     "\\chi_{5}((01110)_{2}, (21110)_{3})",
     Table1Row::kHeart},
    {8, 6, "(411111)_{5}", 3, 3,
     "m((100000)_{1},(310111)_{4},(001000)_{1})",
     "\\chi_{6}((100000)_{1},(311110)_{4})",
     0},
    {9, 6, "(522211)_{7}", 3, 3,
     "m((100000)_{1},(320211)_{5},(001000)_{1})",
     "\\chi_{6}((311110)_{4},(211100)_{3})",
     0},
    {10, 6, "(433111)_{7}", 3, 3,
     "m((100000)_{1},(130111)_{4},(001000)_{1})",
     "\\chi_{3}((130111)_{4},(100000)_{1})",
     0},
    {11, 6, "(533211)_{8}", 3, 4,
     "m((100000)_{1},(230211)_{5},(001000)_{1})",
     "\\chi_{6}((211100)_{3},(322110)_{5})",
     Table1Row::kDepthQ},
    {12, 6, "(422111)_{6}", 2, 2,
     "m((100000)_1, (111000)_2, (000111)_2)",
     "\\chi_{1}((111000)_{2},(000111)_{2})",
     Table1Row::kStar},
    {13, 6, "(543221)_{9}", 3, 3,
     "m((100000)_{1},(120110)_{3},(013111)_{4})",
     "\\chi_{3}((120110)_{3},(310111)_{4})",
     0},
    {14, 6, "(332111)_{6}", 2, 3,
     "m((111000)_2, (110100)_2, (001011)_2)",
     "\\chi_{6}((111000)_{2},(221110)_{4})",
     0},
    {15, 6, "(432211)_{7}", 2, 3,
     "m((111000)_2, (110100)_2, (100011)_2)",
     "\\chi_{6}((211100)_{3},(221110)_{4})",
     0},
    {16, 6, "(542222)_{9}", 3, 3,
     "m((100000)_{1},(220111)_{4},(013111)_{4})",
     "\\chi_{1}((220111)_{4},(013111)_{4})",
     Table1Row::kStarQ},
    {17, 6, "(332221)_{7}", 3, 3,
     "m((301111)_{4},(120110)_{3},(012110)_{3})",
     "\\chi_{2}((301111)_{4},(001110)_{2})",
     0},
    {18, 6, "(222111)_{5}", 3, 3,
     "m((301111)_{4},(130111)_{4},(013111)_{4})",
     "\\chi_{2}((301111)_{4},(002111)_{3})",
     0},
    {19, 6, "(322211)_{6}", 3, 3,
     "m((301111)_{4}, (230211)_{5}, (013111)_{4})",
     "\\chi_{2}((301111)_{4},(102211)_{4})",
     0},
    {20, 6, "(211111)_{4}", 3, 3,
     "m((301111)_{4}, (220111)_{4}, (013111)_{4})",
     "\\chi_{6}((211100)_{3},(221110)_{4})",
     0},
    {21, 6, "S_{6,21}", 3, 3,
     "m((100000)_{1},(120101)_{3},(012110)_{3})",
     "\\chi_{1}((120101)_{3},(012110)_{3})",
     Table1Row::kStarQ},
    {22, 6, "S_{6,22}", 3, 3,
     "m((100000)_{1},(221110)_{4},(010112)_{3})",
     "\\chi_{1}((221110)_{4},(010112)_{3})",
     Table1Row::kStarQ},
    {23, 6, "S_{6,23}", 3, 3,
     "m((031111)_{4},(102110)_{3},(310111)_{4})",
     "\\chi_{2}((200111)_{3},(102110)_{3})",
     0},
    {24, 6, "S_{6,24}", 3, 3,
     "m((021110)_{3},(102101)_{3},(210110)_{3})",
     "\\chi_{6}((122110)_{4},(211210)_{4})",
     0},
    {25, 6, "S_{6,25}", 3, 3,
     "m((031111)_{4},(102101)_{3},(310111)_{4})",
     "\\chi_{6}((122110)_{4},(221110)_{4})",
     0},
    {26, 6, "S_{6,26}", 3, 4,
     "m((021110)_{3},(203112)_{5},(210110)_{3})",
     "\\chi_{6}((122110)_{4},(311220)_{5})",
     Table1Row::kDepthQ},
    {27, 6, "S_{6,27}", 2, 2,
     "m((000001)_1, (111000)_2, (001110)_2)",
     "\\chi_{6}((111000)_{2},(001110)_{2})",
     0},
    {28, 6, "S_{6,28}", 2, 3,
     "m((110001)_2, (101010)_2, (011100)_2)",
     "\\chi_{3}((110001)_{2},(110221)_{4})",
     0},
    {29, 6, "S_{6,29}", 3, 3,
     "m((200111)_{3},(020111)_{3},(002111)_{3})",
     "\\chi_{1}((020111)_{3},(002111)_{3})",
     0},
    {30, 6, "I=S_{6,30}", 3, 5,
     "m((302112)_{5}, (230121)_{5}, (023211)_{5})",
     "m(S_{6,28},(111220)_{4})",
     Table1Row::kHeart | Table1Row::kDepthQ | Table1Row::kStar},
    {31, 7, "B_{2}", 2, 2,
     "m((1110000)_{2}, (0001110)_{2}, (0000001)_{1})",
     "\\chi_{7}((1110000)_{2},(0001110)_{2})",
     Table1Row::kStar},
    {32, 7, "", 2, 3,
     "m((1110000)_{2}, (0001110)_{2}, (0000111)_{2})",
     "\\chi_{1}((0011221)_{4},(0101221)_{4})",
     0},
    {33, 7, "", 2, 3,
     "m((1110000)_{2}, (1001100)_{2}, (1000011)_{2})",
     "\\chi_{2}(S_{6,27},(3001111)_{4})",
     0},
    {34, 7, "", 2, 3,
     "m((1110000)_{2}, (0011100)_{2}, (0000111)_{2})",
     "\\chi_{7}(S_{6,27},S'_{6,27})",
     0},
    {35, 7, "Fano", 4, 5,
     "m(S_{6,22},S'_{6,22},S''_{6,22})",
     "\\chi_{7}(S_{6,22},\\chi_{7}(S'''_{6,22},S''''_{6,22}))",
     Table1Row::kHeart | Table1Row::kWeightQ | Table1Row::kDepthQ | Table1Row::kStar},
    {36, 7, "(1111111)_{4}", 3, 4,
     "m((2011111)_{4},(1201111)_{4},(0121111)_{4})",
     "\\chi_{7}((1111100)_{3},(2111110)_{4})",
     Table1Row::kHeart | Table1Row::kDepthQ},
    {37, 8, "", 2, 3,
     "m((11100000)_{2},(00011100)_{2},(00000111)_{2})",
     "\\chi_{8}(S_{6,27},S'_{6,27})",
     0},
    {38, 9, "Dem_{3}^{2}", 2, 3,
     "m((111000000)_{2},(000111000)_{2},(000000111)_{2})",
     "\\chi_{9}(B_{2},B'_{2})",
     Table1Row::kHeart},
}};
// clang-format on

}  // namespace sg
