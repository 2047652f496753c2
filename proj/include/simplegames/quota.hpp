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
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "game.hpp"

namespace sg {

/// Weighted majority game `(w1 w2 ... wn)_q`: a coalition wins when its
/// total weight reaches the quota.
struct QuotaGame {
  std::vector<int> weights;
  int quota = 0;

  friend bool operator==(const QuotaGame&, const QuotaGame&) = default;
};

inline Game compile(const QuotaGame& q) {
  const int n = static_cast<int>(q.weights.size());
  detail::check_voter_count(n);
  for (int w : q.weights) {
    if (w < 0) throw game_error(errc::parse_error, "negative weight");
  }
  if (q.quota < 0) throw game_error(errc::parse_error, "negative quota");
  return detail::build(n, [&](Coalition a) {
    long long total = 0;
    for (int v = 0; v < n; ++v) {
      if (a & voter_bit(v)) total += q.weights[v];
    }
    return total >= q.quota;
  });
}

/// Accepts `(2111)_3`, `(2,1,1,1)_3` and braced quotas such as `(2111)_{3}`.
inline QuotaGame parse_quota(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto fail = [&](const char* why) -> QuotaGame {
    throw game_error(errc::parse_error, std::string(why) + " in quota string '" + std::string(text) + "'");
  };
  if (s.size() < 4 || s.front() != '(') return fail("missing '('");
  const auto close = s.find(')');
  if (close == std::string::npos || close == 1) return fail("missing weights");
  if (close + 2 > s.size() || s[close + 1] != '_') return fail("missing '_q'");
  std::string body = s.substr(1, close - 1);
  std::string quota = s.substr(close + 2);
  if (!quota.empty() && quota.front() == '{') {
    if (quota.back() != '}') return fail("unbalanced braces");
    quota = quota.substr(1, quota.size() - 2);
  }
  auto parse_int = [&](const std::string& digits) {
    if (digits.empty() || digits.size() > 9) fail("bad number");
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) fail("bad number");
    }
    return std::stoi(digits);
  };
  QuotaGame q;
  if (body.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      q.weights.push_back(parse_int(body.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    for (char ch : body) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) fail("bad weight digit");
      q.weights.push_back(ch - '0');
    }
  }
  q.quota = parse_int(quota);
  return q;
}

/// Single-digit form when every weight is at most 9, comma form otherwise.
inline std::string format_quota(const QuotaGame& q) {
  const bool compact = std::all_of(q.weights.begin(), q.weights.end(), [](int w) { return w <= 9; });
  std::string out = "(";
  for (std::size_t i = 0; i < q.weights.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(q.weights[i]);
  }
  return out + ")_" + std::to_string(q.quota);
}

}  // namespace sg
