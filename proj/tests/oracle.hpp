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

// Brute-force reference implementations. Nothing here calls into the library
// except the final conversion to and from sg::Game.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "simplegames/game.hpp"

namespace oracle {

/// Truth table: win[a] for coalition a (bit j = voter j+1).
struct Table {
  int n = 0;
  std::vector<bool> win;

  bool operator<(const Table& o) const { return std::tie(n, win) < std::tie(o.n, o.win); }
  bool operator==(const Table& o) const = default;
};

inline unsigned full(int n) { return (1u << n) - 1; }

inline Table from_game(const sg::Game& g) {
  Table t{g.voters(), std::vector<bool>(g.coalition_count())};
  for (unsigned a = 0; a < t.win.size(); ++a) t.win[a] = g.wins(a);
  return t;
}

inline sg::Game to_game(const Table& t) {
  std::vector<sg::Coalition> w;
  for (unsigned a = 0; a < t.win.size(); ++a) {
    if (t.win[a]) w.push_back(a);
  }
  return sg::Game::from_coalitions(t.n, w);
}

inline bool monotone(const Table& t) {
  for (unsigned a = 0; a < t.win.size(); ++a) {
    for (int v = 0; v < t.n; ++v) {
      if (t.win[a] && !t.win[a | (1u << v)]) return false;
    }
  }
  return true;
}

inline Table dual(const Table& t) {
  Table d{t.n, std::vector<bool>(t.win.size())};
  for (unsigned a = 0; a < t.win.size(); ++a) d.win[a] = !t.win[full(t.n) & ~a];
  return d;
}

inline bool self_dual(const Table& t) { return monotone(t) && dual(t) == t; }

inline Table dictator(int n, int voter) {
  Table t{n, std::vector<bool>(1u << n)};
  for (unsigned a = 0; a < t.win.size(); ++a) t.win[a] = (a >> (voter - 1)) & 1u;
  return t;
}

inline Table median(const Table& s, const Table& t, const Table& u) {
  Table m{s.n, std::vector<bool>(s.win.size())};
  for (unsigned a = 0; a < s.win.size(); ++a) m.win[a] = int(s.win[a]) + int(t.win[a]) + int(u.win[a]) >= 2;
  return m;
}

/// (S1 ∩ S2) ∪ {A ∈ S1 ∪ S2 : a ∈ A}, straight from the definition.
inline Table chi(int a, const Table& s1, const Table& s2) {
  Table m{s1.n, std::vector<bool>(s1.win.size())};
  for (unsigned c = 0; c < s1.win.size(); ++c) {
    const bool in_a = (c >> (a - 1)) & 1u;
    m.win[c] = (s1.win[c] && s2.win[c]) || (in_a && (s1.win[c] || s2.win[c]));
  }
  return m;
}

/// f(S) = {A : f^{-1}(A) ∈ S}; image is 0-based.
inline Table quotient(const Table& s, const std::vector<int>& image, int m) {
  Table q{m, std::vector<bool>(1u << m)};
  for (unsigned a = 0; a < q.win.size(); ++a) {
    unsigned pre = 0;
    for (int office = 0; office < s.n; ++office) {
      if ((a >> image[office]) & 1u) pre |= 1u << office;
    }
    q.win[a] = s.win[pre];
  }
  return q;
}

/// x votes as y: the coalition with x's membership replaced by y's.
inline Table substitute(const Table& s, int x, int y) {
  Table r{s.n, std::vector<bool>(s.win.size())};
  const unsigned xb = 1u << (x - 1), yb = 1u << (y - 1);
  for (unsigned a = 0; a < s.win.size(); ++a) {
    const unsigned b = (a & yb) ? (a | xb) : (a & ~xb);
    r.win[a] = s.win[b];
  }
  return r;
}

/// x votes against y.
inline Table oppose(const Table& s, int x, int y) {
  Table r{s.n, std::vector<bool>(s.win.size())};
  const unsigned xb = 1u << (x - 1), yb = 1u << (y - 1);
  for (unsigned a = 0; a < s.win.size(); ++a) {
    const unsigned b = (a & yb) ? (a & ~xb) : (a | xb);
    r.win[a] = s.win[b];
  }
  return r;
}

/// Every winning coalition holding y but not x still wins after swapping.
inline bool geq(const Table& s, int x, int y) {
  const unsigned xb = 1u << (x - 1), yb = 1u << (y - 1);
  for (unsigned a = 0; a < s.win.size(); ++a) {
    if ((a & yb) && !(a & xb) && s.win[a] && !s.win[(a & ~yb) | xb]) return false;
  }
  return true;
}

inline bool is_dummy(const Table& s, int v) {
  const unsigned vb = 1u << (v - 1);
  for (unsigned a = 0; a < s.win.size(); ++a) {
    if (!(a & vb) && s.win[a] != s.win[a | vb]) return false;
  }
  return true;
}

inline int dummies(const Table& s) {
  int d = 0;
  for (int v = 1; v <= s.n; ++v) d += is_dummy(s, v);
  return d;
}

/// Monotone functions on k variables, built as pairs f0 ≤ f1 on k-1.
inline std::vector<Table> monotone_functions(int k) {
  if (k == 0) return {Table{0, {false}}, Table{0, {true}}};
  const auto smaller = monotone_functions(k - 1);
  std::vector<Table> out;
  for (const auto& f0 : smaller) {
    for (const auto& f1 : smaller) {
      bool below = true;
      for (std::size_t a = 0; a < f0.win.size() && below; ++a) below = !f0.win[a] || f1.win[a];
      if (!below) continue;
      Table t{k, f0.win};
      t.win.insert(t.win.end(), f1.win.begin(), f1.win.end());
      out.push_back(std::move(t));
    }
  }
  return out;
}

/// Self-dual monotone functions on n voters, obtained from the intersecting
/// monotone functions g on voters 1..n-1 by extending with voter n.
inline std::set<Table> self_dual_functions(int n) {
  std::set<Table> out;
  const int k = n - 1;
  for (const auto& g : monotone_functions(k)) {
    bool intersecting = true;
    for (unsigned a = 0; a < g.win.size() && intersecting; ++a) intersecting = !(g.win[a] && g.win[full(k) & ~a]);
    if (!intersecting) continue;
    Table t{n, std::vector<bool>(1u << n)};
    for (unsigned a = 0; a < (1u << k); ++a) {
      t.win[a] = g.win[a];
      t.win[a | (1u << k)] = !g.win[full(k) & ~a];
    }
    if (self_dual(t)) out.insert(std::move(t));
  }
  return out;
}

/// Layer of each member of the closure of the dictators under a ternary
/// (median) or binary-with-mover (choice) operation.
inline std::map<Table, int> closure_layers(int n, bool use_chi) {
  std::map<Table, int> layer;
  std::vector<Table> all;
  for (int v = 1; v <= n; ++v) {
    layer[dictator(n, v)] = 0;
    all.push_back(dictator(n, v));
  }
  for (int k = 1;; ++k) {
    std::vector<Table> fresh;
    auto add = [&](Table t) {
      if (layer.emplace(t, k).second) fresh.push_back(std::move(t));
    };
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (use_chi) {
          for (int a = 1; a <= n; ++a) add(chi(a, all[i], all[j]));
        } else {
          for (std::size_t l = 0; l < all.size(); ++l) add(median(all[i], all[j], all[l]));
        }
      }
    }
    if (fresh.empty()) return layer;
    all.insert(all.end(), fresh.begin(), fresh.end());
  }
}

/// Powerful voters counted directly from minimal winning coalitions.
inline int powerful_count(const Table& s) {
  unsigned mask = 0;
  for (unsigned a = 0; a < s.win.size(); ++a) {
    if (!s.win[a]) continue;
    bool minimal = true;
    for (int v = 0; v < s.n && minimal; ++v) minimal = !((a >> v) & 1u) || !s.win[a & ~(1u << v)];
    if (minimal) mask |= a;
  }
  return __builtin_popcount(mask);
}

/// Integer weights in [0, max_w] and quota reproducing s, if any.
inline bool has_small_weights(const Table& s, int max_w) {
  std::vector<int> w(static_cast<std::size_t>(s.n), 0);
  auto check = [&] {
    int lo_win = 1 << 30, hi_lose = -1;
    for (unsigned a = 0; a < s.win.size(); ++a) {
      int t = 0;
      for (int v = 0; v < s.n; ++v) {
        if ((a >> v) & 1u) t += w[static_cast<std::size_t>(v)];
      }
      if (s.win[a]) lo_win = std::min(lo_win, t);
      else hi_lose = std::max(hi_lose, t);
    }
    return lo_win > hi_lose;
  };
  auto go = [&](auto&& self, int v) -> bool {
    if (v == s.n) return check();
    for (int x = 0; x <= max_w; ++x) {
      w[static_cast<std::size_t>(v)] = x;
      if (self(self, v + 1)) return true;
    }
    return false;
  };
  return go(go, 0);
}

}  // namespace oracle
