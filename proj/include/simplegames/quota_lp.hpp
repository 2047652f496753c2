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

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

#include "quota.hpp"

namespace sg {

namespace detail {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact two-phase simplex for: minimize c·x subject to A x ≥ b, x ≥ 0.
/// Bland's rule keeps it from cycling. Returns nullopt when infeasible;
/// the objective must be bounded below on the feasible set.
class ExactSimplex {
 public:
  ExactSimplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> c)
      : rows_(a.size()), vars_(c.size()), cost_(std::move(c)) {
    // Columns: x (vars_), surplus (rows_), artificial (rows_), rhs.
    cols_ = vars_ + 2 * rows_;
    t_.assign(rows_ + 1, std::vector<Rational>(cols_ + 1));
    basis_.assign(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < vars_; ++j) t_[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
      t_[i][vars_ + i] = flip ? 1 : -1;
      t_[i][cols_] = flip ? Rational(-b[i]) : b[i];
      if (flip) {
        basis_[i] = vars_ + i;
      } else {
        t_[i][vars_ + rows_ + i] = 1;
        basis_[i] = vars_ + rows_ + i;
      }
    }
  }

  std::optional<std::vector<Rational>> solve() {
    // Phase 1: minimize the sum of artificials.
    std::vector<Rational> phase1(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) phase1[vars_ + rows_ + i] = 1;
    load_objective(phase1);
    run(cols_);
    if (t_[rows_][cols_] != 0) return std::nullopt;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_ + rows_) continue;
      for (std::size_t j = 0; j < vars_ + rows_; ++j) {
        if (t_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
    std::vector<Rational> phase2(cols_, 0);
    for (std::size_t j = 0; j < vars_; ++j) phase2[j] = cost_[j];
    load_objective(phase2);
    run(vars_ + rows_);
    std::vector<Rational> x(vars_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_) x[basis_[i]] = t_[i][cols_];
    }
    return x;
  }

 private:
  // Objective row holds reduced costs; its rhs holds minus the objective value.
  void load_objective(const std::vector<Rational>& c) {
    auto& z = t_[rows_];
    for (std::size_t j = 0; j < cols_; ++j) z[j] = c[j];
    z[cols_] = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational cb = c[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) z[j] -= cb * t_[i][j];
    }
  }

  // Columns at or beyond `limit` never enter.
  void run(std::size_t limit) {
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (t_[rows_][j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return;
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        const Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_) throw std::logic_error("unbounded linear program");
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (auto& v : t_[r]) v /= p;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t rows_, vars_, cols_ = 0;
  std::vector<Rational> cost_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Weights w ≥ 0 and quota q with w(A) ≥ q on every minimal winning
/// coalition and w(B) ≤ q − 1 on every maximal losing one, minimizing the
/// total weight; the witness is scaled to integers and recompiles to `s`.
/// nullopt means the system is infeasible (exact arithmetic throughout).
inline std::optional<QuotaGame> is_quota_game(const Game& s) {
  const int n = s.voters();
  detail::check_voter_count(n, kMaxQuotaVoters);
  using detail::Rational;
  const std::size_t vars = static_cast<std::size_t>(n) + 1;  // weights, then quota
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (Coalition c : min_winning(s)) {
    std::vector<Rational> row(vars, 0);
    for (int v = 0; v < n; ++v) {
      if (c & voter_bit(v)) row[static_cast<std::size_t>(v)] = 1;
    }
    row[vars - 1] = -1;
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  for (Coalition c : max_losing(s)) {
    std::vector<Rational> row(vars, 0);
    for (int v = 0; v < n; ++v) {
      if (c & voter_bit(v)) row[static_cast<std::size_t>(v)] = -1;
    }
    row[vars - 1] = 1;
    a.push_back(std::move(row));
    b.emplace_back(1);
  }
  std::vector<Rational> cost(vars, 1);
  const auto x = detail::ExactSimplex(std::move(a), std::move(b), std::move(cost)).solve();
  if (!x) return std::nullopt;
  detail::BigInt scale = 1;
  for (const Rational& r : *x) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(r));
  QuotaGame q;
  for (std::size_t i = 0; i < vars; ++i) {
    const detail::BigInt v = boost::multiprecision::numerator(Rational((*x)[i] * scale));
    if (v > 1'000'000'000) throw game_error(errc::too_large, "quota witness does not fit in int");
    if (i + 1 < vars) {
      q.weights.push_back(static_cast<int>(v));
    } else {
      q.quota = static_cast<int>(v);
    }
  }
  if (compile(q) != s) throw std::logic_error("quota witness does not reproduce the game");
  return q;
}

}  // namespace sg
