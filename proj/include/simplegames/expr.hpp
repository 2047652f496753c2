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
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "quota.hpp"

namespace sg {

/// Expression tree over dictatorships, the constant games, quota literals
/// and named catalog games, combined by median, choice, compound, and, or.
class GameExpr {
 public:
  enum class Kind { dict, hat0, hat1, median, chi, compound, conj, disj, quota, named };

  static GameExpr dict(int voter) { return GameExpr(Node{Kind::dict, voter, {}, {}, 0, {}}); }
  static GameExpr hat0() { return GameExpr(Node{Kind::hat0, 0, {}, {}, 0, {}}); }
  static GameExpr hat1() { return GameExpr(Node{Kind::hat1, 0, {}, {}, 0, {}}); }
  static GameExpr median(GameExpr a, GameExpr b, GameExpr c) {
    return GameExpr(Node{Kind::median, 0, {std::move(a), std::move(b), std::move(c)}, {}, 0, {}});
  }
  static GameExpr chi(int mover, GameExpr a, GameExpr b) {
    return GameExpr(Node{Kind::chi, mover, {std::move(a), std::move(b)}, {}, 0, {}});
  }
  /// args[0] is the outer game, the rest are the inner games.
  static GameExpr compound(GameExpr outer, std::vector<GameExpr> inner) {
    std::vector<GameExpr> args;
    args.push_back(std::move(outer));
    for (auto& e : inner) args.push_back(std::move(e));
    return GameExpr(Node{Kind::compound, 0, std::move(args), {}, 0, {}});
  }
  static GameExpr conj(GameExpr a, GameExpr b) {
    return GameExpr(Node{Kind::conj, 0, {std::move(a), std::move(b)}, {}, 0, {}});
  }
  static GameExpr disj(GameExpr a, GameExpr b) {
    return GameExpr(Node{Kind::disj, 0, {std::move(a), std::move(b)}, {}, 0, {}});
  }
  static GameExpr quota(QuotaGame q) { return GameExpr(Node{Kind::quota, 0, {}, {}, 0, std::move(q)}); }
  /// Catalog game such as `S_{6,27}`; `primes` counts the relabeling marks.
  static GameExpr named(std::string name, int primes = 0) {
    return GameExpr(Node{Kind::named, 0, {}, std::move(name), primes, {}});
  }

  Kind kind() const noexcept { return node_->kind; }
  /// Dictator or mover label (1-based).
  int voter() const noexcept { return node_->voter; }
  const std::vector<GameExpr>& args() const noexcept { return node_->args; }
  const std::string& name() const noexcept { return node_->name; }
  int primes() const noexcept { return node_->primes; }
  const QuotaGame& quota_game() const noexcept { return node_->quota; }

  bool is_leaf() const noexcept { return node_->args.empty(); }

  std::string format() const {
    switch (kind()) {
      case Kind::dict: return "dict_" + std::to_string(voter());
      case Kind::hat0: return "hat0";
      case Kind::hat1: return "hat1";
      case Kind::quota: return format_quota(quota_game());
      case Kind::named: {
        std::string out = name();
        const auto cut = out.find_first_of("_^");
        out.insert(cut == std::string::npos ? out.size() : cut, std::string(static_cast<std::size_t>(primes()), '\''));
        return out;
      }
      case Kind::median: return "m(" + join(args()) + ")";
      case Kind::chi: return "chi_" + std::to_string(voter()) + "(" + join(args()) + ")";
      case Kind::conj: return "and(" + join(args()) + ")";
      case Kind::disj: return "or(" + join(args()) + ")";
      case Kind::compound: {
        std::vector<GameExpr> inner(args().begin() + 1, args().end());
        return args().front().format() + "[" + join(inner) + "]";
      }
    }
    return {};
  }

  /// Parses the table notation: `m(a,b,c)`, `chi_3(a,b)` (also `χ_{3}`),
  /// `and(a,b)`, `or(a,b,...)`, `dict_2` (or bare `2`), `hat0`, `hat1`, quota literals,
  /// compound `outer[a,b,c]`, and catalog names with optional primes.
  static GameExpr parse(std::string_view text);

 private:
  struct Node {
    Kind kind;
    int voter;
    std::vector<GameExpr> args;
    std::string name;
    int primes;
    QuotaGame quota;
  };

  explicit GameExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

  static std::string join(const std::vector<GameExpr>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out += ',';
      out += items[i].format();
    }
    return out;
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

inline std::string normalize_expr_text(std::string_view text) {
  std::string s(text);
  auto replace_all = [&](std::string_view from, std::string_view to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) {
      s.replace(pos, from.size(), to);
    }
  };
  replace_all("\\chi", "chi");
  replace_all("\xCF\x87", "chi");    // χ
  replace_all("\xC4\xA5", "hat");    // ĥ
  replace_all("\xE2\x80\xB2", "'");  // ′
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  }
  return out;
}

class ExprParser {
 public:
  explicit ExprParser(std::string text) : text_(std::move(text)) {}

  GameExpr parse_all() {
    GameExpr e = parse_expr();
    if (pos_ != text_.size()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw game_error(errc::parse_error, why + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  bool peek(char ch) const { return pos_ < text_.size() && text_[pos_] == ch; }

  void expect(char ch) {
    if (!peek(ch)) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::vector<GameExpr> parse_list(char close) {
    std::vector<GameExpr> out;
    out.push_back(parse_expr());
    while (peek(',')) {
      ++pos_;
      out.push_back(parse_expr());
    }
    expect(close);
    return out;
  }

  // Identifier: letters, digits, '_', '^', '.', primes, and braced groups.
  std::string parse_word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '^' || ch == '.' || ch == '\'') {
        ++pos_;
      } else if (ch == '{') {
        const auto close = text_.find('}', pos_);
        if (close == std::string::npos) fail("unbalanced '{'");
        pos_ = close + 1;
      } else {
        break;
      }
    }
    return text_.substr(start, pos_ - start);
  }

  static std::string strip_braces(std::string s) {
    std::string out;
    for (char ch : s) {
      if (ch != '{' && ch != '}') out += ch;
    }
    return out;
  }

  int parse_label(const std::string& digits) const {
    if (digits.empty() || digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      fail("bad voter label '" + digits + "'");
    }
    return std::stoi(digits);
  }

  GameExpr parse_expr() {
    GameExpr e = parse_atom();
    while (peek('[')) {
      ++pos_;
      e = GameExpr::compound(std::move(e), parse_list(']'));
    }
    return e;
  }

  GameExpr parse_atom() {
    if (peek('(')) {
      const auto close = text_.find(')', pos_);
      if (close == std::string::npos || close + 1 >= text_.size() || text_[close + 1] != '_') {
        fail("expected quota literal");
      }
      std::size_t end = close + 2;
      if (end < text_.size() && text_[end] == '{') {
        const auto brace = text_.find('}', end);
        if (brace == std::string::npos) fail("unbalanced '{'");
        end = brace + 1;
      } else {
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      }
      QuotaGame q = parse_quota(text_.substr(pos_, end - pos_));
      pos_ = end;
      return GameExpr::quota(std::move(q));
    }
    const std::string word = parse_word();
    if (word.empty()) fail("expected an expression");
    std::string lower;
    for (char ch : word) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (peek('(')) {
      ++pos_;
      if (lower == "m") {
        auto args = parse_list(')');
        if (args.size() != 3) fail("median takes three arguments");
        return GameExpr::median(args[0], args[1], args[2]);
      }
      if (lower.rfind("chi_", 0) == 0) {
        const int mover = parse_label(strip_braces(word.substr(4)));
        auto args = parse_list(')');
        if (args.size() != 2) fail("choice takes two arguments");
        return GameExpr::chi(mover, args[0], args[1]);
      }
      if (lower == "and" || lower == "or") {
        auto args = parse_list(')');
        if (args.size() < 2) fail("'" + word + "' takes at least two arguments");
        GameExpr acc = args.back();
        for (std::size_t i = args.size() - 1; i-- > 0;) {
          acc = lower == "and" ? GameExpr::conj(args[i], acc) : GameExpr::disj(args[i], acc);
        }
        return acc;
      }
      fail("unknown operator '" + word + "'");
    }
    if (lower == "hat0") return GameExpr::hat0();
    if (lower == "hat1") return GameExpr::hat1();
    if (lower.rfind("dict_", 0) == 0) return GameExpr::dict(parse_label(strip_braces(word.substr(5))));
    if (std::all_of(word.begin(), word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return GameExpr::dict(parse_label(word));
    }
    int primes = 0;
    std::string name;
    for (char ch : word) {
      if (ch == '\'') ++primes;
      else name += ch;
    }
    return GameExpr::named(std::move(name), primes);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GameExpr GameExpr::parse(std::string_view text) {
  return detail::ExprParser(detail::normalize_expr_text(text)).parse_all();
}

/// Resolves a named leaf (name, primes) to a game on its own voter set.
using NamedResolver = std::function<Game(const std::string& name, int primes)>;

inline Game no_named_games(const std::string& name, int) {
  throw game_error(errc::parse_error, "no catalog available to resolve '" + name + "'");
}

/// Fewest voters on which every leaf fits.
inline int min_voters(const GameExpr& e, const NamedResolver& resolve = no_named_games) {
  switch (e.kind()) {
    case GameExpr::Kind::dict: return e.voter();
    case GameExpr::Kind::hat0:
    case GameExpr::Kind::hat1: return 1;
    case GameExpr::Kind::quota: return static_cast<int>(e.quota_game().weights.size());
    case GameExpr::Kind::named: return resolve(e.name(), e.primes()).voters();
    case GameExpr::Kind::compound: {
      int n = 1;
      for (std::size_t i = 1; i < e.args().size(); ++i) n = std::max(n, min_voters(e.args()[i], resolve));
      return n;
    }
    default: break;
  }
  int n = e.kind() == GameExpr::Kind::chi ? e.voter() : 1;
  for (const auto& a : e.args()) n = std::max(n, min_voters(a, resolve));
  return n;
}

/// Value of `e` on n voters; narrower leaves gain trailing dummies.
inline Game evaluate(const GameExpr& e, int n, const NamedResolver& resolve = no_named_games) {
  using K = GameExpr::Kind;
  switch (e.kind()) {
    case K::dict: return Game::dictator(n, e.voter());
    case K::hat0: return Game::hat0(n);
    case K::hat1: return Game::hat1(n);
    case K::quota: return with_voters(compile(e.quota_game()), n);
    case K::named: return with_voters(resolve(e.name(), e.primes()), n);
    case K::median:
      return median(evaluate(e.args()[0], n, resolve), evaluate(e.args()[1], n, resolve),
                    evaluate(e.args()[2], n, resolve));
    case K::chi: return chi(e.voter(), evaluate(e.args()[0], n, resolve), evaluate(e.args()[1], n, resolve));
    case K::conj: {
      const Game a = evaluate(e.args()[0], n, resolve), b = evaluate(e.args()[1], n, resolve);
      return detail::build(n, [&](Coalition c) { return a.wins(c) && b.wins(c); });
    }
    case K::disj: {
      const Game a = evaluate(e.args()[0], n, resolve), b = evaluate(e.args()[1], n, resolve);
      return detail::build(n, [&](Coalition c) { return a.wins(c) || b.wins(c); });
    }
    case K::compound: {
      const int k = static_cast<int>(e.args().size()) - 1;
      const Game outer = evaluate(e.args()[0], std::max(k, min_voters(e.args()[0], resolve)), resolve);
      if (outer.voters() != k) {
        throw game_error(errc::arity_mismatch, "outer game has " + std::to_string(outer.voters()) +
                                                   " voters for " + std::to_string(k) + " inner games");
      }
      std::vector<Game> inner;
      for (int i = 1; i <= k; ++i) inner.push_back(evaluate(e.args()[static_cast<std::size_t>(i)], n, resolve));
      return compound(outer, inner);
    }
  }
  throw game_error(errc::parse_error, "unknown expression kind");
}

inline Game evaluate(const GameExpr& e, const NamedResolver& resolve = no_named_games) {
  return evaluate(e, min_voters(e, resolve), resolve);
}

/// True iff `e` evaluates to `s` bit for bit.
inline bool verify_expr(const GameExpr& e, const Game& s, const NamedResolver& resolve = no_named_games) {
  if (min_voters(e, resolve) > s.voters()) return false;
  return evaluate(e, s.voters(), resolve) == s;
}

}  // namespace sg
