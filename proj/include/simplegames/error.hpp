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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sg {

/// Bit set of voters; voter j (1-based) is bit j-1.
using Coalition = std::uint32_t;

enum class errc {
  not_monotone,
  voter_out_of_range,
  parse_error,
  too_large,
  mismatched_voter_count,
  arity_mismatch,
  map_size_mismatch,
  same_voter,
  not_ipsodual,
  too_few_powerful,
  trivial_influence,
  single_voter,
  budget_exceeded,
  bad_index,
  label_out_of_range,
  unresolved,
};

inline const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::not_monotone: return "NotMonotone";
    case errc::voter_out_of_range: return "VoterOutOfRange";
    case errc::parse_error: return "ParseError";
    case errc::too_large: return "TooLarge";
    case errc::mismatched_voter_count: return "MismatchedVoterCount";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::map_size_mismatch: return "MapSizeMismatch";
    case errc::same_voter: return "SameVoter";
    case errc::not_ipsodual: return "NotIpsodual";
    case errc::too_few_powerful: return "TooFewPowerful";
    case errc::trivial_influence: return "TrivialInfluence";
    case errc::single_voter: return "SingleVoter";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::bad_index: return "BadIndex";
    case errc::label_out_of_range: return "LabelOutOfRange";
    case errc::unresolved: return "Unresolved";
  }
  return "Unknown";
}

class game_error : public std::runtime_error {
 public:
  game_error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Raised when a constructed set is not upward closed: `coalition` wins but
/// `coalition` plus `voter` (0-based) loses.
class monotonicity_error : public game_error {
 public:
  monotonicity_error(Coalition coalition, int voter, const std::string& what)
      : game_error(errc::not_monotone, what), coalition_(coalition), voter_(voter) {}

  Coalition coalition() const noexcept { return coalition_; }
  int voter() const noexcept { return voter_; }

 private:
  Coalition coalition_;
  int voter_;
};

/// A weight or depth outside the exactly searchable range.
class unresolved_error : public game_error {
 public:
  unresolved_error(int lower_bound, const std::string& what)
      : game_error(errc::unresolved, what), lower_bound_(lower_bound) {}

  int lower_bound() const noexcept { return lower_bound_; }

 private:
  int lower_bound_;
};

}  // namespace sg
