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

namespace sg {

// Voter-count caps. The mask of an n-voter game holds 2^n bits.
inline constexpr int kMaxVoters = 12;
inline constexpr int kMaxPermutationVoters = 9;
inline constexpr int kMaxEnumerationVoters = 6;
inline constexpr int kMaxClosureVoters = 6;
inline constexpr int kMaxBoundedClosureVoters = 9;
inline constexpr int kMaxBoundedLayer = 2;
inline constexpr int kMaxQuotaVoters = 8;
inline constexpr int kMaxCatalogPower = 2;

// Default search budgets; every search fails deterministically past these.
inline constexpr std::uint64_t kDefaultQuotientBudget = 50'000'000;
inline constexpr std::uint64_t kDefaultPairBudget = 2'000'000'000;

}  // namespace sg
