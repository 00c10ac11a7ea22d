// Copyright 2026 The Amalgam Authors
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

#ifndef AMALGAM_LAMINAR_HPP
#define AMALGAM_LAMINAR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace amalgam {

// A family of subsets of {0, ..., ground_size - 1}.
struct LaminarFamily {
  int ground_size = 0;
  std::vector<std::vector<int>> sets;
};

// True iff every pair of member sets is nested or disjoint.
bool verify_laminar(const LaminarFamily& family);

// A member set together with explicit bounds on |A ∩ set|.
struct BoundedSet {
  std::vector<int> elements;
  int lower = 0;
  int upper = 0;
};

// Picks A with lower <= |A ∩ P| <= upper for every P in either family, or
// returns nullopt when no such subset exists. Both families must be laminar.
// Elements that lie in no member set are never selected. `seed` only changes
// which of several valid subsets is returned.
std::optional<std::vector<int>> select_with_bounds(
    int ground_size, std::span<const BoundedSet> family_a,
    std::span<const BoundedSet> family_b, std::uint64_t seed = 0);

// Bounds floor(|P|/n) .. ceil(|P|/n) for every member set.
std::vector<BoundedSet> quota_bounds(const LaminarFamily& family, int n);

// Returns A ⊆ S with floor(|P|/n) <= |A ∩ P| <= ceil(|P|/n) for every P in
// fam_a ∪ fam_b. Such a subset always exists for laminar inputs.
std::vector<int> select_subset(int s_size, const LaminarFamily& fam_a,
                               const LaminarFamily& fam_b, int n,
                               std::uint64_t seed = 0);

}  // namespace amalgam

#endif  // AMALGAM_LAMINAR_HPP
