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

#include <random>

#include "amalgam/flow.hpp"
#include "amalgam/laminar.hpp"
#include "amalgam/multigraph.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

using namespace amalgam;
using testing::uniform;

namespace {

std::vector<bool> as_mask(const std::vector<int>& subset, int ground) {
  std::vector<bool> mask(ground, false);
  for (int x : subset) mask[x] = true;
  return mask;
}

}  // namespace

TEST_CASE("verify_laminar recognises nested and crossing families") {
  CHECK(verify_laminar({5, {{0, 1, 2}, {0, 1}, {3}, {4}, {}}}));
  CHECK(verify_laminar({3, {}}));
  CHECK_FALSE(verify_laminar({4, {{0, 1}, {1, 2}}}));
  CHECK_FALSE(verify_laminar({4, {{0, 1, 2}, {2, 3}}}));
}

TEST_CASE("select_subset rejects crossing families") {
  LaminarFamily crossing{3, {{0, 1}, {1, 2}}};
  LaminarFamily empty{3, {}};
  CHECK_THROWS_AS(select_subset(3, crossing, empty, 2), ContractViolation);
  CHECK_THROWS_AS(select_subset(3, empty, crossing, 2), ContractViolation);
  CHECK_THROWS_AS(select_subset(3, {3, {{0, 5}}}, empty, 2), ContractViolation);
}

TEST_CASE("select_subset meets every quota on a hand-made instance") {
  // Family A nests {0..5} > {0,1,2} > {0,1}; family B is {0,3},{1,4},{2,5}.
  LaminarFamily a{6, {{0, 1, 2, 3, 4, 5}, {0, 1, 2}, {0, 1}}};
  LaminarFamily b{6, {{0, 3}, {1, 4}, {2, 5}}};
  std::vector<int> chosen = select_subset(6, a, b, 2);
  std::vector<bool> mask = as_mask(chosen, 6);
  CHECK(testing::subset_meets_quotas(a.sets, b.sets, mask, 2));
  CHECK(chosen.size() == 3);
}

TEST_CASE("elements outside every member set are never selected") {
  LaminarFamily a{5, {{0, 1}}};
  LaminarFamily b{5, {{0}}};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (int x : select_subset(5, a, b, 1, seed)) CHECK(x <= 1);
  }
}

TEST_CASE("select_with_bounds reports infeasible bounds") {
  std::vector<BoundedSet> a{{{0, 1}, 3, 3}};
  std::vector<BoundedSet> b;
  CHECK_FALSE(select_with_bounds(2, a, b).has_value());
  std::vector<BoundedSet> a2{{{0, 1, 2}, 2, 2}, {{0, 1}, 0, 0}};
  CHECK_FALSE(select_with_bounds(3, a2, b).has_value());
  std::vector<BoundedSet> a3{{{0, 1, 2}, 1, 1}};
  std::vector<BoundedSet> b3{{{0}, 1, 1}, {{1}, 0, 0}};
  auto chosen = select_with_bounds(3, a3, b3);
  REQUIRE(chosen.has_value());
  CHECK(*chosen == std::vector<int>{0});
}

TEST_CASE("random laminar families match the exhaustive quota oracle") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 600; ++trial) {
    const int ground = uniform(rng, 0, 12);
    const int n = uniform(rng, 1, 5);
    LaminarFamily a = testing::random_laminar(rng, ground);
    LaminarFamily b = testing::random_laminar(rng, ground);
    REQUIRE(verify_laminar(a));
    REQUIRE(verify_laminar(b));
    CHECK(testing::quota_subset_exists(ground, a.sets, b.sets, n));
    const std::uint64_t seed = static_cast<std::uint64_t>(trial);
    std::vector<int> chosen = select_subset(ground, a, b, n, seed);
    CHECK(testing::subset_meets_quotas(a.sets, b.sets, as_mask(chosen, ground), n));
    CHECK(select_subset(ground, a, b, n, seed) == chosen);
  }
}

TEST_CASE("bounded circulation honours lower bounds") {
  // s -> a -> t and s -> b -> t with t -> s closing the circulation.
  BoundedCirculation net(4);
  int sa = net.add_arc(0, 1, 2, 5);
  int at = net.add_arc(1, 3, 0, 3);
  int sb = net.add_arc(0, 2, 0, 4);
  int bt = net.add_arc(2, 3, 4, 4);
  int ts = net.add_arc(3, 0, 7, 7);
  REQUIRE(net.solve());
  CHECK(net.flow(sa) == net.flow(at));
  CHECK(net.flow(sb) == net.flow(bt));
  CHECK(net.flow(bt) == 4);
  CHECK(net.flow(ts) == 7);
  CHECK(net.flow(sa) == 3);

  BoundedCirculation blocked(2);
  blocked.add_arc(0, 1, 3, 3);
  blocked.add_arc(1, 0, 0, 2);
  CHECK_FALSE(blocked.solve());
}
