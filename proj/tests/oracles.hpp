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

// Exhaustive reference implementations used to cross-check the library on
// small inputs. They share no code with the library beyond plain data types.

#ifndef AMALGAM_TESTS_ORACLES_HPP
#define AMALGAM_TESTS_ORACLES_HPP

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace amalgam::testing {

// floor(|set| / n) <= |set & chosen| <= ceil(|set| / n).
inline bool within_quota(const std::vector<int>& set,
                         const std::vector<bool>& chosen, int n) {
  int inside = 0;
  for (int x : set) inside += chosen[x] ? 1 : 0;
  int size = static_cast<int>(set.size());
  int lo = size / n;
  int hi = (size + n - 1) / n;
  return inside >= lo && inside <= hi;
}

inline bool subset_meets_quotas(const std::vector<std::vector<int>>& a,
                                const std::vector<std::vector<int>>& b,
                                const std::vector<bool>& chosen, int n) {
  for (const auto& set : a) {
    if (!within_quota(set, chosen, n)) return false;
  }
  for (const auto& set : b) {
    if (!within_quota(set, chosen, n)) return false;
  }
  return true;
}

// Tries all 2^ground subsets.
inline bool quota_subset_exists(int ground,
                                const std::vector<std::vector<int>>& a,
                                const std::vector<std::vector<int>>& b, int n) {
  std::vector<bool> chosen(ground);
  for (std::uint32_t mask = 0; mask < (1u << ground); ++mask) {
    for (int x = 0; x < ground; ++x) chosen[x] = (mask >> x) & 1u;
    if (subset_meets_quotas(a, b, chosen, n)) return true;
  }
  return false;
}

// Multiplicity matrix of K(n_1, ..., n_m; lambda, mu), parts contiguous.
inline std::vector<std::vector<int>> two_class_matrix(
    const std::vector<int>& sizes, int lambda, int mu) {
  std::vector<int> part;
  for (int p = 0; p < static_cast<int>(sizes.size()); ++p) {
    part.insert(part.end(), sizes[p], p);
  }
  const int s = static_cast<int>(part.size());
  std::vector<std::vector<int>> mult(s, std::vector<int>(s, 0));
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      if (a != b) mult[a][b] = part[a] == part[b] ? lambda : mu;
    }
  }
  return mult;
}

// Backtracking search for a partition of a loopless multigraph into
// Hamiltonian cycles, plus one perfect matching when the graph is regular of
// odd degree. On two vertices a Hamiltonian cycle is a pair of parallel
// edges.
class DecompositionOracle {
 public:
  explicit DecompositionOracle(std::vector<std::vector<int>> mult)
      : mult_(std::move(mult)), s_(static_cast<int>(mult_.size())) {}

  bool decomposable() {
    if (s_ == 0) return true;
    std::vector<int> degree(s_, 0);
    for (int a = 0; a < s_; ++a) {
      for (int b = 0; b < s_; ++b) degree[a] += mult_[a][b];
    }
    for (int d : degree) {
      if (d != degree[0]) return false;
    }
    if (degree[0] == 0) return true;
    if (s_ == 1) return false;
    if (degree[0] % 2 == 0) return cycles();
    std::vector<bool> matched(s_, false);
    return matching(matched);
  }

 private:
  bool matching(std::vector<bool>& matched) {
    int v = 0;
    while (v < s_ && matched[v]) ++v;
    if (v == s_) return cycles();
    matched[v] = true;
    for (int w = v + 1; w < s_; ++w) {
      if (matched[w] || mult_[v][w] == 0) continue;
      matched[w] = true;
      change(v, w, -1);
      bool ok = matching(matched);
      change(v, w, +1);
      matched[w] = false;
      if (ok) return true;
    }
    matched[v] = false;
    return false;
  }

  bool cycles() {
    int a = -1;
    for (int b = 1; b < s_ && a < 0; ++b) {
      if (mult_[0][b] > 0) a = b;
    }
    if (a < 0) return empty();
    std::string key = state_key();
    if (failed_.count(key)) return false;
    if (s_ == 2) {
      if (mult_[0][1] % 2 == 0) return true;
      failed_.insert(key);
      return false;
    }
    std::vector<int> path{0, a};
    std::vector<bool> used(s_, false);
    used[0] = used[a] = true;
    change(0, a, -1);
    bool ok = extend(path, used);
    change(0, a, +1);
    if (!ok) failed_.insert(key);
    return ok;
  }

  // Grows a Hamiltonian path from 0 through a; closing it removes a cycle
  // and recurses on the rest.
  bool extend(std::vector<int>& path, std::vector<bool>& used) {
    const int at = path.back();
    if (static_cast<int>(path.size()) == s_) {
      if (mult_[at][0] == 0) return false;
      change(at, 0, -1);
      bool ok = cycles();
      change(at, 0, +1);
      return ok;
    }
    for (int next = 0; next < s_; ++next) {
      if (used[next] || mult_[at][next] == 0) continue;
      used[next] = true;
      path.push_back(next);
      change(at, next, -1);
      bool ok = extend(path, used);
      change(at, next, +1);
      path.pop_back();
      used[next] = false;
      if (ok) return true;
    }
    return false;
  }

  bool empty() const {
    for (const auto& row : mult_) {
      for (int x : row) {
        if (x != 0) return false;
      }
    }
    return true;
  }

  void change(int a, int b, int by) {
    mult_[a][b] += by;
    mult_[b][a] += by;
  }

  std::string state_key() const {
    std::string key;
    for (int a = 0; a < s_; ++a) {
      for (int b = a + 1; b < s_; ++b) key.push_back(static_cast<char>(mult_[a][b]));
    }
    return key;
  }

  std::vector<std::vector<int>> mult_;
  int s_;
  std::unordered_set<std::string> failed_;
};

}  // namespace amalgam::testing

#endif  // AMALGAM_TESTS_ORACLES_HPP
