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

#include "amalgam/flow.hpp"

#include <algorithm>
#include <queue>

#include "amalgam/multigraph.hpp"

namespace amalgam {

BoundedCirculation::BoundedCirculation(int node_count)
    : node_count_(node_count) {}

int BoundedCirculation::add_node() { return node_count_++; }

int BoundedCirculation::add_arc(int from, int to, int lower, int upper) {
  if (lower < 0 || upper < lower) {
    throw ContractViolation("arc bounds must satisfy 0 <= lower <= upper");
  }
  if (from < 0 || to < 0 || from >= node_count_ || to >= node_count_) {
    throw ContractViolation("arc endpoint out of range");
  }
  arcs_.push_back({from, to, lower, upper, -1});
  solved_ = false;
  return static_cast<int>(arcs_.size() - 1);
}

int BoundedCirculation::add_residual(int from, int to, int cap) {
  int idx = static_cast<int>(residual_.size());
  residual_.push_back({to, cap});
  residual_.push_back({from, 0});
  adjacency_[from].push_back(idx);
  adjacency_[to].push_back(idx + 1);
  return idx;
}

bool BoundedCirculation::bfs(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> queue;
  level_[s] = 0;
  queue.push(s);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int idx : adjacency_[v]) {
      const Residual& r = residual_[idx];
      if (r.cap > 0 && level_[r.to] < 0) {
        level_[r.to] = level_[v] + 1;
        queue.push(r.to);
      }
    }
  }
  return level_[t] >= 0;
}

int BoundedCirculation::dfs(int v, int t, int pushed) {
  if (v == t) return pushed;
  for (std::size_t& i = cursor_[v]; i < adjacency_[v].size(); ++i) {
    int idx = adjacency_[v][i];
    Residual& r = residual_[idx];
    if (r.cap <= 0 || level_[r.to] != level_[v] + 1) continue;
    int got = dfs(r.to, t, std::min(pushed, r.cap));
    if (got > 0) {
      r.cap -= got;
      residual_[idx ^ 1].cap += got;
      return got;
    }
  }
  return 0;
}

bool BoundedCirculation::solve() {
  const int source = node_count_;
  const int sink = node_count_ + 1;
  const int total = node_count_ + 2;
  residual_.clear();
  adjacency_.assign(total, {});
  level_.assign(total, -1);

  std::vector<long long> excess(node_count_, 0);
  for (Arc& arc : arcs_) {
    arc.residual = add_residual(arc.from, arc.to, arc.upper - arc.lower);
    excess[arc.to] += arc.lower;
    excess[arc.from] -= arc.lower;
  }
  long long demand = 0;
  for (int v = 0; v < node_count_; ++v) {
    if (excess[v] > 0) {
      add_residual(source, v, static_cast<int>(excess[v]));
      demand += excess[v];
    } else if (excess[v] < 0) {
      add_residual(v, sink, static_cast<int>(-excess[v]));
    }
  }

  long long flow = 0;
  while (bfs(source, sink)) {
    cursor_.assign(total, 0);
    while (int pushed = dfs(source, sink, kUnbounded)) flow += pushed;
  }
  solved_ = flow == demand;
  return solved_;
}

int BoundedCirculation::flow(int arc) const {
  const Arc& a = arcs_.at(arc);
  // Flow on the forward arc is lower bound plus what was consumed.
  return a.lower + residual_[a.residual ^ 1].cap;
}

}  // namespace amalgam
