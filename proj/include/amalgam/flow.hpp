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

#ifndef AMALGAM_FLOW_HPP
#define AMALGAM_FLOW_HPP

#include <vector>

namespace amalgam {

// Integral circulation with lower and upper arc bounds. Feasibility is
// decided by the usual reduction to a single max-flow (Dinic) between an
// auxiliary source and sink. For an s-t flow, add an unbounded arc t -> s.
class BoundedCirculation {
 public:
  explicit BoundedCirculation(int node_count);

  int add_node();
  int add_arc(int from, int to, int lower, int upper);

  // Returns true and fixes an integral flow when one exists.
  bool solve();
  int flow(int arc) const;

  static constexpr int kUnbounded = 1 << 29;

 private:
  struct Residual {
    int to;
    int cap;
  };
  struct Arc {
    int from, to, lower, upper;
    int residual;  // index of the forward residual entry
  };

  int add_residual(int from, int to, int cap);
  bool bfs(int s, int t);
  int dfs(int v, int t, int pushed);

  int node_count_;
  std::vector<Arc> arcs_;
  std::vector<Residual> residual_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  bool solved_ = false;
};

}  // namespace amalgam

#endif  // AMALGAM_FLOW_HPP
