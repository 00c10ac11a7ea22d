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

#include "amalgam/hosts.hpp"

namespace amalgam {

Multigraph complete_multigraph(int n, int lambda) {
  if (n < 0 || lambda < 0) throw ContractViolation("negative parameter");
  Multigraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.add_edges(a, b, lambda);
  }
  return g;
}

std::vector<std::vector<VertexId>> contiguous_parts(
    const std::vector<int>& part_sizes) {
  std::vector<std::vector<VertexId>> parts;
  VertexId next = 0;
  for (int size : part_sizes) {
    if (size < 0) throw ContractViolation("negative part size");
    auto& part = parts.emplace_back();
    for (int i = 0; i < size; ++i) part.push_back(next++);
  }
  return parts;
}

Multigraph two_class_graph(const std::vector<int>& part_sizes, int lambda,
                           int mu) {
  if (lambda < 0 || mu < 0) throw ContractViolation("negative multiplicity");
  const auto parts = contiguous_parts(part_sizes);
  int total = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    total += static_cast<int>(parts[p].size());
    part_of.insert(part_of.end(), parts[p].size(), static_cast<int>(p));
  }
  Multigraph g(total);
  for (int a = 0; a < total; ++a) {
    for (int b = a + 1; b < total; ++b) {
      g.add_edges(a, b, part_of[a] == part_of[b] ? lambda : mu);
    }
  }
  return g;
}

}  // namespace amalgam
