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

#ifndef AMALGAM_HOSTS_HPP
#define AMALGAM_HOSTS_HPP

#include <vector>

#include "amalgam/multigraph.hpp"

namespace amalgam {

// lambda * K_n on vertices 0..n-1.
Multigraph complete_multigraph(int n, int lambda);

// K(n_1, ..., n_m; lambda, mu): part i occupies a contiguous block of
// vertices; pairs inside a part have multiplicity lambda, pairs across parts
// multiplicity mu.
Multigraph two_class_graph(const std::vector<int>& part_sizes, int lambda,
                           int mu);

// Vertex blocks matching two_class_graph's numbering.
std::vector<std::vector<VertexId>> contiguous_parts(
    const std::vector<int>& part_sizes);

}  // namespace amalgam

#endif  // AMALGAM_HOSTS_HPP
