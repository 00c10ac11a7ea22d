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

#ifndef AMALGAM_COLORING_HPP
#define AMALGAM_COLORING_HPP

#include <optional>
#include <span>
#include <vector>

#include "amalgam/multigraph.hpp"

namespace amalgam {

// side[v] is 0 or 1.
using Bipartition = std::vector<int>;

// Two-colors the vertices so that every edge crosses, or nullopt when g has
// a loop or an odd cycle.
std::optional<Bipartition> find_bipartition(const Multigraph& g);

// Balanced, equitable and equalized k-edge-coloring of a bipartite
// multigraph. Classes are peeled off one at a time with laminar quota
// selection: n = k, then k - 1, and so on.
EdgeColoring bee_coloring(const Multigraph& g, const Bipartition& sides,
                          int k);

// Each vertex has even degree in every color, and any two colors differ by
// at most 2 at every vertex. Requires an even graph; loops are allowed.
EdgeColoring evenly_equitable_coloring(const Multigraph& g, int k);

// Class sizes, per-pair counts and per-vertex counts each within one.
bool verify_bee(const Multigraph& g, const EdgeColoring& coloring);
bool verify_evenly_equitable(const Multigraph& g,
                             const EdgeColoring& coloring);

// Directs every edge along an Eulerian circuit of its component, so that in
// and out degrees agree at every vertex. heads[e] is the vertex the edge
// points to. Requires an even graph.
std::vector<VertexId> euler_orientation(const Multigraph& g);

}  // namespace amalgam

#endif  // AMALGAM_COLORING_HPP
