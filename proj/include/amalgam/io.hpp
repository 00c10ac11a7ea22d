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

#ifndef AMALGAM_IO_HPP
#define AMALGAM_IO_HPP

#include <string>
#include <vector>

#include "amalgam/certify.hpp"
#include "amalgam/detachment.hpp"
#include "amalgam/multigraph.hpp"
#include "json.hpp"

namespace amalgam {

// {"vertices": s, "edges": [[a, b], ...]}; edge order is EdgeId order.
nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& doc);

// {"k": k, "colors": [c_0, ...]} parallel to the edge list.
nlohmann::json coloring_to_json(const EdgeColoring& coloring);
EdgeColoring coloring_from_json(const nlohmann::json& doc,
                                const Multigraph& g);

struct ColoredGraph {
  Multigraph graph;
  EdgeColoring coloring;
};

// Graph fields and coloring fields in one object.
nlohmann::json colored_graph_to_json(const Multigraph& g,
                                     const EdgeColoring& coloring);
ColoredGraph colored_graph_from_json(const nlohmann::json& doc);

// Either a bare array or {"eta": [...]}.
std::vector<int> eta_from_json(const nlohmann::json& doc);

// Colored graph plus "phi" and "eta".
nlohmann::json detachment_to_json(const DetachmentResult& result);

// Graphviz rendering. Edges are colored by class index; vertices of each part
// are grouped into a labeled cluster.
std::string to_dot(const Multigraph& g, const EdgeColoring* coloring,
                   const std::vector<std::vector<VertexId>>& parts = {});
std::string to_dot(const DecompositionCertificate& cert);

}  // namespace amalgam

#endif  // AMALGAM_IO_HPP
