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

// Shared pieces of the builders. Not installed.

#ifndef AMALGAM_SRC_CONSTRUCTION_SUPPORT_HPP
#define AMALGAM_SRC_CONSTRUCTION_SUPPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "amalgam/certify.hpp"
#include "amalgam/constructions.hpp"
#include "amalgam/multigraph.hpp"

namespace amalgam {

bool is_complete_simple(const Multigraph& g);

struct ClassShape {
  int max_degree = 0;
  int components = 0;  // isolated vertices included
  int isolated = 0;
  int edges = 0;
  bool acyclic = true;
};

ClassShape class_shape(const Multigraph& g, const EdgeColoring& coloring,
                       int j);

struct Colored {
  Multigraph g;
  EdgeColoring coloring;
};

// Detaches a single vertex carrying loops[j - 1] loops of color j into n
// vertices. The result is lambda K_n (for the right loop total) colored so
// that color j has degree 2 * loops[j - 1] / n everywhere.
Colored detach_single_vertex(int n, const std::vector<int>& loops,
                             std::uint64_t seed);

// Finishes a detached coloring into a certificate: class j takes role
// roles[j - 1]; factor classes carry degree factor_degree[j - 1].
struct ClassSpec {
  Role role = Role::hamiltonian;
  int r = 2;
  bool connected = false;
};

DecompositionCertificate certificate_from_coloring(
    const Multigraph& g, const EdgeColoring& coloring,
    const std::vector<ClassSpec>& specs, std::string kind,
    nlohmann::json params, std::vector<std::vector<VertexId>> parts = {});

// Throws std::logic_error unless the certificate passes certify.
DecompositionCertificate certified(DecompositionCertificate cert);

void require_feasible(const DecompositionRequest& req);

}  // namespace amalgam

#endif  // AMALGAM_SRC_CONSTRUCTION_SUPPORT_HPP
