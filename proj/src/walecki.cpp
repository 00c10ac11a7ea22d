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

#include <algorithm>

#include "amalgam/constructions.hpp"
#include "construction_support.hpp"

namespace amalgam {
namespace {

using Cycle = std::vector<VertexId>;
using Pairs = std::vector<std::pair<VertexId, VertexId>>;

struct Leave {
  std::vector<Cycle> cycles;
  Pairs factor;  // perfect matching, empty when the degree is even
};

// Zig-zag path i, i+1, i-1, i+2, i-2, ..., i+r on Z_{2r}.
Cycle zigzag(int r, int i) {
  const int size = 2 * r;
  Cycle path{i};
  for (int t = 1; static_cast<int>(path.size()) < size; ++t) {
    path.push_back(((i + t) % size + size) % size);
    if (static_cast<int>(path.size()) < size) {
      path.push_back(((i - t) % size + size) % size);
    }
  }
  return path;
}

// K_{2r+1}: vertex 2r closes each zig-zag path into a cycle.
Leave odd_order(int r) {
  Leave out;
  for (int i = 0; i < r; ++i) {
    Cycle c = zigzag(r, i);
    c.insert(c.begin(), 2 * r);
    out.cycles.push_back(std::move(c));
  }
  return out;
}

// K_{2r+2}: the cycles of K_{2r+1} each absorb vertex w = 2r+1 in place of
// one path edge; the absorbed edges form a perfect matching of Z_{2r}, which
// together with {inf, w} is the 1-factor.
Leave even_order(int r) {
  Leave out = odd_order(r);
  const int size = 2 * r;
  const VertexId inf = size;
  const VertexId w = size + 1;
  for (int i = 0; i < r; ++i) {
    VertexId a;
    VertexId b;
    if (r % 2 == 1) {
      // Sum 2i+1 with even endpoint 2 * (2i mod r).
      a = 2 * ((2 * i) % r);
      b = ((2 * i + 1 - a) % size + size) % size;
    } else {
      // Antipodal pair with sum 2i.
      a = ((i - r / 2) % r + r) % r;
      b = a + r;
    }
    Cycle& c = out.cycles[i];
    auto n = c.size();
    for (std::size_t p = 1; p + 1 < n; ++p) {
      if (std::minmax(c[p], c[p + 1]) == std::minmax(a, b)) {
        c.insert(c.begin() + static_cast<std::ptrdiff_t>(p) + 1, w);
        break;
      }
    }
    if (c.size() != n + 1) throw std::logic_error("matching edge not on path");
    out.factor.emplace_back(a, b);
  }
  out.factor.emplace_back(inf, w);
  return out;
}

Pairs cycle_edges(const Cycle& c) {
  Pairs edges;
  for (std::size_t p = 0; p < c.size(); ++p) {
    edges.emplace_back(c[p], c[(p + 1) % c.size()]);
  }
  return edges;
}

Leave base_leave(int n) {
  if (n == 2) return {{}, {{0, 1}}};
  if (n % 2 == 1) return odd_order((n - 1) / 2);
  return even_order((n - 2) / 2);
}

}  // namespace

DecompositionCertificate walecki_direct(int n, int lambda) {
  if (n < 1 || lambda < 1) {
    FeasibilityReport report;
    report.add("positive-parameters", "n and lambda must be >= 1");
    throw InfeasibleError(std::move(report));
  }
  DecompositionCertificate cert;
  cert.host.kind = "complete";
  cert.host.params = {{"n", n}, {"lambda", lambda}};
  cert.host.graph = Multigraph(n);

  auto add_class = [&](Role role, const Pairs& edges) {
    ClassClaim claim;
    claim.role = role;
    claim.r = role == Role::one_factor ? 1 : 2;
    for (auto [a, b] : edges) {
      claim.edge_ids.push_back(cert.host.graph.add_edge(a, b));
      claim.edges.emplace_back(a, b);
    }
    cert.classes.push_back(std::move(claim));
  };

  if (n > 1) {
    const Leave leave = base_leave(n);
    auto add_copy = [&](const std::vector<VertexId>& relabel) {
      for (const Cycle& c : leave.cycles) {
        Pairs edges = cycle_edges(c);
        for (auto& [a, b] : edges) a = relabel[a], b = relabel[b];
        add_class(Role::hamiltonian, edges);
      }
    };
    std::vector<VertexId> identity(n);
    for (int v = 0; v < n; ++v) identity[v] = v;

    int copies = lambda;
    if (!leave.factor.empty()) {
      // Two copies of the leave F and pi(F) close into one Hamiltonian
      // cycle, where pi maps x_t -> y_t and y_t -> x_{t+1} along F's pairs.
      std::vector<VertexId> pi(n);
      const int half = static_cast<int>(leave.factor.size());
      for (int t = 0; t < half; ++t) {
        pi[leave.factor[t].first] = leave.factor[t].second;
        pi[leave.factor[t].second] = leave.factor[(t + 1) % half].first;
      }
      for (; copies >= 2; copies -= 2) {
        add_copy(identity);
        add_copy(pi);
        Pairs joined = leave.factor;
        for (auto [a, b] : leave.factor) joined.emplace_back(pi[a], pi[b]);
        add_class(Role::hamiltonian, joined);
      }
    }
    for (; copies > 0; --copies) {
      add_copy(identity);
      if (!leave.factor.empty()) add_class(Role::one_factor, leave.factor);
    }
  }
  return certified(std::move(cert));
}

}  // namespace amalgam
