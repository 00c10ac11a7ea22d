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

#include "amalgam/coloring.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "amalgam/flow.hpp"
#include "amalgam/laminar.hpp"

namespace amalgam {
namespace {

// per_vertex[v][c]: degree of v in color c (loops count twice).
std::vector<std::vector<int>> color_degrees(const Multigraph& g,
                                            const EdgeColoring& coloring) {
  std::vector<std::vector<int>> out(g.vertex_count(),
                                    std::vector<int>(coloring.k + 1, 0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    ++out[ed.a][coloring[e]];
    ++out[ed.b][coloring[e]];
  }
  return out;
}

bool valid_coloring(const Multigraph& g, const EdgeColoring& coloring) {
  try {
    check_coloring(g, coloring);
  } catch (const ContractViolation&) {
    return false;
  }
  return true;
}

int spread(const std::vector<int>& counts) {
  // counts[0] is unused padding for 1-based colors.
  auto [lo, hi] = std::minmax_element(counts.begin() + 1, counts.end());
  return *hi - *lo;
}

}  // namespace

std::optional<Bipartition> find_bipartition(const Multigraph& g) {
  std::vector<std::vector<VertexId>> adjacent(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return std::nullopt;
    adjacent[e.a].push_back(e.b);
    adjacent[e.b].push_back(e.a);
  }
  Bipartition side(g.vertex_count(), -1);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    std::queue<VertexId> queue;
    queue.push(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop();
      for (VertexId w : adjacent[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

EdgeColoring bee_coloring(const Multigraph& g, const Bipartition& sides,
                          int k) {
  if (k < 1) throw ContractViolation("k must be >= 1");
  if (static_cast<int>(sides.size()) != g.vertex_count()) {
    throw ContractViolation("bipartition must cover every vertex");
  }
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) throw ContractViolation("bipartite input has a loop");
    if (sides[e.a] == sides[e.b]) {
      throw ContractViolation("edge does not cross the bipartition");
    }
  }

  EdgeColoring coloring{k, std::vector<int>(g.edge_count(), 0)};
  std::vector<EdgeId> remaining(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) remaining[e] = e;

  for (int divisor = k; divisor >= 1 && !remaining.empty(); --divisor) {
    const int color = k - divisor + 1;
    const int ground = static_cast<int>(remaining.size());
    LaminarFamily left{ground, {}};
    LaminarFamily right{ground, {}};
    std::map<std::pair<VertexId, VertexId>, std::vector<int>> pairs;
    std::map<VertexId, std::vector<int>> left_star;
    std::map<VertexId, std::vector<int>> right_star;
    std::vector<int> all(ground);
    for (int i = 0; i < ground; ++i) {
      const Edge& e = g.edge(remaining[i]);
      VertexId l = sides[e.a] == 0 ? e.a : e.b;
      VertexId r = e.other(l);
      pairs[{l, r}].push_back(i);
      left_star[l].push_back(i);
      right_star[r].push_back(i);
      all[i] = i;
    }
    for (auto& [key, set] : pairs) left.sets.push_back(std::move(set));
    for (auto& [key, set] : left_star) left.sets.push_back(std::move(set));
    left.sets.push_back(all);
    for (auto& [key, set] : right_star) right.sets.push_back(std::move(set));
    right.sets.push_back(all);

    std::vector<int> chosen = select_subset(ground, left, right, divisor);
    std::vector<char> taken(ground, 0);
    for (int i : chosen) {
      coloring.color_of[remaining[i]] = color;
      taken[i] = 1;
    }
    std::vector<EdgeId> rest;
    for (int i = 0; i < ground; ++i) {
      if (!taken[i]) rest.push_back(remaining[i]);
    }
    remaining = std::move(rest);
  }
  if (!remaining.empty()) {
    throw std::logic_error("bee coloring left edges uncolored");
  }
  return coloring;
}

std::vector<VertexId> euler_orientation(const Multigraph& g) {
  std::vector<std::vector<EdgeId>> incident(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    incident[ed.a].push_back(e);
    if (!ed.is_loop()) incident[ed.b].push_back(e);
  }
  for (int d : g.degrees()) {
    if (d % 2 != 0) throw ContractViolation("graph has an odd-degree vertex");
  }

  // Closed-trail walks: in an even graph a walk can only get stuck where it
  // started, so each walk orients its edges consistently.
  std::vector<VertexId> head(g.edge_count(), -1);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    while (true) {
      VertexId v = start;
      bool moved = false;
      while (true) {
        auto& list = incident[v];
        std::size_t& i = cursor[v];
        while (i < list.size() && head[list[i]] >= 0) ++i;
        if (i == list.size()) break;
        EdgeId e = list[i];
        VertexId next = g.edge(e).other(v);
        head[e] = next;
        v = next;
        moved = true;
      }
      if (!moved) break;
    }
  }
  return head;
}

EdgeColoring evenly_equitable_coloring(const Multigraph& g, int k) {
  if (k < 1) throw ContractViolation("k must be >= 1");
  const std::vector<VertexId> head = euler_orientation(g);
  const int n = g.vertex_count();

  EdgeColoring coloring{k, std::vector<int>(g.edge_count(), 0)};
  std::vector<EdgeId> remaining(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) remaining[e] = e;

  // Each class is an Eulerian sub-digraph of the orientation whose
  // throughput at v is within one of (remaining out-degree of v) / divisor.
  // Uniform flow 1/divisor on every arc is a fractional solution, so an
  // integral one exists.
  for (int divisor = k; divisor >= 1 && !remaining.empty(); --divisor) {
    const int color = k - divisor + 1;
    std::vector<int> out_degree(n, 0);
    for (EdgeId e : remaining) {
      const Edge& ed = g.edge(e);
      VertexId tail = ed.other(head[e]);
      if (ed.is_loop()) tail = ed.a;
      ++out_degree[tail];
    }
    BoundedCirculation network(2 * n);
    for (VertexId v = 0; v < n; ++v) {
      network.add_arc(2 * v, 2 * v + 1,
                      static_cast<int>(floor_div(out_degree[v], divisor)),
                      static_cast<int>(ceil_div(out_degree[v], divisor)));
    }
    std::vector<int> arcs;
    arcs.reserve(remaining.size());
    for (EdgeId e : remaining) {
      const Edge& ed = g.edge(e);
      VertexId to = head[e];
      VertexId from = ed.is_loop() ? ed.a : ed.other(to);
      arcs.push_back(network.add_arc(2 * from + 1, 2 * to, 0, 1));
    }
    if (!network.solve()) {
      throw std::logic_error("evenly-equitable class extraction failed");
    }
    std::vector<EdgeId> rest;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (network.flow(arcs[i]) == 1) {
        coloring.color_of[remaining[i]] = color;
      } else {
        rest.push_back(remaining[i]);
      }
    }
    remaining = std::move(rest);
  }
  if (!remaining.empty()) {
    throw std::logic_error("evenly-equitable coloring left edges uncolored");
  }
  return coloring;
}

bool verify_bee(const Multigraph& g, const EdgeColoring& coloring) {
  if (!valid_coloring(g, coloring)) return false;
  std::vector<int> sizes(coloring.k + 1, 0);
  for (int c : coloring.color_of) ++sizes[c];
  if (spread(sizes) > 1) return false;

  std::map<std::pair<VertexId, VertexId>, std::vector<int>> pairs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    auto key = std::minmax(ed.a, ed.b);
    auto& counts = pairs[{key.first, key.second}];
    if (counts.empty()) counts.assign(coloring.k + 1, 0);
    ++counts[coloring[e]];
  }
  for (const auto& [key, counts] : pairs) {
    if (spread(counts) > 1) return false;
  }
  for (const auto& counts : color_degrees(g, coloring)) {
    if (spread(counts) > 1) return false;
  }
  return true;
}

bool verify_evenly_equitable(const Multigraph& g,
                             const EdgeColoring& coloring) {
  if (!valid_coloring(g, coloring)) return false;
  for (const auto& counts : color_degrees(g, coloring)) {
    for (int c = 1; c <= coloring.k; ++c) {
      if (counts[c] % 2 != 0) return false;
    }
    if (spread(counts) > 2) return false;
  }
  return true;
}

}  // namespace amalgam
