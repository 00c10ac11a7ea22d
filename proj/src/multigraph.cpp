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

#include "amalgam/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace amalgam {

Multigraph::Multigraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) {
    throw ContractViolation("negative vertex count");
  }
}

VertexId Multigraph::add_vertex() { return vertex_count_++; }

EdgeId Multigraph::add_edge(VertexId a, VertexId b) {
  check_vertex(a);
  check_vertex(b);
  edges_.push_back({a, b});
  return static_cast<EdgeId>(edges_.size() - 1);
}

void Multigraph::add_edges(VertexId a, VertexId b, int count) {
  for (int i = 0; i < count; ++i) add_edge(a, b);
}

void Multigraph::set_endpoints(EdgeId e, VertexId a, VertexId b) {
  check_vertex(a);
  check_vertex(b);
  if (e < 0 || e >= edge_count()) {
    throw ContractViolation("edge id out of range: " + std::to_string(e));
  }
  edges_[static_cast<std::size_t>(e)] = {a, b};
}

const Edge& Multigraph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) {
    throw ContractViolation("edge id out of range: " + std::to_string(e));
  }
  return edges_[static_cast<std::size_t>(e)];
}

void Multigraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count_) {
    throw ContractViolation("vertex id out of range: " + std::to_string(v));
  }
}

int Multigraph::degree(VertexId v) const {
  check_vertex(v);
  int d = 0;
  for (const Edge& e : edges_) {
    d += (e.a == v) + (e.b == v);
  }
  return d;
}

int Multigraph::loop_count(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(std::count_if(
      edges_.begin(), edges_.end(),
      [v](const Edge& e) { return e.a == v && e.b == v; }));
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [u, v](const Edge& e) {
        return (e.a == u && e.b == v) || (e.a == v && e.b == u);
      }));
}

int Multigraph::components() const {
  DisjointSets sets(vertex_count_);
  for (const Edge& e : edges_) sets.unite(e.a, e.b);
  return sets.set_count();
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(vertex_count_), 0);
  for (const Edge& e : edges_) {
    ++d[static_cast<std::size_t>(e.a)];
    ++d[static_cast<std::size_t>(e.b)];
  }
  return d;
}

bool Multigraph::is_loopless() const {
  return std::none_of(edges_.begin(), edges_.end(),
                      [](const Edge& e) { return e.is_loop(); });
}

std::vector<EdgeId> Multigraph::incident_edges(VertexId v) const {
  check_vertex(v);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    if (ed.a == v || ed.b == v) out.push_back(e);
  }
  return out;
}

void check_coloring(const Multigraph& g, const EdgeColoring& coloring) {
  if (coloring.k < 1) throw ContractViolation("coloring needs k >= 1");
  if (static_cast<int>(coloring.color_of.size()) != g.edge_count()) {
    throw ContractViolation("coloring is not total over the edge set");
  }
  for (int c : coloring.color_of) {
    if (c < 1 || c > coloring.k) {
      throw ContractViolation("color out of range: " + std::to_string(c));
    }
  }
}

Multigraph color_class(const Multigraph& g, const EdgeColoring& coloring,
                       int j) {
  check_coloring(g, coloring);
  Multigraph out(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (coloring[e] == j) out.add_edge(g.edge(e).a, g.edge(e).b);
  }
  return out;
}

int color_degree(const Multigraph& g, const EdgeColoring& coloring,
                 VertexId v, int j) {
  int d = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (coloring[e] != j) continue;
    const Edge& ed = g.edge(e);
    d += (ed.a == v) + (ed.b == v);
  }
  return d;
}

Amalgamation amalgamate(const Multigraph& g, std::span<const VertexId> phi) {
  if (static_cast<int>(phi.size()) != g.vertex_count()) {
    throw ContractViolation("amalgamation function must be total");
  }
  std::map<VertexId, VertexId> dense;
  for (VertexId image : phi) dense.emplace(image, 0);
  VertexId next = 0;
  for (auto& [image, id] : dense) id = next++;

  Amalgamation out;
  out.graph = Multigraph(next);
  out.spec.eta.assign(static_cast<std::size_t>(next), 0);
  out.spec.phi.reserve(phi.size());
  for (VertexId image : phi) {
    VertexId h = dense.at(image);
    out.spec.phi.push_back(h);
    ++out.spec.eta[static_cast<std::size_t>(h)];
  }
  for (const Edge& e : g.edges()) {
    out.graph.add_edge(out.spec.phi[static_cast<std::size_t>(e.a)],
                       out.spec.phi[static_cast<std::size_t>(e.b)]);
  }
  return out;
}

long long floor_div(long long num, long long den) {
  if (den == 0) throw ContractViolation("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

long long ceil_div(long long num, long long den) {
  return -floor_div(-num, den);
}

bool approx(long long x, long long num, long long den) {
  return floor_div(num, den) <= x && x <= ceil_div(num, den);
}

long long binomial2(long long n) { return n * (n - 1) / 2; }

DisjointSets::DisjointSets(int n)
    : parent_(static_cast<std::size_t>(n)),
      rank_(static_cast<std::size_t>(n), 0),
      sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    auto& p = parent_[static_cast<std::size_t>(x)];
    p = parent_[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

bool DisjointSets::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[static_cast<std::size_t>(x)] < rank_[static_cast<std::size_t>(y)]) {
    std::swap(x, y);
  }
  parent_[static_cast<std::size_t>(y)] = x;
  if (rank_[static_cast<std::size_t>(x)] == rank_[static_cast<std::size_t>(y)]) {
    ++rank_[static_cast<std::size_t>(x)];
  }
  --sets_;
  return true;
}

}  // namespace amalgam
