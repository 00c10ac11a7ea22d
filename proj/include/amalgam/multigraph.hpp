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

#ifndef AMALGAM_MULTIGRAPH_HPP
#define AMALGAM_MULTIGRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace amalgam {

using VertexId = int;
using EdgeId = int;

// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  bool is_loop() const { return a == b; }
  VertexId other(VertexId v) const { return v == a ? b : a; }
};

// Multigraph with loops and parallel edges. Edges live in a flat sequence
// indexed by EdgeId; a loop is an edge whose endpoints coincide and counts
// twice towards the degree of its vertex.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  VertexId add_vertex();
  EdgeId add_edge(VertexId a, VertexId b);
  // Add `count` parallel copies of {a, b}.
  void add_edges(VertexId a, VertexId b, int count);

  // Moves an existing edge; its EdgeId is unchanged.
  void set_endpoints(EdgeId e, VertexId a, VertexId b);

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const { return edges_; }

  int degree(VertexId v) const;
  int loop_count(VertexId v) const;
  int multiplicity(VertexId u, VertexId v) const;
  // Number of connected components, isolated vertices included.
  int components() const;

  std::vector<int> degrees() const;
  bool is_loopless() const;
  // Edge ids incident with v; a loop is listed once.
  std::vector<EdgeId> incident_edges(VertexId v) const;

 private:
  void check_vertex(VertexId v) const;

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Colors are 1..k; color classes may be empty.
struct EdgeColoring {
  int k = 1;
  std::vector<int> color_of;

  int operator[](EdgeId e) const { return color_of[static_cast<std::size_t>(e)]; }
};

// Throws ContractViolation unless `coloring` is total over `g` with values in
// 1..k.
void check_coloring(const Multigraph& g, const EdgeColoring& coloring);

// The spanning subgraph formed by the edges of color j.
Multigraph color_class(const Multigraph& g, const EdgeColoring& coloring,
                       int j);

// Degree of v restricted to color j.
int color_degree(const Multigraph& g, const EdgeColoring& coloring,
                 VertexId v, int j);

// Number function eta and amalgamation function phi: phi maps vertices of the
// detached graph onto vertices of the amalgamated one.
struct AmalgamationSpec {
  std::vector<int> eta;
  std::vector<VertexId> phi;
};

struct Amalgamation {
  Multigraph graph;
  AmalgamationSpec spec;
};

// Fuses vertices of g according to phi. The images of phi are renumbered
// densely in increasing order. Edge ids are preserved.
Amalgamation amalgamate(const Multigraph& g, std::span<const VertexId> phi);

// Rational helpers for the "x ~ y" relation: floor(y) <= x <= ceil(y).
long long floor_div(long long num, long long den);
long long ceil_div(long long num, long long den);
bool approx(long long x, long long num, long long den);

long long binomial2(long long n);

class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int find(int x);
  bool unite(int x, int y);
  int set_count() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int sets_;
};

}  // namespace amalgam

#endif  // AMALGAM_MULTIGRAPH_HPP
