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

#include "amalgam/io.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <sstream>

namespace amalgam {
namespace {

using json = nlohmann::json;

constexpr int kMaxVertices = 1 << 20;

int checked_int(const json& value, const std::string& what) {
  if (!value.is_number_integer()) throw ContractViolation(what + " must be an integer");
  const bool fits =
      value.is_number_unsigned()
          ? value.get<std::uint64_t>() <= static_cast<std::uint64_t>(std::numeric_limits<int>::max())
          : value.get<std::int64_t>() >= std::numeric_limits<int>::min() &&
                value.get<std::int64_t>() <= std::numeric_limits<int>::max();
  if (!fits) throw ContractViolation(what + " is out of range");
  return value.get<int>();
}

int read_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer()) {
    throw ContractViolation(std::string("expected integer field '") + key +
                            "'");
  }
  return checked_int(doc.at(key), key);
}

constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};

}  // namespace

json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
  return json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

Multigraph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw ContractViolation("graph must be an object");
  int s = read_int(doc, "vertices");
  if (s < 0) throw ContractViolation("vertex count must be nonnegative");
  if (s > kMaxVertices) throw ContractViolation("vertex count is too large");
  Multigraph g(s);
  if (!doc.contains("edges") || !doc.at("edges").is_array()) {
    throw ContractViolation("expected array field 'edges'");
  }
  for (const json& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ContractViolation("edges must be [a, b] integer pairs");
    }
    g.add_edge(checked_int(e[0], "edge endpoint"), checked_int(e[1], "edge endpoint"));
  }
  return g;
}

json coloring_to_json(const EdgeColoring& coloring) {
  return json{{"k", coloring.k}, {"colors", coloring.color_of}};
}

EdgeColoring coloring_from_json(const json& doc, const Multigraph& g) {
  EdgeColoring coloring;
  coloring.k = read_int(doc, "k");
  if (!doc.contains("colors") || !doc.at("colors").is_array()) {
    throw ContractViolation("expected array field 'colors'");
  }
  for (const json& c : doc.at("colors")) {
    if (!c.is_number_integer()) throw ContractViolation("colors must be integers");
    coloring.color_of.push_back(checked_int(c, "color"));
  }
  check_coloring(g, coloring);
  return coloring;
}

json colored_graph_to_json(const Multigraph& g, const EdgeColoring& coloring) {
  json out = graph_to_json(g);
  out.update(coloring_to_json(coloring));
  return out;
}

ColoredGraph colored_graph_from_json(const json& doc) {
  ColoredGraph out;
  out.graph = graph_from_json(doc);
  out.coloring = coloring_from_json(doc, out.graph);
  return out;
}

std::vector<int> eta_from_json(const json& doc) {
  const json& list = doc.is_object() && doc.contains("eta") ? doc.at("eta") : doc;
  if (!list.is_array()) throw ContractViolation("eta must be an array");
  std::vector<int> eta;
  for (const json& v : list) {
    if (!v.is_number_integer()) throw ContractViolation("eta entries must be integers");
    eta.push_back(checked_int(v, "eta entry"));
  }
  return eta;
}

json detachment_to_json(const DetachmentResult& result) {
  json out = colored_graph_to_json(result.g, result.coloring);
  out["phi"] = result.spec.phi;
  out["eta"] = result.spec.eta;
  return out;
}

std::string to_dot(const Multigraph& g, const EdgeColoring* coloring,
                   const std::vector<std::vector<VertexId>>& parts) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  std::vector<bool> placed(g.vertex_count(), false);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    out << "  subgraph cluster_" << p << " {\n    label=\"part " << p
        << "\";\n";
    for (VertexId v : parts[p]) {
      out << "    " << v << ";\n";
      placed[v] = true;
    }
    out << "  }\n";
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!placed[v]) out << "  " << v << ";\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out << "  " << edge.a << " -- " << edge.b;
    if (coloring) {
      int c = (*coloring)[e];
      out << " [color=\"" << kPalette[(c - 1) % kPalette.size()]
          << "\", label=\"" << c << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const DecompositionCertificate& cert) {
  Multigraph g(cert.host.graph.vertex_count());
  EdgeColoring coloring;
  coloring.k = std::max<int>(1, static_cast<int>(cert.classes.size()));
  for (std::size_t c = 0; c < cert.classes.size(); ++c) {
    for (auto [a, b] : cert.classes[c].edges) {
      g.add_edge(a, b);
      coloring.color_of.push_back(static_cast<int>(c) + 1);
    }
  }
  return to_dot(g, &coloring, cert.host.parts);
}

}  // namespace amalgam
