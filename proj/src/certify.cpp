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

#include "amalgam/certify.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "amalgam/hosts.hpp"

namespace amalgam {
namespace {

using json = nlohmann::json;
using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Generated and explicit hosts larger than this are rejected rather than
// allocated.
constexpr long long kMaxHostVertices = 1 << 20;
constexpr long long kMaxHostEdges = 1LL << 26;

std::vector<std::pair<VertexId, VertexId>> sorted_pairs(EdgeList edges) {
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

EdgeList edge_list(const Multigraph& g) {
  EdgeList out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.emplace_back(e.a, e.b);
  return out;
}

ClassVerdict check_class(const ClassClaim& claim, const HostDescription& host) {
  const int s = host.graph.vertex_count();
  Multigraph sub(s);
  for (auto [a, b] : claim.edges) sub.add_edge(a, b);
  const std::vector<int> degree = sub.degrees();

  auto regular = [&](int r) -> std::optional<std::string> {
    for (VertexId v = 0; v < s; ++v) {
      if (degree[v] != r) {
        return "vertex " + std::to_string(v) + " has degree " +
               std::to_string(degree[v]) + ", expected " + std::to_string(r);
      }
    }
    return std::nullopt;
  };
  auto connected = [&]() -> std::optional<std::string> {
    int parts = sub.components();
    if (parts != 1) {
      return "class has " + std::to_string(parts) + " components";
    }
    return std::nullopt;
  };

  std::optional<std::string> problem;
  switch (claim.role) {
    case Role::hamiltonian:
    case Role::fair_hamiltonian:
      problem = regular(2);
      if (!problem) problem = connected();
      if (!problem && claim.role == Role::fair_hamiltonian) {
        if (host.parts.empty()) {
          problem = "fairness claimed but host declares no parts";
        } else if (!is_fair(claim.edges, host.parts, s)) {
          problem = "edge counts between part pairs differ by more than one";
        }
      }
      break;
    case Role::factor:
      if (claim.r < 0) {
        problem = "negative factor degree";
        break;
      }
      problem = regular(claim.r);
      if (!problem && claim.connected) problem = connected();
      break;
    case Role::one_factor:
      problem = regular(1);
      break;
  }
  return problem ? ClassVerdict{false, *problem} : ClassVerdict{true, ""};
}

int as_int(const json& value, const std::string& what) {
  if (!value.is_number_integer()) {
    throw ContractViolation(what + " must be an integer");
  }
  if (value.is_number_unsigned()
          ? value.get<std::uint64_t>() >
                static_cast<std::uint64_t>(std::numeric_limits<int>::max())
          : value.get<std::int64_t>() < std::numeric_limits<int>::min() ||
                value.get<std::int64_t>() > std::numeric_limits<int>::max()) {
    throw ContractViolation(what + " is out of range");
  }
  return value.get<int>();
}

EdgeList parse_edges(const json& doc, int vertex_count,
                     const std::string& what) {
  if (!doc.is_array()) throw ContractViolation(what + " must be an array");
  EdgeList out;
  for (const json& pair : doc) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ContractViolation(what + " entries must be [a, b] pairs");
    }
    int a = as_int(pair[0], what + " endpoint");
    int b = as_int(pair[1], what + " endpoint");
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      throw ContractViolation(what + " references unknown vertex " +
                              std::to_string(std::max(a, b)));
    }
    out.emplace_back(a, b);
  }
  return out;
}

int param(const json& params, const char* key) {
  if (!params.contains(key)) {
    throw ContractViolation(std::string("host parameter missing: ") + key);
  }
  return as_int(params.at(key), std::string("host parameter ") + key);
}

}  // namespace

std::string role_name(Role role) {
  switch (role) {
    case Role::hamiltonian:
      return "hamiltonian";
    case Role::factor:
      return "factor";
    case Role::one_factor:
      return "one-factor";
    case Role::fair_hamiltonian:
      return "fair-hamiltonian";
  }
  return "unknown";
}

std::optional<Role> parse_role(const std::string& name) {
  for (Role r : {Role::hamiltonian, Role::factor, Role::one_factor,
                 Role::fair_hamiltonian}) {
    if (role_name(r) == name) return r;
  }
  return std::nullopt;
}

bool is_fair(const EdgeList& edges,
             const std::vector<std::vector<VertexId>>& parts,
             int vertex_count) {
  std::vector<int> part_of(vertex_count, -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (VertexId v : parts[p]) part_of[v] = static_cast<int>(p);
  }
  std::map<std::pair<int, int>, int> counts;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (std::size_t q = p + 1; q < parts.size(); ++q) {
      counts[{static_cast<int>(p), static_cast<int>(q)}] = 0;
    }
  }
  for (auto [a, b] : edges) {
    int p = part_of[a];
    int q = part_of[b];
    if (p < 0 || q < 0 || p == q) continue;
    ++counts[std::minmax(p, q)];
  }
  if (counts.empty()) return true;
  auto [lo, hi] = std::minmax_element(
      counts.begin(), counts.end(),
      [](const auto& l, const auto& r) { return l.second < r.second; });
  return hi->second - lo->second <= 1;
}

std::optional<Multigraph> generate_host(const std::string& kind,
                                        const json& params) {
  if (!params.is_object()) throw ContractViolation("host params must be an object");
  std::vector<int> sizes;
  int lambda = 0;
  int mu = 0;
  if (kind == "complete") {
    sizes.assign(1, param(params, "n"));
    lambda = param(params, "lambda");
  } else if (kind == "multipartite") {
    const int n = param(params, "n");
    const int m = param(params, "m");
    if (m < 0 || m > kMaxHostVertices) throw ContractViolation("host parameter m out of range");
    sizes.assign(m, n);
    mu = param(params, "lambda");
  } else if (kind == "two-class") {
    if (params.contains("parts")) {
      if (!params.at("parts").is_array()) throw ContractViolation("host parameter parts must be an array");
      for (const json& p : params.at("parts")) sizes.push_back(as_int(p, "part"));
    } else {
      const int m = param(params, "m");
      if (m < 0 || m > kMaxHostVertices) throw ContractViolation("host parameter m out of range");
      sizes.assign(m, param(params, "n"));
    }
    lambda = param(params, "lambda");
    mu = param(params, "mu");
  } else {
    return std::nullopt;
  }
  long long vertices = 0;
  long long within = 0;
  for (int size : sizes) {
    if (size < 0) throw ContractViolation("host part sizes must be nonnegative");
    vertices += size;
    if (vertices > kMaxHostVertices) throw ContractViolation("host is too large");
    within += 1LL * size * (size - 1) / 2;
  }
  if (lambda < 0 || mu < 0) throw ContractViolation("host multiplicities must be nonnegative");
  const long long across = vertices * (vertices - 1) / 2 - within;
  if (static_cast<double>(within) * lambda + static_cast<double>(across) * mu >
      static_cast<double>(kMaxHostEdges)) {
    throw ContractViolation("host is too large");
  }
  if (kind == "complete") return complete_multigraph(sizes[0], lambda);
  return two_class_graph(sizes, lambda, mu);
}

CertifyReport certify(const DecompositionCertificate& cert) {
  CertifyReport report;
  const HostDescription& host = cert.host;
  const int s = host.graph.vertex_count();

  std::vector<int> seen_in_part(s, 0);
  for (const auto& part : host.parts) {
    for (VertexId v : part) {
      if (v < 0 || v >= s) {
        report.structural_errors.push_back("part lists unknown vertex " +
                                           std::to_string(v));
      } else if (seen_in_part[v]++) {
        report.structural_errors.push_back("vertex " + std::to_string(v) +
                                           " appears in two parts");
      }
    }
  }
  std::vector<int> id_used(host.graph.edge_count(), 0);
  for (std::size_t c = 0; c < cert.classes.size(); ++c) {
    const ClassClaim& claim = cert.classes[c];
    for (auto [a, b] : claim.edges) {
      if (a < 0 || b < 0 || a >= s || b >= s) {
        report.structural_errors.push_back(
            "class " + std::to_string(c) + " references unknown vertex");
        break;
      }
    }
    if (!claim.edge_ids.empty() && claim.edge_ids.size() != claim.edges.size()) {
      report.structural_errors.push_back("class " + std::to_string(c) +
                                         " edge_ids do not match its edges");
      continue;
    }
    for (std::size_t i = 0; i < claim.edge_ids.size(); ++i) {
      EdgeId id = claim.edge_ids[i];
      if (id < 0 || id >= host.graph.edge_count()) {
        report.structural_errors.push_back("unknown edge id " +
                                           std::to_string(id));
        continue;
      }
      if (id_used[id]++) {
        report.structural_errors.push_back("duplicate edge id " +
                                           std::to_string(id));
      }
      const Edge& he = host.graph.edge(id);
      if (std::minmax(he.a, he.b) !=
          std::minmax(claim.edges[i].first, claim.edges[i].second)) {
        report.structural_errors.push_back(
            "edge id " + std::to_string(id) + " endpoints disagree with host");
      }
    }
  }
  try {
    if (auto generated = generate_host(host.kind, host.params)) {
      if (sorted_pairs(edge_list(*generated)) !=
              sorted_pairs(edge_list(host.graph)) ||
          generated->vertex_count() != s) {
        report.structural_errors.push_back(
            "explicit host edges do not match the " + host.kind + " family");
      }
    }
  } catch (const ContractViolation& e) {
    report.structural_errors.push_back(e.what());
  }
  if (!report.structural_errors.empty()) return report;

  EdgeList claimed;
  for (const ClassClaim& claim : cert.classes) {
    claimed.insert(claimed.end(), claim.edges.begin(), claim.edges.end());
  }
  const auto host_pairs = sorted_pairs(edge_list(host.graph));
  const auto class_pairs = sorted_pairs(claimed);
  report.partition_ok = host_pairs == class_pairs;
  if (!report.partition_ok) {
    report.partition_detail =
        "classes cover " + std::to_string(class_pairs.size()) +
        " edges, host has " + std::to_string(host_pairs.size()) +
        (host_pairs.size() == class_pairs.size() ? " (multisets differ)" : "");
  }

  report.ok = report.partition_ok;
  for (const ClassClaim& claim : cert.classes) {
    report.classes.push_back(check_class(claim, host));
    report.ok = report.ok && report.classes.back().ok;
  }
  return report;
}

json to_json(const DecompositionCertificate& cert) {
  json host;
  host["kind"] = cert.host.kind;
  host["params"] = cert.host.params;
  host["vertices"] = cert.host.graph.vertex_count();
  json edges = json::array();
  for (const Edge& e : cert.host.graph.edges()) edges.push_back({e.a, e.b});
  host["edges"] = std::move(edges);
  if (!cert.host.parts.empty()) host["parts"] = cert.host.parts;

  json classes = json::array();
  for (const ClassClaim& claim : cert.classes) {
    json c;
    c["role"] = role_name(claim.role);
    if (claim.role == Role::factor) {
      c["r"] = claim.r;
      c["connected"] = claim.connected;
    }
    json list = json::array();
    for (auto [a, b] : claim.edges) list.push_back({a, b});
    c["edges"] = std::move(list);
    if (!claim.edge_ids.empty()) c["edge_ids"] = claim.edge_ids;
    classes.push_back(std::move(c));
  }
  return json{{"host", std::move(host)}, {"classes", std::move(classes)}};
}

json to_json(const CertifyReport& report) {
  json out;
  out["ok"] = report.ok;
  out["structural_errors"] = report.structural_errors;
  out["partition_ok"] = report.partition_ok;
  if (!report.partition_detail.empty()) {
    out["partition_detail"] = report.partition_detail;
  }
  json classes = json::array();
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    json c{{"index", i}, {"ok", report.classes[i].ok}};
    if (!report.classes[i].reason.empty()) c["reason"] = report.classes[i].reason;
    classes.push_back(std::move(c));
  }
  out["classes"] = std::move(classes);
  return out;
}

DecompositionCertificate certificate_from_json(const json& doc) {
  if (!doc.is_object()) throw ContractViolation("certificate must be an object");
  if (!doc.contains("host") || !doc.at("host").is_object()) {
    throw ContractViolation("certificate.host missing");
  }
  if (!doc.contains("classes") || !doc.at("classes").is_array()) {
    throw ContractViolation("certificate.classes missing");
  }
  DecompositionCertificate cert;
  const json& host = doc.at("host");
  if (host.contains("kind")) {
    if (!host.at("kind").is_string()) {
      throw ContractViolation("host.kind must be a string");
    }
    cert.host.kind = host.at("kind").get<std::string>();
  }
  if (host.contains("params")) {
    if (!host.at("params").is_object()) {
      throw ContractViolation("host.params must be an object");
    }
    cert.host.params = host.at("params");
  }
  if (host.contains("edges")) {
    if (!host.contains("vertices")) {
      throw ContractViolation("host.vertices missing");
    }
    int s = as_int(host.at("vertices"), "host.vertices");
    if (s < 0) throw ContractViolation("host.vertices must be nonnegative");
    if (s > kMaxHostVertices) throw ContractViolation("host is too large");
    cert.host.graph = Multigraph(s);
    for (auto [a, b] : parse_edges(host.at("edges"), s, "host.edges")) {
      cert.host.graph.add_edge(a, b);
    }
  } else {
    auto generated = generate_host(cert.host.kind, cert.host.params);
    if (!generated) {
      throw ContractViolation("host has no edges and unknown kind '" +
                              cert.host.kind + "'");
    }
    cert.host.graph = std::move(*generated);
  }
  if (host.contains("parts")) {
    const json& parts = host.at("parts");
    if (!parts.is_array()) throw ContractViolation("host.parts must be an array");
    for (const json& part : parts) {
      if (!part.is_array()) throw ContractViolation("each part must be an array");
      auto& out = cert.host.parts.emplace_back();
      for (const json& v : part) out.push_back(as_int(v, "part vertex"));
    }
  }

  const int s = cert.host.graph.vertex_count();
  for (const json& c : doc.at("classes")) {
    if (!c.is_object()) throw ContractViolation("class must be an object");
    ClassClaim claim;
    if (!c.contains("role") || !c.at("role").is_string()) {
      throw ContractViolation("class.role missing");
    }
    auto role = parse_role(c.at("role").get<std::string>());
    if (!role) {
      throw ContractViolation("unknown role '" +
                              c.at("role").get<std::string>() + "'");
    }
    claim.role = *role;
    if (claim.role == Role::factor) {
      if (!c.contains("r")) throw ContractViolation("factor class needs r");
      claim.r = as_int(c.at("r"), "class.r");
    }
    if (c.contains("connected")) {
      if (!c.at("connected").is_boolean()) {
        throw ContractViolation("class.connected must be boolean");
      }
      claim.connected = c.at("connected").get<bool>();
    }
    if (!c.contains("edges")) throw ContractViolation("class.edges missing");
    claim.edges = parse_edges(c.at("edges"), s, "class.edges");
    if (c.contains("edge_ids")) {
      if (!c.at("edge_ids").is_array()) {
        throw ContractViolation("class.edge_ids must be an array");
      }
      for (const json& id : c.at("edge_ids")) {
        claim.edge_ids.push_back(as_int(id, "edge id"));
      }
    }
    cert.classes.push_back(std::move(claim));
  }
  return cert;
}

CertifyReport certify_json(const json& document) {
  try {
    return certify(certificate_from_json(document));
  } catch (const ContractViolation& e) {
    CertifyReport report;
    report.structural_errors.push_back(e.what());
    return report;
  } catch (const json::exception& e) {
    CertifyReport report;
    report.structural_errors.push_back(std::string("malformed JSON: ") +
                                       e.what());
    return report;
  }
}

}  // namespace amalgam
