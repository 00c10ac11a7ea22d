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

#ifndef AMALGAM_CERTIFY_HPP
#define AMALGAM_CERTIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/multigraph.hpp"
#include "json.hpp"

namespace amalgam {

enum class Role { hamiltonian, factor, one_factor, fair_hamiltonian };

std::string role_name(Role role);
std::optional<Role> parse_role(const std::string& name);

struct ClassClaim {
  Role role = Role::hamiltonian;
  int r = 0;               // factor degree, used by Role::factor
  bool connected = false;  // Role::factor may additionally claim connectivity
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<EdgeId> edge_ids;  // optional references into the host
};

// The host is described explicitly by `graph`; `kind` and `params` name the
// family it belongs to ("complete", "multipartite", "two-class", ...) and are
// cross-checked when the family is one certify knows how to generate.
struct HostDescription {
  std::string kind = "explicit";
  nlohmann::json params = nlohmann::json::object();
  Multigraph graph;
  std::vector<std::vector<VertexId>> parts;
};

struct DecompositionCertificate {
  HostDescription host;
  std::vector<ClassClaim> classes;
};

struct ClassVerdict {
  bool ok = false;
  std::string reason;
};

struct CertifyReport {
  bool ok = false;
  std::vector<std::string> structural_errors;
  bool partition_ok = false;
  std::string partition_detail;
  std::vector<ClassVerdict> classes;
};

CertifyReport certify(const DecompositionCertificate& cert);

// Total over arbitrary JSON: malformed input yields structural errors.
CertifyReport certify_json(const nlohmann::json& document);

nlohmann::json to_json(const DecompositionCertificate& cert);
nlohmann::json to_json(const CertifyReport& report);

// Parses a certificate; throws ContractViolation describing the first
// structural problem.
DecompositionCertificate certificate_from_json(const nlohmann::json& doc);

// Host for a known family, or nullopt when `kind` is not generated here.
std::optional<Multigraph> generate_host(const std::string& kind,
                                        const nlohmann::json& params);

// Edge counts between part pairs are pairwise within one.
bool is_fair(const std::vector<std::pair<VertexId, VertexId>>& edges,
             const std::vector<std::vector<VertexId>>& parts, int vertex_count);

}  // namespace amalgam

#endif  // AMALGAM_CERTIFY_HPP
