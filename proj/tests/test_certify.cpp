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
#include <numeric>
#include <random>

#include "amalgam/certify.hpp"
#include "amalgam/constructions.hpp"
#include "amalgam/hosts.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace amalgam;
using nlohmann::json;

namespace {

ClassClaim cycle_claim(const std::vector<VertexId>& cycle, Role role = Role::hamiltonian) {
  ClassClaim claim;
  claim.role = role;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    claim.edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return claim;
}

// Three zig-zag cycles of K7 through the hub 6.
DecompositionCertificate k7_certificate() {
  DecompositionCertificate cert;
  cert.host.kind = "complete";
  cert.host.params = {{"n", 7}, {"lambda", 1}};
  cert.host.graph = complete_multigraph(7, 1);
  cert.classes.push_back(cycle_claim({6, 0, 1, 5, 2, 4, 3}));
  cert.classes.push_back(cycle_claim({6, 1, 2, 0, 3, 5, 4}));
  cert.classes.push_back(cycle_claim({6, 2, 3, 1, 4, 0, 5}));
  return cert;
}

// Parts {0,1}, {2,3}, {4,5}; every in-part pair is doubled.
DecompositionCertificate k222_certificate() {
  DecompositionCertificate cert;
  cert.host.kind = "two-class";
  cert.host.params = {{"n", 2}, {"m", 3}, {"lambda", 2}, {"mu", 1}};
  cert.host.graph = two_class_graph({2, 2, 2}, 2, 1);
  cert.host.parts = {{0, 1}, {2, 3}, {4, 5}};
  cert.classes.push_back(cycle_claim({0, 1, 2, 3, 4, 5}));
  cert.classes.push_back(cycle_claim({0, 1, 3, 2, 5, 4}));
  cert.classes.push_back(cycle_claim({0, 2, 4, 1, 5, 3}));
  return cert;
}

DecompositionCertificate relabel(const DecompositionCertificate& cert,
                                 const std::vector<VertexId>& perm) {
  DecompositionCertificate out;
  out.host.kind = "explicit";
  out.host.graph = Multigraph(cert.host.graph.vertex_count());
  for (const Edge& e : cert.host.graph.edges()) out.host.graph.add_edge(perm[e.a], perm[e.b]);
  for (const auto& part : cert.host.parts) {
    auto& mapped = out.host.parts.emplace_back();
    for (VertexId v : part) mapped.push_back(perm[v]);
  }
  for (const ClassClaim& claim : cert.classes) {
    ClassClaim mapped = claim;
    mapped.edge_ids.clear();
    for (auto& [a, b] : mapped.edges) {
      a = perm[a];
      b = perm[b];
    }
    out.classes.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace

TEST_CASE("hand-built K7 decomposition certifies") {
  CertifyReport report = certify(k7_certificate());
  CHECK(report.ok);
  CHECK(report.partition_ok);
  REQUIRE(report.classes.size() == 3);
  for (const auto& verdict : report.classes) CHECK(verdict.ok);
}

TEST_CASE("amalgamation-built K7 decomposition certifies") {
  DecompositionCertificate cert = ham_decompose_complete(7, 1);
  CHECK(cert.classes.size() == 3);
  CHECK(certify(cert).ok);
}

TEST_CASE("moving one edge keeps the partition but breaks regularity") {
  DecompositionCertificate cert = k7_certificate();
  cert.classes[1].edges.push_back(cert.classes[0].edges.back());
  cert.classes[0].edges.pop_back();
  CertifyReport report = certify(cert);
  CHECK(report.partition_ok);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.classes[0].ok);
  CHECK_FALSE(report.classes[1].ok);
  CHECK(report.classes[2].ok);
}

TEST_CASE("two-class certificate with three Hamiltonian classes") {
  DecompositionCertificate cert = k222_certificate();
  CertifyReport report = certify(cert);
  CHECK(report.ok);
  DecompositionCertificate built = ham_decompose_two_class(2, 3, 2, 1);
  CHECK(built.classes.size() == 3);
  CHECK(certify(built).ok);
}

TEST_CASE("missing or extra edges fail the partition check") {
  DecompositionCertificate cert = k7_certificate();
  cert.classes[2].edges.pop_back();
  CHECK_FALSE(certify(cert).partition_ok);
  cert = k7_certificate();
  cert.classes[2].edges.emplace_back(0, 1);
  CHECK_FALSE(certify(cert).partition_ok);
}

TEST_CASE("a 2-factor with two components is not Hamiltonian") {
  DecompositionCertificate cert;
  cert.host.graph = Multigraph(6);
  ClassClaim two_triangles;
  two_triangles.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  for (auto [a, b] : two_triangles.edges) cert.host.graph.add_edge(a, b);
  cert.classes.push_back(two_triangles);
  CHECK_FALSE(certify(cert).ok);
  cert.classes[0].role = Role::factor;
  cert.classes[0].r = 2;
  CHECK(certify(cert).ok);
  cert.classes[0].connected = true;
  CHECK_FALSE(certify(cert).ok);
}

TEST_CASE("one-factor and fairness roles") {
  DecompositionCertificate cert;
  cert.host.graph = complete_multigraph(4, 1);
  cert.classes.push_back(cycle_claim({0, 1, 2, 3}));
  ClassClaim matching;
  matching.role = Role::one_factor;
  matching.edges = {{0, 2}, {1, 3}};
  cert.classes.push_back(matching);
  CHECK(certify(cert).ok);

  // Fair Hamiltonian cycles need declared parts; K(1,1,1,1) trivially fair.
  cert.classes[0].role = Role::fair_hamiltonian;
  CHECK_FALSE(certify(cert).ok);
  cert.host.parts = {{0}, {1}, {2}, {3}};
  CHECK(certify(cert).ok);
}

TEST_CASE("fairness counts edges between part pairs") {
  const std::vector<std::vector<VertexId>> parts{{0, 1}, {2, 3}, {4, 5}};
  // Each pair of parts is joined twice.
  CHECK(is_fair({{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}}, parts, 6));
  // Parts 0 and 1 are joined three times, the other pairs once.
  CHECK_FALSE(is_fair({{0, 2}, {2, 1}, {1, 3}, {3, 4}, {4, 5}, {5, 0}}, parts, 6));
}

TEST_CASE("duplicate and out-of-range edge ids are structural errors") {
  DecompositionCertificate cert = ham_decompose_complete(5, 1);
  REQUIRE(certify(cert).ok);
  REQUIRE_FALSE(cert.classes[0].edge_ids.empty());
  DecompositionCertificate dup = cert;
  dup.classes[1].edge_ids[0] = dup.classes[0].edge_ids[0];
  CertifyReport report = certify(dup);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.structural_errors.empty());

  DecompositionCertificate out_of_range = cert;
  out_of_range.classes[0].edge_ids[0] = 1000;
  CHECK_FALSE(certify(out_of_range).structural_errors.empty());
}

TEST_CASE("relabeling vertices preserves the verdict") {
  std::mt19937_64 rng(3);
  std::vector<DecompositionCertificate> certs{k7_certificate(), k222_certificate(),
                                              ham_decompose_complete(8, 1),
                                              ham_decompose_two_class(3, 2, 1, 2)};
  DecompositionCertificate broken = k7_certificate();
  std::swap(broken.classes[0].edges[0], broken.classes[1].edges[0]);
  certs.push_back(broken);
  for (const auto& cert : certs) {
    const bool expected = certify(cert).ok;
    std::vector<VertexId> perm(cert.host.graph.vertex_count());
    for (int trial = 0; trial < 10; ++trial) {
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(certify(relabel(cert, perm)).ok == expected);
    }
  }
}

TEST_CASE("certificate JSON round trip") {
  DecompositionCertificate cert = ham_decompose_two_class(2, 3, 2, 1);
  json doc = to_json(cert);
  CHECK(certify_json(doc).ok);
  CHECK(to_json(certificate_from_json(doc)) == doc);
  json report = to_json(certify(cert));
  CHECK(report.at("ok") == true);
  CHECK(report.at("classes").size() == cert.classes.size());
}

TEST_CASE("host generated from kind and params") {
  json doc = to_json(k7_certificate());
  doc["host"].erase("edges");
  doc["host"].erase("vertices");
  CHECK(certify_json(doc).ok);
  doc["host"]["params"]["n"] = 8;
  CHECK_FALSE(certify_json(doc).ok);
  doc = to_json(k7_certificate());
  doc["host"]["params"]["lambda"] = 2;
  CHECK_FALSE(certify_json(doc).structural_errors.empty());
}

TEST_CASE("certify_json is total over malformed documents") {
  const std::vector<std::string> samples{
      "null", "[]", "{}", "42", "\"text\"",
      R"({"host": {}, "classes": []})",
      R"({"host": {"vertices": -1, "edges": []}, "classes": []})",
      R"({"host": {"vertices": 3, "edges": [[0, 5]]}, "classes": []})",
      R"({"host": {"vertices": 3, "edges": [[0, 1, 2]]}, "classes": []})",
      R"({"host": {"vertices": 2, "edges": [[0, 1]]}, "classes": [{"role": "bogus", "edges": []}]})",
      R"({"host": {"vertices": 2, "edges": [[0, 1]]}, "classes": [{"role": "factor", "edges": [[0, 1]]}]})",
      R"({"host": {"vertices": 2, "edges": [[0, 1]]}, "classes": [{"role": "one_factor", "edges": [["a", 1]]}]})",
      R"({"host": {"vertices": 2, "edges": [[0, 1]]}, "classes": {"role": "one_factor"}})",
      R"({"host": {"vertices": 99999999999, "edges": []}, "classes": []})",
      R"({"host": {"vertices": 2000000000, "edges": []}, "classes": []})",
      R"({"host": {"kind": "complete", "params": {"n": 100000, "lambda": 1}}, "classes": []})",
      R"({"host": {"kind": "complete", "params": {"n": -3, "lambda": 1}}, "classes": []})",
      R"({"host": {"kind": "two-class", "params": {"parts": [2, -1], "lambda": 1, "mu": 1}}, "classes": []})",
      R"({"host": {"kind": "two-class", "params": {"parts": 3, "lambda": 1, "mu": 1}}, "classes": []})",
      R"({"host": {"kind": "multipartite", "params": {"n": 2, "m": 18446744073709551615, "lambda": 1}}, "classes": []})",
      R"({"host": {"vertices": 2, "edges": [[0, 1]], "parts": [[0], [0]]}, "classes": []})",
      R"({"host": {"vertices": 2, "edges": [[0, 1]]}, "classes": [{"role": "one_factor", "edges": [[0, 1]], "edge_ids": [-4]}]})"};
  for (const std::string& text : samples) {
    CAPTURE(text);
    CertifyReport report;
    CHECK_NOTHROW(report = certify_json(json::parse(text)));
    CHECK_FALSE(report.ok);
  }
}

TEST_CASE("random mutations of a valid certificate never crash") {
  std::mt19937_64 rng(17);
  const json base = to_json(ham_decompose_complete(5, 1));
  const std::vector<json> junk{nullptr, -1, 0, 7, 1e9, "x", json::array(), json::object(),
                               json::array({1, 2}), true};
  for (int trial = 0; trial < 400; ++trial) {
    json doc = base;
    const int edits = testing::uniform(rng, 1, 3);
    for (int i = 0; i < edits; ++i) {
      std::vector<json::json_pointer> paths;
      json flat = doc.flatten();
      for (auto it = flat.begin(); it != flat.end(); ++it) paths.emplace_back(it.key());
      if (paths.empty()) break;
      const auto& path = paths[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(paths.size()) - 1))];
      doc[path] = junk[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(junk.size()) - 1))];
    }
    CHECK_NOTHROW(certify_json(doc));
  }
}
