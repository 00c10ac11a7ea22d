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

// Acceptance gate: runs each criterion against its time limit and prints one
// PASS or FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "amalgam/certify.hpp"
#include "amalgam/cli.hpp"
#include "amalgam/coloring.hpp"
#include "amalgam/constructions.hpp"
#include "amalgam/detachment.hpp"
#include "amalgam/io.hpp"
#include "amalgam/laminar.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace amalgam;
using nlohmann::json;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

json run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(args, out, err);
  return json::parse(out.str());
}

int count_role(const json& cert, const std::string& role) {
  int count = 0;
  for (const json& c : cert.at("classes")) count += c.at("role") == role ? 1 : 0;
  return count;
}

int count_role(const DecompositionCertificate& cert, Role role) {
  int count = 0;
  for (const ClassClaim& c : cert.classes) count += c.role == role ? 1 : 0;
  return count;
}

Verdict k7_reproduction() {
  int code = 0;
  json cert = run_cli({"decompose", "complete", "--n", "7", "--lambda", "1"}, code);
  CertifyReport report = certify_json(cert);
  const int classes = static_cast<int>(cert.at("classes").size());
  const int hamiltonian = count_role(cert, "hamiltonian");
  return {code == 0 && report.ok && classes == 3 && hamiltonian == 3,
          std::to_string(hamiltonian) + " of " + std::to_string(classes) +
              " classes certified Hamiltonian"};
}

Verdict k5_embedding() {
  // Class 1 is a Hamiltonian path; classes 2 and 3 are a 3-edge path plus
  // an isolated vertex.
  Multigraph base(5);
  EdgeColoring coloring{3, {}};
  const std::vector<std::vector<std::pair<int, int>>> classes{
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{3, 0}, {0, 2}, {2, 4}}, {{0, 4}, {4, 1}, {1, 3}}};
  for (int j = 0; j < 3; ++j) {
    for (auto [a, b] : classes[j]) {
      base.add_edge(a, b);
      coloring.color_of.push_back(j + 1);
    }
  }
  const std::string input = colored_graph_to_json(base, coloring).dump();
  const auto path = std::filesystem::temp_directory_path() / "amalgam_acceptance_k5.json";
  std::ofstream(path) << input;

  int code = 0;
  json cert = run_cli({"decompose", "embed", "--base", path.string(), "--n", "2"}, code);
  CertifyReport report = certify_json(cert);

  // Restrict the result to the base edges, which keep ids 0..9.
  const json& host_edges = cert.at("host").at("edges");
  Multigraph restricted(5);
  EdgeColoring restricted_coloring{3, std::vector<int>(base.edge_count(), 0)};
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    restricted.add_edge(host_edges.at(e).at(0).get<int>(), host_edges.at(e).at(1).get<int>());
  }
  for (std::size_t j = 0; j < cert.at("classes").size(); ++j) {
    for (const json& id : cert.at("classes").at(j).at("edge_ids")) {
      if (id.get<int>() < base.edge_count()) {
        restricted_coloring.color_of[id.get<int>()] = static_cast<int>(j) + 1;
      }
    }
  }
  const std::string output = colored_graph_to_json(restricted, restricted_coloring).dump();
  const bool identical = output == input;
  const int hamiltonian = count_role(cert, "hamiltonian");
  return {code == 0 && report.ok && hamiltonian == 3 &&
              cert.at("host").at("vertices") == 7 && identical,
          std::to_string(hamiltonian) + " certified Hamiltonian classes of K7; restriction " +
              (identical ? "byte-identical" : "differs")};
}

Verdict two_class_example() {
  int code = 0;
  json cert = run_cli({"decompose", "two-class", "--n", "2", "--m", "3", "--lambda", "2", "--mu", "1"},
                      code);
  CertifyReport report = certify_json(cert);
  const int classes = static_cast<int>(cert.at("classes").size());
  const int hamiltonian = count_role(cert, "hamiltonian");
  return {code == 0 && report.ok && classes == 3 && hamiltonian == 3,
          std::to_string(hamiltonian) + " of " + std::to_string(classes) +
              " classes certified Hamiltonian"};
}

Verdict odd_degree_sweep() {
  int cells = 0;
  int failures = 0;
  std::string first_failure;
  std::uint64_t seed = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int m = 2; m <= 4; ++m) {
      for (int lambda = 1; lambda <= 3; ++lambda) {
        for (int mu = 1; mu <= 3; ++mu) {
          const int degree = lambda * (n - 1) + mu * n * (m - 1);
          if (lambda == mu || degree % 2 == 0) continue;
          const bool bound = n >= 3 ? lambda <= mu * n * (m - 1) : lambda - 1 <= 2 * mu * (m - 1);
          if (!bound) continue;
          ++cells;
          bool ok = false;
          try {
            DecompositionCertificate cert = ham_plus_one_factor_two_class(n, m, lambda, mu, seed++);
            ok = certify(cert).ok && count_role(cert, Role::hamiltonian) == (degree - 1) / 2 &&
                 count_role(cert, Role::one_factor) == 1 &&
                 static_cast<int>(cert.classes.size()) == (degree + 1) / 2;
          } catch (const std::exception&) {
            ok = false;
          }
          if (!ok) {
            if (failures++ == 0) {
              first_failure = " first failure (" + std::to_string(n) + "," + std::to_string(m) +
                              "," + std::to_string(lambda) + "," + std::to_string(mu) + ")";
            }
          }
        }
      }
    }
  }
  return {failures == 0 && cells > 0,
          std::to_string(cells) + " cells, " + std::to_string(failures) + " failures" +
              first_failure};
}

Verdict feasibility_exactness() {
  int instances = 0;
  int disagreements = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; n * m <= 8; ++m) {
      for (int lambda = 0; lambda <= 2; ++lambda) {
        for (int mu = 0; mu <= 2; ++mu) {
          std::vector<int> sizes(m, n);
          testing::DecompositionOracle oracle(testing::two_class_matrix(sizes, lambda, mu));
          DecompositionRequest req;
          req.kind = RequestKind::two_class;
          req.n = n;
          req.m = m;
          req.lambda = lambda;
          req.mu = mu;
          ++instances;
          if (check_feasibility(req).feasible != oracle.decomposable()) ++disagreements;
        }
      }
    }
  }
  return {disagreements == 0, std::to_string(instances) + " instances, " +
                                  std::to_string(disagreements) + " disagreements"};
}

Verdict detachment_suite() {
  std::mt19937_64 rng(20260);
  int failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    testing::ColoredInstance inst = testing::random_amalgamated(rng);
    try {
      DetachmentResult r = detach(inst.h, inst.coloring, inst.eta, static_cast<std::uint64_t>(trial));
      if (!verify_detachment(inst.h, inst.coloring, r).all_pass()) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  return {failures == 0, "500 instances, " + std::to_string(failures) + " failures"};
}

Verdict coloring_suites() {
  std::mt19937_64 rng(77);
  int bee_failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> sides;
    Multigraph g = testing::random_bipartite(rng, 10, 4, sides);
    if (!verify_bee(g, bee_coloring(g, sides, testing::uniform(rng, 1, 6)))) ++bee_failures;
  }
  int even_failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Multigraph g = testing::random_even_graph(rng, 7, 6, 6);
    if (!verify_evenly_equitable(g, evenly_equitable_coloring(g, testing::uniform(rng, 1, 5)))) {
      ++even_failures;
    }
  }
  int laminar_failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int ground = testing::uniform(rng, 0, 12);
    const int n = testing::uniform(rng, 1, 5);
    LaminarFamily a = testing::random_laminar(rng, ground);
    LaminarFamily b = testing::random_laminar(rng, ground);
    std::vector<bool> chosen(ground, false);
    for (int x : select_subset(ground, a, b, n, static_cast<std::uint64_t>(trial))) chosen[x] = true;
    if (!testing::quota_subset_exists(ground, a.sets, b.sets, n) ||
        !testing::subset_meets_quotas(a.sets, b.sets, chosen, n)) {
      ++laminar_failures;
    }
  }
  return {bee_failures + even_failures + laminar_failures == 0,
          "bee " + std::to_string(bee_failures) + "/200, evenly-equitable " +
              std::to_string(even_failures) + "/200, laminar " +
              std::to_string(laminar_failures) + "/500 failures"};
}

Verdict oracle_equivalence() {
  int cases = 0;
  int failures = 0;
  for (int n = 1; n <= 11; ++n) {
    for (int lambda = 1; lambda <= 3; ++lambda) {
      const bool leave = lambda * (n - 1) % 2 != 0;
      if (leave && n % 2 != 0) continue;
      ++cases;
      try {
        DecompositionCertificate a = walecki_direct(n, lambda);
        DecompositionCertificate b = ham_decompose_complete(n, lambda);
        const bool same_shape = count_role(a, Role::hamiltonian) == count_role(b, Role::hamiltonian) &&
                                count_role(a, Role::one_factor) == (leave ? 1 : 0) &&
                                count_role(b, Role::one_factor) == (leave ? 1 : 0);
        if (!certify(a).ok || !certify(b).ok || !same_shape) ++failures;
      } catch (const std::exception&) {
        ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(cases) + " (n, lambda) pairs, " +
                             std::to_string(failures) + " failures"};
}

Verdict fairness() {
  int failures = 0;
  std::string detail;
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {4, 3}, {2, 5}}) {
    bool ok = false;
    try {
      DecompositionCertificate cert = ham_decompose_multipartite(n, m, 1, true, 0);
      ok = certify(cert).ok;
      for (const ClassClaim& c : cert.classes) {
        if (c.role == Role::fair_hamiltonian) ok = ok && is_fair(c.edges, cert.host.parts, n * m);
      }
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) ++failures;
    detail += "(" + std::to_string(n) + "," + std::to_string(m) + ") " + (ok ? "fair " : "unfair ");
  }
  return {failures == 0, detail + "- " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "K7 Hamiltonian decomposition", 1.0, k7_reproduction},
      {2, "K5 path coloring embedded in K7", 1.0, k5_embedding},
      {3, "K(2^(3);2,1) Hamiltonian decomposition", 1.0, two_class_example},
      {4, "odd-degree two-class sweep", 60.0, odd_degree_sweep},
      {5, "feasibility matches exhaustive search", 300.0, feasibility_exactness},
      {6, "detachment property suite", 60.0, detachment_suite},
      {7, "coloring and laminar suites", 60.0, coloring_suites},
      {8, "rotational and amalgamation builders agree", 10.0, oracle_equivalence},
      {9, "fair multipartite decompositions", 30.0, fairness},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = v.pass && in_time;
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s of %.0f s", seconds, c.limit_seconds);
    std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.name
              << ": " << v.detail << " [" << timing << (in_time ? "" : ", over limit") << "]\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << "\n";
  return failed == 0 ? 0 : 1;
}
