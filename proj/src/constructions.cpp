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

#include "amalgam/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "amalgam/detachment.hpp"
#include "construction_support.hpp"

namespace amalgam {

bool is_complete_simple(const Multigraph& g) {
  const int s = g.vertex_count();
  if (g.edge_count() != binomial2(s)) return false;
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges()) {
    if (e.is_loop() || !seen.insert(std::minmax(e.a, e.b)).second) return false;
  }
  return true;
}

ClassShape class_shape(const Multigraph& g, const EdgeColoring& coloring,
                       int j) {
  ClassShape shape;
  Multigraph sub = color_class(g, coloring, j);
  for (int d : sub.degrees()) {
    shape.max_degree = std::max(shape.max_degree, d);
    if (d == 0) ++shape.isolated;
  }
  shape.components = sub.components();
  shape.edges = sub.edge_count();
  shape.acyclic = shape.edges == sub.vertex_count() - shape.components;
  return shape;
}

Colored detach_single_vertex(int n, const std::vector<int>& loops,
                             std::uint64_t seed) {
  Multigraph h(1);
  EdgeColoring coloring;
  coloring.k = std::max<int>(1, static_cast<int>(loops.size()));
  for (std::size_t j = 0; j < loops.size(); ++j) {
    h.add_edges(0, 0, loops[j]);
    coloring.color_of.insert(coloring.color_of.end(), loops[j],
                             static_cast<int>(j) + 1);
  }
  DetachmentResult detached = detach(h, coloring, {n}, seed);
  return {std::move(detached.g), std::move(detached.coloring)};
}

DecompositionCertificate certificate_from_coloring(
    const Multigraph& g, const EdgeColoring& coloring,
    const std::vector<ClassSpec>& specs, std::string kind,
    nlohmann::json params, std::vector<std::vector<VertexId>> parts) {
  DecompositionCertificate cert;
  cert.host.kind = std::move(kind);
  cert.host.params = std::move(params);
  cert.host.graph = g;
  cert.host.parts = std::move(parts);
  cert.classes.resize(specs.size());
  for (std::size_t j = 0; j < specs.size(); ++j) {
    cert.classes[j].role = specs[j].role;
    cert.classes[j].r = specs[j].r;
    cert.classes[j].connected = specs[j].connected;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    ClassClaim& claim = cert.classes.at(coloring[e] - 1);
    claim.edges.emplace_back(g.edge(e).a, g.edge(e).b);
    claim.edge_ids.push_back(e);
  }
  return cert;
}

DecompositionCertificate certified(DecompositionCertificate cert) {
  CertifyReport report = certify(cert);
  if (!report.ok) {
    std::string why = report.structural_errors.empty()
                          ? (report.partition_ok ? "" : report.partition_detail)
                          : report.structural_errors.front();
    for (std::size_t i = 0; why.empty() && i < report.classes.size(); ++i) {
      if (!report.classes[i].ok) {
        why = "class " + std::to_string(i) + ": " + report.classes[i].reason;
      }
    }
    throw std::logic_error("construction produced an uncertified result: " +
                           why);
  }
  return cert;
}

void require_feasible(const DecompositionRequest& req) {
  FeasibilityReport report = check_feasibility(req);
  if (!report.feasible) throw InfeasibleError(std::move(report));
}

DecompositionCertificate ham_decompose_complete(int n, int lambda,
                                                std::uint64_t seed) {
  DecompositionRequest req;
  req.kind = RequestKind::complete;
  req.n = n;
  req.lambda = lambda;
  require_feasible(req);

  const long long degree = static_cast<long long>(lambda) * (n - 1);
  const int k = static_cast<int>(degree / 2);
  std::vector<int> loops(k, n);
  std::vector<ClassSpec> specs(k);
  if (degree % 2 != 0) {
    loops.push_back(n / 2);
    specs.push_back({Role::one_factor, 1, false});
  }
  Colored out = detach_single_vertex(n, loops, seed);
  return certified(certificate_from_coloring(
      out.g, out.coloring, specs, "complete", {{"n", n}, {"lambda", lambda}}));
}

DecompositionCertificate factorize_complete(int n, int lambda,
                                            const std::vector<int>& r,
                                            std::uint64_t seed) {
  DecompositionRequest req;
  req.kind = RequestKind::factorization;
  req.n = n;
  req.lambda = lambda;
  req.r = r;
  require_feasible(req);

  std::vector<int> loops;
  std::vector<ClassSpec> specs;
  for (int rj : r) {
    loops.push_back(n * rj / 2);
    specs.push_back({Role::factor, rj, rj > 0 && rj % 2 == 0});
  }
  Colored out = detach_single_vertex(n, loops, seed);
  return certified(certificate_from_coloring(
      out.g, out.coloring, specs, "complete",
      {{"n", n}, {"lambda", lambda}, {"r", r}}));
}

namespace {

// Adds a vertex u joined to every base vertex by n edges and carrying
// C(n, 2) loops. Color j receives target[j] - d_j(v) of the u-v edges and
// enough loops to give u degree n * target[j] in color j.
Colored extend_base(const Multigraph& base, const EdgeColoring& coloring,
                    int n, const std::vector<int>& target) {
  const int m = base.vertex_count();
  const int k = coloring.k;
  Colored h{base, coloring};
  const VertexId u = h.g.add_vertex();
  std::vector<int> to_base(k + 1, 0);
  for (VertexId v = 0; v < m; ++v) {
    for (int j = 1; j <= k; ++j) {
      int extra = target[j - 1] - color_degree(base, coloring, v, j);
      if (extra < 0) throw std::logic_error("base exceeds its class degree");
      h.g.add_edges(v, u, extra);
      h.coloring.color_of.insert(h.coloring.color_of.end(), extra, j);
      to_base[j] += extra;
    }
  }
  for (int j = 1; j <= k; ++j) {
    int twice = n * target[j - 1] - to_base[j];
    if (twice < 0 || twice % 2 != 0) {
      throw std::logic_error("loop count for a color is not a whole number");
    }
    h.g.add_edges(u, u, twice / 2);
    h.coloring.color_of.insert(h.coloring.color_of.end(), twice / 2, j);
  }
  if (h.g.loop_count(u) != binomial2(n) || h.g.degree(u) != n * (n - 1) + n * m) {
    throw std::logic_error("extension does not amalgamate K_{m+n}");
  }
  return h;
}

DetachmentResult detach_extension(const Colored& h, int m, int n,
                                  std::uint64_t seed) {
  std::vector<int> eta(m, 1);
  eta.push_back(n);
  return detach(h.g, h.coloring, eta, seed);
}

}  // namespace

DecompositionCertificate embed_complete_paths(const Multigraph& base,
                                              const EdgeColoring& coloring,
                                              int n, std::uint64_t seed) {
  DecompositionRequest req;
  req.kind = RequestKind::embedding;
  req.m = base.vertex_count();
  req.n = n;
  req.base = base;
  req.base_coloring = coloring;
  require_feasible(req);

  const int m = base.vertex_count();
  const int k = coloring.k;
  const bool leave = (m + n) % 2 == 0;
  std::vector<int> target(k, 2);
  std::vector<ClassSpec> specs(k);
  if (leave) {
    target[k - 1] = 1;
    specs[k - 1] = {Role::one_factor, 1, false};
  }
  Colored h = extend_base(base, coloring, n, target);
  DetachmentResult out = detach_extension(h, m, n, seed);
  return certified(certificate_from_coloring(
      out.g, out.coloring, specs, "complete",
      {{"n", m + n}, {"lambda", 1}, {"base_order", m}}));
}

std::vector<int> factor_assignment(const Multigraph& base,
                                   const EdgeColoring& coloring, int n,
                                   const std::vector<int>& r) {
  const int k = coloring.k;
  if (static_cast<int>(r.size()) != k) return {};
  const int m = base.vertex_count();
  std::vector<std::vector<bool>> fits(k, std::vector<bool>(k));
  for (int i = 0; i < k; ++i) {
    ClassShape shape = class_shape(base, coloring, i + 1);
    for (int slot = 0; slot < k; ++slot) {
      fits[i][slot] = shape.max_degree <= r[slot] &&
                      2LL * shape.edges >= static_cast<long long>(r[slot]) * (m - n);
    }
  }
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  if (k <= 8) {
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = fits[i][sigma[i]];
      if (ok) return sigma;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return {};
  }
  // Kuhn's augmenting paths on the color/slot compatibility graph.
  std::vector<int> owner(k, -1);
  for (int i = 0; i < k; ++i) {
    std::vector<bool> visited(k, false);
    std::function<bool(int)> augment = [&](int c) {
      for (int slot = 0; slot < k; ++slot) {
        if (!fits[c][slot] || visited[slot]) continue;
        visited[slot] = true;
        if (owner[slot] < 0 || augment(owner[slot])) {
          owner[slot] = c;
          return true;
        }
      }
      return false;
    };
    if (!augment(i)) return {};
  }
  for (int slot = 0; slot < k; ++slot) sigma[owner[slot]] = slot;
  return sigma;
}

DecompositionCertificate embed_factorization(const Multigraph& base,
                                             const EdgeColoring& coloring,
                                             int n, const std::vector<int>& r,
                                             std::uint64_t seed) {
  DecompositionRequest req;
  req.kind = RequestKind::embed_factorization;
  req.m = base.vertex_count();
  req.n = n;
  req.r = r;
  req.base = base;
  req.base_coloring = coloring;
  require_feasible(req);

  const int m = base.vertex_count();
  const std::vector<int> sigma = factor_assignment(base, coloring, n, r);
  std::vector<int> target;
  std::vector<ClassSpec> specs;
  for (int slot : sigma) {
    target.push_back(r[slot]);
    specs.push_back({Role::factor, r[slot], false});
  }
  Colored h = extend_base(base, coloring, n, target);
  DetachmentResult out = detach_extension(h, m, n, seed);
  return certified(certificate_from_coloring(
      out.g, out.coloring, specs, "complete",
      {{"n", m + n}, {"lambda", 1}, {"base_order", m}, {"r", r}}));
}

}  // namespace amalgam
