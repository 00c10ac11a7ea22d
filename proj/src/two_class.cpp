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

#include <numeric>

#include "amalgam/coloring.hpp"
#include "amalgam/constructions.hpp"
#include "amalgam/detachment.hpp"
#include "amalgam/hosts.hpp"
#include "construction_support.hpp"

namespace amalgam {
namespace {

std::uint64_t inner_seed(std::uint64_t seed) {
  return seed * 0x9E3779B97F4A7C15ULL + 1;
}

// lambda' K_m colored so that class j is an r[j]-factor: detach one vertex
// carrying m * r[j] / 2 loops of each color.
Colored colored_factorization(int m, const std::vector<int>& r,
                              std::uint64_t seed) {
  std::vector<int> loops;
  for (int rj : r) loops.push_back(m * rj / 2);
  return detach_single_vertex(m, loops, seed);
}

void check_degree_table(const Multigraph& h, const EdgeColoring& coloring,
                        const std::vector<int>& target) {
  for (VertexId y = 0; y < h.vertex_count(); ++y) {
    for (int j = 1; j <= coloring.k; ++j) {
      if (color_degree(h, coloring, y, j) != target[j - 1]) {
        throw std::logic_error(
            "amalgamated coloring misses its degree table at vertex " +
            std::to_string(y) + ", color " + std::to_string(j));
      }
    }
  }
}

DetachmentResult detach_uniform(const Colored& h, int n, std::uint64_t seed) {
  return detach(h.g, h.coloring, std::vector<int>(h.g.vertex_count(), n),
                seed);
}

// Hamiltonian decomposition of K(n^(m); lambda, mu), n >= 2, with an extra
// 1-factor class when `leave` is set. H has m vertices, lambda C(n, 2) loops
// each and mu n^2 edges per pair; colors 1..k take one Hamiltonian cycle of
// the loopless part each and are topped up by an evenly-equitable coloring of
// what remains.
Colored amalgamated_two_class(int n, int m, int lambda, int mu, bool leave,
                              std::uint64_t seed) {
  const long long degree =
      static_cast<long long>(lambda) * (n - 1) +
      static_cast<long long>(mu) * n * (m - 1);
  const int k = static_cast<int>(degree / 2);

  const int inner_lambda = mu * n * n;
  const long long inner_degree = static_cast<long long>(inner_lambda) * (m - 1);
  const int supply = static_cast<int>(inner_degree / 2);
  if (supply < k) {
    throw std::logic_error("loopless part has fewer Hamiltonian cycles than " +
                           std::to_string(k));
  }
  std::vector<int> inner_r(supply, 2);
  if (inner_degree % 2 != 0) inner_r.push_back(1);
  Colored star = colored_factorization(m, inner_r, inner_seed(seed));
  const int inner_factor = inner_degree % 2 != 0 ? supply + 1 : 0;
  if (leave && (n % 2 == 1) != (inner_factor != 0)) {
    throw std::logic_error("1-factor of the loopless part has wrong parity");
  }

  Colored h{Multigraph(m), EdgeColoring{}};
  h.coloring.k = leave ? k + 1 : k;
  std::vector<int> uncolored;
  auto push = [&](VertexId a, VertexId b, int color) {
    EdgeId e = h.g.add_edge(a, b);
    h.coloring.color_of.push_back(color);
    if (color == 0) uncolored.push_back(e);
  };
  for (EdgeId e = 0; e < star.g.edge_count(); ++e) {
    int c = star.coloring[e];
    int color = c <= k ? c : (leave && c == inner_factor ? k + 1 : 0);
    push(star.g.edge(e).a, star.g.edge(e).b, color);
  }
  const int loops = lambda * n * (n - 1) / 2;
  const int reserved = leave ? n / 2 : 0;
  for (VertexId y = 0; y < m; ++y) {
    for (int i = 0; i < loops; ++i) push(y, y, i < reserved ? k + 1 : 0);
  }

  Multigraph rest(m);
  for (EdgeId e : uncolored) rest.add_edge(h.g.edge(e).a, h.g.edge(e).b);
  EdgeColoring rest_coloring = evenly_equitable_coloring(rest, k);
  for (std::size_t i = 0; i < uncolored.size(); ++i) {
    h.coloring.color_of[uncolored[i]] = rest_coloring[static_cast<EdgeId>(i)];
  }

  std::vector<int> target(k, 2 * n);
  if (leave) target.push_back(n);
  check_degree_table(h.g, h.coloring, target);
  return h;
}

std::vector<ClassSpec> hamiltonian_specs(int k, bool leave) {
  std::vector<ClassSpec> specs(k);
  if (leave) specs.push_back({Role::one_factor, 1, false});
  return specs;
}

void require_two_class_shape(int n, int m, int lambda, int mu, bool odd) {
  if (m < 2 || n < 2 || mu < 1 || lambda == mu || lambda < (odd ? 1 : 0)) {
    throw ContractViolation(
        "needs m >= 2, n >= 2, mu >= 1, lambda != mu" +
        std::string(odd ? ", lambda >= 1" : ", lambda >= 0"));
  }
  long long degree = static_cast<long long>(lambda) * (n - 1) +
                     static_cast<long long>(mu) * n * (m - 1);
  if ((degree % 2 != 0) != odd) {
    throw ContractViolation("degree " + std::to_string(degree) + " is " +
                            (odd ? "even" : "odd"));
  }
}

DecompositionRequest two_class_request(int n, int m, int lambda, int mu) {
  DecompositionRequest req;
  req.kind = RequestKind::two_class;
  req.n = n;
  req.m = m;
  req.lambda = lambda;
  req.mu = mu;
  return req;
}

nlohmann::json two_class_params(int n, int m, int lambda, int mu) {
  return {{"n", n}, {"m", m}, {"lambda", lambda}, {"mu", mu}};
}

}  // namespace

DecompositionCertificate ham_decompose_multipartite(int n, int m, int lambda,
                                                    bool fair,
                                                    std::uint64_t seed) {
  DecompositionRequest req;
  req.kind = RequestKind::complete_multipartite;
  req.n = n;
  req.m = m;
  req.lambda = lambda;
  req.fair = fair;
  require_feasible(req);

  const long long degree = static_cast<long long>(lambda) * n * (m - 1);
  const int k = static_cast<int>(degree / 2);
  const bool leave = degree % 2 != 0;
  std::vector<int> r(k, 2 * n);
  if (leave) r.push_back(n);
  Colored h = colored_factorization(m, r, inner_seed(seed));
  check_degree_table(h.g, h.coloring, r);
  DetachmentResult out = detach_uniform(h, n, seed);

  std::vector<ClassSpec> specs = hamiltonian_specs(k, leave);
  if (fair) {
    for (int j = 0; j < k; ++j) specs[j].role = Role::fair_hamiltonian;
  }
  return certified(certificate_from_coloring(
      out.g, out.coloring, specs, "multipartite",
      {{"n", n}, {"m", m}, {"lambda", lambda}},
      contiguous_parts(std::vector<int>(m, n))));
}

DecompositionCertificate factorize_multipartite(int n, int m, int lambda,
                                                const std::vector<int>& r,
                                                std::uint64_t seed) {
  DecompositionRequest req;
  req.kind = RequestKind::multipartite_factorization;
  req.n = n;
  req.m = m;
  req.lambda = lambda;
  req.r = r;
  require_feasible(req);

  std::vector<int> scaled;
  std::vector<ClassSpec> specs;
  for (int rj : r) {
    scaled.push_back(n * rj);
    specs.push_back({Role::factor, rj, rj > 0 && rj % 2 == 0});
  }
  Colored h = colored_factorization(m, scaled, inner_seed(seed));
  check_degree_table(h.g, h.coloring, scaled);
  DetachmentResult out = detach_uniform(h, n, seed);
  return certified(certificate_from_coloring(
      out.g, out.coloring, specs, "multipartite",
      {{"n", n}, {"m", m}, {"lambda", lambda}, {"r", r}},
      contiguous_parts(std::vector<int>(m, n))));
}

DecompositionCertificate ham_decompose_two_class(int n, int m, int lambda,
                                                 int mu, std::uint64_t seed) {
  require_feasible(two_class_request(n, m, lambda, mu));
  require_two_class_shape(n, m, lambda, mu, false);
  const int k =
      (lambda * (n - 1) + mu * n * (m - 1)) / 2;
  Colored h = amalgamated_two_class(n, m, lambda, mu, false, seed);
  DetachmentResult out = detach_uniform(h, n, seed);
  return certified(certificate_from_coloring(
      out.g, out.coloring, hamiltonian_specs(k, false), "two-class",
      two_class_params(n, m, lambda, mu),
      contiguous_parts(std::vector<int>(m, n))));
}

DecompositionCertificate ham_plus_one_factor_two_class(int n, int m,
                                                       int lambda, int mu,
                                                       std::uint64_t seed) {
  require_feasible(two_class_request(n, m, lambda, mu));
  require_two_class_shape(n, m, lambda, mu, true);
  const auto parts = contiguous_parts(std::vector<int>(m, n));

  if (n == 2) {
    // Decompose K(2^(m); lambda-1, mu), then add one edge inside each part.
    DecompositionCertificate cert =
        lambda - 1 == mu ? ham_decompose_complete(2 * m, mu, seed)
                         : ham_decompose_two_class(2, m, lambda - 1, mu, seed);
    ClassClaim factor;
    factor.role = Role::one_factor;
    factor.r = 1;
    for (const auto& part : parts) {
      factor.edge_ids.push_back(cert.host.graph.add_edge(part[0], part[1]));
      factor.edges.emplace_back(part[0], part[1]);
    }
    cert.classes.push_back(std::move(factor));
    cert.host.kind = "two-class";
    cert.host.params = two_class_params(n, m, lambda, mu);
    cert.host.parts = parts;
    return certified(std::move(cert));
  }

  const int k = (lambda * (n - 1) + mu * n * (m - 1) - 1) / 2;
  Colored h = amalgamated_two_class(n, m, lambda, mu, true, seed);
  DetachmentResult out = detach_uniform(h, n, seed);
  return certified(certificate_from_coloring(
      out.g, out.coloring, hamiltonian_specs(k, true), "two-class",
      two_class_params(n, m, lambda, mu), parts));
}

namespace {

DecompositionCertificate decompose_two_class(const DecompositionRequest& req,
                                             std::uint64_t seed) {
  require_feasible(req);
  std::vector<int> sizes = req.part_sizes;
  if (sizes.empty()) sizes.assign(req.m, req.n);
  const int m = static_cast<int>(sizes.size());
  const int s = std::accumulate(sizes.begin(), sizes.end(), 0);
  const int n = sizes.front();
  const int lambda = req.lambda;
  const int mu = req.mu;

  DecompositionCertificate cert;
  if (two_class_graph(sizes, lambda, mu).edge_count() == 0) {
    cert.host.graph = Multigraph(s);
  } else if (lambda == mu) {
    cert = ham_decompose_complete(s, mu, seed);
  } else if (m == 1) {
    cert = ham_decompose_complete(s, lambda, seed);
  } else if (mu == 0) {
    // Every part is a single edge: the whole graph is one 1-factor.
    cert.host.graph = two_class_graph(sizes, lambda, mu);
    ClassClaim factor;
    factor.role = Role::one_factor;
    factor.r = 1;
    for (EdgeId e = 0; e < cert.host.graph.edge_count(); ++e) {
      factor.edges.emplace_back(cert.host.graph.edge(e).a, cert.host.graph.edge(e).b);
      factor.edge_ids.push_back(e);
    }
    cert.classes.push_back(std::move(factor));
  } else if (s == m) {
    cert = ham_decompose_complete(m, mu, seed);
  } else if (lambda == 0) {
    cert = ham_decompose_multipartite(n, m, mu, false, seed);
  } else {
    long long degree = static_cast<long long>(lambda) * (n - 1) +
                       static_cast<long long>(mu) * n * (m - 1);
    cert = degree % 2 == 0
               ? ham_decompose_two_class(n, m, lambda, mu, seed)
               : ham_plus_one_factor_two_class(n, m, lambda, mu, seed);
  }
  cert.host.kind = "two-class";
  if (req.part_sizes.empty()) {
    cert.host.params = two_class_params(req.n, req.m, lambda, mu);
  } else {
    cert.host.params = {{"parts", sizes}, {"lambda", lambda}, {"mu", mu}};
  }
  cert.host.parts = contiguous_parts(sizes);
  return certified(std::move(cert));
}

int part_size(const DecompositionRequest& req) {
  return req.part_sizes.empty() ? req.n : req.part_sizes.front();
}

int part_count(const DecompositionRequest& req) {
  return req.part_sizes.empty() ? req.m
                                : static_cast<int>(req.part_sizes.size());
}

}  // namespace

DecompositionCertificate decompose(const DecompositionRequest& req,
                                   std::uint64_t seed) {
  switch (req.kind) {
    case RequestKind::complete:
      return ham_decompose_complete(req.n, req.lambda, seed);
    case RequestKind::factorization:
      return factorize_complete(req.n, req.lambda, req.r, seed);
    case RequestKind::embedding:
      return embed_complete_paths(req.base, req.base_coloring, req.n, seed);
    case RequestKind::embed_factorization:
      return embed_factorization(req.base, req.base_coloring, req.n, req.r,
                                 seed);
    case RequestKind::complete_multipartite:
    case RequestKind::multipartite_factorization:
      require_feasible(req);
      return req.kind == RequestKind::complete_multipartite
                 ? ham_decompose_multipartite(part_size(req), part_count(req),
                                              req.lambda, req.fair, seed)
                 : factorize_multipartite(part_size(req), part_count(req),
                                          req.lambda, req.r, seed);
    case RequestKind::two_class:
      return decompose_two_class(req, seed);
  }
  throw ContractViolation("unknown request kind");
}

}  // namespace amalgam
