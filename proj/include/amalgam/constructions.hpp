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

#ifndef AMALGAM_CONSTRUCTIONS_HPP
#define AMALGAM_CONSTRUCTIONS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "amalgam/certify.hpp"
#include "amalgam/multigraph.hpp"

namespace amalgam {

enum class RequestKind {
  complete,                  // lambda K_n
  complete_multipartite,     // lambda K_{n,...,n}, optionally fair
  two_class,                 // K(n_1, ..., n_m; lambda, mu)
  embedding,                 // colored K_m into a decomposition of K_{m+n}
  factorization,             // (r_1, ..., r_k)-factorization of lambda K_n
  embed_factorization,       // colored K_m into a factorization of K_{m+n}
  multipartite_factorization // factorization of lambda K_{n,...,n}
};

struct DecompositionRequest {
  RequestKind kind = RequestKind::complete;
  int n = 0;  // part size, or order for complete requests
  int m = 0;  // part count, or base order for embeddings
  int lambda = 1;
  int mu = 0;
  // Explicit part sizes for two-class requests; empty means m parts of n.
  std::vector<int> part_sizes;
  std::vector<int> r;
  bool fair = false;
  // Embedding base: a k-edge-colored K_m on vertices 0..m-1.
  Multigraph base;
  EdgeColoring base_coloring;
};

struct Violation {
  std::string condition;  // stable identifier, e.g. "pure-edge-bound"
  std::string detail;     // the inequality with values substituted
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;

  void add(std::string condition, std::string detail);
};

class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(FeasibilityReport report);
  const FeasibilityReport& report() const { return report_; }

 private:
  FeasibilityReport report_;
};

// Exact evaluation of every necessary and sufficient condition for the
// request's family. Never throws.
FeasibilityReport check_feasibility(const DecompositionRequest& req);

// Builders. Each returns a certificate that has already passed certify, and
// throws InfeasibleError when check_feasibility rejects the request.

// Rotational construction without amalgamations, used as a cross-check.
DecompositionCertificate walecki_direct(int n, int lambda);

DecompositionCertificate ham_decompose_complete(int n, int lambda,
                                                std::uint64_t seed = 0);

DecompositionCertificate embed_complete_paths(const Multigraph& base,
                                              const EdgeColoring& coloring,
                                              int n, std::uint64_t seed = 0);

DecompositionCertificate factorize_complete(int n, int lambda,
                                            const std::vector<int>& r,
                                            std::uint64_t seed = 0);

DecompositionCertificate embed_factorization(const Multigraph& base,
                                             const EdgeColoring& coloring,
                                             int n, const std::vector<int>& r,
                                             std::uint64_t seed = 0);

DecompositionCertificate ham_decompose_multipartite(int n, int m, int lambda,
                                                    bool fair = false,
                                                    std::uint64_t seed = 0);

DecompositionCertificate factorize_multipartite(int n, int m, int lambda,
                                                const std::vector<int>& r,
                                                std::uint64_t seed = 0);

// K(n^(m); lambda, mu) of even degree into Hamiltonian cycles.
DecompositionCertificate ham_decompose_two_class(int n, int m, int lambda,
                                                 int mu,
                                                 std::uint64_t seed = 0);

// K(n^(m); lambda, mu) of odd degree into Hamiltonian cycles and a 1-factor.
DecompositionCertificate ham_plus_one_factor_two_class(int n, int m,
                                                       int lambda, int mu,
                                                       std::uint64_t seed = 0);

// Dispatches on the request kind. Two-class requests that fall into a
// degenerate family (lambda == mu, singleton parts, lambda == 0) are routed
// to the matching complete or multipartite builder.
DecompositionCertificate decompose(const DecompositionRequest& req,
                                   std::uint64_t seed = 0);

// sigma[i] is the index into r assigned to base color i + 1, or empty when
// no permutation satisfies both the degree caps and the edge-count bounds.
std::vector<int> factor_assignment(const Multigraph& base,
                                   const EdgeColoring& coloring, int n,
                                   const std::vector<int>& r);

}  // namespace amalgam

#endif  // AMALGAM_CONSTRUCTIONS_HPP
