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
#include <string>

#include "amalgam/constructions.hpp"
#include "construction_support.hpp"

namespace amalgam {
namespace {

using std::to_string;

void require_nonnegative(const DecompositionRequest& req,
                         FeasibilityReport& report) {
  if (req.n < 0 || req.m < 0 || req.lambda < 0 || req.mu < 0) {
    report.add("nonnegative-parameters", "n, m, lambda and mu must be >= 0");
  }
}

void check_factor_sequence(const std::vector<int>& r, long long order,
                           long long degree, FeasibilityReport& report) {
  if (r.empty()) {
    report.add("factor-sequence", "r must be nonempty");
    return;
  }
  long long sum = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0) {
      report.add("factor-sequence", "r_" + to_string(i + 1) + " is negative");
    } else if ((r[i] * order) % 2 != 0) {
      report.add("factor-parity", "r_" + to_string(i + 1) + " * " +
                                      to_string(order) + " = " +
                                      to_string(r[i] * order) + " is odd");
    }
    sum += r[i];
  }
  if (sum != degree) {
    report.add("factor-sum", "sum of r is " + to_string(sum) +
                                 ", degree is " + to_string(degree));
  }
}

// Equal part sizes; returns the common size or -1.
int common_part_size(const DecompositionRequest& req,
                     FeasibilityReport& report) {
  if (req.part_sizes.empty()) return req.n;
  for (int size : req.part_sizes) {
    if (size < 1) {
      report.add("positive-part-sizes", "every part needs a vertex");
      return -1;
    }
  }
  auto [lo, hi] = std::minmax_element(req.part_sizes.begin(),
                                      req.part_sizes.end());
  if (*lo != *hi) {
    report.add("equal-parts", "part sizes range from " + to_string(*lo) +
                                  " to " + to_string(*hi) +
                                  ", so the graph is not regular");
    return -1;
  }
  return *lo;
}

void check_base(const DecompositionRequest& req, FeasibilityReport& report) {
  if (!is_complete_simple(req.base) || req.base.vertex_count() != req.m) {
    report.add("base-complete",
               "base must be K_" + to_string(req.m) + " without repeated edges");
  }
  try {
    check_coloring(req.base, req.base_coloring);
  } catch (const ContractViolation& e) {
    report.add("base-coloring", e.what());
  }
}

void check_embedding(const DecompositionRequest& req,
                     FeasibilityReport& report) {
  if (req.m < 1 || req.n < 1) {
    report.add("positive-orders", "m and n must be >= 1");
    return;
  }
  check_base(req, report);
  if (!report.feasible) return;
  const int s = req.m + req.n;
  const int k = s / 2;  // ceil((m+n-1)/2)
  if (req.base_coloring.k != k) {
    report.add("color-count", "base uses k = " + to_string(req.base_coloring.k) +
                                  " colors, need ceil((m+n-1)/2) = " +
                                  to_string(k));
    return;
  }
  const bool leave = s % 2 == 0;
  for (int j = 1; j <= k; ++j) {
    ClassShape shape = class_shape(req.base, req.base_coloring, j);
    const std::string name = "color " + to_string(j);
    if (leave && j == k) {
      if (shape.max_degree > 1) {
        report.add("matching-class",
                   name + " must consist of paths of length at most 1");
      }
      if (shape.isolated > req.n) {
        report.add("matching-isolated",
                   name + " has " + to_string(shape.isolated) +
                       " isolated vertices, more than n = " + to_string(req.n));
      }
      continue;
    }
    if (shape.max_degree > 2 || !shape.acyclic) {
      report.add("path-class", name + " is not a disjoint union of paths");
    } else if (shape.components > req.n) {
      report.add("path-count", name + " has " + to_string(shape.components) +
                                   " paths, more than n = " + to_string(req.n));
    }
  }
}

void check_embed_factorization(const DecompositionRequest& req,
                               FeasibilityReport& report) {
  if (req.m < 1 || req.n < 1) {
    report.add("positive-orders", "m and n must be >= 1");
    return;
  }
  check_base(req, report);
  if (!report.feasible) return;
  const int s = req.m + req.n;
  if (static_cast<int>(req.r.size()) != req.base_coloring.k) {
    report.add("color-count", "base uses " + to_string(req.base_coloring.k) +
                                  " colors but r has " +
                                  to_string(req.r.size()) + " entries");
    return;
  }
  check_factor_sequence(req.r, s, s - 1, report);
  if (!report.feasible) return;
  if (factor_assignment(req.base, req.base_coloring, req.n, req.r).empty()) {
    report.add("factor-assignment",
               "no permutation sigma gives d_i(v) <= r_sigma(i) and |E_i| >= "
               "r_sigma(i) * (m - n) / 2 for every color i");
  }
}

void check_two_class(const DecompositionRequest& req,
                     FeasibilityReport& report) {
  std::vector<int> sizes = req.part_sizes;
  if (sizes.empty()) sizes.assign(std::max(req.m, 0), req.n);
  if (sizes.empty()) {
    report.add("positive-part-count", "at least one part is required");
    return;
  }
  for (int size : sizes) {
    if (size < 1) {
      report.add("positive-part-sizes", "every part needs a vertex");
      return;
    }
  }
  const int m = static_cast<int>(sizes.size());
  const int s = std::accumulate(sizes.begin(), sizes.end(), 0);
  const int lambda = req.lambda;
  const int mu = req.mu;
  // Degenerate families: complete graphs and edgeless graphs always
  // decompose.
  if (lambda == mu || m == 1 || s == m) return;
  if (mu == 0) {
    // A disjoint union of lambda K_{n_i}: only a lone perfect matching
    // (every part an edge, lambda = 1) survives without a spanning cycle.
    bool matching = lambda == 1 && std::all_of(sizes.begin(), sizes.end(),
                                               [](int n) { return n == 2; });
    if (!matching) {
      report.add("connected", "mu = 0 with " + to_string(m) +
                                  " parts leaves the graph disconnected");
    }
    return;
  }
  auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  if (*lo != *hi) {
    report.add("equal-parts", "part sizes range from " + to_string(*lo) +
                                  " to " + to_string(*hi) +
                                  ", so the graph is not regular");
    return;
  }
  const int size = *lo;
  const long long degree =
      static_cast<long long>(lambda) * (size - 1) +
      static_cast<long long>(mu) * size * (m - 1);
  if (lambda == 0) return;
  const long long cross = static_cast<long long>(mu) * size * (m - 1);
  if (degree % 2 == 0 || size >= 3) {
    if (lambda > cross) {
      report.add("pure-edge-bound", "lambda <= mu*n*(m-1) fails: " +
                                        to_string(lambda) + " > " +
                                        to_string(cross));
    }
  } else if (lambda - 1 > 2LL * mu * (m - 1)) {
    report.add("pure-edge-bound", "lambda-1 <= 2*mu*(m-1) fails: " +
                                      to_string(lambda - 1) + " > " +
                                      to_string(2LL * mu * (m - 1)));
  }
}

}  // namespace

void FeasibilityReport::add(std::string condition, std::string detail) {
  feasible = false;
  violations.push_back({std::move(condition), std::move(detail)});
}

InfeasibleError::InfeasibleError(FeasibilityReport report)
    : std::runtime_error(report.violations.empty()
                             ? std::string("infeasible request")
                             : report.violations.front().condition + ": " +
                                   report.violations.front().detail),
      report_(std::move(report)) {}

FeasibilityReport check_feasibility(const DecompositionRequest& req) {
  FeasibilityReport report;
  require_nonnegative(req, report);
  if (!report.feasible) return report;
  switch (req.kind) {
    case RequestKind::complete:
      if (req.n < 1) report.add("positive-order", "n must be >= 1");
      if (req.lambda < 1) report.add("positive-multiplicity", "lambda must be >= 1");
      break;
    case RequestKind::factorization:
      if (req.n < 1) report.add("positive-order", "n must be >= 1");
      check_factor_sequence(req.r, req.n,
                            static_cast<long long>(req.lambda) * (req.n - 1),
                            report);
      break;
    case RequestKind::complete_multipartite: {
      int n = common_part_size(req, report);
      if (!report.feasible) break;
      int m = req.part_sizes.empty() ? req.m
                                     : static_cast<int>(req.part_sizes.size());
      if (n < 1 || m < 1) report.add("positive-orders", "n and m must be >= 1");
      if (req.lambda < 1) report.add("positive-multiplicity", "lambda must be >= 1");
      if (req.fair) {
        if (req.lambda != 1) {
          report.add("fair-simple", "fairness is offered for lambda = 1 only");
        }
        if ((static_cast<long long>(n) * (m - 1)) % 2 != 0) {
          report.add("fair-parity", "n*(m-1) = " + to_string(n * (m - 1)) +
                                        " must be even");
        }
      }
      break;
    }
    case RequestKind::multipartite_factorization: {
      int n = common_part_size(req, report);
      if (!report.feasible) break;
      int m = req.part_sizes.empty() ? req.m
                                     : static_cast<int>(req.part_sizes.size());
      if (n < 1 || m < 1) {
        report.add("positive-orders", "n and m must be >= 1");
        break;
      }
      check_factor_sequence(req.r, static_cast<long long>(n) * m,
                            static_cast<long long>(req.lambda) * n * (m - 1),
                            report);
      break;
    }
    case RequestKind::two_class:
      check_two_class(req, report);
      break;
    case RequestKind::embedding:
      check_embedding(req, report);
      break;
    case RequestKind::embed_factorization:
      check_embed_factorization(req, report);
      break;
  }
  return report;
}

}  // namespace amalgam
