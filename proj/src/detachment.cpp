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

#include "amalgam/detachment.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "amalgam/laminar.hpp"

namespace amalgam {
namespace {

constexpr int kAttempts = 24;
constexpr int kOptionBudget = 4096;

class SplitFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One edge-end at the vertex being split. A loop contributes two.
struct Endpoint {
  EdgeId edge;
  int side;  // 0 -> Edge::a, 1 -> Edge::b
  int color;
  VertexId neighbor;  // the vertex itself for loops
};

BoundedSet quota_set(std::vector<int> elements, int divisor) {
  long long size = static_cast<long long>(elements.size());
  return {std::move(elements), static_cast<int>(floor_div(size, divisor)),
          static_cast<int>(ceil_div(size, divisor))};
}

// Working state of the one-vertex-at-a-time splitting.
class Splitter {
 public:
  Splitter(const Multigraph& h, const EdgeColoring& coloring,
           const std::vector<int>& eta, std::vector<int> connect_colors,
           std::uint64_t seed)
      : work_(h),
        coloring_(coloring),
        remaining_(eta),
        connect_colors_(std::move(connect_colors)),
        copies_(h.vertex_count()),
        seed_(seed) {}

  DetachmentResult run() {
    const int n = static_cast<int>(remaining_.size());
    for (VertexId u = 0; u < n; ++u) {
      while (remaining_[u] > 1) {
        split(u, remaining_[u]);
        --remaining_[u];
      }
    }
    return finish(n);
  }

 private:
  void split(VertexId u, int share);
  DetachmentResult finish(int n) const;

  Multigraph work_;
  const EdgeColoring& coloring_;
  std::vector<int> remaining_;
  std::vector<int> connect_colors_;
  std::vector<std::vector<VertexId>> copies_;
  std::uint64_t seed_;
  std::uint64_t splits_ = 0;
};

void Splitter::split(VertexId u, int share) {
  std::vector<Endpoint> ends;
  for (EdgeId e : work_.incident_edges(u)) {
    const Edge& ed = work_.edge(e);
    int color = coloring_[e];
    if (ed.is_loop()) {
      ends.push_back({e, 0, color, u});
      ends.push_back({e, 1, color, u});
    } else {
      ends.push_back({e, ed.a == u ? 0 : 1, color, ed.other(u)});
    }
  }
  const int ground = static_cast<int>(ends.size());

  // Family A: everything > colors > (color, neighbor) cells > single loops.
  // Family B: everything > neighbors.
  std::vector<int> all(ground);
  std::map<int, std::vector<int>> by_color;
  std::map<std::pair<int, VertexId>, std::vector<int>> by_cell;
  std::map<VertexId, std::vector<int>> by_neighbor;
  std::map<EdgeId, std::vector<int>> by_loop;
  for (int i = 0; i < ground; ++i) {
    const Endpoint& end = ends[i];
    all[i] = i;
    by_color[end.color].push_back(i);
    by_cell[{end.color, end.neighbor}].push_back(i);
    by_neighbor[end.neighbor].push_back(i);
    if (end.neighbor == u) by_loop[end.edge].push_back(i);
  }

  std::vector<BoundedSet> family_a;
  std::vector<BoundedSet> family_b;
  family_a.push_back(quota_set(all, share));
  family_b.push_back(quota_set(all, share));
  for (auto& [c, set] : by_color) family_a.push_back(quota_set(set, share));
  for (auto& [c, set] : by_cell) family_a.push_back(quota_set(set, share));
  for (auto& [e, set] : by_loop) family_a.push_back(quota_set(set, share));
  for (auto& [v, set] : by_neighbor) family_b.push_back(quota_set(set, share));

  // Connectivity: the new vertex stays in the component of u in color j
  // when some color-j loop at u is split, or when some component of
  // W(j) - u sends endpoints both to the new vertex and to u.
  std::vector<std::vector<BoundedSet>> hard;
  for (int color : connect_colors_) {
    auto members = by_color.find(color);
    if (members == by_color.end()) continue;
    std::vector<int> loop_ends;
    if (auto cell = by_cell.find({color, u}); cell != by_cell.end()) {
      loop_ends = cell->second;
    }
    const int loop_size = static_cast<int>(loop_ends.size());
    if (loop_size >= share) continue;  // quota already forces a split loop

    DisjointSets pieces(work_.vertex_count());
    for (EdgeId e = 0; e < work_.edge_count(); ++e) {
      const Edge& ed = work_.edge(e);
      if (coloring_[e] != color || ed.a == u || ed.b == u) continue;
      pieces.unite(ed.a, ed.b);
    }
    std::map<int, std::vector<int>> by_piece;
    for (int i : members->second) {
      if (ends[i].neighbor != u) {
        by_piece[pieces.find(ends[i].neighbor)].push_back(i);
      }
    }
    std::vector<std::vector<int>> piece_sets;
    for (auto& [root, set] : by_piece) piece_sets.push_back(std::move(set));
    std::stable_sort(piece_sets.begin(), piece_sets.end(),
                     [](const auto& l, const auto& r) {
                       return l.size() > r.size();
                     });
    if (!piece_sets.empty() &&
        static_cast<int>(piece_sets.front().size()) >= share) {
      family_a.push_back(quota_set(piece_sets.front(), share));
      continue;
    }
    std::vector<BoundedSet> options;
    for (auto& set : piece_sets) {
      if (set.size() < 2) continue;
      options.push_back({set, 1, 1});
    }
    if (loop_size >= 2) options.push_back({loop_ends, 1, 1});
    if (options.empty()) {
      throw SplitFailed("no way to keep color " + std::to_string(color) +
                        " connected");
    }
    hard.push_back(std::move(options));
  }

  const std::uint64_t seed = seed_ == 0 ? 0 : seed_ * 1000003ULL + splits_;
  ++splits_;

  // A color is kept connected when one of its options has endpoints on both
  // sides of the split. Options are only imposed on colors the current
  // selection leaves disconnected, with backtracking when a flow fails.
  auto split_by = [](const std::vector<int>& picked, const BoundedSet& set) {
    int inside = 0;
    for (int i : set.elements) inside += picked[i];
    return inside >= 1 && inside < static_cast<int>(set.elements.size());
  };
  std::vector<BoundedSet> trial = family_a;
  int budget = kOptionBudget;
  std::function<std::optional<std::vector<int>>()> search =
      [&]() -> std::optional<std::vector<int>> {
    if (budget-- <= 0) return std::nullopt;
    auto selection = select_with_bounds(ground, trial, family_b, seed);
    if (!selection || hard.empty()) return selection;
    std::vector<int> picked(ground, 0);
    for (int i : *selection) picked[i] = 1;
    for (const auto& options : hard) {
      if (std::any_of(options.begin(), options.end(), [&](const auto& o) {
            return split_by(picked, o);
          })) {
        continue;
      }
      for (const BoundedSet& option : options) {
        trial.push_back(option);
        auto deeper = search();
        trial.pop_back();
        if (deeper) return deeper;
        if (budget <= 0) break;
      }
      return std::nullopt;
    }
    return selection;
  };
  std::optional<std::vector<int>> chosen = search();
  if (!chosen) {
    throw SplitFailed("no admissible split of vertex " + std::to_string(u));
  }

  const VertexId fresh = work_.add_vertex();
  copies_[u].push_back(fresh);
  for (int i : *chosen) {
    const Endpoint& end = ends[i];
    Edge ed = work_.edge(end.edge);
    if (end.side == 0) {
      ed.a = fresh;
    } else {
      ed.b = fresh;
    }
    work_.set_endpoints(end.edge, ed.a, ed.b);
  }
}

DetachmentResult Splitter::finish(int n) const {
  DetachmentResult result;
  result.coloring = coloring_;
  result.labels.resize(n);
  std::vector<VertexId> rename(work_.vertex_count(), -1);
  VertexId next = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId copy : copies_[u]) {
      rename[copy] = next;
      result.labels[u].push_back(next++);
    }
    rename[u] = next;
    result.labels[u].push_back(next++);
  }
  result.g = Multigraph(next);
  for (const Edge& e : work_.edges()) {
    result.g.add_edge(rename[e.a], rename[e.b]);
  }
  result.spec.eta.resize(n);
  result.spec.phi.assign(next, 0);
  for (VertexId u = 0; u < n; ++u) {
    result.spec.eta[u] = static_cast<int>(result.labels[u].size());
    for (VertexId v : result.labels[u]) result.spec.phi[v] = u;
  }
  return result;
}

// Dense per-color pair counts for a graph on s vertices.
struct Tallies {
  Tallies(const Multigraph& g, const EdgeColoring& coloring)
      : s(g.vertex_count()),
        k(coloring.k),
        degree(s, 0),
        color_degree(static_cast<std::size_t>(s) * (k + 1), 0),
        pair(static_cast<std::size_t>(s) * s, 0),
        color_pair(static_cast<std::size_t>(s) * s * (k + 1), 0) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      int c = coloring[e];
      ++degree[ed.a];
      ++degree[ed.b];
      ++color_degree[idx(ed.a, c)];
      ++color_degree[idx(ed.b, c)];
      ++pair[ed.a * s + ed.b];
      ++color_pair[pidx(ed.a, ed.b, c)];
      if (!ed.is_loop()) {
        ++pair[ed.b * s + ed.a];
        ++color_pair[pidx(ed.b, ed.a, c)];
      }
    }
  }
  std::size_t idx(int v, int c) const {
    return static_cast<std::size_t>(v) * (k + 1) + c;
  }
  std::size_t pidx(int u, int v, int c) const {
    return (static_cast<std::size_t>(u) * s + v) * (k + 1) + c;
  }
  int deg(int v) const { return degree[v]; }
  int cdeg(int v, int c) const { return color_degree[idx(v, c)]; }
  int mult(int u, int v) const { return pair[u * s + v]; }
  int cmult(int u, int v, int c) const { return color_pair[pidx(u, v, c)]; }

  int s;
  int k;
  std::vector<int> degree;
  std::vector<int> color_degree;
  std::vector<int> pair;  // diagonal holds loop counts
  std::vector<int> color_pair;
};

void fail(PropertyVerdict& verdict, const std::string& detail) {
  if (verdict.pass) {
    verdict.pass = false;
    verdict.detail = detail;
  }
}

std::string ratio(long long num, long long den) {
  std::ostringstream out;
  out << num << "/" << den;
  return out.str();
}

}  // namespace

std::string property_name(Property p) {
  return "A" + std::to_string(static_cast<int>(p) + 1);
}

bool DetachmentReport::all_pass() const {
  if (!structurally_valid()) return false;
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyVerdict& v) { return v.pass; });
}

std::vector<int> connectivity_colors(const Multigraph& h,
                                     const EdgeColoring& coloring,
                                     const std::vector<int>& eta) {
  Tallies t(h, coloring);
  std::vector<int> out;
  for (int c = 1; c <= coloring.k; ++c) {
    bool ok = true;
    for (VertexId u = 0; u < h.vertex_count() && ok; ++u) {
      int d = t.cdeg(u, c);
      if (d % eta[u] != 0 || (d / eta[u]) % 2 != 0) ok = false;
      if (eta[u] >= 2 && d == 0) ok = false;
    }
    if (ok) out.push_back(c);
  }
  return out;
}

DetachmentResult detach(const Multigraph& h, const EdgeColoring& coloring,
                        const std::vector<int>& eta, std::uint64_t seed) {
  check_coloring(h, coloring);
  if (static_cast<int>(eta.size()) != h.vertex_count()) {
    throw ContractViolation("eta must be defined on every vertex");
  }
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (eta[v] < 1) throw ContractViolation("eta values must be positive");
    if (eta[v] == 1 && h.loop_count(v) > 0) {
      throw ContractViolation("vertex " + std::to_string(v) +
                              " has loops but eta = 1");
    }
  }
  const std::vector<int> connect = connectivity_colors(h, coloring, eta);

  std::string last_failure = "unknown";
  std::string last_property = "A7";
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::uint64_t attempt_seed =
        attempt == 0 ? seed : seed * 7919ULL + static_cast<std::uint64_t>(attempt);
    try {
      Splitter splitter(h, coloring, eta, connect, attempt_seed);
      DetachmentResult result = splitter.run();
      DetachmentReport report = verify_detachment(h, coloring, result);
      if (report.all_pass()) return result;
      for (int p = 0; p < kPropertyCount; ++p) {
        if (!report.properties[p].pass) {
          last_property = property_name(static_cast<Property>(p));
          last_failure = report.properties[p].detail;
          break;
        }
      }
      if (!report.structurally_valid()) {
        last_property = "structure";
        last_failure = report.structural_errors.front();
      }
    } catch (const SplitFailed& e) {
      last_property = "A7";
      last_failure = e.what();
    }
  }
  throw ConstructionFailed("detachment failed after retries: " + last_failure,
                           last_property);
}

DetachmentReport verify_detachment(const Multigraph& h,
                                   const EdgeColoring& coloring,
                                   const DetachmentResult& result) {
  DetachmentReport report;
  auto structural = [&report](std::string msg) {
    report.structural_errors.push_back(std::move(msg));
  };
  const Multigraph& g = result.g;
  const auto& eta = result.spec.eta;
  const auto& phi = result.spec.phi;
  const int hn = h.vertex_count();

  if (static_cast<int>(eta.size()) != hn) structural("eta size mismatch");
  if (static_cast<int>(phi.size()) != g.vertex_count()) {
    structural("phi is not total on the detached graph");
  }
  if (g.edge_count() != h.edge_count()) structural("edge count mismatch");
  if (result.coloring.k != coloring.k ||
      result.coloring.color_of != coloring.color_of) {
    structural("coloring not inherited by edge identity");
  }
  if (!report.structurally_valid()) return report;

  std::vector<std::vector<VertexId>> fibers(hn);
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (phi[x] < 0 || phi[x] >= hn) {
      structural("phi maps outside V(H)");
      return report;
    }
    fibers[phi[x]].push_back(x);
  }
  for (VertexId u = 0; u < hn; ++u) {
    if (static_cast<int>(fibers[u].size()) != eta[u]) {
      structural("|phi^-1(" + std::to_string(u) + ")| != eta");
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ge = g.edge(e);
    const Edge& he = h.edge(e);
    auto image = std::minmax(phi[ge.a], phi[ge.b]);
    auto target = std::minmax(he.a, he.b);
    if (image != target) {
      structural("edge " + std::to_string(e) + " does not map onto H");
      break;
    }
  }
  if (!g.is_loopless()) structural("detached graph has a loop");
  if (!report.structurally_valid()) return report;

  const Tallies th(h, coloring);
  const Tallies tg(g, result.coloring);
  const int k = coloring.k;
  auto& a1 = report.properties[0];
  auto& a2 = report.properties[1];
  auto& a3 = report.properties[2];
  auto& a4 = report.properties[3];
  auto& a5 = report.properties[4];
  auto& a6 = report.properties[5];
  auto& a7 = report.properties[6];

  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    VertexId u = phi[x];
    if (!approx(tg.deg(x), th.deg(u), eta[u])) {
      fail(a1, "d(" + std::to_string(x) + ")=" + std::to_string(tg.deg(x)) +
                   " vs " + ratio(th.deg(u), eta[u]));
    }
    for (int c = 1; c <= k; ++c) {
      if (!approx(tg.cdeg(x, c), th.cdeg(u, c), eta[u])) {
        fail(a2, "color " + std::to_string(c) + " at vertex " +
                     std::to_string(x) + ": " + std::to_string(tg.cdeg(x, c)) +
                     " vs " + ratio(th.cdeg(u, c), eta[u]));
      }
    }
  }

  bool any_sibling_pair = false;
  for (VertexId u = 0; u < hn; ++u) {
    if (eta[u] < 2) continue;
    const long long pairs = binomial2(eta[u]);
    const auto& copies = fibers[u];
    for (std::size_t i = 0; i < copies.size(); ++i) {
      for (std::size_t j = i + 1; j < copies.size(); ++j) {
        any_sibling_pair = true;
        VertexId x = copies[i];
        VertexId y = copies[j];
        if (!approx(tg.mult(x, y), th.mult(u, u), pairs)) {
          fail(a3, "m(" + std::to_string(x) + "," + std::to_string(y) +
                       ")=" + std::to_string(tg.mult(x, y)) + " vs " +
                       ratio(th.mult(u, u), pairs));
        }
        for (int c = 1; c <= k; ++c) {
          if (!approx(tg.cmult(x, y, c), th.cmult(u, u, c), pairs)) {
            fail(a4, "color " + std::to_string(c) + " m(" +
                         std::to_string(x) + "," + std::to_string(y) + ")=" +
                         std::to_string(tg.cmult(x, y, c)) + " vs " +
                         ratio(th.cmult(u, u, c), pairs));
          }
        }
      }
    }
  }
  a3.applicable = a4.applicable = any_sibling_pair;

  bool any_cross_pair = false;
  for (VertexId u = 0; u < hn; ++u) {
    for (VertexId v = u + 1; v < hn; ++v) {
      const long long cells = static_cast<long long>(eta[u]) * eta[v];
      for (VertexId x : fibers[u]) {
        for (VertexId y : fibers[v]) {
          any_cross_pair = true;
          if (!approx(tg.mult(x, y), th.mult(u, v), cells)) {
            fail(a5, "m(" + std::to_string(x) + "," + std::to_string(y) +
                         ")=" + std::to_string(tg.mult(x, y)) + " vs " +
                         ratio(th.mult(u, v), cells));
          }
          for (int c = 1; c <= k; ++c) {
            if (!approx(tg.cmult(x, y, c), th.cmult(u, v, c), cells)) {
              fail(a6, "color " + std::to_string(c) + " m(" +
                           std::to_string(x) + "," + std::to_string(y) +
                           ")=" + std::to_string(tg.cmult(x, y, c)) + " vs " +
                           ratio(th.cmult(u, v, c), cells));
            }
          }
        }
      }
    }
  }
  a5.applicable = a6.applicable = any_cross_pair;

  const std::vector<int> connect = connectivity_colors(h, coloring, eta);
  a7.applicable = !connect.empty();
  for (int c : connect) {
    int before = color_class(h, coloring, c).components();
    int after = color_class(g, result.coloring, c).components();
    if (before != after) {
      fail(a7, "color " + std::to_string(c) + ": " + std::to_string(after) +
                   " components vs " + std::to_string(before));
    }
  }
  return report;
}

}  // namespace amalgam
