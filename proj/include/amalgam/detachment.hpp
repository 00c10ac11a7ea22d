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

#ifndef AMALGAM_DETACHMENT_HPP
#define AMALGAM_DETACHMENT_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "amalgam/multigraph.hpp"

namespace amalgam {

struct DetachmentResult {
  Multigraph g;
  EdgeColoring coloring;
  AmalgamationSpec spec;
  // labels[u] lists the detached copies u_1..u_eta(u) of H-vertex u.
  std::vector<std::vector<VertexId>> labels;
};

// Identifiers for the seven detachment properties.
enum class Property { A1, A2, A3, A4, A5, A6, A7 };
inline constexpr int kPropertyCount = 7;
std::string property_name(Property p);

struct PropertyVerdict {
  bool pass = true;
  // False when the property has nothing to check (e.g. A7 with no color
  // meeting its hypothesis).
  bool applicable = true;
  std::string detail;
};

struct DetachmentReport {
  // Structural problems (phi inconsistent with eta, edge identities that do
  // not re-amalgamate onto H, loops left behind) are reported here and
  // suppress the property checks.
  std::vector<std::string> structural_errors;
  std::array<PropertyVerdict, kPropertyCount> properties{};

  bool structurally_valid() const { return structural_errors.empty(); }
  bool all_pass() const;
  const PropertyVerdict& operator[](Property p) const {
    return properties[static_cast<std::size_t>(p)];
  }
};

// Raised when detach cannot reach a result satisfying every property. This
// signals a bug or an input outside the supported range.
class ConstructionFailed : public std::runtime_error {
 public:
  ConstructionFailed(const std::string& what, std::string violated)
      : std::runtime_error(what), violated_(std::move(violated)) {}
  const std::string& violated_property() const { return violated_; }

 private:
  std::string violated_;
};

// Colors j that satisfy the connectivity hypothesis: d_{H(j)}(u) / eta(u) is
// an even integer for every u, and no vertex with eta(u) >= 2 is missing
// color j entirely.
std::vector<int> connectivity_colors(const Multigraph& h,
                                     const EdgeColoring& coloring,
                                     const std::vector<int>& eta);

// Loopless eta-detachment of a k-edge-colored graph satisfying A1..A7.
// Requires eta(v) >= 1 everywhere and eta(v) == 1 only where v has no loops.
DetachmentResult detach(const Multigraph& h, const EdgeColoring& coloring,
                        const std::vector<int>& eta, std::uint64_t seed = 0);

DetachmentReport verify_detachment(const Multigraph& h,
                                   const EdgeColoring& coloring,
                                   const DetachmentResult& result);

}  // namespace amalgam

#endif  // AMALGAM_DETACHMENT_HPP
