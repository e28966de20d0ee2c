// Copyright 2026 The fmat Authors
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

// JSON views of library values.
//
// Scalars are serialized as their exact text rendering, never as floats, so
// serialization round-trips losslessly through parse_scalar and the output
// is byte-deterministic: nlohmann::json keeps object keys sorted.

#pragma once

#include <string>

#include "json.hpp"

#include "fmat/laws.hpp"
#include "fmat/morphism.hpp"
#include "fmat/protocols.hpp"
#include "fmat/quantum.hpp"

namespace fmat {

using Json = nlohmann::json;

template <InvolutiveScalar S>
Json to_json(const Morphism<S>& m) {
  Json entries = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m.entry(r, c).to_text());
    entries.push_back(std::move(row));
  }
  return Json{{"dom", m.dom().to_text()},
              {"cod", m.cod().to_text()},
              {"entries", std::move(entries)}};
}

inline Json to_json(const LawResult& r) {
  Json j{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}};
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  return j;
}

inline Json to_json(const BranchCheck& b) {
  return Json{{"index", b.index},
              {"correction", b.correction},
              {"weight", b.weight},
              {"ok", b.ok}};
}

inline Json to_json(const FirstDifference& d) {
  return Json{{"row", d.row}, {"col", d.col}, {"lhs", d.lhs}, {"rhs", d.rhs}};
}

template <InvolutiveScalar S>
Json to_json(const ProtocolReport<S>& r) {
  Json preconditions = Json::array();
  for (const auto& [name, ok] : r.preconditions) {
    preconditions.push_back(Json{{"name", name}, {"ok", ok}});
  }
  Json branches = Json::array();
  for (const BranchCheck& b : r.branches) branches.push_back(to_json(b));
  Json j{{"protocol", r.protocol},
         {"ok", r.ok()},
         {"equal", r.equal},
         {"preconditions", std::move(preconditions)},
         {"branches", std::move(branches)}};
  // The full matrices are large; serialize them only on failure, where they
  // are the counterexample.
  if (!r.ok()) {
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
    j["first_difference"] =
        r.first_difference ? to_json(*r.first_difference) : Json();
  }
  return j;
}

template <InvolutiveScalar S>
Json to_json(const BornBranch<S>& b) {
  Json j{{"index", b.index}, {"probability", b.probability.to_text()}};
  if (b.amplitude) j["amplitude"] = b.amplitude->to_text();
  return j;
}

inline Json to_json(const RelSearchResult& r) {
  return Json{{"candidates", r.candidates},
              {"valid_bases", r.valid_bases},
              {"qubit_unitaries", r.qubit_unitaries}};
}

}  // namespace fmat
