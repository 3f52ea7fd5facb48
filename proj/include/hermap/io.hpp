// Copyright 2026 The hermap Authors
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

// JSON interchange for matrices and map documents.
//
//   {"m": 2, "n": 2, "choi": {"re": [[...]], "im": [[...]]}}
//   {"m": 2, "n": 2, "builtin": {"name": "transpose", ...params}}
//
// Optional members: "tol" ({"eig_zero", "psd_slack", "recon"}) and, for
// audits, "c1" / "c2" matrices in the same re/im form as "choi".

#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "hermap/choi.hpp"

namespace hermap {

/// Schema violation; `path` is a JSON pointer to the offending member.
class ParseError : public ArgumentError {
 public:
  ParseError(const std::string& path, const std::string& message)
      : ArgumentError(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct MapDocument {
  MapSpec spec;
  ToleranceConfig tol;
  std::optional<ComplexMatrix> c1;
  std::optional<ComplexMatrix> c2;
};

nlohmann::json matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& path = "");

nlohmann::json spec_to_json(const MapSpec& spec);

MapDocument map_document_from_json(const nlohmann::json& doc);
MapDocument parse_map_document(std::string_view text);

}  // namespace hermap
