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

#include "hermap/builtins.hpp"

namespace hermap {

ComplexMatrix transpose_map(const ComplexMatrix& x) { return x.transpose(); }
ComplexMatrix hermitize_map(const ComplexMatrix& x) { return x + x.adjoint(); }
ComplexMatrix antihermitize_map(const ComplexMatrix& x) { return x - x.adjoint(); }

ComplexMatrix offdiag_transpose_map(const ComplexMatrix& x) {
  ComplexMatrix out = x.transpose();
  out.diagonal().setZero();
  return out;
}

MapSpec transpose_spec(Index d) { return choi_from_action(MapAction::from_function(d, d, transpose_map)); }

MapSpec highmult_spec() {
  ComplexMatrix c(4, 4);
  c << 2, 0, 0, 0,
       0, 0, -1, 0,
       0, -1, 0, 0,
       0, 0, 0, 2;
  return MapSpec(2, 2, c);
}

MapSpec scaled_trace_spec(double k, Index d) {
  return choi_from_action(MapAction::from_function(
      d, d, [=](const ComplexMatrix& a) -> ComplexMatrix { return k * a.trace() * ComplexMatrix::Identity(d, d); }));
}

MapSpec hermitize_spec(Index d) { return choi_from_action(MapAction::from_function(d, d, hermitize_map)); }
MapSpec antihermitize_spec(Index d) { return choi_from_action(MapAction::from_function(d, d, antihermitize_map)); }
MapSpec offdiag_transpose_spec(Index d) {
  return choi_from_action(MapAction::from_function(d, d, offdiag_transpose_map));
}

MapSpec block_example_spec() {
  return choi_from_action(MapAction::from_function(4, 4, [](const ComplexMatrix& x) {
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    out.topLeftCorner(2, 2) = hermitize_map(x.topLeftCorner(2, 2));
    out.bottomRightCorner(2, 2) = offdiag_transpose_map(x.bottomRightCorner(2, 2));
    return out;
  }));
}

namespace {

Index square_dim(const nlohmann::json& params, Index m, Index n, const std::string& name) {
  if (m != n) throw ArgumentError("builtin '" + name + "' requires m == n");
  if (params.contains("d")) {
    const auto& d = params.at("d");
    if (!d.is_number_integer() || d.get<Index>() != m) {
      throw ArgumentError("builtin '" + name + "': parameter d must equal m = " + std::to_string(m));
    }
  }
  return m;
}

void require_dims(Index m, Index n, Index want_m, Index want_n, const std::string& name) {
  if (m != want_m || n != want_n) {
    throw ArgumentError("builtin '" + name + "' is defined for m = " + std::to_string(want_m) +
                        ", n = " + std::to_string(want_n));
  }
}

}  // namespace

const std::vector<Builtin>& builtin_registry() {
  static const std::vector<Builtin> registry = {
      {"transpose", "X -> X^T",
       [](const nlohmann::json& p, Index m, Index n) { return transpose_spec(square_dim(p, m, n, "transpose")); }},
      {"highmult", "2 diag(A) - offdiag(A)^T on M_2",
       [](const nlohmann::json&, Index m, Index n) {
         require_dims(m, n, 2, 2, "highmult");
         return highmult_spec();
       }},
      {"scaled_trace", "A -> k tr(A) I (parameter k, default 1)",
       [](const nlohmann::json& p, Index m, Index n) {
         const Index d = square_dim(p, m, n, "scaled_trace");
         double k = 1.0;
         if (p.contains("k")) {
           if (!p.at("k").is_number()) throw ArgumentError("builtin 'scaled_trace': parameter k must be a number");
           k = p.at("k").get<double>();
         }
         return scaled_trace_spec(k, d);
       }},
      {"hermitize", "X -> X + X*",
       [](const nlohmann::json& p, Index m, Index n) { return hermitize_spec(square_dim(p, m, n, "hermitize")); }},
      {"antihermitize", "X -> X - X*",
       [](const nlohmann::json& p, Index m, Index n) {
         return antihermitize_spec(square_dim(p, m, n, "antihermitize"));
       }},
      {"offdiag_transpose", "X -> offdiag(X)^T",
       [](const nlohmann::json& p, Index m, Index n) {
         return offdiag_transpose_spec(square_dim(p, m, n, "offdiag_transpose"));
       }},
      {"block_example", "hermitize(2) (+) offdiag_transpose(2) on M_4",
       [](const nlohmann::json&, Index m, Index n) {
         require_dims(m, n, 4, 4, "block_example");
         return block_example_spec();
       }},
  };
  return registry;
}

MapSpec make_builtin(const std::string& name, const nlohmann::json& params, Index m, Index n) {
  std::string names;
  for (const auto& b : builtin_registry()) {
    if (b.name == name) return b.make(params, m, n);
    names += (names.empty() ? "" : ", ") + b.name;
  }
  throw ArgumentError("unknown builtin '" + name + "'; available: " + names);
}

}  // namespace hermap
