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

// Named example maps available from the command line.

#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <string>
#include <vector>

#include "hermap/choi.hpp"

namespace hermap {

ComplexMatrix transpose_map(const ComplexMatrix& x);
ComplexMatrix hermitize_map(const ComplexMatrix& x);      // X + X*
ComplexMatrix antihermitize_map(const ComplexMatrix& x);  // X - X*
ComplexMatrix offdiag_transpose_map(const ComplexMatrix& x);

MapSpec transpose_spec(Index d);
/// Φ(A) = 2 diag(A) - offdiag(A)ᵀ on M_2, Choi [[2,0,0,0],[0,0,-1,0],[0,-1,0,0],[0,0,0,2]].
MapSpec highmult_spec();
/// Φ(A) = k tr(A) I_d.
MapSpec scaled_trace_spec(double k, Index d);
MapSpec hermitize_spec(Index d);
MapSpec antihermitize_spec(Index d);
/// Φ(X) = offdiag(X)ᵀ; for d = 2 its Choi matrix is u uᵀ - v vᵀ with
/// u = (0,1,1,0)/√2, v = (0,1,-1,0)/√2.
MapSpec offdiag_transpose_spec(Index d);
/// hermitize(2) ⊕ offdiag_transpose(2) on M_4, acting on the diagonal
/// 2x2 blocks and discarding the off-diagonal ones.
MapSpec block_example_spec();

struct Builtin {
  std::string name;
  std::string summary;
  std::function<MapSpec(const nlohmann::json& params, Index m, Index n)> make;
};

const std::vector<Builtin>& builtin_registry();

/// Looks up `name` and builds it; ArgumentError lists the available names.
MapSpec make_builtin(const std::string& name, const nlohmann::json& params, Index m, Index n);

}  // namespace hermap
