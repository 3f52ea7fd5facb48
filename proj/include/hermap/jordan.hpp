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

// Splitting a Hermitian map into completely positive parts.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermap/choi.hpp"

namespace hermap {

/// Positive and negative parts of a Hermitian Choi matrix, C = c_plus - c_minus,
/// together with the CP-distance and the lower bound it implies.
struct JordanParts {
  ComplexMatrix c_plus;
  ComplexMatrix c_minus;
  /// max(0, -λ_min); eigenvalues within the zero threshold count as zero.
  double dcp = 0.0;
  /// Dimension of the λ_min eigenspace. Empty when the map is CP.
  std::optional<Index> multiplicity_k;
  /// sqrt(k) * dcp, or 0 for a CP map.
  double bound = 0.0;
  double hs_minus = 0.0;
  SpectralDecomposition spectrum;
};

JordanParts jordan_decompose(const MapSpec& spec, const ToleranceConfig& tol = {});

double cp_distance(const MapSpec& spec, const ToleranceConfig& tol = {});

/// Throws DomainError for CP maps, where the multiplicity is undefined.
Index lambda_min_multiplicity(const MapSpec& spec, const ToleranceConfig& tol = {});

double negative_part_bound(const MapSpec& spec, const ToleranceConfig& tol = {});

struct CpApproximation {
  MapSpec map;
  double distance = 0.0;
};

/// Nearest CP map in Hilbert-Schmidt norm: the map with Choi matrix c_plus.
CpApproximation best_cp_approximation(const MapSpec& spec, const ToleranceConfig& tol = {});

/// Structural validity and bound satisfaction are reported independently.
struct DecompositionAudit {
  bool valid = false;
  std::vector<std::string> reasons;
  double hs_c2 = 0.0;
  double bound = 0.0;
  bool satisfied = false;
  double gap = 0.0;
  /// λ_min(c2 - c_minus). Only meaningful when the pair is structurally valid.
  double loewner_margin = 0.0;
  bool loewner_minimal = false;
};

/// Checks a proposed decomposition C_Φ = c1 - c2 into PSD Choi matrices.
DecompositionAudit audit_decomposition(const MapSpec& spec, const ComplexMatrix& c1, const ComplexMatrix& c2,
                                       const ToleranceConfig& tol = {});

}  // namespace hermap
