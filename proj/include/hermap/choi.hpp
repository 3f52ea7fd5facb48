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

// Choi-Jamiołkowski correspondence between linear maps M_m -> M_n and
// matrices in M_m ⊗ M_n.

#pragma once

#include <functional>
#include <vector>

#include "hermap/tensor.hpp"

namespace hermap {

/// A linear map Φ: M_m -> M_n held as its Choi matrix
/// C = Σ_ij E_ij ⊗ Φ(E_ij), an m x m grid of n x n blocks with block
/// (i, j) equal to Φ(E_ij).
///
/// Hermitian preservation is not enforced here: the correspondence holds
/// for every linear map, and operations that need a Hermitian Choi matrix
/// check it themselves.
class MapSpec {
 public:
  MapSpec(Index m, Index n, ComplexMatrix choi);

  Index m() const { return m_; }
  Index n() const { return n_; }
  const ComplexMatrix& choi() const { return choi_; }

  /// Φ(E_ij) read back from the Choi matrix.
  ComplexMatrix image(Index i, Index j) const { return choi_.block(i * n_, j * n_, n_, n_); }

  friend bool operator==(const MapSpec&, const MapSpec&) = default;

 private:
  Index m_;
  Index n_;
  ComplexMatrix choi_;
};

/// A map given by its images on the matrix units; images[i*m + j] = Φ(E_ij).
struct MapAction {
  Index m = 0;
  Index n = 0;
  std::vector<ComplexMatrix> images;

  static MapAction from_function(Index m, Index n, const std::function<ComplexMatrix(const ComplexMatrix&)>& phi);

  const ComplexMatrix& image(Index i, Index j) const { return images.at(static_cast<std::size_t>(i * m + j)); }
};

MapSpec choi_from_action(const MapAction& action);

/// Φ(X) = tr₁[(Xᵀ ⊗ I_n) C_Φ].
ComplexMatrix apply_via_choi(const MapSpec& spec, const ComplexMatrix& x);

struct HermiticityReport {
  bool hermitian = false;
  double max_asymmetry = 0.0;
};

HermiticityReport is_hermitian_preserving(const MapSpec& spec, const ToleranceConfig& tol = {});

/// Throws DomainError naming `operation` when the Choi matrix is not Hermitian.
void require_hermitian(const MapSpec& spec, const ToleranceConfig& tol, const char* operation);

struct CpReport {
  bool cp = false;
  double lambda_min = 0.0;
};

/// CP iff the Choi matrix is PSD up to the psd slack. λ_min is always reported.
CpReport is_cp(const MapSpec& spec, const ToleranceConfig& tol = {});

inline double hs_norm_of_map(const MapSpec& spec) { return hs_norm(spec.choi()); }

/// Φ(X) = Σ_i w_i A_i X A_i*, used for building test and example maps.
MapSpec choi_from_kraus(Index m, Index n, const std::vector<double>& weights,
                        const std::vector<ComplexMatrix>& operators);

}  // namespace hermap
