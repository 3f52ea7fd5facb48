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

// Weighted Kraus forms and CP extensions on an auxiliary space.
//
// A Hermitian map Φ: M_m -> M_n is written as Φ(X) = Σ λ_i A_i X A_i* with
// vec(A_i) the Choi eigenvectors. The extension Ψ: M_m ⊗ M_k -> M_n ⊗ M_k,
//
//   Ψ(Y) = Σ_t |λ_t| (A_t ⊗ E_jj) Y (A_t ⊗ E_jj)*,   j = aux index of term t,
//
// is CP, and Φ(X) = tr_k[Ψ(X ⊗ I_k)(I_n ⊗ Q)] for the diagonal sign matrix Q.

#pragma once

#include <vector>

#include "hermap/choi.hpp"

namespace hermap {

struct KrausTerm {
  double weight = 0.0;
  ComplexMatrix op;  // n x m, unit Hilbert-Schmidt norm
};

/// Nonzero-eigenvalue terms of the Choi matrix in descending weight order.
std::vector<KrausTerm> kraus_terms(const MapSpec& spec, const ToleranceConfig& tol = {});

/// Σ λ_i A_i X A_i*.
ComplexMatrix apply_kraus(const std::vector<KrausTerm>& terms, const ComplexMatrix& x);

struct ExtensionTerm {
  double magnitude = 0.0;
  ComplexMatrix op;  // n x m
  Index aux = 0;     // zero-based index into the auxiliary space
  int sign = 1;
};

struct CpExtension {
  Index m = 0;
  Index n = 0;
  Index k = 0;
  std::vector<ExtensionTerm> terms;
  ComplexMatrix q;  // k x k
};

/// Auxiliary space of dimension rank(C_Φ), one index per eigenvalue.
CpExtension build_extension(const MapSpec& spec, const ToleranceConfig& tol = {});

/// tr_k[Ψ(X ⊗ I_k)(I_n ⊗ Q)] evaluated with full tensor products. Uses
/// ext.q as stored, whatever its entries.
ComplexMatrix apply_extension(const CpExtension& ext, const ComplexMatrix& x);

/// Σ magnitude * Q(aux, aux) * A X A*, the contracted form of apply_extension.
ComplexMatrix apply_extension_fast(const CpExtension& ext, const ComplexMatrix& x);

/// Ψ(Y) for Y ∈ M_m ⊗ M_k.
ComplexMatrix apply_dilation(const CpExtension& ext, const ComplexMatrix& y);

/// Choi matrix of Ψ as a map M_{mk} -> M_{nk}; side m*n*k².
MapSpec dilation_choi(const CpExtension& ext);

/// Q is real diagonal with entries in {-1, 0, +1} and each term's sign
/// matches the diagonal entry of its auxiliary index.
bool sign_consistent(const CpExtension& ext);

struct BlockPartition {
  std::vector<Index> input_sizes;
  std::vector<Index> output_sizes;

  Index blocks() const { return static_cast<Index>(input_sizes.size()); }
  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

/// Throws ArgumentError if the partition does not match the map's dimensions.
void validate_partition(const MapSpec& spec, const BlockPartition& partition);

/// Choi matrix of the block-b submap M_{m_b} -> M_{n_b}.
MapSpec sub_choi(const MapSpec& spec, const BlockPartition& partition, Index block);

/// Extension for a block-diagonal Choi matrix. Positive terms of every
/// block share auxiliary indices [0, max p_i), negative terms share
/// [max p_i, max p_i + max q_i), so each index carries one sign and
/// k = max p_i + max q_i <= rank(C_Φ).
CpExtension block_reduce(const MapSpec& spec, const BlockPartition& partition, const ToleranceConfig& tol = {});

/// Extension with block i's j-th term placed at auxiliary index j and
/// Q = Σ_i V_i Q_i V_i*, so k = max rank_i. When blocks disagree in sign at
/// a shared index Q leaves {-1, 0, 1} and the reconstruction breaks; kept
/// for comparing against block_reduce.
CpExtension shared_index_extension(const MapSpec& spec, const BlockPartition& partition,
                                   const ToleranceConfig& tol = {});

/// Finest contiguous partition such that no Choi entry above the
/// reconstruction tolerance couples distinct blocks.
BlockPartition detect_block_partition(const MapSpec& spec, const ToleranceConfig& tol = {});

}  // namespace hermap
