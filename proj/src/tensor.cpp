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

#include "hermap/tensor.hpp"

#include <sstream>

namespace hermap {

SpectralDecomposition hermitian_eig(const ComplexMatrix& h, const ToleranceConfig& tol) {
  tol.validate();
  if (h.rows() != h.cols() || h.rows() < 1) {
    throw ArgumentError("hermitian_eig: expected a non-empty square matrix, got " + std::to_string(h.rows()) + "x" +
                        std::to_string(h.cols()));
  }
  if (!h.allFinite()) throw ArgumentError("hermitian_eig: matrix has non-finite entries");
  const double scale = norm_estimate(h);
  const double asym = max_asymmetry(h);
  if (asym > tol.recon_threshold(scale)) {
    std::ostringstream msg;
    msg << "hermitian_eig: matrix is not Hermitian (max |H - H*| = " << asym << ")";
    throw DomainError(msg.str());
  }
  const ComplexMatrix sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw NumericError("hermitian_eig: eigensolver did not converge");

  // Eigen sorts ascending.
  const Index d = sym.rows();
  SpectralDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  const double spectral = std::max(std::abs(out.eigenvalues(0)), std::abs(out.eigenvalues(d - 1)));
  out.zero_tol = tol.eig_threshold(spectral);
  return out;
}

}  // namespace hermap
