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

#include "hermap/choi.hpp"

#include <sstream>

namespace hermap {

MapSpec::MapSpec(Index m, Index n, ComplexMatrix choi) : m_(m), n_(n), choi_(std::move(choi)) {
  if (m_ < 1 || n_ < 1) throw ArgumentError("MapSpec: dimensions must be positive");
  if (choi_.rows() != m_ * n_ || choi_.cols() != m_ * n_) {
    throw ArgumentError("MapSpec: Choi matrix must have side " + std::to_string(m_ * n_) + ", got " +
                        std::to_string(choi_.rows()) + "x" + std::to_string(choi_.cols()));
  }
  if (!choi_.allFinite()) throw ArgumentError("MapSpec: Choi matrix has non-finite entries");
}

MapAction MapAction::from_function(Index m, Index n, const std::function<ComplexMatrix(const ComplexMatrix&)>& phi) {
  MapAction action{m, n, {}};
  action.images.reserve(static_cast<std::size_t>(m * m));
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) action.images.push_back(phi(matrix_unit(m, i, j)));
  }
  return action;
}

MapSpec choi_from_action(const MapAction& action) {
  const Index m = action.m;
  const Index n = action.n;
  if (m < 1 || n < 1) throw ArgumentError("choi_from_action: dimensions must be positive");
  if (action.images.size() != static_cast<std::size_t>(m * m)) {
    throw ArgumentError("choi_from_action: expected " + std::to_string(m * m) + " images, got " +
                        std::to_string(action.images.size()));
  }
  ComplexMatrix choi = ComplexMatrix::Zero(m * n, m * n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      const ComplexMatrix& img = action.image(i, j);
      if (img.rows() != n || img.cols() != n) {
        throw ArgumentError("choi_from_action: image of E_" + std::to_string(i) + std::to_string(j) + " is " +
                            std::to_string(img.rows()) + "x" + std::to_string(img.cols()) + ", expected " +
                            std::to_string(n) + "x" + std::to_string(n));
      }
      choi += kron(matrix_unit(m, i, j), img);
    }
  }
  return MapSpec(m, n, std::move(choi));
}

ComplexMatrix apply_via_choi(const MapSpec& spec, const ComplexMatrix& x) {
  if (x.rows() != spec.m() || x.cols() != spec.m()) {
    throw ArgumentError("apply_via_choi: input must be " + std::to_string(spec.m()) + "x" + std::to_string(spec.m()));
  }
  const ComplexMatrix lhs = kron(x.transpose(), ComplexMatrix::Identity(spec.n(), spec.n()));
  return partial_trace_first(lhs * spec.choi(), spec.m(), spec.n());
}

HermiticityReport is_hermitian_preserving(const MapSpec& spec, const ToleranceConfig& tol) {
  tol.validate();
  const double asym = max_asymmetry(spec.choi());
  return {asym <= tol.recon_threshold(norm_estimate(spec.choi())), asym};
}

void require_hermitian(const MapSpec& spec, const ToleranceConfig& tol, const char* operation) {
  const auto report = is_hermitian_preserving(spec, tol);
  if (!report.hermitian) {
    std::ostringstream msg;
    msg << operation << ": map is not Hermitian-preserving (max |C - C*| = " << report.max_asymmetry << ")";
    throw DomainError(msg.str());
  }
}

CpReport is_cp(const MapSpec& spec, const ToleranceConfig& tol) {
  require_hermitian(spec, tol, "is_cp");
  const auto eig = hermitian_eig(spec.choi(), tol);
  const double spectral = std::max(std::abs(eig.lambda_max()), std::abs(eig.lambda_min()));
  return {eig.lambda_min() >= -tol.psd_threshold(spectral), eig.lambda_min()};
}

MapSpec choi_from_kraus(Index m, Index n, const std::vector<double>& weights,
                        const std::vector<ComplexMatrix>& operators) {
  if (weights.size() != operators.size()) throw ArgumentError("choi_from_kraus: weight/operator count mismatch");
  ComplexMatrix choi = ComplexMatrix::Zero(m * n, m * n);
  for (std::size_t t = 0; t < operators.size(); ++t) {
    const ComplexMatrix& a = operators[t];
    if (a.rows() != n || a.cols() != m) {
      throw ArgumentError("choi_from_kraus: operator " + std::to_string(t) + " must be " + std::to_string(n) + "x" +
                          std::to_string(m));
    }
    const ComplexVector u = vec(a);
    choi += weights[t] * u * u.adjoint();
  }
  return MapSpec(m, n, std::move(choi));
}

}  // namespace hermap
