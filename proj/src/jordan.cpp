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

#include "hermap/jordan.hpp"

#include <cmath>

namespace hermap {

namespace {

double spectral_radius(const SpectralDecomposition& eig) {
  return std::max(std::abs(eig.lambda_max()), std::abs(eig.lambda_min()));
}

Index count_near_min(const SpectralDecomposition& eig) {
  const double lmin = eig.lambda_min();
  const double window = eig.zero_tol * (1.0 + std::abs(lmin));
  return (eig.eigenvalues.array() <= lmin + window).count();
}

// λ_min of a Hermitian-within-tolerance matrix, or nullopt if it is not Hermitian.
std::optional<double> checked_lambda_min(const ComplexMatrix& c, const ToleranceConfig& tol) {
  try {
    return hermitian_eig(c, tol).lambda_min();
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

JordanParts jordan_decompose(const MapSpec& spec, const ToleranceConfig& tol) {
  require_hermitian(spec, tol, "jordan_decompose");
  JordanParts parts;
  parts.spectrum = hermitian_eig(spec.choi(), tol);
  const auto& eig = parts.spectrum;
  const Index d = eig.size();

  RealVector pos = RealVector::Zero(d);
  RealVector neg = RealVector::Zero(d);
  for (Index i = 0; i < d; ++i) {
    const double lam = eig.eigenvalues(i);
    if (lam > eig.zero_tol) pos(i) = lam;
    if (lam < -eig.zero_tol) neg(i) = -lam;
  }
  const auto& u = eig.eigenvectors;
  parts.c_plus = u * pos.cast<Complex>().asDiagonal() * u.adjoint();
  parts.c_minus = u * neg.cast<Complex>().asDiagonal() * u.adjoint();
  parts.hs_minus = neg.norm();

  if (eig.lambda_min() < -eig.zero_tol) {
    parts.dcp = -eig.lambda_min();
    parts.multiplicity_k = count_near_min(eig);
    parts.bound = std::sqrt(static_cast<double>(*parts.multiplicity_k)) * parts.dcp;
  }
  return parts;
}

double cp_distance(const MapSpec& spec, const ToleranceConfig& tol) {
  require_hermitian(spec, tol, "cp_distance");
  const auto eig = hermitian_eig(spec.choi(), tol);
  return eig.lambda_min() < -eig.zero_tol ? -eig.lambda_min() : 0.0;
}

Index lambda_min_multiplicity(const MapSpec& spec, const ToleranceConfig& tol) {
  require_hermitian(spec, tol, "lambda_min_multiplicity");
  const auto eig = hermitian_eig(spec.choi(), tol);
  if (eig.lambda_min() >= -eig.zero_tol) throw DomainError("lambda_min_multiplicity: map is CP; multiplicity undefined");
  return count_near_min(eig);
}

double negative_part_bound(const MapSpec& spec, const ToleranceConfig& tol) {
  return jordan_decompose(spec, tol).bound;
}

CpApproximation best_cp_approximation(const MapSpec& spec, const ToleranceConfig& tol) {
  auto parts = jordan_decompose(spec, tol);
  return {MapSpec(spec.m(), spec.n(), std::move(parts.c_plus)), parts.hs_minus};
}

DecompositionAudit audit_decomposition(const MapSpec& spec, const ComplexMatrix& c1, const ComplexMatrix& c2,
                                       const ToleranceConfig& tol) {
  const Index side = spec.m() * spec.n();
  if (c1.rows() != side || c1.cols() != side || c2.rows() != side || c2.cols() != side) {
    throw ArgumentError("audit_decomposition: c1 and c2 must be square of side " + std::to_string(side));
  }
  const JordanParts parts = jordan_decompose(spec, tol);
  DecompositionAudit audit;
  audit.hs_c2 = hs_norm(c2);
  audit.bound = parts.bound;
  audit.gap = audit.hs_c2 - audit.bound;
  const double scale = spectral_radius(parts.spectrum);
  audit.satisfied = audit.hs_c2 >= audit.bound - tol.recon_threshold(scale);

  const auto check_psd = [&](const ComplexMatrix& c, const char* name) {
    const auto lmin = checked_lambda_min(c, tol);
    if (!lmin) {
      audit.reasons.push_back(std::string(name) + " not Hermitian");
    } else if (*lmin < -tol.psd_threshold(norm_estimate(c))) {
      audit.reasons.push_back(std::string(name) + " not PSD");
    }
  };
  check_psd(c1, "c1");
  check_psd(c2, "c2");
  if (max_abs(c1 - c2 - spec.choi()) > tol.recon_threshold(norm_estimate(spec.choi()))) {
    audit.reasons.push_back("c1 - c2 differs from the Choi matrix");
  }
  audit.valid = audit.reasons.empty();

  if (audit.valid) {
    const ComplexMatrix excess = c2 - parts.c_minus;
    const auto margin = checked_lambda_min(excess, tol);
    audit.loewner_margin = margin.value_or(-std::numeric_limits<double>::infinity());
    audit.loewner_minimal = margin && *margin >= -tol.psd_threshold(norm_estimate(excess));
    if (!audit.loewner_minimal) audit.reasons.push_back("c2 does not dominate c_minus");
    if (!audit.satisfied) audit.reasons.push_back("hs_norm(c2) below sqrt(k) * dcp");
  }
  return audit;
}

}  // namespace hermap
