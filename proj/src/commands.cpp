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

#include "hermap/commands.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hermap/jordan.hpp"

namespace hermap {

using nlohmann::json;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"choi", "analyze", "jordan", "approx", "kraus",
                                                 "extend", "reduce", "audit", "verify"};
  return names;
}

namespace {

std::vector<Index> parse_sizes(const std::string& text) {
  std::vector<Index> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ArgumentError("partition: '" + item + "' is not an integer");
    }
    if (used != item.size() || v < 1) throw ArgumentError("partition: '" + item + "' is not a positive integer");
    sizes.push_back(static_cast<Index>(v));
  }
  return sizes;
}

json vector_json(const RealVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json q_diagonal(const CpExtension& ext) {
  json out = json::array();
  for (Index i = 0; i < ext.k; ++i) out.push_back(ext.q(i, i).real());
  return out;
}

json extension_json(const CpExtension& ext) {
  json terms = json::array();
  for (const auto& t : ext.terms) {
    terms.push_back({{"magnitude", t.magnitude}, {"sign", t.sign}, {"aux_index", t.aux},
                     {"operator", matrix_to_json(t.op)}});
  }
  return {{"m", ext.m}, {"n", ext.n}, {"k", ext.k}, {"q_diag", q_diagonal(ext)}, {"terms", std::move(terms)}};
}

json partition_json(const BlockPartition& p) { return {{"input_sizes", p.input_sizes}, {"output_sizes", p.output_sizes}}; }

json analyze(const MapSpec& spec, const ToleranceConfig& tol) {
  const auto herm = is_hermitian_preserving(spec, tol);
  json report = {{"is_hermitian", herm.hermitian}, {"max_asymmetry", herm.max_asymmetry},
                 {"hs_norm", hs_norm_of_map(spec)}};
  if (!herm.hermitian) {
    throw DomainError("analyze: map is not Hermitian-preserving (max |C - C*| = " + std::to_string(herm.max_asymmetry) + ")");
  }
  const auto parts = jordan_decompose(spec, tol);
  const auto cp = is_cp(spec, tol);
  report["eigenvalues"] = vector_json(parts.spectrum.eigenvalues);
  report["lambda_min"] = parts.spectrum.lambda_min();
  report["rank"] = parts.spectrum.rank();
  report["dcp"] = parts.dcp;
  report["multiplicity_k"] = parts.multiplicity_k ? json(*parts.multiplicity_k) : json(nullptr);
  report["bound"] = parts.bound;
  report["hs_minus"] = parts.hs_minus;
  report["is_cp"] = cp.cp;
  return report;
}

ComplexMatrix random_matrix(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix x(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) x(i, j) = Complex(normal(rng), normal(rng));
  }
  return x;
}

json dispatch(const std::string& command, const MapDocument& doc, const CommandOptions& options,
              const ToleranceConfig& tol, int& exit_code) {
  const MapSpec& spec = doc.spec;
  if (command == "choi") {
    const auto herm = is_hermitian_preserving(spec, tol);
    json out = spec_to_json(spec);
    out["is_hermitian"] = herm.hermitian;
    out["max_asymmetry"] = herm.max_asymmetry;
    return out;
  }
  if (command == "analyze") return analyze(spec, tol);
  if (command == "jordan") {
    const auto parts = jordan_decompose(spec, tol);
    return {{"c_plus", matrix_to_json(parts.c_plus)},
            {"c_minus", matrix_to_json(parts.c_minus)},
            {"eigenvalues", vector_json(parts.spectrum.eigenvalues)},
            {"dcp", parts.dcp},
            {"multiplicity_k", parts.multiplicity_k ? json(*parts.multiplicity_k) : json(nullptr)},
            {"bound", parts.bound},
            {"hs_minus", parts.hs_minus}};
  }
  if (command == "approx") {
    const auto approx = best_cp_approximation(spec, tol);
    return {{"approximation", spec_to_json(approx.map)}, {"distance", approx.distance}};
  }
  if (command == "kraus") {
    json terms = json::array();
    for (const auto& t : kraus_terms(spec, tol)) terms.push_back({{"weight", t.weight}, {"operator", matrix_to_json(t.op)}});
    return {{"m", spec.m()}, {"n", spec.n()}, {"terms", std::move(terms)}};
  }
  if (command == "extend") {
    json out = extension_json(build_extension(spec, tol));
    out["rank"] = out["k"];
    return out;
  }
  if (command == "reduce") {
    const BlockPartition partition =
        options.partition ? parse_partition(*options.partition) : detect_block_partition(spec, tol);
    const CpExtension ext = block_reduce(spec, partition, tol);
    json ranks = json::array();
    Index total = 0, max_rank = 0;
    for (Index b = 0; b < partition.blocks(); ++b) {
      const Index r = hermitian_eig(sub_choi(spec, partition, b).choi(), tol).rank();
      ranks.push_back(r);
      total += r;
      max_rank = std::max(max_rank, r);
    }
    json out = extension_json(ext);
    out["partition"] = partition_json(partition);
    out["block_ranks"] = std::move(ranks);
    out["rank"] = total;
    out["max_block_rank"] = max_rank;
    return out;
  }
  if (command == "audit") {
    ComplexMatrix c1, c2;
    if (doc.c1 && doc.c2) {
      c1 = *doc.c1;
      c2 = *doc.c2;
    } else if (!doc.c1 && !doc.c2) {
      const auto parts = jordan_decompose(spec, tol);
      c1 = parts.c_plus;
      c2 = parts.c_minus;
    } else {
      throw ArgumentError("audit: provide both c1 and c2, or neither");
    }
    const auto a = audit_decomposition(spec, c1, c2, tol);
    return {{"valid", a.valid},       {"reasons", a.reasons}, {"hs_c2", a.hs_c2},
            {"bound", a.bound},       {"satisfied", a.satisfied}, {"gap", a.gap},
            {"loewner_minimal", a.loewner_minimal}, {"loewner_margin", a.loewner_margin}};
  }
  if (command == "verify") {
    if (options.samples < 1) throw ArgumentError("verify: --samples must be positive");
    const CpExtension ext =
        options.partition ? block_reduce(spec, parse_partition(*options.partition), tol) : build_extension(spec, tol);
    std::mt19937_64 rng(options.seed);
    double max_error = 0.0;
    for (int s = 0; s < options.samples; ++s) {
      const ComplexMatrix x = random_matrix(spec.m(), spec.m(), rng);
      max_error = std::max(max_error, max_abs(apply_extension(ext, x) - apply_via_choi(spec, x)));
    }
    const double limit = tol.recon_threshold(norm_estimate(spec.choi()));
    const bool passed = max_error <= limit;
    if (!passed) exit_code = kExitVerifyFailed;
    return {{"k", ext.k},         {"samples", options.samples}, {"seed", options.seed},
            {"max_error", max_error}, {"tolerance", limit},     {"passed", passed}};
  }
  throw std::logic_error("unreachable");
}

json error_report(const char* kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

BlockPartition parse_partition(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos || text.find('/', slash + 1) != std::string::npos) {
    throw ArgumentError("partition: expected 'm1,m2,.../n1,n2,...', got '" + text + "'");
  }
  return {parse_sizes(text.substr(0, slash)), parse_sizes(text.substr(slash + 1))};
}

ToleranceConfig effective_tolerance(const MapDocument& doc, const CommandOptions& options) {
  ToleranceConfig tol = doc.tol;
  if (options.tol) tol = ToleranceConfig::uniform(*options.tol);
  if (options.tol_eig || options.tol_psd || options.tol_recon) tol.scale_by_norm = false;
  if (options.tol_eig) tol.eig_zero = *options.tol_eig;
  if (options.tol_psd) tol.psd_slack = *options.tol_psd;
  if (options.tol_recon) tol.recon = *options.tol_recon;
  tol.validate();
  return tol;
}

CommandResult run_command(const std::string& command, const MapDocument& doc, const CommandOptions& options) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    return {kExitUsage, error_report("usage", "unknown command '" + command + "'")};
  }
  CommandResult result;
  try {
    const ToleranceConfig tol = effective_tolerance(doc, options);
    result.report = dispatch(command, doc, options, tol, result.exit_code);
  } catch (const DomainError& e) {
    result = {kExitDomain, error_report("domain", e.what())};
  } catch (const NumericError& e) {
    result = {kExitDomain, error_report("numeric", e.what())};
  } catch (const ArgumentError& e) {
    result = {kExitUsage, error_report("argument", e.what())};
  }
  return result;
}

}  // namespace hermap
