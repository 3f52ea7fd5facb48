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

#include "hermap/extend.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace hermap {

std::vector<KrausTerm> kraus_terms(const MapSpec& spec, const ToleranceConfig& tol) {
  require_hermitian(spec, tol, "kraus_terms");
  const auto eig = hermitian_eig(spec.choi(), tol);
  std::vector<KrausTerm> terms;
  for (Index i = 0; i < eig.size(); ++i) {
    const double lam = eig.eigenvalues(i);
    if (std::abs(lam) <= eig.zero_tol) continue;
    terms.push_back({lam, unvec(eig.eigenvectors.col(i), spec.n(), spec.m())});
  }
  return terms;
}

ComplexMatrix apply_kraus(const std::vector<KrausTerm>& terms, const ComplexMatrix& x) {
  if (terms.empty()) throw ArgumentError("apply_kraus: no terms; output dimension unknown");
  ComplexMatrix out = ComplexMatrix::Zero(terms.front().op.rows(), terms.front().op.rows());
  for (const auto& t : terms) out += t.weight * (t.op * x * t.op.adjoint());
  return out;
}

namespace {

ComplexMatrix sign_matrix(const std::vector<int>& signs) {
  ComplexMatrix q = ComplexMatrix::Zero(static_cast<Index>(signs.size()), static_cast<Index>(signs.size()));
  for (std::size_t i = 0; i < signs.size(); ++i) q(static_cast<Index>(i), static_cast<Index>(i)) = signs[i];
  return q;
}

void require_input(const CpExtension& ext, const ComplexMatrix& x, const char* what) {
  if (x.rows() != ext.m || x.cols() != ext.m) {
    throw ArgumentError(std::string(what) + ": input must be " + std::to_string(ext.m) + "x" + std::to_string(ext.m));
  }
}

// Offsets of each block along one side of the partition.
std::vector<Index> offsets(const std::vector<Index>& sizes) {
  std::vector<Index> off(sizes.size(), 0);
  for (std::size_t b = 1; b < sizes.size(); ++b) off[b] = off[b - 1] + sizes[b - 1];
  return off;
}

std::vector<Index> block_of(const std::vector<Index>& sizes) {
  std::vector<Index> label;
  for (std::size_t b = 0; b < sizes.size(); ++b) label.insert(label.end(), static_cast<std::size_t>(sizes[b]), static_cast<Index>(b));
  return label;
}

struct BlockSpectrum {
  std::vector<KrausTerm> positive;  // descending
  std::vector<KrausTerm> negative;  // descending
};

// Per-block Kraus terms with operators zero-padded to the full n x m shape.
std::vector<BlockSpectrum> block_spectra(const MapSpec& spec, const BlockPartition& partition,
                                         const ToleranceConfig& tol) {
  const auto in_off = offsets(partition.input_sizes);
  const auto out_off = offsets(partition.output_sizes);
  std::vector<BlockSpectrum> spectra;
  for (Index b = 0; b < partition.blocks(); ++b) {
    const std::size_t ub = static_cast<std::size_t>(b);
    BlockSpectrum bs;
    for (auto& t : kraus_terms(sub_choi(spec, partition, b), tol)) {
      ComplexMatrix full = ComplexMatrix::Zero(spec.n(), spec.m());
      full.block(out_off[ub], in_off[ub], t.op.rows(), t.op.cols()) = t.op;
      (t.weight > 0 ? bs.positive : bs.negative).push_back({t.weight, std::move(full)});
    }
    spectra.push_back(std::move(bs));
  }
  return spectra;
}

void require_block_diagonal(const MapSpec& spec, const BlockPartition& partition, const ToleranceConfig& tol) {
  const auto in_block = block_of(partition.input_sizes);
  const auto out_block = block_of(partition.output_sizes);
  const Index n = spec.n();
  const auto& c = spec.choi();
  // Combined index (a, c) belongs to a block only when input and output agree.
  auto label = [&](Index idx) {
    const Index a = in_block[static_cast<std::size_t>(idx / n)];
    const Index o = out_block[static_cast<std::size_t>(idx % n)];
    return std::pair{a, o};
  };
  const double thr = tol.recon_threshold(norm_estimate(c));
  double worst = 0.0;
  std::pair<Index, Index> worst_row{}, worst_col{};
  for (Index r = 0; r < c.rows(); ++r) {
    for (Index s = 0; s < c.cols(); ++s) {
      const double mag = std::abs(c(r, s));
      if (mag <= thr || mag <= worst) continue;
      const auto lr = label(r);
      const auto ls = label(s);
      if (lr.first == lr.second && lr == ls) continue;
      worst = mag;
      worst_row = lr;
      worst_col = ls;
    }
  }
  if (worst > 0.0) {
    std::ostringstream msg;
    msg << "block_reduce: Choi matrix is not block-diagonal for this partition; entry of magnitude " << worst
        << " couples (input block " << worst_row.first << ", output block " << worst_row.second << ") to (input block "
        << worst_col.first << ", output block " << worst_col.second << ")";
    throw DomainError(msg.str());
  }
}

}  // namespace

CpExtension build_extension(const MapSpec& spec, const ToleranceConfig& tol) {
  auto terms = kraus_terms(spec, tol);
  if (terms.empty()) throw DomainError("build_extension: rank 0; extension trivial/undefined");
  CpExtension ext{spec.m(), spec.n(), static_cast<Index>(terms.size()), {}, {}};
  std::vector<int> signs;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const int s = terms[i].weight > 0 ? 1 : -1;
    ext.terms.push_back({std::abs(terms[i].weight), std::move(terms[i].op), static_cast<Index>(i), s});
    signs.push_back(s);
  }
  ext.q = sign_matrix(signs);
  return ext;
}

ComplexMatrix apply_dilation(const CpExtension& ext, const ComplexMatrix& y) {
  const Index k = ext.k;
  if (y.rows() != ext.m * k || y.cols() != ext.m * k) {
    throw ArgumentError("apply_dilation: input must be square of side " + std::to_string(ext.m * k));
  }
  ComplexMatrix out = ComplexMatrix::Zero(ext.n * k, ext.n * k);
  for (const auto& t : ext.terms) {
    const ComplexMatrix kraus = kron(t.op, matrix_unit(k, t.aux, t.aux));
    out += t.magnitude * (kraus * y * kraus.adjoint());
  }
  return out;
}

ComplexMatrix apply_extension(const CpExtension& ext, const ComplexMatrix& x) {
  require_input(ext, x, "apply_extension");
  const Index k = ext.k;
  const ComplexMatrix lifted = apply_dilation(ext, kron(x, ComplexMatrix::Identity(k, k)));
  const ComplexMatrix weighted = lifted * kron(ComplexMatrix::Identity(ext.n, ext.n), ext.q);
  return partial_trace_second(weighted, ext.n, k);
}

ComplexMatrix apply_extension_fast(const CpExtension& ext, const ComplexMatrix& x) {
  require_input(ext, x, "apply_extension_fast");
  ComplexMatrix out = ComplexMatrix::Zero(ext.n, ext.n);
  for (const auto& t : ext.terms) out += (t.magnitude * ext.q(t.aux, t.aux)) * (t.op * x * t.op.adjoint());
  return out;
}

MapSpec dilation_choi(const CpExtension& ext) {
  return choi_from_action(MapAction::from_function(ext.m * ext.k, ext.n * ext.k,
                                                   [&](const ComplexMatrix& y) { return apply_dilation(ext, y); }));
}

bool sign_consistent(const CpExtension& ext) {
  if (ext.q.rows() != ext.k || ext.q.cols() != ext.k) return false;
  for (Index i = 0; i < ext.k; ++i) {
    for (Index j = 0; j < ext.k; ++j) {
      const Complex v = ext.q(i, j);
      if (v.imag() != 0.0) return false;
      if (i != j && v.real() != 0.0) return false;
      if (i == j && v.real() != 0.0 && v.real() != 1.0 && v.real() != -1.0) return false;
    }
  }
  return std::all_of(ext.terms.begin(), ext.terms.end(), [&](const ExtensionTerm& t) {
    return t.magnitude > 0.0 && t.aux >= 0 && t.aux < ext.k && ext.q(t.aux, t.aux).real() == t.sign;
  });
}

void validate_partition(const MapSpec& spec, const BlockPartition& partition) {
  const auto& in = partition.input_sizes;
  const auto& out = partition.output_sizes;
  if (in.empty() || in.size() != out.size()) {
    throw ArgumentError("partition: input and output block counts must match and be positive");
  }
  const auto positive = [](Index s) { return s > 0; };
  if (!std::all_of(in.begin(), in.end(), positive) || !std::all_of(out.begin(), out.end(), positive)) {
    throw ArgumentError("partition: block sizes must be positive");
  }
  const Index sum_in = std::accumulate(in.begin(), in.end(), Index{0});
  const Index sum_out = std::accumulate(out.begin(), out.end(), Index{0});
  if (sum_in != spec.m() || sum_out != spec.n()) {
    throw ArgumentError("partition: sizes sum to " + std::to_string(sum_in) + "/" + std::to_string(sum_out) +
                        ", map is " + std::to_string(spec.m()) + "/" + std::to_string(spec.n()));
  }
}

MapSpec sub_choi(const MapSpec& spec, const BlockPartition& partition, Index block) {
  validate_partition(spec, partition);
  if (block < 0 || block >= partition.blocks()) throw ArgumentError("sub_choi: block index out of range");
  const std::size_t ub = static_cast<std::size_t>(block);
  const Index mb = partition.input_sizes[ub];
  const Index nb = partition.output_sizes[ub];
  const Index in0 = offsets(partition.input_sizes)[ub];
  const Index out0 = offsets(partition.output_sizes)[ub];
  const Index n = spec.n();
  ComplexMatrix local(mb * nb, mb * nb);
  for (Index a = 0; a < mb; ++a) {
    for (Index c = 0; c < nb; ++c) {
      for (Index b = 0; b < mb; ++b) {
        for (Index d = 0; d < nb; ++d) {
          local(a * nb + c, b * nb + d) = spec.choi()((in0 + a) * n + out0 + c, (in0 + b) * n + out0 + d);
        }
      }
    }
  }
  return MapSpec(mb, nb, std::move(local));
}

CpExtension block_reduce(const MapSpec& spec, const BlockPartition& partition, const ToleranceConfig& tol) {
  validate_partition(spec, partition);
  require_hermitian(spec, tol, "block_reduce");
  require_block_diagonal(spec, partition, tol);
  auto spectra = block_spectra(spec, partition, tol);

  std::size_t max_pos = 0, max_neg = 0;
  for (const auto& bs : spectra) {
    max_pos = std::max(max_pos, bs.positive.size());
    max_neg = std::max(max_neg, bs.negative.size());
  }
  if (max_pos + max_neg == 0) throw DomainError("block_reduce: rank 0; extension trivial/undefined");

  CpExtension ext{spec.m(), spec.n(), static_cast<Index>(max_pos + max_neg), {}, {}};
  for (auto& bs : spectra) {
    for (std::size_t j = 0; j < bs.positive.size(); ++j) {
      ext.terms.push_back({bs.positive[j].weight, std::move(bs.positive[j].op), static_cast<Index>(j), 1});
    }
    for (std::size_t j = 0; j < bs.negative.size(); ++j) {
      ext.terms.push_back({-bs.negative[j].weight, std::move(bs.negative[j].op), static_cast<Index>(max_pos + j), -1});
    }
  }
  std::vector<int> signs(max_pos, 1);
  signs.insert(signs.end(), max_neg, -1);
  ext.q = sign_matrix(signs);
  return ext;
}

CpExtension shared_index_extension(const MapSpec& spec, const BlockPartition& partition, const ToleranceConfig& tol) {
  validate_partition(spec, partition);
  require_hermitian(spec, tol, "shared_index_extension");
  require_block_diagonal(spec, partition, tol);
  auto spectra = block_spectra(spec, partition, tol);

  CpExtension ext{spec.m(), spec.n(), 0, {}, {}};
  std::vector<int> q_diag;
  for (auto& bs : spectra) {
    // Descending order within the block, as in its own unreduced extension.
    std::vector<KrausTerm> ordered = std::move(bs.positive);
    for (auto& t : bs.negative) ordered.push_back(std::move(t));
    if (q_diag.size() < ordered.size()) q_diag.resize(ordered.size(), 0);
    for (std::size_t j = 0; j < ordered.size(); ++j) {
      const int s = ordered[j].weight > 0 ? 1 : -1;
      q_diag[j] += s;
      ext.terms.push_back({std::abs(ordered[j].weight), std::move(ordered[j].op), static_cast<Index>(j), s});
    }
  }
  if (q_diag.empty()) throw DomainError("shared_index_extension: rank 0; extension trivial/undefined");
  ext.k = static_cast<Index>(q_diag.size());
  ext.q = sign_matrix(q_diag);
  return ext;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

struct Hull {
  Index in_lo, in_hi, out_lo, out_hi;  // inclusive
};

bool strictly_before(const Hull& a, const Hull& b) { return a.in_hi < b.in_lo && a.out_hi < b.out_lo; }

}  // namespace

BlockPartition detect_block_partition(const MapSpec& spec, const ToleranceConfig& tol) {
  require_hermitian(spec, tol, "detect_block_partition");
  const Index m = spec.m();
  const Index n = spec.n();
  const auto& c = spec.choi();
  const double thr = tol.recon_threshold(norm_estimate(c));

  // Nodes 0..m-1 are input indices, m..m+n-1 output indices.
  DisjointSets sets(static_cast<std::size_t>(m + n));
  const auto touched = [&](Index idx) {
    sets.unite(static_cast<std::size_t>(idx / n), static_cast<std::size_t>(m + idx % n));
  };
  for (Index r = 0; r < c.rows(); ++r) {
    for (Index s = 0; s < c.cols(); ++s) {
      if (std::abs(c(r, s)) <= thr) continue;
      touched(r);
      touched(s);
      sets.unite(static_cast<std::size_t>(r / n), static_cast<std::size_t>(s / n));
    }
  }

  // Interval hulls of components reaching both sides, merged until they are
  // disjoint and ordered consistently on inputs and outputs.
  std::vector<Hull> hulls;
  {
    std::vector<std::optional<Hull>> by_root(static_cast<std::size_t>(m + n));
    std::vector<bool> has_in(by_root.size(), false), has_out(by_root.size(), false);
    for (Index v = 0; v < m + n; ++v) {
      const std::size_t root = sets.find(static_cast<std::size_t>(v));
      auto& h = by_root[root];
      if (!h) h = Hull{m, -1, n, -1};
      if (v < m) {
        h->in_lo = std::min(h->in_lo, v);
        h->in_hi = std::max(h->in_hi, v);
        has_in[root] = true;
      } else {
        h->out_lo = std::min(h->out_lo, v - m);
        h->out_hi = std::max(h->out_hi, v - m);
        has_out[root] = true;
      }
    }
    for (std::size_t root = 0; root < by_root.size(); ++root) {
      if (by_root[root] && has_in[root] && has_out[root]) hulls.push_back(*by_root[root]);
    }
  }
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < hulls.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < hulls.size() && !merged; ++j) {
        if (strictly_before(hulls[i], hulls[j]) || strictly_before(hulls[j], hulls[i])) continue;
        hulls[i] = {std::min(hulls[i].in_lo, hulls[j].in_lo), std::max(hulls[i].in_hi, hulls[j].in_hi),
                    std::min(hulls[i].out_lo, hulls[j].out_lo), std::max(hulls[i].out_hi, hulls[j].out_hi)};
        hulls.erase(hulls.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
      }
    }
  }
  std::sort(hulls.begin(), hulls.end(), [](const Hull& a, const Hull& b) { return a.in_lo < b.in_lo; });

  // Indices outside every hull are uncoupled. Within each gap they pair up
  // into 1/1 blocks; leftovers on one side join the neighbouring block.
  BlockPartition out;
  Index pending_in = 0, pending_out = 0;
  const auto push = [&](Index in, Index outs) {
    out.input_sizes.push_back(in + pending_in);
    out.output_sizes.push_back(outs + pending_out);
    pending_in = pending_out = 0;
  };
  Index next_in = 0, next_out = 0;
  for (std::size_t t = 0; t <= hulls.size(); ++t) {
    const Index gap_in = (t < hulls.size() ? hulls[t].in_lo : m) - next_in;
    const Index gap_out = (t < hulls.size() ? hulls[t].out_lo : n) - next_out;
    const Index pairs = std::min(gap_in, gap_out);
    const Index left_in = gap_in - pairs;
    const Index left_out = gap_out - pairs;
    if (!out.input_sizes.empty()) {
      out.input_sizes.back() += left_in;
      out.output_sizes.back() += left_out;
      for (Index p = 0; p < pairs; ++p) push(1, 1);
    } else {
      for (Index p = 0; p < pairs; ++p) push(1, 1);
      pending_in += left_in;
      pending_out += left_out;
    }
    if (t < hulls.size()) {
      push(hulls[t].in_hi - hulls[t].in_lo + 1, hulls[t].out_hi - hulls[t].out_lo + 1);
      next_in = hulls[t].in_hi + 1;
      next_out = hulls[t].out_hi + 1;
    }
  }
  if (pending_in + pending_out > 0) {
    out.input_sizes.back() += pending_in;
    out.output_sizes.back() += pending_out;
  }
  return out;
}

}  // namespace hermap
