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

#include "hermap/io.hpp"

#include "hermap/builtins.hpp"

namespace hermap {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& a) {
  json re = json::array();
  json im = json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (Index j = 0; j < a.cols(); ++j) {
      re_row.push_back(a(i, j).real());
      im_row.push_back(a(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

namespace {

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path.empty() ? "/" : path, "expected an object");
  if (!obj.contains(key)) throw ParseError(path + "/" + key, "missing required member");
  return obj.at(key);
}

Index positive_int(const json& obj, const char* key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ParseError(path + "/" + key, "expected a positive integer");
  }
  return v.get<Index>();
}

ComplexMatrix::Index rows_of(const json& part, const std::string& path) {
  if (!part.is_array() || part.empty()) throw ParseError(path, "expected a non-empty array of rows");
  return static_cast<Index>(part.size());
}

double tolerance_value(const json& tol, const char* key, double fallback, const std::string& path) {
  if (!tol.contains(key)) return fallback;
  const json& v = tol.at(key);
  if (!v.is_number() || v.get<double>() < 0.0) throw ParseError(path + "/" + key, "expected a non-negative number");
  return v.get<double>();
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j, const std::string& path) {
  const json& re = member(j, "re", path);
  const json& im = member(j, "im", path);
  const Index rows = rows_of(re, path + "/re");
  if (rows_of(im, path + "/im") != rows) throw ParseError(path + "/im", "row count differs from re");
  Index cols = -1;
  ComplexMatrix out;
  for (Index i = 0; i < rows; ++i) {
    const std::string ri = "/" + std::to_string(i);
    const json& re_row = re.at(static_cast<std::size_t>(i));
    const json& im_row = im.at(static_cast<std::size_t>(i));
    if (!re_row.is_array() || re_row.empty()) throw ParseError(path + "/re" + ri, "expected a non-empty array");
    if (!im_row.is_array()) throw ParseError(path + "/im" + ri, "expected an array");
    if (cols < 0) {
      cols = static_cast<Index>(re_row.size());
      out.resize(rows, cols);
    }
    if (static_cast<Index>(re_row.size()) != cols) throw ParseError(path + "/re" + ri, "ragged row");
    if (static_cast<Index>(im_row.size()) != cols) throw ParseError(path + "/im" + ri, "row length differs from re");
    for (Index c = 0; c < cols; ++c) {
      const json& x = re_row.at(static_cast<std::size_t>(c));
      const json& y = im_row.at(static_cast<std::size_t>(c));
      if (!x.is_number()) throw ParseError(path + "/re" + ri + "/" + std::to_string(c), "expected a number");
      if (!y.is_number()) throw ParseError(path + "/im" + ri + "/" + std::to_string(c), "expected a number");
      out(i, c) = Complex(x.get<double>(), y.get<double>());
    }
  }
  return out;
}

json spec_to_json(const MapSpec& spec) {
  return {{"m", spec.m()}, {"n", spec.n()}, {"choi", matrix_to_json(spec.choi())}};
}

MapDocument map_document_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("/", "expected an object");
  const Index m = positive_int(doc, "m", "");
  const Index n = positive_int(doc, "n", "");
  const bool has_choi = doc.contains("choi");
  const bool has_builtin = doc.contains("builtin");
  if (has_choi == has_builtin) throw ParseError("/", "exactly one of 'choi' or 'builtin' is required");

  std::optional<MapSpec> spec;
  if (has_choi) {
    ComplexMatrix c = matrix_from_json(doc.at("choi"), "/choi");
    if (c.rows() != m * n || c.cols() != m * n) {
      throw ArgumentError("/choi: matrix is " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()) +
                          ", expected side m*n = " + std::to_string(m * n));
    }
    spec.emplace(m, n, std::move(c));
  } else {
    const json& b = doc.at("builtin");
    const json& name = member(b, "name", "/builtin");
    if (!name.is_string()) throw ParseError("/builtin/name", "expected a string");
    spec.emplace(make_builtin(name.get<std::string>(), b, m, n));
  }

  MapDocument out{std::move(*spec), {}, std::nullopt, std::nullopt};
  if (doc.contains("tol")) {
    const json& t = doc.at("tol");
    if (!t.is_object()) throw ParseError("/tol", "expected an object");
    out.tol.eig_zero = tolerance_value(t, "eig_zero", out.tol.eig_zero, "/tol");
    out.tol.psd_slack = tolerance_value(t, "psd_slack", out.tol.psd_slack, "/tol");
    out.tol.recon = tolerance_value(t, "recon", out.tol.recon, "/tol");
  }
  if (doc.contains("c1")) out.c1 = matrix_from_json(doc.at("c1"), "/c1");
  if (doc.contains("c2")) out.c2 = matrix_from_json(doc.at("c2"), "/c2");
  return out;
}

MapDocument parse_map_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("/", std::string("invalid JSON: ") + e.what());
  }
  return map_document_from_json(doc);
}

}  // namespace hermap
