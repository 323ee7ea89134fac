// Copyright 2026 The modlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "modlp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "modlp/errors.hpp"

namespace modlp {

std::string kind_name(FileKind k) {
  switch (k) {
    case FileKind::matrix: return "matrix";
    case FileKind::state: return "state";
    case FileKind::functional: return "functional";
    case FileKind::channel: return "channel";
  }
  throw DomainViolationError("kind_name: unknown kind tag");
}

FileKind kind_from_name(const std::string& name) {
  if (name == "matrix") return FileKind::matrix;
  if (name == "state") return FileKind::state;
  if (name == "functional") return FileKind::functional;
  if (name == "channel") return FileKind::channel;
  throw ParseError("unknown file kind \"" + name + "\"");
}

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

CMat parse_matrix_entry(const nlohmann::json& rows, int n_rows, int n_cols, const char* what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n_rows) {
    throw ParseError(std::string(what) + ": expected " + std::to_string(n_rows) + " rows");
  }
  CMat m(n_rows, n_cols);
  for (int i = 0; i < n_rows; ++i) {
    const nlohmann::json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n_cols) {
      throw ParseError(std::string(what) + ": expected " + std::to_string(n_cols) +
                       " entries per row");
    }
    for (int j = 0; j < n_cols; ++j) {
      const nlohmann::json& entry = row[static_cast<std::size_t>(j)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw ParseError(std::string(what) + ": entries must be [re, im] number pairs");
      }
      m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

void append_matrix(std::string& out, const CMat& m) {
  out += '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += '[';
      out += format_double(m(i, j).real());
      out += ',';
      out += format_double(m(i, j).imag());
      out += ']';
    }
    out += ']';
  }
  out += ']';
}

}  // namespace

std::string matrix_json(const CMat& m) {
  std::string out;
  append_matrix(out, m);
  return out;
}

MatrixFile parse_matrix_file(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("matrix file: top level must be an object");
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("matrix file: missing string field \"kind\"");
  }
  MatrixFile file;
  file.kind = kind_from_name(j["kind"].get<std::string>());
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("matrix file: missing integer field \"dim\"");
  }
  file.dim = j["dim"].get<int>();
  if (file.dim < 1) throw ParseError("matrix file: dim must be >= 1");
  bool is_channel = file.kind == FileKind::channel;
  if (is_channel) {
    if (!j.contains("dim_out") || !j["dim_out"].is_number_integer()) {
      throw ParseError("matrix file: channels need an integer field \"dim_out\"");
    }
    file.dim_out = j["dim_out"].get<int>();
    if (file.dim_out < 1) throw ParseError("matrix file: dim_out must be >= 1");
  } else {
    if (j.contains("dim_out")) {
      throw ParseError("matrix file: \"dim_out\" is only valid for kind \"channel\"");
    }
    file.dim_out = file.dim;
  }
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "kind" && key != "dim" && key != "dim_out" && key != "data") {
      throw ParseError("matrix file: unknown key \"" + key + "\"");
    }
  }
  if (!j.contains("data")) throw ParseError("matrix file: missing field \"data\"");
  const nlohmann::json& data = j["data"];
  if (is_channel) {
    if (!data.is_array() || data.empty()) {
      throw ParseError("matrix file: channel data must be a nonempty array of matrices");
    }
    for (const auto& entry : data) {
      file.data.push_back(parse_matrix_entry(entry, file.dim_out, file.dim, "matrix file data"));
    }
  } else {
    file.data.push_back(parse_matrix_entry(data, file.dim, file.dim, "matrix file data"));
    if (file.kind == FileKind::state) {
      double tr = file.data[0].trace().real();
      double im = file.data[0].trace().imag();
      if (std::abs(tr - 1.0) > 1e-9 || std::abs(im) > 1e-9) {
        throw NotAStateError("matrix file: kind \"state\" must have trace 1 within 1e-9");
      }
    }
  }
  return file;
}

std::string serialize_matrix_file(const MatrixFile& file) {
  std::string out = "{\"kind\":\"";
  out += kind_name(file.kind);
  out += "\",\"dim\":";
  out += std::to_string(file.dim);
  if (file.kind == FileKind::channel) {
    out += ",\"dim_out\":";
    out += std::to_string(file.dim_out);
  }
  out += ",\"data\":";
  if (file.kind == FileKind::channel) {
    out += '[';
    for (std::size_t i = 0; i < file.data.size(); ++i) {
      if (i > 0) out += ',';
      append_matrix(out, file.data[i]);
    }
    out += ']';
  } else {
    if (file.data.size() != 1) {
      throw DomainViolationError("serialize_matrix_file: non-channel kinds hold one matrix");
    }
    append_matrix(out, file.data[0]);
  }
  out += "}\n";
  return out;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_file(buf.str());
}

void write_matrix_file(const std::string& path, const MatrixFile& file) {
  std::string text = serialize_matrix_file(file);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file \"" + path + "\" for writing");
  out << text;
  if (!out) throw ParseError("failed while writing \"" + path + "\"");
}

}  // namespace modlp
