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

#ifndef MODLP_IO_HPP
#define MODLP_IO_HPP

#include <string>
#include <vector>

#include "modlp/matrix_ops.hpp"

namespace modlp {

// JSON matrix container, UTF-8. Complex entries are [re, im] pairs; floats
// are written with 17 significant digits so write -> read -> write is
// byte-identical.
//
//   {"kind": "matrix" | "state" | "functional", "dim": d,
//    "data": [[[re,im], ...], ...]}                        (one d x d matrix)
//   {"kind": "channel", "dim": d_in, "dim_out": d_out,
//    "data": [K_1, K_2, ...]}                     (each K_i d_out x d_in)
//
// Loading validates shape against the declared dims (ParseError) and, for
// kind "state", trace 1 within 1e-9 (NotAStateError).

enum class FileKind { matrix, state, functional, channel };

std::string kind_name(FileKind k);
FileKind kind_from_name(const std::string& name);

struct MatrixFile {
  FileKind kind = FileKind::matrix;
  int dim = 0;
  int dim_out = 0;  // channels only; otherwise equal to dim
  std::vector<CMat> data;
};

MatrixFile parse_matrix_file(const std::string& json_text);
std::string serialize_matrix_file(const MatrixFile& file);

MatrixFile read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const MatrixFile& file);

/// 17-significant-digit decimal rendering used by every text output; exact
/// on round-trip. Infinities render as "inf" / "-inf".
std::string format_double(double x);

/// Nested-array JSON encoding of one matrix, entries as [re, im] pairs; the
/// same encoding the MatrixFile "data" field uses.
std::string matrix_json(const CMat& m);

}  // namespace modlp

#endif  // MODLP_IO_HPP
