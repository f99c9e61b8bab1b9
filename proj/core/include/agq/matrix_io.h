// Copyright 2026 The agq Authors
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

#ifndef _AGQ_MATRIX_IO_H
#define _AGQ_MATRIX_IO_H

#include <iosfwd>
#include <string>

#include "agq/codes.h"
#include "agq/field.h"

namespace agq {

/// A generator matrix read from text, together with the field named in its
/// header line `q2=<p>^<2m> n=<n> k=<k>`.
struct MatrixFile {
    Field field;
    Matrix G;
};

/// With `systematic_prefix` each row holds n-k entries and I_k is prepended.
/// Throws ParseError with a line and column.
MatrixFile read_matrix(std::istream &in, bool systematic_prefix = false);
MatrixFile read_matrix_file(const std::string &path, bool systematic_prefix = false);

/// Canonical form: header, then rows of single-space separated tokens.
/// Prime-field elements are written as integers, the rest as `t^e`.
std::string write_matrix(const Field &f, const Matrix &G);

}  // namespace agq

#endif
