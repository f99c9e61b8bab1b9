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

#ifndef _AGQ_ERROR_H
#define _AGQ_ERROR_H

#include <stdexcept>
#include <string>

namespace agq {

enum class ErrorKind {
    InvalidArgument,
    NotPrime,
    FieldTooLarge,
    NoConwayEntry,
    NotInBaseField,
    ZeroInput,
    DivisibilityViolated,
    TooManyCosets,
    LeaderNotInV,
    CosetSearchExhausted,
    AnchorInSubfield,
    NotNormValue,
    BadCharacteristic,
    BadTraceConstant,
    GcdConditionViolated,
    UnsupportedFamily,
    EmptyFiber,
    RankDefect,
    PoleAtPoint,
    CapExceeded,
    GramNonzero,
    EmbeddingRejected,
    DistanceNotExact,
    ParseError,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind kind, const std::string &message);
};

}  // namespace agq

#endif
