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

#include "agq/error.h"

using namespace agq;

const char *agq::error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::NotPrime:
            return "NotPrime";
        case ErrorKind::FieldTooLarge:
            return "FieldTooLarge";
        case ErrorKind::NoConwayEntry:
            return "NoConwayEntry";
        case ErrorKind::NotInBaseField:
            return "NotInBaseField";
        case ErrorKind::ZeroInput:
            return "ZeroInput";
        case ErrorKind::DivisibilityViolated:
            return "DivisibilityViolated";
        case ErrorKind::TooManyCosets:
            return "TooManyCosets";
        case ErrorKind::LeaderNotInV:
            return "LeaderNotInV";
        case ErrorKind::CosetSearchExhausted:
            return "CosetSearchExhausted";
        case ErrorKind::AnchorInSubfield:
            return "AnchorInSubfield";
        case ErrorKind::NotNormValue:
            return "NotNormValue";
        case ErrorKind::BadCharacteristic:
            return "BadCharacteristic";
        case ErrorKind::BadTraceConstant:
            return "BadTraceConstant";
        case ErrorKind::GcdConditionViolated:
            return "GcdConditionViolated";
        case ErrorKind::UnsupportedFamily:
            return "UnsupportedFamily";
        case ErrorKind::EmptyFiber:
            return "EmptyFiber";
        case ErrorKind::RankDefect:
            return "RankDefect";
        case ErrorKind::PoleAtPoint:
            return "PoleAtPoint";
        case ErrorKind::CapExceeded:
            return "CapExceeded";
        case ErrorKind::GramNonzero:
            return "GramNonzero";
        case ErrorKind::EmbeddingRejected:
            return "EmbeddingRejected";
        case ErrorKind::DistanceNotExact:
            return "DistanceNotExact";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind(kind) {
}
