// Copyright 2026 The jprov Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jprov/error.hpp"

namespace jprov {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kTruncatedInput: return "TruncatedInput";
    case ErrorCode::kUnknownConstantTag: return "UnknownConstantTag";
    case ErrorCode::kUnsupportedMajorVersion: return "UnsupportedMajorVersion";
    case ErrorCode::kIndexOutOfPool: return "IndexOutOfPool";
    case ErrorCode::kWrongConstantType: return "WrongConstantType";
    case ErrorCode::kTrailingData: return "TrailingData";
    case ErrorCode::kMalformedUtf8: return "MalformedUtf8";
    case ErrorCode::kMalformedAttribute: return "MalformedAttribute";
    case ErrorCode::kPoolOverflow: return "PoolOverflow";
    case ErrorCode::kAttributeTooLarge: return "AttributeTooLarge";
    case ErrorCode::kAlreadyAnnotated: return "AlreadyAnnotated";
    case ErrorCode::kMalformedAnnotation: return "MalformedAnnotation";
    case ErrorCode::kInvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::kInvalidGav: return "InvalidGav";
    case ErrorCode::kCorruptArchive: return "CorruptArchive";
    case ErrorCode::kMalformedManifest: return "MalformedManifest";
    case ErrorCode::kConflictingVersions: return "ConflictingVersions";
    case ErrorCode::kArtifactNotFound: return "ArtifactNotFound";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kUntriggeredNotSubset: return "UntriggeredNotSubset";
    case ErrorCode::kZeroBaseline: return "ZeroBaseline";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& message,
                           std::optional<std::size_t> offset) {
  std::string out(error_code_name(code));
  if (offset) out += " at offset " + std::to_string(*offset);
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(format_message(code, message, offset)),
      code_(code),
      message_(message),
      offset_(offset) {}

}  // namespace jprov
