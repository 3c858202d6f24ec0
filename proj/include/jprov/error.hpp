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

#ifndef JPROV_ERROR_HPP_
#define JPROV_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jprov {

enum class ErrorCode {
  // class-file layer
  kBadMagic,
  kTruncatedInput,
  kUnknownConstantTag,
  kUnsupportedMajorVersion,
  kIndexOutOfPool,
  kWrongConstantType,
  kTrailingData,
  kMalformedUtf8,
  kMalformedAttribute,
  kPoolOverflow,
  kAttributeTooLarge,
  kAlreadyAnnotated,
  kMalformedAnnotation,
  kInvalidDescriptor,
  kInvalidGav,
  // archive layer
  kCorruptArchive,
  kMalformedManifest,
  // dependency manifests
  kConflictingVersions,
  kArtifactNotFound,
  kMalformedRow,
  // analysis
  kUntriggeredNotSubset,
  kZeroBaseline,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception type. `offset` is
// set for errors that can be pinned to a byte position in the input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  // The message without the code name and offset prefix.
  const std::string& message() const noexcept { return message_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> offset_;
};

}  // namespace jprov

#endif  // JPROV_ERROR_HPP_
