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

#include "jprov/gav.hpp"

#include <utility>

#include "jprov/error.hpp"

namespace jprov {

bool is_valid_gav_field(std::string_view field) noexcept {
  return !field.empty() && field.find_first_of(",\n\r") == std::string_view::npos;
}

GavCoordinate::GavCoordinate(std::string group, std::string artifact,
                             std::string version)
    : group_(std::move(group)),
      artifact_(std::move(artifact)),
      version_(std::move(version)) {
  if (!is_valid_gav_field(group_) || !is_valid_gav_field(artifact_) ||
      !is_valid_gav_field(version_)) {
    throw Error(ErrorCode::kInvalidGav,
                "invalid coordinate '" + group_ + ":" + artifact_ + ":" + version_ + "'");
  }
}

GavCoordinate GavCoordinate::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw Error(ErrorCode::kInvalidGav,
                "expected group:artifact:version, got '" + std::string(text) + "'");
  }
  return GavCoordinate(std::string(text.substr(0, first)),
                       std::string(text.substr(first + 1, second - first - 1)),
                       std::string(text.substr(second + 1)));
}

std::string GavCoordinate::to_string() const {
  return group_ + ":" + artifact_ + ":" + version_;
}

std::string GavCoordinate::to_csv_row() const {
  return group_ + "," + artifact_ + "," + version_;
}

}  // namespace jprov
