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

#ifndef JPROV_GAV_HPP_
#define JPROV_GAV_HPP_

#include <compare>
#include <string>
#include <string_view>

namespace jprov {

// Group/artifact/version coordinate identifying one build artifact. Fields
// are never empty and never contain ',', '\n' or '\r', so every coordinate
// has an unambiguous CSV row.
class GavCoordinate {
 public:
  // Throws Error(kInvalidGav) when a field violates the invariants.
  GavCoordinate(std::string group, std::string artifact, std::string version);

  // Parses "group:artifact:version".
  static GavCoordinate parse(std::string_view colon_separated);

  const std::string& group() const noexcept { return group_; }
  const std::string& artifact() const noexcept { return artifact_; }
  const std::string& version() const noexcept { return version_; }

  // "group:artifact:version"
  std::string to_string() const;
  // "group,artifact,version" (no line terminator)
  std::string to_csv_row() const;

  friend auto operator<=>(const GavCoordinate&, const GavCoordinate&) = default;
  friend bool operator==(const GavCoordinate&, const GavCoordinate&) = default;

 private:
  std::string group_;
  std::string artifact_;
  std::string version_;
};

// True when `field` satisfies the per-field GAV invariants.
bool is_valid_gav_field(std::string_view field) noexcept;

}  // namespace jprov

#endif  // JPROV_GAV_HPP_
