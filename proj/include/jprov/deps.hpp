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

// The resolved dependency universe: dependency-list text, CSV manifests and
// the local repository layout.

#ifndef JPROV_DEPS_HPP_
#define JPROV_DEPS_HPP_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jprov/gav.hpp"

namespace jprov::deps {

enum class Scope { kCompile, kRuntime, kProvided, kTest, kSystem };

std::string_view scope_name(Scope scope);
std::optional<Scope> parse_scope(std::string_view name);

// Scopes whose artifacts end up on the runtime class path.
const std::set<Scope>& runtime_scopes();

// Parses "compile,runtime". Throws kMalformedRow on unknown names.
std::set<Scope> parse_scope_list(std::string_view comma_separated);

struct DependencyEntry {
  GavCoordinate gav;
  Scope scope = Scope::kRuntime;
  // Recorded for path resolution only; not part of the coordinate.
  std::string classifier;
  std::optional<std::filesystem::path> path;
};

struct DependencyManifest {
  std::vector<DependencyEntry> entries;

  std::set<GavCoordinate> gavs() const;
  // Entries whose scope is in `scopes`, order preserved.
  DependencyManifest filtered(const std::set<Scope>& scopes = runtime_scopes()) const;
};

// Parses dependency-list output ("group:artifact:packaging[:classifier]:
// version:scope" tokens). Lines without such a token are ignored; exact
// duplicates collapse. Throws kConflictingVersions when one group:artifact
// appears with two versions.
DependencyManifest parse_dependency_list(std::string_view text);

// Parses "group,artifact,version[,path]" rows; scope defaults to runtime.
// Blank lines are skipped. Throws kMalformedRow with the 1-based line number.
DependencyManifest parse_csv_manifest(std::string_view text);

// <root>/<group as path>/<artifact>/<version>/<artifact>-<version>[-classifier].jar
std::filesystem::path artifact_relative_path(const GavCoordinate& gav,
                                             std::string_view classifier = {});

// Throws kArtifactNotFound naming the path tried.
std::filesystem::path resolve_artifact_path(const std::filesystem::path& repo_root,
                                            const GavCoordinate& gav,
                                            std::string_view classifier = {});

}  // namespace jprov::deps

#endif  // JPROV_DEPS_HPP_
