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

#ifndef JPROV_EMBED_HPP_
#define JPROV_EMBED_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jprov/deps.hpp"
#include "jprov/gav.hpp"
#include "jprov/jar.hpp"

namespace jprov::embed {

struct EmbedOptions {
  archive::JarOptions jar;
  // Strict: any failed archive fails the whole run, and class-format errors
  // fail their archive instead of being skipped.
  bool strict = false;
  std::set<deps::Scope> scopes = deps::runtime_scopes();
  // Worker threads; 0 means one per hardware thread.
  unsigned jobs = 0;
  // Used for manifest entries without an explicit path.
  std::optional<std::filesystem::path> repo_root;
};

struct EmbedTotals {
  std::size_t dependencies_embedded = 0;
  std::size_t dependencies_expected = 0;
  std::size_t classes_annotated = 0;
  // Module descriptors are not counted.
  std::size_t classes_total = 0;
  // Over per-jar sizes: (sum after - sum before) / sum before * 100.
  double space_overhead_percent = 0.0;
};

struct EmbedReport {
  GavCoordinate project_gav;
  std::vector<archive::JarReport> per_jar{};     // manifest order
  std::vector<std::filesystem::path> outputs{};  // parallel to per_jar
  std::vector<std::string> failures{};           // "<gav>: <error>"
  std::vector<std::string> warnings{};
  std::size_t project_classes_total = 0;
  std::size_t project_classes_annotated = 0;
  double wall_time_seconds = 0.0;
  std::filesystem::path repo_dir{};
  EmbedTotals totals{};
};

// Backup location for project classes: "<dir>.orig".
std::filesystem::path backup_directory(const std::filesystem::path& project_classes);

// Writes one annotated archive per scoped manifest entry under `out_dir`
// in repository layout and annotates the project's class files in place
// (originals copied to backup_directory first). Throws kArtifactNotFound
// before any work when an entry cannot be resolved, kAlreadyAnnotated when
// a target is already annotated under the kError policy, and the first
// archive failure in strict mode.
EmbedReport embed_all(const deps::DependencyManifest& manifest,
                      const std::optional<std::filesystem::path>& project_classes,
                      const GavCoordinate& project_gav, const std::filesystem::path& out_dir,
                      const EmbedOptions& options = {});

// Line-oriented key=value form.
std::string to_key_value(const EmbedReport& report);
// Human-readable summary.
std::string to_text(const EmbedReport& report);

}  // namespace jprov::embed

#endif  // JPROV_EMBED_HPP_
