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

// Static and dynamic provenance introspection, plus the evaluation metrics
// built on top of it.

#ifndef JPROV_ANALYSIS_HPP_
#define JPROV_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jprov/annotation.hpp"
#include "jprov/bytes.hpp"
#include "jprov/deps.hpp"
#include "jprov/gav.hpp"

namespace jprov::analysis {

// Detection granularity of everything derived from load traces: a class
// that is loaded but never executed still attributes its dependency.
inline constexpr std::string_view kDetectionGranularity = "class-load";

// Class binary name (dot-separated, '$' kept) to provenance. The mapped
// names and `unannotated` are disjoint; for a name seen more than once the
// first occurrence decides.
struct AnnotationIndex {
  std::map<std::string, GavCoordinate, std::less<>> classes;
  std::set<std::string, std::less<>> unannotated;
  // Lenient-mode parse failures, "<archive>!<entry>: <error>".
  std::vector<std::string> errors;

  std::size_t class_total() const noexcept { return classes.size() + unannotated.size(); }
  std::set<GavCoordinate> gavs() const;
};

struct ScanOptions {
  std::string descriptor{classfile::kDefaultProvenanceDescriptor};
  bool lenient = true;
};

// Adds one class file to the index; `origin` labels errors. Module
// descriptors are ignored.
void index_class(AnnotationIndex& index, ByteView class_bytes, std::string_view origin,
                 const ScanOptions& options = {});

// Adds every class entry of an in-memory archive.
void index_archive(AnnotationIndex& index, ByteView archive, std::string_view origin,
                   const ScanOptions& options = {});

// Archives are visited in sorted path order. Throws kCorruptArchive and,
// in strict mode, class-format errors.
AnnotationIndex scan_annotations(std::span<const std::filesystem::path> archives,
                                 const ScanOptions& options = {});

// All "*.jar" files below `root`, sorted.
std::vector<std::filesystem::path> find_archives(const std::filesystem::path& root);

// All "*.class" files below `root`, sorted.
std::vector<std::filesystem::path> find_class_files(const std::filesystem::path& root);

// Indexes loose class files below a directory.
void index_class_directory(AnnotationIndex& index, const std::filesystem::path& root,
                           const ScanOptions& options = {});

struct CompletenessReport {
  std::size_t dep_found = 0;
  std::size_t dep_expected = 0;
  std::size_t class_annotated = 0;
  std::size_t class_total = 0;
  std::set<GavCoordinate> missing_gavs;
  std::set<GavCoordinate> extra_gavs;

  bool complete() const noexcept {
    return dep_found == dep_expected && class_annotated == class_total;
  }
};

CompletenessReport verify_completeness(const AnnotationIndex& index,
                                       const deps::DependencyManifest& expected,
                                       const std::set<deps::Scope>& scopes = deps::runtime_scopes());

struct LoadEvent {
  std::string class_name;
  std::optional<std::string> source;

  friend bool operator==(const LoadEvent&, const LoadEvent&) = default;
};

struct LoadLog {
  std::vector<LoadEvent> events;
  std::size_t ignored_lines = 0;
};

// Accepts the unified logging form "... [class,load] <name> source: <origin>"
// and the legacy form "[Loaded <name> from <origin>]". Other lines are
// counted in ignored_lines.
LoadLog parse_load_log(std::string_view text);

struct RuntimeDependencySet {
  std::vector<GavCoordinate> gavs;  // first-seen order, no duplicates
  std::set<std::string, std::less<>> unattributed;

  bool contains(const GavCoordinate& gav) const;
  std::set<GavCoordinate> as_set() const;
};

RuntimeDependencySet introspect(std::span<const LoadEvent> events, const AnnotationIndex& index);

// One "group,artifact,version\n" row per coordinate, no header.
std::string write_runtime_csv(const RuntimeDependencySet& deps, bool sorted = false);

struct ConfusionReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  // Only adjudicated when the untriggered set was supplied.
  std::optional<std::size_t> tn;
  std::optional<std::size_t> fn;
  std::set<GavCoordinate> detected;
  std::set<GavCoordinate> ground_truth;
  std::optional<std::set<GavCoordinate>> untriggered;
};

// Throws kUntriggeredNotSubset when untriggered is not within ground_truth.
ConfusionReport classify_detection(const std::set<GavCoordinate>& detected,
                                   const std::set<GavCoordinate>& ground_truth,
                                   const std::optional<std::set<GavCoordinate>>& untriggered);

// (after - before) / before * 100. Throws kZeroBaseline when before is 0.
double size_overhead(std::uint64_t before, std::uint64_t after);

// One decimal place, e.g. "12.0".
std::string format_percent(double percent);

// Thousands separators, e.g. "7,914".
std::string format_count(std::size_t n);

}  // namespace jprov::analysis

#endif  // JPROV_ANALYSIS_HPP_
