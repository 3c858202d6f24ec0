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

#include "jprov/analysis.hpp"

#include <algorithm>
#include <cstdio>

#include "jprov/classfile.hpp"
#include "jprov/error.hpp"
#include "jprov/jar.hpp"
#include "jprov/mutf8.hpp"
#include "jprov/zip.hpp"

namespace jprov::analysis {
namespace {

constexpr std::uint16_t kAccModule = 0x8000;

bool is_class_format_error(ErrorCode code) {
  return code != ErrorCode::kIo && code != ErrorCode::kCorruptArchive;
}

// Binary name derived from an entry path, for classes that cannot be parsed.
std::string name_from_entry(std::string_view entry) {
  constexpr std::string_view kVersions = "META-INF/versions/";
  if (entry.starts_with(kVersions)) {
    const std::size_t slash = entry.find('/', kVersions.size());
    if (slash != std::string_view::npos) entry.remove_prefix(slash + 1);
  }
  if (entry.ends_with(".class")) entry.remove_suffix(6);
  std::string name(entry);
  std::replace(name.begin(), name.end(), '/', '.');
  return name;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

void record(AnnotationIndex& index, std::string name, std::optional<GavCoordinate> gav) {
  if (index.classes.contains(name) || index.unannotated.contains(name)) return;
  if (gav) {
    index.classes.emplace(std::move(name), std::move(*gav));
  } else {
    index.unannotated.insert(std::move(name));
  }
}

}  // namespace

std::set<GavCoordinate> AnnotationIndex::gavs() const {
  std::set<GavCoordinate> out;
  for (const auto& [name, gav] : classes) out.insert(gav);
  return out;
}

void index_class(AnnotationIndex& index, ByteView class_bytes, std::string_view origin,
                 const ScanOptions& options) {
  try {
    const classfile::ClassFile cf = classfile::parse_class(class_bytes);
    if ((cf.access_flags & kAccModule) != 0) return;
    std::string name = decode_modified_utf8(cf.internal_name());
    std::replace(name.begin(), name.end(), '/', '.');
    record(index, std::move(name), classfile::read_annotation(cf, options.descriptor));
  } catch (const Error& e) {
    if (!options.lenient || !is_class_format_error(e.code())) throw;
    index.errors.push_back(std::string(origin) + ": " + e.what());
    const std::size_t bang = origin.rfind('!');
    record(index, name_from_entry(bang == std::string_view::npos ? origin : origin.substr(bang + 1)),
           std::nullopt);
  }
}

void index_archive(AnnotationIndex& index, ByteView archive, std::string_view origin,
                   const ScanOptions& options) {
  for (const auto& entry : archive::read_zip(archive)) {
    if (archive::classify_entry(entry.name) != archive::EntryKind::kClass) continue;
    if (archive::is_module_descriptor(entry.name)) continue;
    index_class(index, entry.data, std::string(origin) + "!" + entry.name, options);
  }
}

AnnotationIndex scan_annotations(std::span<const std::filesystem::path> archives,
                                 const ScanOptions& options) {
  std::vector<std::filesystem::path> sorted(archives.begin(), archives.end());
  std::sort(sorted.begin(), sorted.end());
  AnnotationIndex index;
  for (const auto& path : sorted) {
    try {
      index_archive(index, archive::read_file(path), path.string(), options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCorruptArchive) throw;
      throw Error(e.code(), path.string() + ": " + e.message(), e.offset());
    }
  }
  return index;
}

namespace {

std::vector<std::filesystem::path> find_with_extension(const std::filesystem::path& root,
                                                       std::string_view extension) {
  std::vector<std::filesystem::path> out;
  std::error_code ec;
  if (std::filesystem::is_regular_file(root, ec)) {
    out.push_back(root);
    return out;
  }
  for (auto it = std::filesystem::recursive_directory_iterator(root, ec);
       !ec && it != std::filesystem::recursive_directory_iterator(); it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == extension) out.push_back(it->path());
  }
  if (ec) throw Error(ErrorCode::kIo, "cannot list " + root.string() + ": " + ec.message());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::filesystem::path> find_archives(const std::filesystem::path& root) {
  return find_with_extension(root, ".jar");
}

std::vector<std::filesystem::path> find_class_files(const std::filesystem::path& root) {
  return find_with_extension(root, ".class");
}

void index_class_directory(AnnotationIndex& index, const std::filesystem::path& root,
                           const ScanOptions& options) {
  for (const auto& path : find_class_files(root)) {
    if (path.filename() == "module-info.class") continue;
    const std::string relative = std::filesystem::relative(path, root).generic_string();
    index_class(index, archive::read_file(path), root.string() + "!" + relative, options);
  }
}

CompletenessReport verify_completeness(const AnnotationIndex& index,
                                       const deps::DependencyManifest& expected,
                                       const std::set<deps::Scope>& scopes) {
  CompletenessReport report;
  const std::set<GavCoordinate> want = expected.filtered(scopes).gavs();
  const std::set<GavCoordinate> have = index.gavs();
  for (const auto& gav : want) {
    if (have.contains(gav)) {
      ++report.dep_found;
    } else {
      report.missing_gavs.insert(gav);
    }
  }
  for (const auto& gav : have) {
    if (!want.contains(gav)) report.extra_gavs.insert(gav);
  }
  report.dep_expected = want.size();
  report.class_annotated = index.classes.size();
  report.class_total = index.class_total();
  return report;
}

LoadLog parse_load_log(std::string_view text) {
  constexpr std::string_view kUnified = "[class,load] ";
  constexpr std::string_view kSource = " source: ";
  constexpr std::string_view kLegacy = "[Loaded ";
  constexpr std::string_view kFrom = " from ";

  LoadLog log;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;

    if (const std::size_t at = line.find(kUnified); at != std::string_view::npos) {
      std::string_view rest = line.substr(at + kUnified.size());
      const std::size_t space = rest.find(' ');
      const std::string_view name = rest.substr(0, space);
      if (!name.empty()) {
        LoadEvent event{std::string(name), std::nullopt};
        if (space != std::string_view::npos && rest.substr(space).starts_with(kSource)) {
          event.source = std::string(trim(rest.substr(space + kSource.size())));
        }
        log.events.push_back(std::move(event));
        continue;
      }
    } else if (line.starts_with(kLegacy) && line.ends_with("]")) {
      const std::string_view body = line.substr(kLegacy.size(), line.size() - kLegacy.size() - 1);
      const std::size_t from = body.find(kFrom);
      const std::string_view name = body.substr(0, from);
      if (!name.empty() && name.find(' ') == std::string_view::npos) {
        LoadEvent event{std::string(name), std::nullopt};
        if (from != std::string_view::npos) event.source = std::string(body.substr(from + kFrom.size()));
        log.events.push_back(std::move(event));
        continue;
      }
    }
    ++log.ignored_lines;
  }
  return log;
}

bool RuntimeDependencySet::contains(const GavCoordinate& gav) const {
  return std::find(gavs.begin(), gavs.end(), gav) != gavs.end();
}

std::set<GavCoordinate> RuntimeDependencySet::as_set() const {
  return {gavs.begin(), gavs.end()};
}

RuntimeDependencySet introspect(std::span<const LoadEvent> events, const AnnotationIndex& index) {
  RuntimeDependencySet out;
  std::set<GavCoordinate> seen;
  for (const auto& event : events) {
    const auto it = index.classes.find(event.class_name);
    if (it == index.classes.end()) {
      out.unattributed.insert(event.class_name);
      continue;
    }
    if (seen.insert(it->second).second) out.gavs.push_back(it->second);
  }
  return out;
}

std::string write_runtime_csv(const RuntimeDependencySet& deps, bool sorted) {
  std::vector<GavCoordinate> rows = deps.gavs;
  if (sorted) std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& gav : rows) {
    out += gav.to_csv_row();
    out += '\n';
  }
  return out;
}

ConfusionReport classify_detection(const std::set<GavCoordinate>& detected,
                                   const std::set<GavCoordinate>& ground_truth,
                                   const std::optional<std::set<GavCoordinate>>& untriggered) {
  ConfusionReport report{0, 0, std::nullopt, std::nullopt, detected, ground_truth, untriggered};
  for (const auto& gav : detected) {
    if (ground_truth.contains(gav)) {
      ++report.tp;
    } else {
      ++report.fp;
    }
  }
  if (!untriggered) return report;
  for (const auto& gav : *untriggered) {
    if (!ground_truth.contains(gav)) {
      throw Error(ErrorCode::kUntriggeredNotSubset, gav.to_string() + " is not in the ground truth");
    }
  }
  std::size_t tn = 0;
  std::size_t fn = 0;
  for (const auto& gav : ground_truth) {
    if (detected.contains(gav)) continue;
    if (untriggered->contains(gav)) {
      ++tn;
    } else {
      ++fn;
    }
  }
  report.tn = tn;
  report.fn = fn;
  return report;
}

double size_overhead(std::uint64_t before, std::uint64_t after) {
  if (before == 0) throw Error(ErrorCode::kZeroBaseline, "baseline size is 0");
  return (static_cast<double>(after) - static_cast<double>(before)) / static_cast<double>(before) *
         100.0;
}

std::string format_percent(double percent) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", percent);
  return buf;
}

std::string format_count(std::size_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  const std::size_t lead = digits.size() % 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && i >= lead && (i - lead) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

}  // namespace jprov::analysis
