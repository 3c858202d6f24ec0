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

#include "jprov/embed.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>
#include <utility>

#include "jprov/analysis.hpp"
#include "jprov/annotation.hpp"
#include "jprov/classfile.hpp"
#include "jprov/error.hpp"
#include "jprov/zip.hpp"

namespace jprov::embed {
namespace {

struct WorkItem {
  deps::DependencyEntry entry;
  std::filesystem::path input;
  std::filesystem::path output;
};

struct WorkResult {
  std::optional<archive::JarReport> report;
  std::optional<Error> error;
};

bool output_already_annotated(const std::filesystem::path& output, std::string_view descriptor) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(output, ec)) return false;
  try {
    analysis::AnnotationIndex index;
    analysis::index_archive(index, archive::read_file(output), output.string(),
                            analysis::ScanOptions{std::string(descriptor), true});
    return !index.classes.empty();
  } catch (const Error&) {
    return false;
  }
}

WorkResult run_item(const WorkItem& item, const EmbedOptions& options) {
  WorkResult result;
  try {
    if (options.jar.on_existing == classfile::OnExisting::kError &&
        output_already_annotated(item.output, options.jar.descriptor)) {
      throw Error(ErrorCode::kAlreadyAnnotated,
                  item.output.string() + " already holds an annotated archive");
    }
    archive::JarOptions jar = options.jar;
    jar.lenient = !options.strict;
    archive::ProcessedJar processed =
        archive::process_jar(archive::read_file(item.input), item.entry.gav, jar);
    archive::write_file(item.output, processed.archive);
    result.report = std::move(processed.report);
  } catch (const Error& e) {
    result.error = e;
  } catch (const std::exception& e) {
    result.error = Error(ErrorCode::kIo, e.what());
  }
  return result;
}

struct ProjectClass {
  std::filesystem::path path;
  std::optional<Bytes> annotated;
};

void copy_tree(const std::filesystem::path& from, const std::filesystem::path& to) {
  std::error_code ec;
  std::filesystem::copy(from, to, std::filesystem::copy_options::recursive, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot back up " + from.string() + ": " + ec.message());
}

}  // namespace

std::filesystem::path backup_directory(const std::filesystem::path& project_classes) {
  std::filesystem::path dir = project_classes;
  if (!dir.has_filename()) dir = dir.parent_path();
  dir += ".orig";
  return dir;
}

EmbedReport embed_all(const deps::DependencyManifest& manifest,
                      const std::optional<std::filesystem::path>& project_classes,
                      const GavCoordinate& project_gav, const std::filesystem::path& out_dir,
                      const EmbedOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  classfile::validate_object_descriptor(options.jar.descriptor);

  std::vector<WorkItem> items;
  for (const auto& entry : manifest.filtered(options.scopes).entries) {
    std::filesystem::path input;
    if (entry.path) {
      input = *entry.path;
      std::error_code ec;
      if (!std::filesystem::is_regular_file(input, ec)) {
        throw Error(ErrorCode::kArtifactNotFound, input.string());
      }
    } else if (options.repo_root) {
      input = deps::resolve_artifact_path(*options.repo_root, entry.gav, entry.classifier);
    } else {
      throw Error(ErrorCode::kArtifactNotFound,
                  entry.gav.to_string() + " has no path and no repository root was given");
    }
    items.push_back(WorkItem{entry, input,
                             out_dir / deps::artifact_relative_path(entry.gav, entry.classifier)});
  }

  // Project classes are transformed in memory first so a policy failure
  // leaves the directory untouched.
  std::vector<ProjectClass> project;
  std::vector<std::string> project_warnings;
  if (project_classes) {
    for (const auto& path : analysis::find_class_files(*project_classes)) {
      ProjectClass pc{path, std::nullopt};
      if (path.filename() != "module-info.class") {
        try {
          const classfile::ClassFile cf = classfile::parse_class(archive::read_file(path));
          pc.annotated = classfile::serialize_class(classfile::inject_annotation(
              cf, project_gav, options.jar.descriptor, options.jar.on_existing));
        } catch (const Error& e) {
          if (e.code() == ErrorCode::kAlreadyAnnotated || options.strict) {
            throw Error(e.code(), path.string() + ": " + e.message(), e.offset());
          }
          project_warnings.push_back("skipped " + path.string() + ": " + e.message());
        }
      }
      project.push_back(std::move(pc));
    }
  }

  std::vector<WorkResult> results(items.size());
  unsigned workers = options.jobs != 0 ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(items.size(), 1)));
  {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < items.size(); i = next++) results[i] = run_item(items[i], options);
      });
    }
  }

  EmbedReport report{.project_gav = project_gav};
  report.repo_dir = out_dir;
  report.warnings = std::move(project_warnings);
  report.totals.dependencies_expected = items.size();
  std::optional<Error> first_failure;
  for (std::size_t i = 0; i < items.size(); ++i) {
    WorkResult& r = results[i];
    if (r.error) {
      if (r.error->code() == ErrorCode::kAlreadyAnnotated) throw *r.error;
      if (!first_failure) first_failure = r.error;
      report.failures.push_back(items[i].entry.gav.to_string() + ": " + r.error->what());
      continue;
    }
    for (const auto& w : r.report->warnings) report.warnings.push_back(items[i].entry.gav.to_string() + ": " + w);
    report.per_jar.push_back(std::move(*r.report));
    report.outputs.push_back(items[i].output);
  }
  if (options.strict && first_failure) throw *first_failure;

  if (project_classes && !project.empty()) {
    const std::filesystem::path backup = backup_directory(*project_classes);
    std::error_code ec;
    if (!std::filesystem::exists(backup, ec)) copy_tree(*project_classes, backup);
    for (const auto& pc : project) {
      if (pc.annotated) archive::write_file(pc.path, *pc.annotated);
    }
  }
  report.project_classes_total = static_cast<std::size_t>(
      std::count_if(project.begin(), project.end(),
                    [](const ProjectClass& pc) { return pc.path.filename() != "module-info.class"; }));
  report.project_classes_annotated = static_cast<std::size_t>(
      std::count_if(project.begin(), project.end(), [](const ProjectClass& pc) { return pc.annotated.has_value(); }));

  std::uint64_t before = 0;
  std::uint64_t after = 0;
  EmbedTotals& totals = report.totals;
  totals.dependencies_embedded = report.per_jar.size();
  totals.classes_annotated = report.project_classes_annotated;
  totals.classes_total = report.project_classes_total;
  for (const auto& jar : report.per_jar) {
    totals.classes_annotated += jar.classes_annotated;
    totals.classes_total += jar.classes_total - jar.module_descriptors;
    before += jar.bytes_before;
    after += jar.bytes_after;
  }
  totals.space_overhead_percent = before == 0 ? 0.0 : analysis::size_overhead(before, after);

  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::string to_key_value(const EmbedReport& report) {
  std::ostringstream out;
  out.precision(6);
  out << std::fixed;
  out << "project_gav=" << report.project_gav.to_string() << '\n';
  out << "repo_dir=" << report.repo_dir.generic_string() << '\n';
  out << "wall_time_seconds=" << report.wall_time_seconds << '\n';
  out << "dependencies_embedded=" << report.totals.dependencies_embedded << '\n';
  out << "dependencies_expected=" << report.totals.dependencies_expected << '\n';
  out << "classes_annotated=" << report.totals.classes_annotated << '\n';
  out << "classes_total=" << report.totals.classes_total << '\n';
  out << "space_overhead_percent=" << report.totals.space_overhead_percent << '\n';
  out << "size_convention=fixed-deflate-" << archive::kDeflateLevel << '\n';
  out << "project_classes_annotated=" << report.project_classes_annotated << '\n';
  out << "project_classes_total=" << report.project_classes_total << '\n';
  for (std::size_t i = 0; i < report.per_jar.size(); ++i) {
    const auto& jar = report.per_jar[i];
    const std::string prefix = "jar." + std::to_string(i) + ".";
    out << prefix << "gav=" << jar.gav.to_string() << '\n';
    out << prefix << "path=" << report.outputs[i].generic_string() << '\n';
    out << prefix << "classes_total=" << jar.classes_total << '\n';
    out << prefix << "classes_annotated=" << jar.classes_annotated << '\n';
    out << prefix << "classes_skipped=" << jar.classes_skipped << '\n';
    out << prefix << "module_descriptors=" << jar.module_descriptors << '\n';
    out << prefix << "signature_entries_removed=" << jar.signature_entries_removed << '\n';
    out << prefix << "bytes_before=" << jar.bytes_before << '\n';
    out << prefix << "bytes_after=" << jar.bytes_after << '\n';
  }
  out << "failures=" << report.failures.size() << '\n';
  for (std::size_t i = 0; i < report.failures.size(); ++i) {
    out << "failure." << i << '=' << report.failures[i] << '\n';
  }
  return out.str();
}

std::string to_text(const EmbedReport& report) {
  std::ostringstream out;
  const auto& t = report.totals;
  out << "project " << report.project_gav.to_string() << '\n';
  out << "dependencies " << analysis::format_count(t.dependencies_embedded) << '/'
      << analysis::format_count(t.dependencies_expected) << ", classes "
      << analysis::format_count(t.classes_annotated) << '/' << analysis::format_count(t.classes_total)
      << '\n';
  char time_buf[32];
  std::snprintf(time_buf, sizeof(time_buf), "+%.2fs", report.wall_time_seconds);
  out << "time " << time_buf << ", space " << analysis::format_percent(t.space_overhead_percent)
      << "%\n";
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  for (const auto& f : report.failures) out << "failed: " << f << '\n';
  return out.str();
}

}  // namespace jprov::embed
