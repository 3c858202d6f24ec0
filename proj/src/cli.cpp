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

#include "jprov/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include "jprov/analysis.hpp"
#include "jprov/annotation.hpp"
#include "jprov/classfile.hpp"
#include "jprov/deps.hpp"
#include "jprov/embed.hpp"
#include "jprov/error.hpp"
#include "jprov/mutf8.hpp"
#include "jprov/zip.hpp"

namespace jprov::cli {
namespace fs = std::filesystem;

namespace {

struct CommonFlags {
  std::string descriptor{classfile::kDefaultProvenanceDescriptor};
  std::string scopes = "compile,runtime,system";
  bool strict = false;
};

struct EmbedArgs {
  std::string deps;
  std::string manifest_csv;
  std::string repo;
  std::string classes;
  std::string project_gav;
  std::string out_dir;
  std::string report;
  bool force = false;
  unsigned jobs = 0;
};

struct VerifyArgs {
  std::string deps;
  std::string manifest_csv;
  std::string classes;
  std::string project_gav;
  std::string report;
  std::vector<std::string> targets;
};

struct IntrospectArgs {
  std::string log = "-";
  std::string csv;
  std::string classes;
  bool sorted = false;
  std::vector<std::string> targets;
};

struct InspectArgs {
  std::string path;
};

std::string slurp(const std::string& path) {
  const Bytes data = archive::read_file(path);
  return std::string(as_chars(data));
}

deps::DependencyManifest load_manifest(const std::string& dep_list, const std::string& csv) {
  if (!dep_list.empty()) return deps::parse_dependency_list(slurp(dep_list));
  return deps::parse_csv_manifest(slurp(csv));
}

std::vector<fs::path> collect_archives(const std::vector<std::string>& targets) {
  std::vector<fs::path> archives;
  for (const auto& target : targets) {
    const auto found = analysis::find_archives(target);
    archives.insert(archives.end(), found.begin(), found.end());
  }
  return archives;
}

int cmd_embed(const EmbedArgs& args, const CommonFlags& common, std::ostream& out, std::ostream& err) {
  embed::EmbedOptions options;
  options.jar.descriptor = common.descriptor;
  options.jar.on_existing = args.force ? classfile::OnExisting::kReplace : classfile::OnExisting::kError;
  options.strict = common.strict;
  options.scopes = deps::parse_scope_list(common.scopes);
  options.jobs = args.jobs;
  if (!args.repo.empty()) options.repo_root = fs::path(args.repo);

  const deps::DependencyManifest manifest = load_manifest(args.deps, args.manifest_csv);
  const GavCoordinate project_gav = GavCoordinate::parse(args.project_gav);
  std::optional<fs::path> classes;
  if (!args.classes.empty()) classes = fs::path(args.classes);

  const embed::EmbedReport report = embed::embed_all(manifest, classes, project_gav, args.out_dir, options);
  const fs::path report_path =
      args.report.empty() ? fs::path(args.out_dir) / "jprov-embed-report.properties" : fs::path(args.report);
  const std::string kv = embed::to_key_value(report);
  archive::write_file(report_path, as_bytes(kv));

  out << embed::to_text(report);
  out << "report written to " << report_path.generic_string() << '\n';
  if (!report.failures.empty()) {
    err << "error: " << report.failures.size() << " archive(s) failed:\n";
    for (const auto& f : report.failures) err << "  " << f << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, const CommonFlags& common, std::ostream& out, std::ostream& err) {
  const deps::DependencyManifest expected = load_manifest(args.deps, args.manifest_csv);
  const analysis::ScanOptions scan{common.descriptor, !common.strict};
  analysis::AnnotationIndex index = analysis::scan_annotations(collect_archives(args.targets), scan);
  if (!args.classes.empty()) analysis::index_class_directory(index, args.classes, scan);

  analysis::CompletenessReport report =
      analysis::verify_completeness(index, expected, deps::parse_scope_list(common.scopes));
  if (!args.project_gav.empty()) report.extra_gavs.erase(GavCoordinate::parse(args.project_gav));

  using analysis::format_count;
  out << "dependencies " << format_count(report.dep_found) << '/' << format_count(report.dep_expected)
      << ", classes " << format_count(report.class_annotated) << '/' << format_count(report.class_total)
      << '\n';
  for (const auto& gav : report.missing_gavs) out << "missing dependency: " << gav.to_string() << '\n';
  for (const auto& gav : report.extra_gavs) out << "unexpected dependency: " << gav.to_string() << '\n';
  for (const auto& name : index.unannotated) out << "unannotated class: " << name << '\n';
  for (const auto& e : index.errors) err << "warning: " << e << '\n';

  if (!args.report.empty()) {
    std::ostringstream kv;
    kv << "dep_found=" << report.dep_found << '\n'
       << "dep_expected=" << report.dep_expected << '\n'
       << "class_annotated=" << report.class_annotated << '\n'
       << "class_total=" << report.class_total << '\n'
       << "complete=" << (report.complete() ? "true" : "false") << '\n';
    for (const auto& gav : report.missing_gavs) kv << "missing=" << gav.to_string() << '\n';
    for (const auto& gav : report.extra_gavs) kv << "extra=" << gav.to_string() << '\n';
    archive::write_file(args.report, as_bytes(kv.str()));
  }
  return report.complete() ? kExitOk : kExitFailure;
}

int cmd_introspect(const IntrospectArgs& args, const CommonFlags& common, std::ostream& out,
                   std::ostream& err, std::istream& in) {
  std::string log_text;
  if (args.log == "-") {
    log_text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    log_text = slurp(args.log);
  }
  const analysis::ScanOptions scan{common.descriptor, !common.strict};
  analysis::AnnotationIndex index = analysis::scan_annotations(collect_archives(args.targets), scan);
  if (!args.classes.empty()) analysis::index_class_directory(index, args.classes, scan);

  const analysis::LoadLog log = analysis::parse_load_log(log_text);
  const analysis::RuntimeDependencySet deps = analysis::introspect(log.events, index);
  const std::string csv = analysis::write_runtime_csv(deps, args.sorted);

  std::ostream& summary = args.csv.empty() ? err : out;
  if (args.csv.empty()) {
    out << csv;
  } else {
    archive::write_file(args.csv, as_bytes(csv));
  }
  summary << deps.gavs.size() << " dependencies detected, " << deps.unattributed.size()
          << " classes unattributed (granularity: " << analysis::kDetectionGranularity << ", "
          << log.events.size() << " load events, " << log.ignored_lines << " lines ignored)\n";
  return kExitOk;
}

int cmd_inspect_class(const InspectArgs& args, const CommonFlags& common, std::ostream& out) {
  const classfile::ClassFile cf = classfile::parse_class(archive::read_file(args.path));
  out << "class: " << decode_modified_utf8(cf.internal_name()) << '\n';
  out << "version: " << cf.major_version << '.' << cf.minor_version << '\n';
  out << "constant pool: " << cf.constant_pool.count() - 1 << " slots\n";
  out << "runtime-visible annotations:";
  const auto types = classfile::class_annotation_types(cf);
  if (types.empty()) out << " none";
  for (const auto& t : types) out << ' ' << t;
  out << '\n';
  if (const auto gav = classfile::read_annotation(cf, common.descriptor)) {
    out << "provenance: group=" << gav->group() << " artefact=" << gav->artifact()
        << " version=" << gav->version() << '\n';
  } else {
    out << "provenance: none\n";
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonFlags& common, bool with_scopes) {
  cmd->add_option("--descriptor", common.descriptor, "Annotation type descriptor")
      ->capture_default_str();
  if (with_scopes) {
    cmd->add_option("--scopes", common.scopes, "Dependency scopes to include")->capture_default_str();
    cmd->add_flag("--strict", common.strict, "Fail on any class-format error");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Embed and introspect dependency provenance in JVM class files", "jprov"};
  app.require_subcommand(1);
  CommonFlags common;

  EmbedArgs embed_args;
  CLI::App* embed = app.add_subcommand("embed", "Annotate dependency archives and project classes");
  auto* deps_opt = embed->add_option("--deps", embed_args.deps, "Dependency list file")
                       ->check(CLI::ExistingFile);
  auto* csv_opt = embed->add_option("--manifest-csv", embed_args.manifest_csv, "CSV manifest file")
                      ->check(CLI::ExistingFile);
  deps_opt->excludes(csv_opt);
  embed->add_option("--repo", embed_args.repo, "Local repository root")->check(CLI::ExistingDirectory);
  embed->add_option("--classes", embed_args.classes, "Project classes directory")
      ->check(CLI::ExistingDirectory);
  embed->add_option("--project-gav", embed_args.project_gav, "Project coordinate g:a:v")->required();
  embed->add_option("--out", embed_args.out_dir, "Augmented repository directory")->required();
  embed->add_option("--report", embed_args.report, "Machine-readable report path");
  embed->add_flag("--force", embed_args.force, "Replace existing provenance annotations");
  embed->add_option("--jobs", embed_args.jobs, "Worker threads (0 = all cores)");
  add_common(embed, common, true);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Check embedding completeness");
  auto* vdeps = verify->add_option("--deps", verify_args.deps, "Ground-truth dependency list")
                    ->check(CLI::ExistingFile);
  auto* vcsv = verify->add_option("--manifest-csv", verify_args.manifest_csv, "Ground-truth CSV manifest")
                   ->check(CLI::ExistingFile);
  vdeps->excludes(vcsv);
  verify->add_option("--classes", verify_args.classes, "Project classes directory")
      ->check(CLI::ExistingDirectory);
  verify->add_option("--project-gav", verify_args.project_gav, "Project coordinate, not reported as extra");
  verify->add_option("--report", verify_args.report, "Machine-readable report path");
  verify->add_option("targets", verify_args.targets, "Archives or directories of archives")
      ->required()
      ->check(CLI::ExistingPath);
  add_common(verify, common, true);

  IntrospectArgs introspect_args;
  CLI::App* introspect = app.add_subcommand("introspect", "Map a class-load log to dependencies");
  introspect->add_option("--log", introspect_args.log, "Load log ('-' for stdin)")->capture_default_str();
  introspect->add_option("--csv", introspect_args.csv, "Output CSV path (default stdout)");
  introspect->add_option("--classes", introspect_args.classes, "Project classes directory")
      ->check(CLI::ExistingDirectory);
  introspect->add_flag("--sorted", introspect_args.sorted, "Sort rows instead of first-seen order");
  introspect->add_option("targets", introspect_args.targets, "Archives or directories of archives")
      ->required()
      ->check(CLI::ExistingPath);
  add_common(introspect, common, true);

  InspectArgs inspect_args;
  CLI::App* inspect = app.add_subcommand("inspect-class", "Dump one class file's provenance");
  inspect->add_option("path", inspect_args.path, "Class file")->required()->check(CLI::ExistingFile);
  add_common(inspect, common, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (embed->parsed()) {
      if (embed_args.deps.empty() && embed_args.manifest_csv.empty()) {
        throw CLI::RequiredError("--deps or --manifest-csv");
      }
      if (!embed_args.deps.empty() && embed_args.repo.empty()) throw CLI::RequiredError("--repo");
    }
    if (verify->parsed() && verify_args.deps.empty() && verify_args.manifest_csv.empty()) {
      throw CLI::RequiredError("--deps or --manifest-csv");
    }
    if (introspect->parsed() && introspect_args.log != "-" && !fs::is_regular_file(introspect_args.log)) {
      throw CLI::ValidationError("--log", "file does not exist: " + introspect_args.log);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << '\n';
    err << "run 'jprov --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (embed->parsed()) return cmd_embed(embed_args, common, out, err);
    if (verify->parsed()) return cmd_verify(verify_args, common, out, err);
    if (introspect->parsed()) return cmd_introspect(introspect_args, common, out, err, in);
    if (inspect->parsed()) return cmd_inspect_class(inspect_args, common, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace jprov::cli
