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

#include "jprov/deps.hpp"

#include <map>
#include <regex>
#include <utility>

#include "jprov/error.hpp"

namespace jprov::deps {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Rejects a second version of the same group:artifact and drops exact
// repeats.
class ManifestBuilder {
 public:
  void add(DependencyEntry entry) {
    const auto key = std::make_pair(entry.gav.group(), entry.gav.artifact());
    const auto [it, inserted] = versions_.emplace(key, entry.gav.version());
    if (!inserted) {
      if (it->second != entry.gav.version()) {
        throw Error(ErrorCode::kConflictingVersions,
                    key.first + ":" + key.second + " at " + it->second + " and " +
                        entry.gav.version());
      }
      return;
    }
    manifest_.entries.push_back(std::move(entry));
  }
  DependencyManifest take() { return std::move(manifest_); }

 private:
  std::map<std::pair<std::string, std::string>, std::string> versions_;
  DependencyManifest manifest_;
};

}  // namespace

std::string_view scope_name(Scope scope) {
  switch (scope) {
    case Scope::kCompile: return "compile";
    case Scope::kRuntime: return "runtime";
    case Scope::kProvided: return "provided";
    case Scope::kTest: return "test";
    case Scope::kSystem: return "system";
  }
  return "?";
}

std::optional<Scope> parse_scope(std::string_view name) {
  for (Scope s : {Scope::kCompile, Scope::kRuntime, Scope::kProvided, Scope::kTest, Scope::kSystem}) {
    if (scope_name(s) == name) return s;
  }
  return std::nullopt;
}

const std::set<Scope>& runtime_scopes() {
  static const std::set<Scope> kScopes{Scope::kCompile, Scope::kRuntime, Scope::kSystem};
  return kScopes;
}

std::set<Scope> parse_scope_list(std::string_view comma_separated) {
  std::set<Scope> scopes;
  for (std::string_view part : split(comma_separated, ',')) {
    part = trim(part);
    if (part.empty()) continue;
    const auto scope = parse_scope(part);
    if (!scope) throw Error(ErrorCode::kMalformedRow, "unknown scope '" + std::string(part) + "'");
    scopes.insert(*scope);
  }
  return scopes;
}

std::set<GavCoordinate> DependencyManifest::gavs() const {
  std::set<GavCoordinate> out;
  for (const auto& entry : entries) out.insert(entry.gav);
  return out;
}

DependencyManifest DependencyManifest::filtered(const std::set<Scope>& scopes) const {
  DependencyManifest out;
  for (const auto& entry : entries) {
    if (scopes.contains(entry.scope)) out.entries.push_back(entry);
  }
  return out;
}

DependencyManifest parse_dependency_list(std::string_view text) {
  // group:artifact:packaging[:classifier]:version:scope
  static const std::regex kToken(
      R"(([A-Za-z0-9_.\-]+):([A-Za-z0-9_.\-]+):([A-Za-z0-9_.\-]+):(?:([A-Za-z0-9_.\-]+):)?([A-Za-z0-9_.\-+]+):(compile|runtime|provided|test|system))");
  ManifestBuilder builder;
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    std::size_t start = 0;
    while (start < line.size()) {
      std::size_t end = line.find_first_of(" \t", start);
      if (end == std::string_view::npos) end = line.size();
      const std::string token(line.substr(start, end - start));
      start = end + 1;
      std::smatch m;
      if (!std::regex_match(token, m, kToken)) continue;
      DependencyEntry entry{GavCoordinate(m[1], m[2], m[5]), *parse_scope(m[6].str()),
                            m[4].matched ? m[4].str() : std::string(), std::nullopt};
      builder.add(std::move(entry));
      break;
    }
  }
  return builder.take();
}

DependencyManifest parse_csv_manifest(std::string_view text) {
  ManifestBuilder builder;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 3 && fields.size() != 4) {
      throw Error(ErrorCode::kMalformedRow,
                  "line " + std::to_string(line_no) + ": expected 3 or 4 fields, got " +
                      std::to_string(fields.size()));
    }
    try {
      DependencyEntry entry{GavCoordinate(std::string(fields[0]), std::string(fields[1]),
                                          std::string(fields[2])),
                            Scope::kRuntime, {}, std::nullopt};
      if (fields.size() == 4 && !fields[3].empty()) entry.path = std::filesystem::path(fields[3]);
      builder.add(std::move(entry));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvalidGav) throw;
      throw Error(ErrorCode::kMalformedRow, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return builder.take();
}

std::filesystem::path artifact_relative_path(const GavCoordinate& gav, std::string_view classifier) {
  std::filesystem::path path;
  for (std::string_view part : split(gav.group(), '.')) path /= std::string(part);
  std::string file = gav.artifact() + "-" + gav.version();
  if (!classifier.empty()) file += "-" + std::string(classifier);
  file += ".jar";
  return path / gav.artifact() / gav.version() / file;
}

std::filesystem::path resolve_artifact_path(const std::filesystem::path& repo_root,
                                            const GavCoordinate& gav, std::string_view classifier) {
  const std::filesystem::path path = repo_root / artifact_relative_path(gav, classifier);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kArtifactNotFound, path.string());
  }
  return path;
}

}  // namespace jprov::deps
