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

#include <gtest/gtest.h>

#include "jprov/analysis.hpp"
#include "jprov/error.hpp"
#include "jprov/zip.hpp"
#include "support/test_support.hpp"

namespace jprov::deps {
namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kIo;
}

TEST(Gav, ValidationAndFormatting) {
  const GavCoordinate gav("info.picocli", "picocli", "4.7.6");
  EXPECT_EQ(gav.to_string(), "info.picocli:picocli:4.7.6");
  EXPECT_EQ(gav.to_csv_row(), "info.picocli,picocli,4.7.6");
  EXPECT_EQ(GavCoordinate::parse("info.picocli:picocli:4.7.6"), gav);
  EXPECT_EQ(error_of([] { GavCoordinate("", "a", "1"); }), ErrorCode::kInvalidGav);
  EXPECT_EQ(error_of([] { GavCoordinate("g", "a,b", "1"); }), ErrorCode::kInvalidGav);
  EXPECT_EQ(error_of([] { GavCoordinate("g", "a", "1\n"); }), ErrorCode::kInvalidGav);
  EXPECT_EQ(error_of([] { GavCoordinate::parse("g:a"); }), ErrorCode::kInvalidGav);
}

TEST(DependencyList, ParsesIndentedLine) {
  const auto m = parse_dependency_list("    org.apache.commons:commons-lang3:jar:3.12.0:compile");
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].gav, GavCoordinate("org.apache.commons", "commons-lang3", "3.12.0"));
  EXPECT_EQ(m.entries[0].scope, Scope::kCompile);
}

TEST(DependencyList, EmptyInput) { EXPECT_TRUE(parse_dependency_list("").entries.empty()); }

TEST(DependencyList, ConflictingVersions) {
  EXPECT_EQ(error_of([] {
              parse_dependency_list("g:a:jar:1.0:compile\ng:a:jar:2.0:runtime\n");
            }),
            ErrorCode::kConflictingVersions);
}

TEST(DependencyList, ToleratesDecorationAndClassifiers) {
  const std::string text =
      "[INFO] --- dependency:3.6.0:list (default-cli) @ app ---\n"
      "[INFO] The following files have been resolved:\n"
      "[INFO]    info.picocli:picocli:jar:4.7.6:compile -- module info.picocli\n"
      "[INFO]    org.lwjgl:lwjgl:jar:natives-linux:3.3.1:runtime\n"
      "[INFO]    junit:junit:jar:4.13.2:test\n"
      "[INFO]    info.picocli:picocli:jar:4.7.6:compile\n"
      "[INFO] BUILD SUCCESS\n";
  const auto m = parse_dependency_list(text);
  ASSERT_EQ(m.entries.size(), 3u);
  EXPECT_EQ(m.entries[1].gav, GavCoordinate("org.lwjgl", "lwjgl", "3.3.1"));
  EXPECT_EQ(m.entries[1].classifier, "natives-linux");
  EXPECT_EQ(m.entries[2].scope, Scope::kTest);
  EXPECT_EQ(m.filtered().entries.size(), 2u);
}

TEST(CsvManifest, ParsesRow) {
  const auto m = parse_csv_manifest("info.picocli,picocli,4.7.6\n");
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].gav, GavCoordinate("info.picocli", "picocli", "4.7.6"));
  EXPECT_EQ(m.entries[0].scope, Scope::kRuntime);
  EXPECT_FALSE(m.entries[0].path.has_value());
}

TEST(CsvManifest, OptionalPathAndBlankLines) {
  const auto m = parse_csv_manifest("\r\ng,a,1,/tmp/a.jar\r\n\r\ng,b,2\r\n");
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries[0].path, std::filesystem::path("/tmp/a.jar"));
}

TEST(CsvManifest, RowWithTwoFieldsIsMalformed) {
  try {
    parse_csv_manifest("g,a,1\ng,b\n");
    FAIL() << "accepted short row";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedRow);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_EQ(error_of([] { parse_csv_manifest("g,,1\n"); }), ErrorCode::kMalformedRow);
}

TEST(CsvManifest, RoundTripWithRuntimeWriter) {
  analysis::RuntimeDependencySet deps;
  deps.gavs = {GavCoordinate("org.apache.pdfbox", "pdfbox", "3.0.4"),
               GavCoordinate("info.picocli", "picocli", "4.7.6"),
               GavCoordinate("commons-logging", "commons-logging", "1.3.4")};
  const auto parsed = parse_csv_manifest(analysis::write_runtime_csv(deps));
  EXPECT_EQ(parsed.gavs(), deps.as_set());
}

TEST(Scopes, ParseList) {
  EXPECT_EQ(parse_scope_list("compile, runtime"),
            (std::set<Scope>{Scope::kCompile, Scope::kRuntime}));
  EXPECT_EQ(error_of([] { parse_scope_list("compile,bogus"); }), ErrorCode::kMalformedRow);
  EXPECT_EQ(runtime_scopes(), (std::set<Scope>{Scope::kCompile, Scope::kRuntime, Scope::kSystem}));
}

TEST(ResolveArtifact, RepositoryLayout) {
  const GavCoordinate pdfbox("org.apache.pdfbox", "pdfbox", "3.0.4");
  EXPECT_EQ(artifact_relative_path(pdfbox),
            std::filesystem::path("org/apache/pdfbox/pdfbox/3.0.4/pdfbox-3.0.4.jar"));
  EXPECT_EQ(artifact_relative_path(pdfbox, "sources"),
            std::filesystem::path("org/apache/pdfbox/pdfbox/3.0.4/pdfbox-3.0.4-sources.jar"));
}

TEST(ResolveArtifact, MissingArtifact) {
  jprov::testing::TempDir repo;
  try {
    resolve_artifact_path(repo.path(), GavCoordinate("a", "b", "1"));
    FAIL() << "resolved a missing artifact";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArtifactNotFound);
    EXPECT_NE(std::string(e.what()).find("b-1.jar"), std::string::npos);
  }
}

TEST(ResolveArtifact, HarnessRepositoryOpens) {
  jprov::testing::TempDir repo;
  const GavCoordinate gav("com.acme", "tools", "0.9");
  archive::write_file(repo.path() / artifact_relative_path(gav),
                      jprov::testing::make_jar({"com/acme/Tool"}));
  const auto path = resolve_artifact_path(repo.path(), gav);
  EXPECT_EQ(archive::read_zip(archive::read_file(path)).size(), 2u);
}

}  // namespace
}  // namespace jprov::deps
