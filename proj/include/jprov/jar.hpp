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

// Dependency-archive rewriting: every class is annotated with the archive's
// coordinate, signing material is stripped, everything else is copied.

#ifndef JPROV_JAR_HPP_
#define JPROV_JAR_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jprov/annotation.hpp"
#include "jprov/bytes.hpp"
#include "jprov/gav.hpp"

namespace jprov::archive {

enum class EntryKind { kClass, kManifest, kSignature, kOther };

std::string_view entry_kind_name(EntryKind kind);

// Total classification of an archive entry path:
//   kManifest   exactly "META-INF/MANIFEST.MF"
//   kSignature  "META-INF/<file>" ending in .SF/.RSA/.DSA/.EC (any case) or
//               named SIG-*, directly under META-INF
//   kClass      ends with ".class"
//   kOther      everything else, including nested archives and directories
EntryKind classify_entry(std::string_view name);

// True for "module-info.class" at the root or in a versioned directory.
bool is_module_descriptor(std::string_view name);

struct JarOptions {
  std::string descriptor{classfile::kDefaultProvenanceDescriptor};
  classfile::OnExisting on_existing = classfile::OnExisting::kError;
  // Lenient: classes that fail to parse (including unsupported majors) are
  // copied verbatim with a warning instead of failing the archive.
  bool lenient = true;
};

// Sizes are of archives written with the fixed compressor (write_zip), so
// before/after compare content, not the input's compression choices.
struct JarReport {
  GavCoordinate gav;
  std::size_t classes_total = 0;
  std::size_t classes_annotated = 0;
  std::size_t classes_skipped = 0;
  // Module descriptors among classes_skipped; they carry no provenance.
  std::size_t module_descriptors = 0;
  std::size_t signature_entries_removed = 0;
  // Repacked input, all entries unchanged.
  std::uint64_t bytes_before = 0;
  // Output archive.
  std::uint64_t bytes_after = 0;
  // bytes_before minus the repacked input with signing material removed
  // but classes unannotated.
  std::uint64_t signature_bytes_removed = 0;
  std::vector<std::string> warnings{};
};

struct ProcessedJar {
  Bytes archive;
  JarReport report;
};

// Throws kCorruptArchive for unreadable input, kAlreadyAnnotated under the
// kError policy, and class-format errors in strict mode.
ProcessedJar process_jar(ByteView input, const GavCoordinate& gav, const JarOptions& options = {});

struct MergeResult {
  Bytes archive;
  std::vector<std::string> warnings;
};

// Union of entries in input order; the first occurrence of a name wins.
// Signature entries are dropped and the surviving manifest is sanitized.
MergeResult merge_archives(std::span<const Bytes> inputs);

}  // namespace jprov::archive

#endif  // JPROV_JAR_HPP_
