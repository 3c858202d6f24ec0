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

#include "jprov/jar.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "jprov/classfile.hpp"
#include "jprov/error.hpp"
#include "jprov/manifest.hpp"
#include "jprov/zip.hpp"

namespace jprov::archive {
namespace {

constexpr std::string_view kMetaInf = "META-INF/";
constexpr std::string_view kManifestPath = "META-INF/MANIFEST.MF";

bool ends_with_icase(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         std::equal(suffix.begin(), suffix.end(), s.end() - static_cast<std::ptrdiff_t>(suffix.size()),
                    [](char a, char b) {
                      return std::toupper(static_cast<unsigned char>(a)) ==
                             std::toupper(static_cast<unsigned char>(b));
                    });
}

bool starts_with_icase(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && ends_with_icase(s.substr(0, prefix.size()), prefix);
}

bool is_class_format_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadMagic:
    case ErrorCode::kTruncatedInput:
    case ErrorCode::kUnknownConstantTag:
    case ErrorCode::kUnsupportedMajorVersion:
    case ErrorCode::kIndexOutOfPool:
    case ErrorCode::kWrongConstantType:
    case ErrorCode::kTrailingData:
    case ErrorCode::kMalformedUtf8:
    case ErrorCode::kMalformedAttribute:
    case ErrorCode::kMalformedAnnotation:
    case ErrorCode::kPoolOverflow:
    case ErrorCode::kAttributeTooLarge:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string_view entry_kind_name(EntryKind kind) {
  switch (kind) {
    case EntryKind::kClass: return "class";
    case EntryKind::kManifest: return "manifest";
    case EntryKind::kSignature: return "signature";
    case EntryKind::kOther: return "other";
  }
  return "?";
}

EntryKind classify_entry(std::string_view name) {
  if (name == kManifestPath) return EntryKind::kManifest;
  if (name.starts_with(kMetaInf)) {
    const std::string_view file = name.substr(kMetaInf.size());
    if (!file.empty() && file.find('/') == std::string_view::npos) {
      for (std::string_view suffix : {".SF", ".RSA", ".DSA", ".EC"}) {
        if (ends_with_icase(file, suffix)) return EntryKind::kSignature;
      }
      if (starts_with_icase(file, "SIG-")) return EntryKind::kSignature;
    }
  }
  if (name.ends_with(".class")) return EntryKind::kClass;
  return EntryKind::kOther;
}

bool is_module_descriptor(std::string_view name) {
  constexpr std::string_view kFile = "module-info.class";
  constexpr std::string_view kVersions = "META-INF/versions/";
  if (name == kFile) return true;
  if (!name.starts_with(kVersions) || !name.ends_with(kFile)) return false;
  const std::string_view version =
      name.substr(kVersions.size(), name.size() - kVersions.size() - kFile.size());
  return version.size() >= 2 && version.back() == '/' &&
         version.find('/') == version.size() - 1;
}

ProcessedJar process_jar(ByteView input, const GavCoordinate& gav, const JarOptions& options) {
  classfile::validate_object_descriptor(options.descriptor);
  const std::vector<ZipEntry> entries = read_zip(input);

  JarReport report{.gav = gav};
  std::vector<ZipEntry> output;
  std::vector<ZipEntry> baseline;
  output.reserve(entries.size());
  baseline.reserve(entries.size());

  for (const ZipEntry& entry : entries) {
    switch (classify_entry(entry.name)) {
      case EntryKind::kSignature:
        ++report.signature_entries_removed;
        break;
      case EntryKind::kManifest: {
        const std::string sanitized = sanitize_manifest(as_chars(entry.data));
        ZipEntry cleaned{entry.name, Bytes(sanitized.begin(), sanitized.end())};
        baseline.push_back(cleaned);
        output.push_back(std::move(cleaned));
        break;
      }
      case EntryKind::kClass: {
        ++report.classes_total;
        baseline.push_back(entry);
        if (is_module_descriptor(entry.name)) {
          ++report.classes_skipped;
          ++report.module_descriptors;
          output.push_back(entry);
          break;
        }
        try {
          const classfile::ClassFile cf = classfile::parse_class(entry.data);
          const classfile::ClassFile annotated =
              classfile::inject_annotation(cf, gav, options.descriptor, options.on_existing);
          output.push_back(ZipEntry{entry.name, classfile::serialize_class(annotated)});
          ++report.classes_annotated;
        } catch (const Error& e) {
          if (!options.lenient || !is_class_format_error(e.code())) {
            throw Error(e.code(), "entry " + entry.name + ": " + e.message(), e.offset());
          }
          ++report.classes_skipped;
          report.warnings.push_back("skipped " + entry.name + ": " + e.what());
          output.push_back(entry);
        }
        break;
      }
      case EntryKind::kOther:
        baseline.push_back(entry);
        output.push_back(entry);
        break;
    }
  }

  ProcessedJar result{write_zip(output), std::move(report)};
  result.report.bytes_before = write_zip(entries).size();
  result.report.bytes_after = result.archive.size();
  const std::uint64_t baseline_size = write_zip(baseline).size();
  result.report.signature_bytes_removed =
      result.report.bytes_before > baseline_size ? result.report.bytes_before - baseline_size : 0;
  return result;
}

MergeResult merge_archives(std::span<const Bytes> inputs) {
  if (inputs.empty()) throw Error(ErrorCode::kCorruptArchive, "nothing to merge");
  MergeResult result;
  std::vector<ZipEntry> merged;
  std::set<std::string, std::less<>> seen;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (ZipEntry& entry : read_zip(inputs[i])) {
      const EntryKind kind = classify_entry(entry.name);
      if (kind == EntryKind::kSignature) continue;
      if (!seen.insert(entry.name).second) {
        if (!entry.is_directory()) {
          result.warnings.push_back("duplicate entry " + entry.name + " in input " +
                                    std::to_string(i + 1) + " ignored");
        }
        continue;
      }
      if (kind == EntryKind::kManifest) {
        const std::string sanitized = sanitize_manifest(as_chars(entry.data));
        entry.data.assign(sanitized.begin(), sanitized.end());
      }
      merged.push_back(std::move(entry));
    }
  }
  result.archive = write_zip(merged);
  return result;
}

}  // namespace jprov::archive
