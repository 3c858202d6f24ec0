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

// Minimal ZIP container support for JAR rewriting: stored and deflated
// entries, no ZIP64, no encryption. Output is deterministic: every entry
// gets the same timestamp and no extra fields.

#ifndef JPROV_ZIP_HPP_
#define JPROV_ZIP_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "jprov/bytes.hpp"

namespace jprov::archive {

// DOS date/time written for every entry: 1980-01-01 00:00:00.
inline constexpr std::uint16_t kFixedDosDate = (0 << 9) | (1 << 5) | 1;
inline constexpr std::uint16_t kFixedDosTime = 0;
inline constexpr int kDeflateLevel = 6;

struct ZipEntry {
  std::string name;
  Bytes data;  // uncompressed content

  bool is_directory() const noexcept { return !name.empty() && name.back() == '/'; }
  friend bool operator==(const ZipEntry&, const ZipEntry&) = default;
};

// Entries in central-directory order. Throws kCorruptArchive.
std::vector<ZipEntry> read_zip(ByteView archive);

// Directories are stored, everything else deflated at kDeflateLevel.
Bytes write_zip(std::span<const ZipEntry> entries);

// Whole-file helpers; throw Error(kIo).
Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, ByteView data);

}  // namespace jprov::archive

#endif  // JPROV_ZIP_HPP_
