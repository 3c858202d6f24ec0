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

#include "jprov/zip.hpp"

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>

#include "jprov/error.hpp"

namespace jprov::archive {
namespace {

constexpr std::uint32_t kLocalHeaderSig = 0x04034b50;
constexpr std::uint32_t kCentralHeaderSig = 0x02014b50;
constexpr std::uint32_t kEndOfCentralDirSig = 0x06054b50;
constexpr std::size_t kEndOfCentralDirSize = 22;
constexpr std::uint16_t kMethodStored = 0;
constexpr std::uint16_t kMethodDeflated = 8;
constexpr std::uint16_t kFlagEncrypted = 0x0001;
constexpr std::uint16_t kFlagUtf8Name = 0x0800;

[[noreturn]] void corrupt(const std::string& what, std::optional<std::size_t> offset = {}) {
  throw Error(ErrorCode::kCorruptArchive, what, offset);
}

std::uint16_t le16(ByteView b, std::size_t at) {
  if (at + 2 > b.size()) corrupt("truncated record", at);
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t le32(ByteView b, std::size_t at) {
  if (at + 4 > b.size()) corrupt("truncated record", at);
  return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

void put16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put32(Bytes& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

std::uint32_t crc_of(ByteView data) {
  uLong crc = crc32(0L, Z_NULL, 0);
  std::size_t done = 0;
  while (done < data.size()) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(data.size() - done, 1u << 30));
    crc = crc32(crc, data.data() + done, chunk);
    done += chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

Bytes inflate_raw(ByteView compressed, std::size_t expected_size, const std::string& name) {
  // One spare byte makes an over-long stream visible as extra output.
  Bytes out(expected_size + 1);
  z_stream zs{};
  if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) corrupt("inflateInit2 failed");
  zs.next_in = const_cast<Bytef*>(compressed.data());
  zs.avail_in = static_cast<uInt>(compressed.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&zs, Z_FINISH);
  const uLong produced = zs.total_out;
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || produced != expected_size) {
    corrupt("entry '" + name + "' does not inflate to its recorded size");
  }
  out.pop_back();
  return out;
}

Bytes deflate_raw(ByteView data) {
  z_stream zs{};
  if (deflateInit2(&zs, kDeflateLevel, Z_DEFLATED, -MAX_WBITS, 8, Z_DEFAULT_STRATEGY) != Z_OK) {
    throw Error(ErrorCode::kIo, "deflateInit2 failed");
  }
  Bytes out(deflateBound(&zs, static_cast<uLong>(data.size())));
  zs.next_in = const_cast<Bytef*>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&zs, Z_FINISH);
  out.resize(zs.total_out);
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) throw Error(ErrorCode::kIo, "deflate failed");
  return out;
}

std::size_t find_end_of_central_dir(ByteView archive) {
  if (archive.size() < kEndOfCentralDirSize) corrupt("too small to be a ZIP archive");
  const std::size_t last = archive.size() - kEndOfCentralDirSize;
  const std::size_t floor = last > 0xFFFF ? last - 0xFFFF : 0;
  for (std::size_t pos = last + 1; pos-- > floor;) {
    if (le32(archive, pos) == kEndOfCentralDirSig &&
        pos + kEndOfCentralDirSize + le16(archive, pos + 20) == archive.size()) {
      return pos;
    }
  }
  corrupt("end of central directory record not found");
}

}  // namespace

std::vector<ZipEntry> read_zip(ByteView archive) {
  const std::size_t eocd = find_end_of_central_dir(archive);
  const std::uint16_t entry_count = le16(archive, eocd + 10);
  const std::uint32_t cd_size = le32(archive, eocd + 12);
  const std::uint32_t cd_offset = le32(archive, eocd + 16);
  if (entry_count == 0xFFFF || cd_offset == 0xFFFFFFFF) corrupt("ZIP64 archives are not supported");
  if (le16(archive, eocd + 4) != 0 || le16(archive, eocd + 6) != 0) {
    corrupt("multi-disk archives are not supported");
  }
  if (static_cast<std::size_t>(cd_offset) + cd_size > eocd) {
    corrupt("central directory lies outside the archive", eocd);
  }

  std::vector<ZipEntry> entries;
  entries.reserve(entry_count);
  std::size_t pos = cd_offset;
  for (std::uint16_t i = 0; i < entry_count; ++i) {
    if (le32(archive, pos) != kCentralHeaderSig) corrupt("bad central directory header", pos);
    const std::uint16_t flags = le16(archive, pos + 8);
    const std::uint16_t method = le16(archive, pos + 10);
    const std::uint32_t crc = le32(archive, pos + 16);
    const std::uint32_t compressed_size = le32(archive, pos + 20);
    const std::uint32_t size = le32(archive, pos + 24);
    const std::uint16_t name_len = le16(archive, pos + 28);
    const std::uint16_t extra_len = le16(archive, pos + 30);
    const std::uint16_t comment_len = le16(archive, pos + 32);
    const std::uint32_t local_offset = le32(archive, pos + 42);
    if (pos + 46 + name_len > archive.size()) corrupt("truncated entry name", pos);
    std::string name(as_chars(archive.subspan(pos + 46, name_len)));
    pos += 46 + name_len + extra_len + comment_len;

    if (flags & kFlagEncrypted) corrupt("encrypted entry '" + name + "'");
    if (compressed_size == 0xFFFFFFFF || size == 0xFFFFFFFF || local_offset == 0xFFFFFFFF) {
      corrupt("ZIP64 entry '" + name + "' is not supported");
    }
    if (le32(archive, local_offset) != kLocalHeaderSig) {
      corrupt("bad local header for '" + name + "'", local_offset);
    }
    const std::size_t data_start = static_cast<std::size_t>(local_offset) + 30 +
                                   le16(archive, local_offset + 26) +
                                   le16(archive, local_offset + 28);
    if (data_start + compressed_size > archive.size()) {
      corrupt("entry '" + name + "' extends past the end of the archive", local_offset);
    }
    const ByteView raw = archive.subspan(data_start, compressed_size);
    ZipEntry entry{std::move(name), {}};
    if (method == kMethodStored) {
      if (compressed_size != size) corrupt("stored entry '" + entry.name + "' has mismatched sizes");
      entry.data.assign(raw.begin(), raw.end());
    } else if (method == kMethodDeflated) {
      entry.data = inflate_raw(raw, size, entry.name);
    } else {
      corrupt("entry '" + entry.name + "' uses unsupported method " + std::to_string(method));
    }
    if (crc_of(entry.data) != crc) corrupt("CRC mismatch in '" + entry.name + "'");
    entries.push_back(std::move(entry));
  }
  return entries;
}

Bytes write_zip(std::span<const ZipEntry> entries) {
  if (entries.size() >= 0xFFFF) {
    throw Error(ErrorCode::kCorruptArchive, "too many entries for a non-ZIP64 archive");
  }
  Bytes out;
  Bytes central;
  for (const ZipEntry& entry : entries) {
    if (entry.name.size() > 0xFFFF) throw Error(ErrorCode::kCorruptArchive, "entry name too long");
    const bool stored = entry.is_directory() && entry.data.empty();
    const Bytes deflated = stored ? Bytes{} : deflate_raw(entry.data);
    const ByteView payload = stored ? ByteView(entry.data) : ByteView(deflated);
    if (entry.data.size() >= 0xFFFFFFFF || payload.size() >= 0xFFFFFFFF ||
        out.size() >= 0xFFFFFFFF) {
      throw Error(ErrorCode::kCorruptArchive, "entry '" + entry.name + "' needs ZIP64");
    }
    const std::uint16_t method = stored ? kMethodStored : kMethodDeflated;
    const std::uint16_t version = stored ? 10 : 20;
    bool ascii = true;
    for (const char c : entry.name) ascii = ascii && static_cast<unsigned char>(c) < 0x80;
    const std::uint16_t flags = ascii ? 0 : kFlagUtf8Name;
    const std::uint32_t crc = crc_of(entry.data);
    const auto local_offset = static_cast<std::uint32_t>(out.size());

    put32(out, kLocalHeaderSig);
    put16(out, version);
    put16(out, flags);
    put16(out, method);
    put16(out, kFixedDosTime);
    put16(out, kFixedDosDate);
    put32(out, crc);
    put32(out, static_cast<std::uint32_t>(payload.size()));
    put32(out, static_cast<std::uint32_t>(entry.data.size()));
    put16(out, static_cast<std::uint16_t>(entry.name.size()));
    put16(out, 0);
    out.insert(out.end(), entry.name.begin(), entry.name.end());
    out.insert(out.end(), payload.begin(), payload.end());

    put32(central, kCentralHeaderSig);
    put16(central, 20);  // made by: MS-DOS, 2.0
    put16(central, version);
    put16(central, flags);
    put16(central, method);
    put16(central, kFixedDosTime);
    put16(central, kFixedDosDate);
    put32(central, crc);
    put32(central, static_cast<std::uint32_t>(payload.size()));
    put32(central, static_cast<std::uint32_t>(entry.data.size()));
    put16(central, static_cast<std::uint16_t>(entry.name.size()));
    put16(central, 0);  // extra
    put16(central, 0);  // comment
    put16(central, 0);  // disk
    put16(central, 0);  // internal attributes
    put32(central, 0);  // external attributes
    put32(central, local_offset);
    central.insert(central.end(), entry.name.begin(), entry.name.end());
  }
  if (out.size() + central.size() >= 0xFFFFFFFF) {
    throw Error(ErrorCode::kCorruptArchive, "archive needs ZIP64");
  }
  const auto cd_offset = static_cast<std::uint32_t>(out.size());
  out.insert(out.end(), central.begin(), central.end());
  put32(out, kEndOfCentralDirSig);
  put16(out, 0);
  put16(out, 0);
  put16(out, static_cast<std::uint16_t>(entries.size()));
  put16(out, static_cast<std::uint16_t>(entries.size()));
  put32(out, static_cast<std::uint32_t>(central.size()));
  put32(out, cd_offset);
  put16(out, 0);
  return out;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed for " + path.string());
  return data;
}

void write_file(const std::filesystem::path& path, ByteView data) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace jprov::archive
