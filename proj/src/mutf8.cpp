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

#include "jprov/mutf8.hpp"

#include <cstdint>

#include "jprov/error.hpp"

namespace jprov {
namespace {

[[noreturn]] void malformed(std::string_view what, std::size_t offset) {
  throw Error(ErrorCode::kMalformedUtf8, std::string(what), offset);
}

void put_three_byte(std::string& out, std::uint32_t unit) {
  out.push_back(static_cast<char>(0xE0 | (unit >> 12)));
  out.push_back(static_cast<char>(0x80 | ((unit >> 6) & 0x3F)));
  out.push_back(static_cast<char>(0x80 | (unit & 0x3F)));
}

void put_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    put_three_byte(out, cp);
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::uint8_t byte_at(std::string_view s, std::size_t i) {
  return static_cast<std::uint8_t>(s[i]);
}

bool is_continuation(std::string_view s, std::size_t i) {
  return i < s.size() && (byte_at(s, i) & 0xC0) == 0x80;
}

}  // namespace

std::string encode_modified_utf8(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) {
    const std::uint8_t b0 = byte_at(utf8, i);
    std::uint32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      malformed("invalid UTF-8 lead byte", i);
    }
    for (std::size_t k = 1; k < len; ++k) {
      if (!is_continuation(utf8, i + k)) malformed("truncated UTF-8 sequence", i);
      cp = (cp << 6) | (byte_at(utf8, i + k) & 0x3F);
    }
    static constexpr std::uint32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      malformed("overlong or out-of-range UTF-8 sequence", i);
    }
    i += len;

    if (cp == 0) {
      out.push_back(static_cast<char>(0xC0));
      out.push_back(static_cast<char>(0x80));
    } else if (cp < 0x10000) {
      put_utf8(out, cp);
    } else {
      const std::uint32_t v = cp - 0x10000;
      put_three_byte(out, 0xD800 | (v >> 10));
      put_three_byte(out, 0xDC00 | (v & 0x3FF));
    }
  }
  return out;
}

std::string decode_modified_utf8(std::string_view modified) {
  std::string out;
  out.reserve(modified.size());
  std::size_t i = 0;
  // Decodes one UTF-16 unit starting at i.
  auto next_unit = [&](std::size_t& pos) -> std::uint32_t {
    const std::uint8_t b0 = byte_at(modified, pos);
    if (b0 == 0) malformed("raw NUL byte", pos);
    if (b0 < 0x80) {
      pos += 1;
      return b0;
    }
    if ((b0 & 0xE0) == 0xC0) {
      if (!is_continuation(modified, pos + 1)) malformed("truncated 2-byte form", pos);
      const std::uint32_t unit = ((b0 & 0x1Fu) << 6) | (byte_at(modified, pos + 1) & 0x3F);
      if (unit != 0 && unit < 0x80) malformed("overlong 2-byte form", pos);
      pos += 2;
      return unit;
    }
    if ((b0 & 0xF0) == 0xE0) {
      if (!is_continuation(modified, pos + 1) || !is_continuation(modified, pos + 2)) {
        malformed("truncated 3-byte form", pos);
      }
      const std::uint32_t unit = ((b0 & 0x0Fu) << 12) |
                                 ((byte_at(modified, pos + 1) & 0x3Fu) << 6) |
                                 (byte_at(modified, pos + 2) & 0x3F);
      if (unit < 0x800) malformed("overlong 3-byte form", pos);
      pos += 3;
      return unit;
    }
    malformed("invalid modified UTF-8 lead byte", pos);
  };

  while (i < modified.size()) {
    const std::size_t start = i;
    const std::uint32_t unit = next_unit(i);
    if (unit >= 0xD800 && unit <= 0xDBFF && i < modified.size()) {
      std::size_t look = i;
      if (byte_at(modified, look) == 0xED) {
        const std::uint32_t low = next_unit(look);
        if (low >= 0xDC00 && low <= 0xDFFF) {
          put_utf8(out, 0x10000 + ((unit - 0xD800) << 10) + (low - 0xDC00));
          i = look;
          continue;
        }
      }
    }
    if (unit >= 0xD800 && unit <= 0xDFFF) malformed("unpaired surrogate", start);
    put_utf8(out, unit);
  }
  return out;
}

}  // namespace jprov
