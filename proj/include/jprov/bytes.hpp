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

#ifndef JPROV_BYTES_HPP_
#define JPROV_BYTES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jprov/error.hpp"

namespace jprov {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline ByteView as_bytes(std::string_view s) noexcept {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline std::string_view as_chars(ByteView b) noexcept {
  return {reinterpret_cast<const char*>(b.data()), b.size()};
}

// Big-endian cursor over a byte range, as used by the class-file format.
// Reads past the end throw Error(kTruncatedInput) with the failing offset.
class ByteReader {
 public:
  explicit ByteReader(ByteView data, std::size_t base_offset = 0) noexcept
      : data_(data), base_(base_offset) {}

  std::uint8_t u1() {
    require(1);
    return data_[pos_++];
  }
  std::uint16_t u2() {
    require(2);
    std::uint16_t v = static_cast<std::uint16_t>((data_[pos_] << 8) | data_[pos_ + 1]);
    pos_ += 2;
    return v;
  }
  std::uint32_t u4() {
    require(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_ + i];
    pos_ += 4;
    return v;
  }
  std::uint64_t u8() {
    const std::uint64_t hi = u4();
    return (hi << 32) | u4();
  }
  ByteView take(std::size_t n) {
    require(n);
    ByteView out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::size_t position() const noexcept { return pos_; }
  // Offset relative to the outermost buffer, for diagnostics.
  std::size_t offset() const noexcept { return base_ + pos_; }
  std::size_t remaining() const noexcept { return data_.size() - pos_; }
  bool at_end() const noexcept { return pos_ == data_.size(); }

 private:
  void require(std::size_t n) const {
    if (data_.size() - pos_ < n) {
      throw Error(ErrorCode::kTruncatedInput,
                  "need " + std::to_string(n) + " byte(s), " +
                      std::to_string(data_.size() - pos_) + " left",
                  base_ + pos_);
    }
  }

  ByteView data_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

class ByteWriter {
 public:
  void u1(std::uint8_t v) { out_.push_back(v); }
  void u2(std::uint16_t v) {
    out_.push_back(static_cast<std::uint8_t>(v >> 8));
    out_.push_back(static_cast<std::uint8_t>(v));
  }
  void u4(std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
  void u8(std::uint64_t v) {
    u4(static_cast<std::uint32_t>(v >> 32));
    u4(static_cast<std::uint32_t>(v));
  }
  void put(ByteView b) { out_.insert(out_.end(), b.begin(), b.end()); }

  std::size_t size() const noexcept { return out_.size(); }
  Bytes& bytes() noexcept { return out_; }
  Bytes take() noexcept { return std::move(out_); }

 private:
  Bytes out_;
};

}  // namespace jprov

#endif  // JPROV_BYTES_HPP_
