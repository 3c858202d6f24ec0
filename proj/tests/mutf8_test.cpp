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

#include <gtest/gtest.h>

#include "jprov/error.hpp"

namespace jprov {
namespace {

TEST(ModifiedUtf8, AsciiIsUnchanged) {
  EXPECT_EQ(encode_modified_utf8("org.apache.pdfbox"), "org.apache.pdfbox");
  EXPECT_EQ(decode_modified_utf8("org.apache.pdfbox"), "org.apache.pdfbox");
}

TEST(ModifiedUtf8, NulUsesTwoByteForm) {
  const std::string with_nul("a\0b", 3);
  EXPECT_EQ(encode_modified_utf8(with_nul), "a\xC0\x80"
                                            "b");
  EXPECT_EQ(decode_modified_utf8("a\xC0\x80"
                                 "b"),
            with_nul);
}

TEST(ModifiedUtf8, SupplementaryCharacterBecomesSurrogatePair) {
  // U+1D11E MUSICAL SYMBOL G CLEF: D834 DD1E as two 3-byte sequences.
  const std::string clef = "\xF0\x9D\x84\x9E";
  const std::string modified = "\xED\xA0\xB4\xED\xB4\x9E";
  EXPECT_EQ(encode_modified_utf8(clef), modified);
  EXPECT_EQ(decode_modified_utf8(modified), clef);
}

TEST(ModifiedUtf8, BmpCharactersMatchStandardUtf8) {
  const std::string text = "caf\xC3\xA9 \xE2\x82\xAC";
  EXPECT_EQ(encode_modified_utf8(text), text);
  EXPECT_EQ(decode_modified_utf8(text), text);
}

TEST(ModifiedUtf8, RejectsMalformedInput) {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code_of([] { encode_modified_utf8("\xFF"); }), ErrorCode::kMalformedUtf8);
  EXPECT_EQ(code_of([] { encode_modified_utf8("\xC3"); }), ErrorCode::kMalformedUtf8);
  EXPECT_EQ(code_of([] { decode_modified_utf8(std::string("\0", 1)); }),
            ErrorCode::kMalformedUtf8);
  EXPECT_EQ(code_of([] { decode_modified_utf8("\xED\xA0\xB4"); }), ErrorCode::kMalformedUtf8);
}

}  // namespace
}  // namespace jprov
