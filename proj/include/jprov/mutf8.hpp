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

#ifndef JPROV_MUTF8_HPP_
#define JPROV_MUTF8_HPP_

#include <string>
#include <string_view>

namespace jprov {

// Conversions between standard UTF-8 and the JVM's modified UTF-8: U+0000 is
// written as C0 80 and supplementary characters as a pair of 3-byte encoded
// surrogates. Both directions throw Error(kMalformedUtf8) on invalid input.
std::string encode_modified_utf8(std::string_view utf8);
std::string decode_modified_utf8(std::string_view modified);

}  // namespace jprov

#endif  // JPROV_MUTF8_HPP_
