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

#ifndef JPROV_MANIFEST_HPP_
#define JPROV_MANIFEST_HPP_

#include <string>
#include <string_view>

namespace jprov::archive {

// Removes signing material from a JAR manifest: attributes named "Magic" or
// ending in "-Digest" / "-Digest-Manifest" (case-insensitive) are dropped
// from every section, and per-entry sections left holding only their
// "Name:" attribute are dropped with their separator lines. All retained
// lines, including continuation lines and line terminators, are copied
// byte-for-byte. Throws kMalformedManifest for a continuation line with no
// preceding attribute.
std::string sanitize_manifest(std::string_view manifest);

// True if `name` is one of the attribute names stripped above.
bool is_signature_attribute(std::string_view name);

}  // namespace jprov::archive

#endif  // JPROV_MANIFEST_HPP_
