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

#include "jprov/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "jprov/error.hpp"

namespace jprov::archive {
namespace {

struct Attribute {
  std::string name;
  std::string text;  // header line plus continuation lines, with terminators
};

struct Section {
  std::vector<Attribute> attributes;
  std::string separator;  // blank lines that follow the section
};

bool iequals_suffix(std::string_view s, std::string_view suffix) {
  if (s.size() < suffix.size()) return false;
  return std::equal(suffix.begin(), suffix.end(), s.end() - static_cast<std::ptrdiff_t>(suffix.size()),
                    [](char a, char b) {
                      return std::tolower(static_cast<unsigned char>(a)) ==
                             std::tolower(static_cast<unsigned char>(b));
                    });
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && iequals_suffix(a, b);
}

// Splits into lines, each keeping its terminator (CRLF, LF or CR).
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = start;
    while (end < text.size() && text[end] != '\n' && text[end] != '\r') ++end;
    if (end < text.size()) {
      end += (text[end] == '\r' && end + 1 < text.size() && text[end + 1] == '\n') ? 2 : 1;
    }
    lines.push_back(text.substr(start, end - start));
    start = end;
  }
  return lines;
}

std::string_view content_of(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  return line;
}

}  // namespace

bool is_signature_attribute(std::string_view name) {
  return iequals(name, "Magic") || iequals_suffix(name, "-Digest") ||
         iequals_suffix(name, "-Digest-Manifest");
}

std::string sanitize_manifest(std::string_view manifest) {
  std::vector<Section> sections(1);
  std::size_t line_no = 0;
  for (const std::string_view line : split_lines(manifest)) {
    ++line_no;
    const std::string_view content = content_of(line);
    Section& current = sections.back();
    if (content.empty()) {
      current.separator.append(line);
      continue;
    }
    if (content.front() == ' ') {
      if (current.attributes.empty() || !current.separator.empty()) {
        throw Error(ErrorCode::kMalformedManifest,
                    "continuation line " + std::to_string(line_no) + " has no preceding attribute");
      }
      current.attributes.back().text.append(line);
      continue;
    }
    if (!current.separator.empty()) sections.emplace_back();
    const std::size_t colon = content.find(':');
    sections.back().attributes.push_back(
        Attribute{std::string(content.substr(0, colon)), std::string(line)});
  }

  std::string out;
  out.reserve(manifest.size());
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const Section& section = sections[i];
    std::vector<const Attribute*> kept;
    for (const auto& attribute : section.attributes) {
      if (!is_signature_attribute(attribute.name)) kept.push_back(&attribute);
    }
    const bool stripped = kept.size() != section.attributes.size();
    const bool only_name = kept.size() == 1 && iequals(kept.front()->name, "Name");
    if (i > 0 && stripped && (kept.empty() || only_name)) continue;
    for (const Attribute* attribute : kept) out += attribute->text;
    out += section.separator;
  }
  return out;
}

}  // namespace jprov::archive
