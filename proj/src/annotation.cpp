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

#include "jprov/annotation.hpp"

#include <limits>

#include "jprov/error.hpp"
#include "jprov/mutf8.hpp"

namespace jprov::classfile {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedAnnotation, what);
}

void skip_annotation(ByteReader& in);

void skip_element_value(ByteReader& in) {
  const char tag = static_cast<char>(in.u1());
  switch (tag) {
    case 'B': case 'C': case 'D': case 'F': case 'I': case 'J': case 'S': case 'Z': case 's':
    case 'c':
      in.u2();
      break;
    case 'e':
      in.u2();
      in.u2();
      break;
    case '@':
      skip_annotation(in);
      break;
    case '[': {
      const std::uint16_t n = in.u2();
      for (std::uint16_t i = 0; i < n; ++i) skip_element_value(in);
      break;
    }
    default:
      malformed(std::string("unknown element_value tag '") + tag + "'");
  }
}

void skip_annotation(ByteReader& in) {
  in.u2();  // type_index
  const std::uint16_t pairs = in.u2();
  for (std::uint16_t i = 0; i < pairs; ++i) {
    in.u2();  // element_name_index
    skip_element_value(in);
  }
}

bool is_runtime_visible(const ClassFile& cf, const AttributeRecord& attribute) {
  const auto tag = cf.constant_pool.tag_at(attribute.name_index);
  return tag == ConstantTag::kUtf8 &&
         cf.constant_pool.utf8_at(attribute.name_index) == kRuntimeVisibleAnnotations;
}

std::string type_of(const ClassFile& cf, const RawAnnotation& annotation) {
  if (cf.constant_pool.tag_at(annotation.type_index) != ConstantTag::kUtf8) {
    malformed("type_index #" + std::to_string(annotation.type_index) + " is not a Utf8 entry");
  }
  return cf.constant_pool.utf8_at(annotation.type_index);
}

}  // namespace

AnnotationRecord provenance_record(const GavCoordinate& gav, std::string_view descriptor) {
  return AnnotationRecord{std::string(descriptor),
                          {{std::string(kGroupElement), gav.group()},
                           {std::string(kVersionElement), gav.version()},
                           {std::string(kArtifactElement), gav.artifact()}}};
}

std::vector<RawAnnotation> split_annotations(ByteView payload) {
  std::vector<RawAnnotation> out;
  try {
    ByteReader in(payload);
    const std::uint16_t count = in.u2();
    out.reserve(count);
    for (std::uint16_t i = 0; i < count; ++i) {
      const std::size_t start = in.position();
      ByteReader peek(payload.subspan(start));
      const std::uint16_t type_index = peek.u2();
      skip_annotation(in);
      const ByteView encoded = payload.subspan(start, in.position() - start);
      out.push_back(RawAnnotation{type_index, Bytes(encoded.begin(), encoded.end())});
    }
    if (!in.at_end()) {
      malformed(std::to_string(in.remaining()) + " trailing byte(s) in annotations attribute");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTruncatedInput) malformed("truncated annotations attribute");
    throw;
  }
  return out;
}

AnnotationRecord decode_string_annotation(const ClassFile& cf, const RawAnnotation& annotation) {
  AnnotationRecord record;
  record.type_descriptor = decode_modified_utf8(type_of(cf, annotation));
  try {
    ByteReader in(annotation.encoded);
    in.u2();
    const std::uint16_t pairs = in.u2();
    for (std::uint16_t i = 0; i < pairs; ++i) {
      const std::uint16_t name_index = in.u2();
      const char tag = static_cast<char>(in.u1());
      if (tag != 's') {
        malformed(std::string("element value tag '") + tag + "' is not a string constant");
      }
      const std::uint16_t value_index = in.u2();
      if (cf.constant_pool.tag_at(name_index) != ConstantTag::kUtf8 ||
          cf.constant_pool.tag_at(value_index) != ConstantTag::kUtf8) {
        malformed("element refers to a non-Utf8 constant");
      }
      record.pairs.emplace_back(decode_modified_utf8(cf.constant_pool.utf8_at(name_index)),
                                decode_modified_utf8(cf.constant_pool.utf8_at(value_index)));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTruncatedInput) malformed("truncated annotation");
    throw;
  }
  return record;
}

std::vector<std::string> class_annotation_types(const ClassFile& cf) {
  std::vector<std::string> types;
  for (const auto& attribute : cf.attributes) {
    if (!is_runtime_visible(cf, attribute)) continue;
    for (const auto& annotation : split_annotations(attribute.payload)) {
      types.push_back(decode_modified_utf8(type_of(cf, annotation)));
    }
  }
  return types;
}

std::size_t runtime_visible_attribute_count(const ClassFile& cf) {
  std::size_t n = 0;
  for (const auto& attribute : cf.attributes) n += is_runtime_visible(cf, attribute) ? 1 : 0;
  return n;
}

void validate_object_descriptor(std::string_view descriptor) {
  const bool ok = descriptor.size() >= 3 && descriptor.front() == 'L' &&
                  descriptor.back() == ';' &&
                  descriptor.substr(1, descriptor.size() - 2).find_first_of(".;[") ==
                      std::string_view::npos &&
                  descriptor[1] != '/' && descriptor[descriptor.size() - 2] != '/' &&
                  descriptor.find("//") == std::string_view::npos;
  if (!ok) {
    throw Error(ErrorCode::kInvalidDescriptor,
                "'" + std::string(descriptor) + "' is not an object type descriptor");
  }
}

ClassFile inject_annotation(ClassFile cf, const GavCoordinate& gav, std::string_view descriptor,
                            OnExisting on_existing) {
  validate_object_descriptor(descriptor);
  const std::string wanted = encode_modified_utf8(descriptor);

  std::vector<std::size_t> attribute_positions;
  std::vector<RawAnnotation> kept;
  for (std::size_t i = 0; i < cf.attributes.size(); ++i) {
    if (!is_runtime_visible(cf, cf.attributes[i])) continue;
    attribute_positions.push_back(i);
    for (auto& annotation : split_annotations(cf.attributes[i].payload)) {
      if (type_of(cf, annotation) == wanted) {
        if (on_existing == OnExisting::kError) {
          throw Error(ErrorCode::kAlreadyAnnotated,
                      "class " + decode_modified_utf8(cf.internal_name()) + " already carries " +
                          std::string(descriptor));
        }
        continue;
      }
      kept.push_back(std::move(annotation));
    }
  }
  if (kept.size() + 1 > std::numeric_limits<std::uint16_t>::max()) {
    malformed("too many annotations");
  }

  const AnnotationRecord record = provenance_record(gav, descriptor);
  ByteWriter annotation;
  annotation.u2(intern_utf8(cf, record.type_descriptor));
  annotation.u2(static_cast<std::uint16_t>(record.pairs.size()));
  for (const auto& [name, value] : record.pairs) {
    annotation.u2(intern_utf8(cf, name));
    annotation.u1('s');
    annotation.u2(intern_utf8(cf, value));
  }

  ByteWriter payload;
  payload.u2(static_cast<std::uint16_t>(kept.size() + 1));
  for (const auto& existing : kept) payload.put(existing.encoded);
  payload.put(annotation.bytes());

  if (attribute_positions.empty()) {
    const std::uint16_t name_index = intern_utf8(cf, kRuntimeVisibleAnnotations);
    cf.attributes.push_back(AttributeRecord{name_index, payload.take()});
  } else {
    cf.attributes[attribute_positions.front()].payload = payload.take();
    // Fold duplicates into the first attribute; erase back to front.
    for (auto it = attribute_positions.rbegin(); it + 1 != attribute_positions.rend(); ++it) {
      cf.attributes.erase(cf.attributes.begin() + static_cast<std::ptrdiff_t>(*it));
    }
  }
  return cf;
}

std::optional<GavCoordinate> read_annotation(const ClassFile& cf, std::string_view descriptor) {
  const std::string wanted = encode_modified_utf8(descriptor);
  for (const auto& attribute : cf.attributes) {
    if (!is_runtime_visible(cf, attribute)) continue;
    for (const auto& annotation : split_annotations(attribute.payload)) {
      if (type_of(cf, annotation) != wanted) continue;
      const AnnotationRecord record = decode_string_annotation(cf, annotation);
      std::optional<std::string> group, artifact, version;
      for (const auto& [name, value] : record.pairs) {
        if (name == kGroupElement && !group) group = value;
        else if (name == kArtifactElement && !artifact) artifact = value;
        else if (name == kVersionElement && !version) version = value;
      }
      if (!group || !artifact || !version) {
        malformed("provenance annotation is missing " +
                  std::string(!group ? kGroupElement : !artifact ? kArtifactElement : kVersionElement));
      }
      try {
        return GavCoordinate(*group, *artifact, *version);
      } catch (const Error& e) {
        malformed(e.what());
      }
    }
  }
  return std::nullopt;
}

std::size_t injection_overhead_bound(std::string_view descriptor) {
  constexpr std::size_t kFraming = 6 + 2 + 2 + 2 + 3 * (2 + 1 + 2);
  constexpr std::size_t kUtf8Header = 3;
  std::size_t pool = kUtf8Header + encode_modified_utf8(descriptor).size();
  for (std::string_view name : {kGroupElement, kVersionElement, kArtifactElement,
                                kRuntimeVisibleAnnotations}) {
    pool += kUtf8Header + name.size();
  }
  pool += 3 * kUtf8Header;  // headers of the three value entries
  return kFraming + pool;
}

}  // namespace jprov::classfile
