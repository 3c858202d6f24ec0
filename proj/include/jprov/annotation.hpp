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

// Class-level provenance annotation: injection into and recovery from the
// RuntimeVisibleAnnotations attribute.
//
// The annotation carries three string elements named "group", "artefact"
// and "version". "artefact" is the spelling readers of the annotation type
// expect, so it is not normalized.

#ifndef JPROV_ANNOTATION_HPP_
#define JPROV_ANNOTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jprov/bytes.hpp"
#include "jprov/classfile.hpp"
#include "jprov/gav.hpp"

namespace jprov::classfile {

inline constexpr std::string_view kDefaultProvenanceDescriptor =
    "Lio/github/chainsproject/classport/commons/ClassportInfo;";
inline constexpr std::string_view kRuntimeVisibleAnnotations = "RuntimeVisibleAnnotations";

inline constexpr std::string_view kGroupElement = "group";
inline constexpr std::string_view kArtifactElement = "artefact";
inline constexpr std::string_view kVersionElement = "version";

enum class OnExisting { kError, kReplace };

// A runtime-visible annotation whose elements are all string constants.
struct AnnotationRecord {
  std::string type_descriptor;
  std::vector<std::pair<std::string, std::string>> pairs;

  friend bool operator==(const AnnotationRecord&, const AnnotationRecord&) = default;
};

// Pairs in emission order: group, version, artefact.
AnnotationRecord provenance_record(const GavCoordinate& gav,
                                   std::string_view descriptor = kDefaultProvenanceDescriptor);

// One annotation structure inside a RuntimeVisibleAnnotations payload,
// kept as its exact encoded bytes.
struct RawAnnotation {
  std::uint16_t type_index = 0;
  Bytes encoded;
};

// Splits an annotations payload (u2 count + annotations). Throws
// kMalformedAnnotation on structural errors or trailing bytes.
std::vector<RawAnnotation> split_annotations(ByteView payload);

// Decodes an annotation whose element values are all strings. Throws
// kMalformedAnnotation if any element is not a string constant.
AnnotationRecord decode_string_annotation(const ClassFile& cf, const RawAnnotation& annotation);

// Type descriptors of all class-level runtime-visible annotations.
std::vector<std::string> class_annotation_types(const ClassFile& cf);

// Number of class-level RuntimeVisibleAnnotations attributes.
std::size_t runtime_visible_attribute_count(const ClassFile& cf);

// Throws kInvalidDescriptor unless `descriptor` has the form "L<name>;".
void validate_object_descriptor(std::string_view descriptor);

// Adds the provenance annotation for `gav`. Existing annotations of other
// types are kept; existing pool entries keep their indices. Errors:
// kAlreadyAnnotated (policy kError and a matching annotation exists),
// kPoolOverflow, kInvalidDescriptor, kMalformedAnnotation (existing
// attribute cannot be parsed).
ClassFile inject_annotation(ClassFile cf, const GavCoordinate& gav,
                            std::string_view descriptor = kDefaultProvenanceDescriptor,
                            OnExisting on_existing = OnExisting::kError);

// GAV of the first annotation of type `descriptor`, or nullopt. Errors:
// kMalformedAnnotation when the annotation lacks one of the three string
// elements.
std::optional<GavCoordinate> read_annotation(
    const ClassFile& cf, std::string_view descriptor = kDefaultProvenanceDescriptor);

// Upper bound on serialized growth from one injection, excluding the three
// GAV strings: attribute framing (27 bytes) plus Utf8 entries for the
// descriptor, the element names and the attribute name (69 + descriptor).
std::size_t injection_overhead_bound(std::string_view descriptor = kDefaultProvenanceDescriptor);

}  // namespace jprov::classfile

#endif  // JPROV_ANNOTATION_HPP_
