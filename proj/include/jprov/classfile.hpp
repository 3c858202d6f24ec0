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

// In-memory model of a JVM class file with a byte-exact parse/serialize
// round trip. Constant-pool references are kept as raw indices; nothing is
// resolved eagerly.
//
// Format reference: JVMS chapter 4, "The class File Format".

#ifndef JPROV_CLASSFILE_HPP_
#define JPROV_CLASSFILE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jprov/bytes.hpp"

namespace jprov::classfile {

inline constexpr std::uint32_t kMagic = 0xCAFEBABE;
inline constexpr std::uint16_t kMinMajorVersion = 45;  // JDK 1.0
inline constexpr std::uint16_t kMaxMajorVersion = 68;  // JDK 24
// constant_pool_count is a u2, so the largest usable index is 65534.
inline constexpr std::size_t kMaxPoolCount = 65535;

enum class ConstantTag : std::uint8_t {
  kUtf8 = 1,
  kInteger = 3,
  kFloat = 4,
  kLong = 5,
  kDouble = 6,
  kClass = 7,
  kString = 8,
  kFieldref = 9,
  kMethodref = 10,
  kInterfaceMethodref = 11,
  kNameAndType = 12,
  kMethodHandle = 15,
  kMethodType = 16,
  kDynamic = 17,
  kInvokeDynamic = 18,
  kModule = 19,
  kPackage = 20,
};

std::string_view constant_tag_name(ConstantTag tag);

// Slot 0 and the slot following a Long/Double.
struct UnusableSlot {
  friend bool operator==(const UnusableSlot&, const UnusableSlot&) = default;
};
// Payload is the raw modified-UTF-8 byte string.
struct Utf8Info {
  std::string bytes;
  friend bool operator==(const Utf8Info&, const Utf8Info&) = default;
};
struct IntegerInfo {
  std::uint32_t bits;
  friend bool operator==(const IntegerInfo&, const IntegerInfo&) = default;
};
struct FloatInfo {
  std::uint32_t bits;
  friend bool operator==(const FloatInfo&, const FloatInfo&) = default;
};
struct LongInfo {
  std::uint64_t bits;
  friend bool operator==(const LongInfo&, const LongInfo&) = default;
};
struct DoubleInfo {
  std::uint64_t bits;
  friend bool operator==(const DoubleInfo&, const DoubleInfo&) = default;
};
struct ClassInfo {
  std::uint16_t name_index;
  friend bool operator==(const ClassInfo&, const ClassInfo&) = default;
};
struct StringInfo {
  std::uint16_t string_index;
  friend bool operator==(const StringInfo&, const StringInfo&) = default;
};
// Fieldref, Methodref and InterfaceMethodref share a layout.
struct MemberRefInfo {
  ConstantTag tag;
  std::uint16_t class_index;
  std::uint16_t name_and_type_index;
  friend bool operator==(const MemberRefInfo&, const MemberRefInfo&) = default;
};
struct NameAndTypeInfo {
  std::uint16_t name_index;
  std::uint16_t descriptor_index;
  friend bool operator==(const NameAndTypeInfo&, const NameAndTypeInfo&) = default;
};
struct MethodHandleInfo {
  std::uint8_t reference_kind;
  std::uint16_t reference_index;
  friend bool operator==(const MethodHandleInfo&, const MethodHandleInfo&) = default;
};
struct MethodTypeInfo {
  std::uint16_t descriptor_index;
  friend bool operator==(const MethodTypeInfo&, const MethodTypeInfo&) = default;
};
// Dynamic and InvokeDynamic share a layout.
struct DynamicInfo {
  ConstantTag tag;
  std::uint16_t bootstrap_method_attr_index;
  std::uint16_t name_and_type_index;
  friend bool operator==(const DynamicInfo&, const DynamicInfo&) = default;
};
// Module and Package share a layout.
struct NamedInfo {
  ConstantTag tag;
  std::uint16_t name_index;
  friend bool operator==(const NamedInfo&, const NamedInfo&) = default;
};

using ConstantPoolEntry =
    std::variant<UnusableSlot, Utf8Info, IntegerInfo, FloatInfo, LongInfo, DoubleInfo,
                 ClassInfo, StringInfo, MemberRefInfo, NameAndTypeInfo, MethodHandleInfo,
                 MethodTypeInfo, DynamicInfo, NamedInfo>;

// Tag of an entry; nullopt for unusable slots.
std::optional<ConstantTag> tag_of(const ConstantPoolEntry& entry);

class ConstantPool {
 public:
  ConstantPool() : slots_(1) {}
  // Adopts a slot vector as-is (slot 0 included). No count limit is applied,
  // so serialize_class is the point where an oversized pool is rejected.
  static ConstantPool from_slots(std::vector<ConstantPoolEntry> slots);

  // The class-file constant_pool_count: number of slots including slot 0.
  std::size_t count() const noexcept { return slots_.size(); }
  const std::vector<ConstantPoolEntry>& slots() const noexcept { return slots_; }

  bool valid_index(std::uint16_t index) const noexcept {
    return index != 0 && index < slots_.size() &&
           !std::holds_alternative<UnusableSlot>(slots_[index]);
  }
  const ConstantPoolEntry& at(std::uint16_t index) const;
  std::optional<ConstantTag> tag_at(std::uint16_t index) const;

  // Raw modified-UTF-8 payload of a Utf8 entry; throws on bad index or tag.
  const std::string& utf8_at(std::uint16_t index) const;
  // Internal name referenced by a Class entry.
  const std::string& class_name_at(std::uint16_t index) const;

  std::optional<std::uint16_t> find_utf8(std::string_view modified) const noexcept;

  // Appends and returns the new entry's index. Long/Double take two slots.
  // Throws kPoolOverflow when constant_pool_count would exceed 65535.
  std::uint16_t append(ConstantPoolEntry entry);

  friend bool operator==(const ConstantPool&, const ConstantPool&) = default;

 private:
  std::vector<ConstantPoolEntry> slots_;
};

struct AttributeRecord {
  std::uint16_t name_index = 0;
  Bytes payload;
  friend bool operator==(const AttributeRecord&, const AttributeRecord&) = default;
};

struct MemberInfo {
  std::uint16_t access_flags = 0;
  std::uint16_t name_index = 0;
  std::uint16_t descriptor_index = 0;
  std::vector<AttributeRecord> attributes;
  friend bool operator==(const MemberInfo&, const MemberInfo&) = default;
};

struct ClassFile {
  std::uint32_t magic = kMagic;
  std::uint16_t minor_version = 0;
  std::uint16_t major_version = 0;
  ConstantPool constant_pool;
  std::uint16_t access_flags = 0;
  std::uint16_t this_class = 0;
  std::uint16_t super_class = 0;
  std::vector<std::uint16_t> interfaces;
  std::vector<MemberInfo> fields;
  std::vector<MemberInfo> methods;
  std::vector<AttributeRecord> attributes;

  // Internal (slash-separated) name of this class.
  const std::string& internal_name() const { return constant_pool.class_name_at(this_class); }
  // Decoded name of a class-level attribute.
  std::string attribute_name(const AttributeRecord& attribute) const;

  friend bool operator==(const ClassFile&, const ClassFile&) = default;
};

struct ParseOptions {
  std::uint16_t max_major_version = kMaxMajorVersion;
};

// Errors: kBadMagic, kTruncatedInput, kUnknownConstantTag,
// kUnsupportedMajorVersion, kIndexOutOfPool, kWrongConstantType,
// kTrailingData.
ClassFile parse_class(ByteView bytes, const ParseOptions& options = {});

// Errors: kPoolOverflow, kAttributeTooLarge.
Bytes serialize_class(const ClassFile& cf);

// Index of a Utf8 entry equal to `text` (standard UTF-8, stored as modified
// UTF-8), appending one at the tail if none exists. Matching is exact on the
// encoded bytes.
std::uint16_t intern_utf8(ClassFile& cf, std::string_view text);

}  // namespace jprov::classfile

#endif  // JPROV_CLASSFILE_HPP_
