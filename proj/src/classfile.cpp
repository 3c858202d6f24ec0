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

#include "jprov/classfile.hpp"

#include <limits>
#include <utility>

#include "jprov/error.hpp"
#include "jprov/mutf8.hpp"

namespace jprov::classfile {

std::string_view constant_tag_name(ConstantTag tag) {
  switch (tag) {
    case ConstantTag::kUtf8: return "Utf8";
    case ConstantTag::kInteger: return "Integer";
    case ConstantTag::kFloat: return "Float";
    case ConstantTag::kLong: return "Long";
    case ConstantTag::kDouble: return "Double";
    case ConstantTag::kClass: return "Class";
    case ConstantTag::kString: return "String";
    case ConstantTag::kFieldref: return "Fieldref";
    case ConstantTag::kMethodref: return "Methodref";
    case ConstantTag::kInterfaceMethodref: return "InterfaceMethodref";
    case ConstantTag::kNameAndType: return "NameAndType";
    case ConstantTag::kMethodHandle: return "MethodHandle";
    case ConstantTag::kMethodType: return "MethodType";
    case ConstantTag::kDynamic: return "Dynamic";
    case ConstantTag::kInvokeDynamic: return "InvokeDynamic";
    case ConstantTag::kModule: return "Module";
    case ConstantTag::kPackage: return "Package";
  }
  return "?";
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool is_wide(const ConstantPoolEntry& entry) {
  return std::holds_alternative<LongInfo>(entry) || std::holds_alternative<DoubleInfo>(entry);
}

}  // namespace

std::optional<ConstantTag> tag_of(const ConstantPoolEntry& entry) {
  return std::visit(
      Overloaded{
          [](const UnusableSlot&) -> std::optional<ConstantTag> { return std::nullopt; },
          [](const Utf8Info&) -> std::optional<ConstantTag> { return ConstantTag::kUtf8; },
          [](const IntegerInfo&) -> std::optional<ConstantTag> { return ConstantTag::kInteger; },
          [](const FloatInfo&) -> std::optional<ConstantTag> { return ConstantTag::kFloat; },
          [](const LongInfo&) -> std::optional<ConstantTag> { return ConstantTag::kLong; },
          [](const DoubleInfo&) -> std::optional<ConstantTag> { return ConstantTag::kDouble; },
          [](const ClassInfo&) -> std::optional<ConstantTag> { return ConstantTag::kClass; },
          [](const StringInfo&) -> std::optional<ConstantTag> { return ConstantTag::kString; },
          [](const MemberRefInfo& e) -> std::optional<ConstantTag> { return e.tag; },
          [](const NameAndTypeInfo&) -> std::optional<ConstantTag> { return ConstantTag::kNameAndType; },
          [](const MethodHandleInfo&) -> std::optional<ConstantTag> { return ConstantTag::kMethodHandle; },
          [](const MethodTypeInfo&) -> std::optional<ConstantTag> { return ConstantTag::kMethodType; },
          [](const DynamicInfo& e) -> std::optional<ConstantTag> { return e.tag; },
          [](const NamedInfo& e) -> std::optional<ConstantTag> { return e.tag; },
      },
      entry);
}

ConstantPool ConstantPool::from_slots(std::vector<ConstantPoolEntry> slots) {
  ConstantPool pool;
  if (!slots.empty()) pool.slots_ = std::move(slots);
  return pool;
}

const ConstantPoolEntry& ConstantPool::at(std::uint16_t index) const {
  if (!valid_index(index)) {
    throw Error(ErrorCode::kIndexOutOfPool, "#" + std::to_string(index));
  }
  return slots_[index];
}

std::optional<ConstantTag> ConstantPool::tag_at(std::uint16_t index) const {
  if (!valid_index(index)) return std::nullopt;
  return tag_of(slots_[index]);
}

const std::string& ConstantPool::utf8_at(std::uint16_t index) const {
  const auto* utf8 = std::get_if<Utf8Info>(&at(index));
  if (utf8 == nullptr) {
    throw Error(ErrorCode::kWrongConstantType, "#" + std::to_string(index) + " is not Utf8");
  }
  return utf8->bytes;
}

const std::string& ConstantPool::class_name_at(std::uint16_t index) const {
  const auto* cls = std::get_if<ClassInfo>(&at(index));
  if (cls == nullptr) {
    throw Error(ErrorCode::kWrongConstantType, "#" + std::to_string(index) + " is not Class");
  }
  return utf8_at(cls->name_index);
}

std::optional<std::uint16_t> ConstantPool::find_utf8(std::string_view modified) const noexcept {
  for (std::size_t i = 1; i < slots_.size(); ++i) {
    const auto* utf8 = std::get_if<Utf8Info>(&slots_[i]);
    if (utf8 != nullptr && utf8->bytes == modified) return static_cast<std::uint16_t>(i);
  }
  return std::nullopt;
}

std::uint16_t ConstantPool::append(ConstantPoolEntry entry) {
  const std::size_t width = is_wide(entry) ? 2 : 1;
  if (slots_.size() + width > kMaxPoolCount) {
    throw Error(ErrorCode::kPoolOverflow,
                "constant_pool_count would be " + std::to_string(slots_.size() + width));
  }
  const auto index = static_cast<std::uint16_t>(slots_.size());
  slots_.push_back(std::move(entry));
  if (width == 2) slots_.emplace_back(UnusableSlot{});
  return index;
}

std::string ClassFile::attribute_name(const AttributeRecord& attribute) const {
  return decode_modified_utf8(constant_pool.utf8_at(attribute.name_index));
}

namespace {

class Parser {
 public:
  Parser(ByteView bytes, const ParseOptions& options) : in_(bytes), options_(options) {}

  ClassFile run() {
    ClassFile cf;
    cf.magic = in_.u4();
    if (cf.magic != kMagic) {
      throw Error(ErrorCode::kBadMagic, "magic is " + hex(cf.magic), 0);
    }
    cf.minor_version = in_.u2();
    const std::size_t major_offset = in_.offset();
    cf.major_version = in_.u2();
    if (cf.major_version < kMinMajorVersion || cf.major_version > options_.max_major_version) {
      throw Error(ErrorCode::kUnsupportedMajorVersion,
                  "major version " + std::to_string(cf.major_version), major_offset);
    }
    read_pool(cf.constant_pool);
    pool_ = &cf.constant_pool;
    validate_pool();

    cf.access_flags = in_.u2();
    cf.this_class = expect(in_.u2(), ConstantTag::kClass);
    const std::size_t super_offset = in_.offset();
    cf.super_class = in_.u2();
    if (cf.super_class != 0) expect_at(cf.super_class, ConstantTag::kClass, super_offset);
    const std::uint16_t interface_count = in_.u2();
    cf.interfaces.reserve(interface_count);
    for (std::uint16_t i = 0; i < interface_count; ++i) {
      cf.interfaces.push_back(expect(in_.u2(), ConstantTag::kClass));
    }
    cf.fields = read_members();
    cf.methods = read_members();
    cf.attributes = read_attributes();
    if (!in_.at_end()) {
      throw Error(ErrorCode::kTrailingData,
                  std::to_string(in_.remaining()) + " byte(s) after the last attribute",
                  in_.offset());
    }
    return cf;
  }

 private:
  static std::string hex(std::uint32_t v) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::string out = "0x";
    for (int shift = 28; shift >= 0; shift -= 4) out.push_back(kDigits[(v >> shift) & 0xF]);
    return out;
  }

  void read_pool(ConstantPool& pool) {
    const std::uint16_t count = in_.u2();
    if (count == 0) throw Error(ErrorCode::kIndexOutOfPool, "constant_pool_count is 0", in_.offset() - 2);
    entry_offsets_.assign(count, 0);
    std::uint16_t index = 1;
    while (index < count) {
      const std::size_t offset = in_.offset();
      entry_offsets_[index] = offset;
      const std::uint8_t tag = in_.u1();
      ConstantPoolEntry entry;
      switch (static_cast<ConstantTag>(tag)) {
        case ConstantTag::kUtf8: {
          const std::uint16_t len = in_.u2();
          const ByteView b = in_.take(len);
          entry = Utf8Info{std::string(as_chars(b))};
          break;
        }
        case ConstantTag::kInteger: entry = IntegerInfo{in_.u4()}; break;
        case ConstantTag::kFloat: entry = FloatInfo{in_.u4()}; break;
        case ConstantTag::kLong: entry = LongInfo{in_.u8()}; break;
        case ConstantTag::kDouble: entry = DoubleInfo{in_.u8()}; break;
        case ConstantTag::kClass: entry = ClassInfo{in_.u2()}; break;
        case ConstantTag::kString: entry = StringInfo{in_.u2()}; break;
        case ConstantTag::kFieldref:
        case ConstantTag::kMethodref:
        case ConstantTag::kInterfaceMethodref: {
          const std::uint16_t cls = in_.u2();
          entry = MemberRefInfo{static_cast<ConstantTag>(tag), cls, in_.u2()};
          break;
        }
        case ConstantTag::kNameAndType: {
          const std::uint16_t name = in_.u2();
          entry = NameAndTypeInfo{name, in_.u2()};
          break;
        }
        case ConstantTag::kMethodHandle: {
          const std::uint8_t kind = in_.u1();
          entry = MethodHandleInfo{kind, in_.u2()};
          break;
        }
        case ConstantTag::kMethodType: entry = MethodTypeInfo{in_.u2()}; break;
        case ConstantTag::kDynamic:
        case ConstantTag::kInvokeDynamic: {
          const std::uint16_t bsm = in_.u2();
          entry = DynamicInfo{static_cast<ConstantTag>(tag), bsm, in_.u2()};
          break;
        }
        case ConstantTag::kModule:
        case ConstantTag::kPackage:
          entry = NamedInfo{static_cast<ConstantTag>(tag), in_.u2()};
          break;
        default:
          throw Error(ErrorCode::kUnknownConstantTag,
                      "tag " + std::to_string(tag) + " in entry #" + std::to_string(index), offset);
      }
      const bool wide = is_wide(entry);
      if (wide && index + 1 >= count) {
        throw Error(ErrorCode::kIndexOutOfPool,
                    "8-byte constant #" + std::to_string(index) + " overruns the pool", offset);
      }
      pool.append(std::move(entry));
      index = static_cast<std::uint16_t>(index + (wide ? 2 : 1));
    }
  }

  std::uint16_t expect_at(std::uint16_t index, ConstantTag tag, std::size_t offset) const {
    const auto actual = pool_->tag_at(index);
    if (!actual) {
      throw Error(ErrorCode::kIndexOutOfPool, "#" + std::to_string(index), offset);
    }
    if (*actual != tag) {
      throw Error(ErrorCode::kWrongConstantType,
                  "#" + std::to_string(index) + " is " + std::string(constant_tag_name(*actual)) +
                      ", expected " + std::string(constant_tag_name(tag)),
                  offset);
    }
    return index;
  }

  // Reads happen before the call, so the index came from the preceding u2.
  std::uint16_t expect(std::uint16_t index, ConstantTag tag) const {
    return expect_at(index, tag, in_.offset() - 2);
  }

  void validate_pool() const {
    const auto& slots = pool_->slots();
    for (std::size_t i = 1; i < slots.size(); ++i) {
      const std::size_t offset = entry_offsets_[i];
      std::visit(
          Overloaded{
              [](const UnusableSlot&) {},
              [](const Utf8Info&) {},
              [](const IntegerInfo&) {},
              [](const FloatInfo&) {},
              [](const LongInfo&) {},
              [](const DoubleInfo&) {},
              [&](const ClassInfo& e) { expect_at(e.name_index, ConstantTag::kUtf8, offset); },
              [&](const StringInfo& e) { expect_at(e.string_index, ConstantTag::kUtf8, offset); },
              [&](const MemberRefInfo& e) {
                expect_at(e.class_index, ConstantTag::kClass, offset);
                expect_at(e.name_and_type_index, ConstantTag::kNameAndType, offset);
              },
              [&](const NameAndTypeInfo& e) {
                expect_at(e.name_index, ConstantTag::kUtf8, offset);
                expect_at(e.descriptor_index, ConstantTag::kUtf8, offset);
              },
              [&](const MethodHandleInfo& e) { validate_handle(e, offset); },
              [&](const MethodTypeInfo& e) { expect_at(e.descriptor_index, ConstantTag::kUtf8, offset); },
              [&](const DynamicInfo& e) {
                expect_at(e.name_and_type_index, ConstantTag::kNameAndType, offset);
              },
              [&](const NamedInfo& e) { expect_at(e.name_index, ConstantTag::kUtf8, offset); },
          },
          slots[i]);
    }
  }

  void validate_handle(const MethodHandleInfo& handle, std::size_t offset) const {
    const auto actual = pool_->tag_at(handle.reference_index);
    if (!actual) {
      throw Error(ErrorCode::kIndexOutOfPool, "#" + std::to_string(handle.reference_index), offset);
    }
    bool ok = false;
    switch (handle.reference_kind) {
      case 1: case 2: case 3: case 4:
        ok = *actual == ConstantTag::kFieldref;
        break;
      case 5: case 8:
        ok = *actual == ConstantTag::kMethodref;
        break;
      case 6: case 7:
        ok = *actual == ConstantTag::kMethodref || *actual == ConstantTag::kInterfaceMethodref;
        break;
      case 9:
        ok = *actual == ConstantTag::kInterfaceMethodref;
        break;
      default:
        throw Error(ErrorCode::kWrongConstantType,
                    "method handle kind " + std::to_string(handle.reference_kind), offset);
    }
    if (!ok) {
      throw Error(ErrorCode::kWrongConstantType,
                  "method handle kind " + std::to_string(handle.reference_kind) + " refers to " +
                      std::string(constant_tag_name(*actual)),
                  offset);
    }
  }

  std::vector<AttributeRecord> read_attributes() {
    const std::uint16_t count = in_.u2();
    std::vector<AttributeRecord> out;
    out.reserve(count);
    for (std::uint16_t i = 0; i < count; ++i) {
      AttributeRecord attribute;
      attribute.name_index = expect(in_.u2(), ConstantTag::kUtf8);
      const std::uint32_t length = in_.u4();
      const ByteView payload = in_.take(length);
      attribute.payload.assign(payload.begin(), payload.end());
      out.push_back(std::move(attribute));
    }
    return out;
  }

  std::vector<MemberInfo> read_members() {
    const std::uint16_t count = in_.u2();
    std::vector<MemberInfo> out;
    out.reserve(count);
    for (std::uint16_t i = 0; i < count; ++i) {
      MemberInfo member;
      member.access_flags = in_.u2();
      member.name_index = expect(in_.u2(), ConstantTag::kUtf8);
      member.descriptor_index = expect(in_.u2(), ConstantTag::kUtf8);
      member.attributes = read_attributes();
      out.push_back(std::move(member));
    }
    return out;
  }

  ByteReader in_;
  const ParseOptions& options_;
  const ConstantPool* pool_ = nullptr;
  std::vector<std::size_t> entry_offsets_;
};

void write_count(ByteWriter& out, std::size_t count, const char* what) {
  if (count > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::kMalformedAttribute,
                std::string("too many ") + what + ": " + std::to_string(count));
  }
  out.u2(static_cast<std::uint16_t>(count));
}

void write_attributes(ByteWriter& out, const std::vector<AttributeRecord>& attributes) {
  write_count(out, attributes.size(), "attributes");
  for (const auto& attribute : attributes) {
    if (attribute.payload.size() > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorCode::kAttributeTooLarge,
                  std::to_string(attribute.payload.size()) + " byte payload");
    }
    out.u2(attribute.name_index);
    out.u4(static_cast<std::uint32_t>(attribute.payload.size()));
    out.put(attribute.payload);
  }
}

void write_members(ByteWriter& out, const std::vector<MemberInfo>& members) {
  write_count(out, members.size(), "members");
  for (const auto& member : members) {
    out.u2(member.access_flags);
    out.u2(member.name_index);
    out.u2(member.descriptor_index);
    write_attributes(out, member.attributes);
  }
}

void write_entry(ByteWriter& out, const ConstantPoolEntry& entry) {
  std::visit(
      Overloaded{
          [](const UnusableSlot&) {},
          [&](const Utf8Info& e) {
            if (e.bytes.size() > std::numeric_limits<std::uint16_t>::max()) {
              throw Error(ErrorCode::kMalformedUtf8,
                          "Utf8 constant of " + std::to_string(e.bytes.size()) + " bytes");
            }
            out.u1(static_cast<std::uint8_t>(ConstantTag::kUtf8));
            out.u2(static_cast<std::uint16_t>(e.bytes.size()));
            out.put(as_bytes(e.bytes));
          },
          [&](const IntegerInfo& e) { out.u1(3); out.u4(e.bits); },
          [&](const FloatInfo& e) { out.u1(4); out.u4(e.bits); },
          [&](const LongInfo& e) { out.u1(5); out.u8(e.bits); },
          [&](const DoubleInfo& e) { out.u1(6); out.u8(e.bits); },
          [&](const ClassInfo& e) { out.u1(7); out.u2(e.name_index); },
          [&](const StringInfo& e) { out.u1(8); out.u2(e.string_index); },
          [&](const MemberRefInfo& e) {
            out.u1(static_cast<std::uint8_t>(e.tag));
            out.u2(e.class_index);
            out.u2(e.name_and_type_index);
          },
          [&](const NameAndTypeInfo& e) { out.u1(12); out.u2(e.name_index); out.u2(e.descriptor_index); },
          [&](const MethodHandleInfo& e) { out.u1(15); out.u1(e.reference_kind); out.u2(e.reference_index); },
          [&](const MethodTypeInfo& e) { out.u1(16); out.u2(e.descriptor_index); },
          [&](const DynamicInfo& e) {
            out.u1(static_cast<std::uint8_t>(e.tag));
            out.u2(e.bootstrap_method_attr_index);
            out.u2(e.name_and_type_index);
          },
          [&](const NamedInfo& e) { out.u1(static_cast<std::uint8_t>(e.tag)); out.u2(e.name_index); },
      },
      entry);
}

}  // namespace

ClassFile parse_class(ByteView bytes, const ParseOptions& options) {
  return Parser(bytes, options).run();
}

Bytes serialize_class(const ClassFile& cf) {
  const auto& slots = cf.constant_pool.slots();
  if (slots.size() > kMaxPoolCount) {
    throw Error(ErrorCode::kPoolOverflow,
                "constant_pool_count " + std::to_string(slots.size()) + " exceeds 65535");
  }
  ByteWriter out;
  out.u4(cf.magic);
  out.u2(cf.minor_version);
  out.u2(cf.major_version);
  out.u2(static_cast<std::uint16_t>(slots.size()));
  for (std::size_t i = 1; i < slots.size(); ++i) write_entry(out, slots[i]);
  out.u2(cf.access_flags);
  out.u2(cf.this_class);
  out.u2(cf.super_class);
  write_count(out, cf.interfaces.size(), "interfaces");
  for (const std::uint16_t index : cf.interfaces) out.u2(index);
  write_members(out, cf.fields);
  write_members(out, cf.methods);
  write_attributes(out, cf.attributes);
  return out.take();
}

std::uint16_t intern_utf8(ClassFile& cf, std::string_view text) {
  std::string modified = encode_modified_utf8(text);
  if (modified.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::kMalformedUtf8,
                "string needs " + std::to_string(modified.size()) + " bytes in the pool");
  }
  if (auto existing = cf.constant_pool.find_utf8(modified)) return *existing;
  return cf.constant_pool.append(Utf8Info{std::move(modified)});
}

}  // namespace jprov::classfile
