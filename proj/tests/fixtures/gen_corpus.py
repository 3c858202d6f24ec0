#!/usr/bin/env python3
# Copyright 2026 The jprov Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates the checked-in class-file fixture corpus.

A tiny assembler that emits structurally valid class files for majors 52..65
without needing a JDK. The output is committed; the C++ tests only read the
bytes. Re-run with:  python3 gen_corpus.py  (writes classes/, jvm/ and
foreign.jar).
"""

import os
import struct
import zipfile

HERE = os.path.dirname(os.path.abspath(__file__))

ACC_PUBLIC = 0x0001
ACC_PRIVATE = 0x0002
ACC_STATIC = 0x0008
ACC_FINAL = 0x0010
ACC_SUPER = 0x0020
ACC_SYNTHETIC = 0x1000
ACC_INTERFACE = 0x0200
ACC_ABSTRACT = 0x0400
ACC_ANNOTATION = 0x2000
ACC_ENUM = 0x4000
ACC_MODULE = 0x8000

PROVENANCE_DESC = "Lio/github/chainsproject/classport/commons/ClassportInfo;"


def mutf8(s):
    out = bytearray()
    data = s.encode("utf-16-be", "surrogatepass")
    units = [struct.unpack(">H", data[i:i + 2])[0] for i in range(0, len(data), 2)]
    for u in units:
        if u == 0:
            out += b"\xc0\x80"
        elif u < 0x80:
            out.append(u)
        elif u < 0x800:
            out += bytes([0xC0 | (u >> 6), 0x80 | (u & 0x3F)])
        else:
            out += bytes([0xE0 | (u >> 12), 0x80 | ((u >> 6) & 0x3F), 0x80 | (u & 0x3F)])
    return bytes(out)


def u1(v):
    return struct.pack(">B", v)


def u2(v):
    return struct.pack(">H", v)


def u4(v):
    return struct.pack(">I", v)


class Pool:
    def __init__(self):
        self.items = []  # encoded entries
        self.index = {}
        self.next = 1

    def _add(self, key, blob, wide=False):
        if key in self.index:
            return self.index[key]
        idx = self.next
        self.items.append(blob)
        self.index[key] = idx
        self.next += 2 if wide else 1
        return idx

    def utf8(self, s):
        b = mutf8(s)
        return self._add(("utf8", b), u1(1) + u2(len(b)) + b)

    def integer(self, v):
        return self._add(("int", v), u1(3) + struct.pack(">i", v))

    def float_(self, v):
        return self._add(("float", v), u1(4) + struct.pack(">f", v))

    def long_(self, v):
        return self._add(("long", v), u1(5) + struct.pack(">q", v), wide=True)

    def double(self, v):
        return self._add(("double", v), u1(6) + struct.pack(">d", v), wide=True)

    def cls(self, name):
        n = self.utf8(name)
        return self._add(("class", name), u1(7) + u2(n))

    def string(self, s):
        n = self.utf8(s)
        return self._add(("string", s), u1(8) + u2(n))

    def nat(self, name, desc):
        a, b = self.utf8(name), self.utf8(desc)
        return self._add(("nat", name, desc), u1(12) + u2(a) + u2(b))

    def _ref(self, tag, owner, name, desc):
        c, n = self.cls(owner), self.nat(name, desc)
        return self._add(("ref", tag, owner, name, desc), u1(tag) + u2(c) + u2(n))

    def field(self, owner, name, desc):
        return self._ref(9, owner, name, desc)

    def method(self, owner, name, desc):
        return self._ref(10, owner, name, desc)

    def imethod(self, owner, name, desc):
        return self._ref(11, owner, name, desc)

    def method_handle(self, kind, ref):
        return self._add(("mh", kind, ref), u1(15) + u1(kind) + u2(ref))

    def method_type(self, desc):
        d = self.utf8(desc)
        return self._add(("mt", desc), u1(16) + u2(d))

    def dynamic(self, bsm, name, desc):
        n = self.nat(name, desc)
        return self._add(("dyn", bsm, name, desc), u1(17) + u2(bsm) + u2(n))

    def indy(self, bsm, name, desc):
        n = self.nat(name, desc)
        return self._add(("indy", bsm, name, desc), u1(18) + u2(bsm) + u2(n))

    def module(self, name):
        n = self.utf8(name)
        return self._add(("module", name), u1(19) + u2(n))

    def package(self, name):
        n = self.utf8(name)
        return self._add(("package", name), u1(20) + u2(n))

    def encode(self):
        return u2(self.next) + b"".join(self.items)


def attr(pool, name, payload):
    return u2(pool.utf8(name)) + u4(len(payload)) + payload


def attrs(items):
    return u2(len(items)) + b"".join(items)


def code_attr(pool, max_stack, max_locals, code, handlers=(), sub=()):
    body = u2(max_stack) + u2(max_locals) + u4(len(code)) + code
    body += u2(len(handlers))
    for start, end, handler, ctype in handlers:
        body += u2(start) + u2(end) + u2(handler) + u2(ctype)
    body += attrs(list(sub))
    return attr(pool, "Code", body)


def member(pool, flags, name, desc, member_attrs=()):
    return u2(flags) + u2(pool.utf8(name)) + u2(pool.utf8(desc)) + attrs(list(member_attrs))


def annotation(pool, type_desc, pairs):
    """pairs: list of (name, encoded element_value bytes)."""
    out = u2(pool.utf8(type_desc)) + u2(len(pairs))
    for name, value in pairs:
        out += u2(pool.utf8(name)) + value
    return out


def ev_string(pool, s):
    return b"s" + u2(pool.utf8(s))


def ev_int(pool, v):
    return b"I" + u2(pool.integer(v))


def ev_enum(pool, type_desc, const):
    return b"e" + u2(pool.utf8(type_desc)) + u2(pool.utf8(const))


def ev_class(pool, desc):
    return b"c" + u2(pool.utf8(desc))


def ev_array(values):
    return b"[" + u2(len(values)) + b"".join(values)


def ev_nested(ann):
    return b"@" + ann


def rva(pool, anns, name="RuntimeVisibleAnnotations"):
    return attr(pool, name, u2(len(anns)) + b"".join(anns))


def classfile(major, pool, flags, this, super_, interfaces, fields, methods, class_attrs, minor=0):
    # this/super/interfaces/members must already be interned in pool.
    body = u2(flags) + u2(this) + u2(super_)
    body += u2(len(interfaces)) + b"".join(u2(i) for i in interfaces)
    body += u2(len(fields)) + b"".join(fields)
    body += u2(len(methods)) + b"".join(methods)
    body += attrs(class_attrs)
    return u4(0xCAFEBABE) + u2(minor) + u2(major) + pool.encode() + body


def init_method(pool, super_name="java/lang/Object"):
    code = b"\x2a" + b"\xb7" + u2(pool.method(super_name, "<init>", "()V")) + b"\xb1"
    return member(pool, ACC_PUBLIC, "<init>", "()V", [code_attr(pool, 1, 1, code)])


# -- corpus shapes ----------------------------------------------------------


def plain_class(major, name, seed):
    p = Pool()
    this = p.cls(name)
    sup = p.cls("java/lang/Object")
    fields = [
        member(p, ACC_PUBLIC | ACC_STATIC | ACC_FINAL, "COUNT", "I",
               [attr(p, "ConstantValue", u2(p.integer(seed * 7 - 3)))]),
        member(p, ACC_PUBLIC | ACC_STATIC | ACC_FINAL, "BIG", "J",
               [attr(p, "ConstantValue", u2(p.long_(seed * 1_000_000_007)))]),
        member(p, ACC_PUBLIC | ACC_STATIC | ACC_FINAL, "RATIO", "D",
               [attr(p, "ConstantValue", u2(p.double(seed / 3.0)))]),
        member(p, ACC_PUBLIC | ACC_STATIC | ACC_FINAL, "SCALE", "F",
               [attr(p, "ConstantValue", u2(p.float_(seed * 0.25)))]),
        member(p, ACC_PUBLIC | ACC_STATIC | ACC_FINAL, "LABEL", "Ljava/lang/String;",
               [attr(p, "ConstantValue", u2(p.string("label-%d nul:\0 snow:☃ gclef:\U0001D11E" % seed)))]),
        member(p, ACC_PRIVATE, "state", "Ljava/lang/String;"),
    ]
    big = b"\x14" + u2(p.long_(seed * 1_000_000_007)) + b"\xad"  # ldc2_w; lreturn
    getter = b"\x2a\xb4" + u2(p.field(name, "state", "Ljava/lang/String;")) + b"\xb0"
    methods = [
        init_method(p),
        member(p, ACC_PUBLIC | ACC_STATIC, "big", "()J", [code_attr(p, 2, 0, big)]),
        member(p, ACC_PUBLIC, "state", "()Ljava/lang/String;", [code_attr(p, 1, 1, getter)]),
    ]
    cattrs = [attr(p, "SourceFile", u2(p.utf8(name.rsplit("/", 1)[-1] + ".java")))]
    return classfile(major, p, ACC_PUBLIC | ACC_SUPER, this, sup, [], fields, methods, cattrs)


def interface_class(major, name, seed):
    p = Pool()
    this = p.cls(name)
    sup = p.cls("java/lang/Object")
    comparable = p.cls("java/lang/Comparable")
    methods = [
        member(p, ACC_PUBLIC | ACC_ABSTRACT, "apply", "(Ljava/lang/Object;)Ljava/lang/Object;",
               [attr(p, "Signature", u2(p.utf8("(TT;)TT;")))]),
    ]
    if major >= 52:
        # default method: iconst_n; ireturn
        code = bytes([0x03 + (seed % 6), 0xAC])
        methods.append(member(p, ACC_PUBLIC, "weight", "()I", [code_attr(p, 1, 1, code)]))
    cattrs = [
        attr(p, "Signature", u2(p.utf8("<T:Ljava/lang/Object;>Ljava/lang/Object;Ljava/lang/Comparable<TT;>;"))),
        attr(p, "SourceFile", u2(p.utf8(name.rsplit("/", 1)[-1] + ".java"))),
    ]
    return classfile(major, p, ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT, this, sup, [comparable], [], methods, cattrs)


def handler_class(major, name, seed):
    p = Pool()
    this = p.cls(name)
    sup = p.cls("java/lang/Object")
    throwable = p.cls("java/lang/Throwable")
    # aload_0; invokevirtual hashCode; pop; return; handler: astore_1; return
    code = b"\x2a\xb6" + u2(p.method("java/lang/Object", "hashCode", "()I")) + b"\x57\xb1" + b"\x4c\xb1"
    smt = u2(1) + u1(64 + 6) + u1(7) + u2(throwable)  # same_locals_1_stack_item at 6
    lnt = u2(2) + u2(0) + u2(10 + seed) + u2(6) + u2(12 + seed)
    sub = [attr(p, "StackMapTable", smt), attr(p, "LineNumberTable", lnt)]
    guarded = member(p, ACC_PUBLIC, "guarded", "()V",
                     [code_attr(p, 1, 2, code, [(0, 5, 6, throwable)], sub),
                      attr(p, "Exceptions", u2(1) + u2(p.cls("java/io/IOException")))])
    cattrs = [
        attr(p, "SourceFile", u2(p.utf8("Handler%d.java" % seed))),
        attr(p, "RuntimeInvisibleAnnotations",
             u2(1) + annotation(p, "Ljavax/annotation/Generated;", [("value", ev_array([ev_string(p, "gen")]))])),
    ]
    return classfile(major, p, ACC_PUBLIC | ACC_SUPER, this, sup, [], [], [init_method(p), guarded], cattrs)


def modern_class(major, name, seed):
    """invokedynamic, BootstrapMethods, inner classes, nest and record-era attributes."""
    p = Pool()
    this = p.cls(name)
    sup = p.cls("java/lang/Record" if major >= 60 else "java/lang/Object")
    inner = name + "$Inner"
    lmf = p.method("java/lang/invoke/LambdaMetafactory", "metafactory",
                   "(Ljava/lang/invoke/MethodHandles$Lookup;Ljava/lang/String;Ljava/lang/invoke/MethodType;"
                   "Ljava/lang/invoke/MethodType;Ljava/lang/invoke/MethodHandle;Ljava/lang/invoke/MethodType;)"
                   "Ljava/lang/invoke/CallSite;")
    bsm_handle = p.method_handle(6, lmf)
    lambda_ref = p.method(name, "lambda$run$0", "()V")
    lambda_handle = p.method_handle(6, lambda_ref)
    mt = p.method_type("()V")
    bootstraps = [(bsm_handle, [mt, lambda_handle, mt])]
    indy = p.indy(0, "run", "()Ljava/lang/Runnable;")
    if major >= 55:
        cbsm = p.method("java/lang/invoke/ConstantBootstraps", "nullConstant",
                        "(Ljava/lang/invoke/MethodHandles$Lookup;Ljava/lang/String;Ljava/lang/Class;)Ljava/lang/Object;")
        bootstraps.append((p.method_handle(6, cbsm), []))
        p.dynamic(1, "NONE", "Ljava/lang/Object;")
    make = b"\xba" + u2(indy) + b"\x00\x00" + b"\xb0"
    methods = [
        member(p, ACC_PUBLIC, "<init>", "()V",
               [code_attr(p, 1, 1, b"\x2a\xb7" + u2(p.method(p_name(sup, p), "<init>", "()V")) + b"\xb1")]),
        member(p, ACC_PUBLIC | ACC_STATIC, "runner", "()Ljava/lang/Runnable;", [code_attr(p, 1, 0, make)]),
        member(p, ACC_PRIVATE | ACC_STATIC | ACC_SYNTHETIC, "lambda$run$0", "()V", [code_attr(p, 0, 0, b"\xb1")]),
    ]
    bsm_payload = u2(len(bootstraps))
    for handle, args in bootstraps:
        bsm_payload += u2(handle) + u2(len(args)) + b"".join(u2(a) for a in args)
    inner_cls = p.cls(inner)
    lookup = p.cls("java/lang/invoke/MethodHandles$Lookup")
    inner_payload = u2(2)
    inner_payload += u2(inner_cls) + u2(this) + u2(p.utf8("Inner")) + u2(ACC_PUBLIC | ACC_STATIC)
    inner_payload += u2(lookup) + u2(p.cls("java/lang/invoke/MethodHandles")) + u2(p.utf8("Lookup")) + u2(0x19)
    deprecated = annotation(p, "Ljava/lang/Deprecated;", [])
    cattrs = [
        attr(p, "SourceFile", u2(p.utf8("Modern%d.java" % seed))),
        attr(p, "InnerClasses", inner_payload),
        attr(p, "BootstrapMethods", bsm_payload),
        rva(p, [deprecated]),
    ]
    if major >= 55:
        cattrs.append(attr(p, "NestMembers", u2(1) + u2(inner_cls)))
    if major >= 60:
        comp = u2(p.utf8("value")) + u2(p.utf8("I")) + attrs([])
        cattrs.append(attr(p, "Record", u2(1) + comp))
    if major >= 61:
        cattrs.append(attr(p, "PermittedSubclasses", u2(1) + u2(inner_cls)))
    fields = [member(p, ACC_PRIVATE | ACC_FINAL, "value", "I")]
    flags = ACC_PUBLIC | ACC_SUPER | (ACC_FINAL if major >= 60 else 0)
    return classfile(major, p, flags, this, sup, [], fields, methods, cattrs, minor=(0xFFFF if seed == 3 and major >= 56 else 0))


def p_name(class_index, pool):
    for key, idx in pool.index.items():
        if key[0] == "class" and idx == class_index:
            return key[1]
    raise KeyError(class_index)


def module_info(major, module_name, requires, exports):
    p = Pool()
    this = p.cls("module-info")
    body = u2(p.module(module_name)) + u2(0) + u2(0)  # name, flags, version
    body += u2(len(requires) + 1)
    body += u2(p.module("java.base")) + u2(0x8000) + u2(0)
    for r in requires:
        body += u2(p.module(r)) + u2(0) + u2(0)
    body += u2(len(exports))
    for e in exports:
        body += u2(p.package(e)) + u2(0) + u2(0)
    body += u2(0) + u2(0) + u2(0) + u2(0)  # opens, uses, provides
    cattrs = [attr(p, "Module", body), attr(p, "SourceFile", u2(p.utf8("module-info.java")))]
    return classfile(major, p, ACC_MODULE, this, 0, [], [], [], cattrs)


def package_info(major, pkg):
    p = Pool()
    this = p.cls(pkg + "/package-info")
    sup = p.cls("java/lang/Object")
    cattrs = [attr(p, "SourceFile", u2(p.utf8("package-info.java"))),
              rva(p, [annotation(p, "Ljava/lang/Deprecated;", [])])]
    return classfile(major, p, ACC_ABSTRACT | ACC_INTERFACE | ACC_SYNTHETIC, this, sup, [], [], [], cattrs)


def provenance_annotation_type(major=52, desc=PROVENANCE_DESC):
    """The annotation interface the provenance attribute refers to."""
    p = Pool()
    internal = desc[1:-1]
    this = p.cls(internal)
    sup = p.cls("java/lang/Object")
    ann = p.cls("java/lang/annotation/Annotation")
    methods = [member(p, ACC_PUBLIC | ACC_ABSTRACT, n, "()Ljava/lang/String;") for n in ("group", "artefact", "version")]
    retention = annotation(p, "Ljava/lang/annotation/Retention;",
                           [("value", ev_enum(p, "Ljava/lang/annotation/RetentionPolicy;", "RUNTIME"))])
    target = annotation(p, "Ljava/lang/annotation/Target;",
                        [("value", ev_array([ev_enum(p, "Ljava/lang/annotation/ElementType;", "TYPE")]))])
    cattrs = [attr(p, "SourceFile", u2(p.utf8("ClassportInfo.java"))), rva(p, [retention, target])]
    flags = ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT | ACC_ANNOTATION
    return classfile(major, p, flags, this, sup, [ann], [], methods, cattrs)


def multi_annotated(major):
    p = Pool()
    this = p.cls("fixture/annotated/Multi")
    sup = p.cls("java/lang/Object")
    nested = annotation(p, "Lfixture/Inner;", [("n", ev_int(p, 4))])
    a1 = annotation(p, "Lfixture/Marker;", [("value", ev_string(p, "m")),
                                             ("kind", ev_enum(p, "Lfixture/Kind;", "A")),
                                             ("type", ev_class(p, "Ljava/lang/String;")),
                                             ("inner", ev_nested(nested)),
                                             ("nums", ev_array([ev_int(p, 1), ev_int(p, 2)]))])
    a2 = annotation(p, "Ljava/lang/Deprecated;", [])
    cattrs = [rva(p, [a1, a2]), attr(p, "SourceFile", u2(p.utf8("Multi.java")))]
    return classfile(major, p, ACC_PUBLIC | ACC_SUPER, this, sup, [], [], [init_method(p)], cattrs)


# -- runnable fixtures --------------------------------------------------------


def greeter():
    """dep/Greeter: static String greet() { return "hello from dep"; }"""
    p = Pool()
    this = p.cls("fixture/dep/Greeter")
    sup = p.cls("java/lang/Object")
    code = b"\x12" + u1(p.string("hello from dep")) + b"\xb0"
    methods = [init_method(p), member(p, ACC_PUBLIC | ACC_STATIC, "greet", "()Ljava/lang/String;",
                                      [code_attr(p, 1, 0, code)])]
    return classfile(52, p, ACC_PUBLIC | ACC_SUPER, this, sup, [], [], methods,
                     [attr(p, "SourceFile", u2(p.utf8("Greeter.java")))])


def main_class():
    """fixture/app/Main: prints Greeter.greet() and the annotations of Main and Greeter."""
    p = Pool()
    this = p.cls("fixture/app/Main")
    sup = p.cls("java/lang/Object")
    out = p.field("java/lang/System", "out", "Ljava/io/PrintStream;")
    println = p.method("java/io/PrintStream", "println", "(Ljava/lang/String;)V")
    greet = p.method("fixture/dep/Greeter", "greet", "()Ljava/lang/String;")
    get_anns = p.method("java/lang/Class", "getAnnotations", "()[Ljava/lang/annotation/Annotation;")
    to_string = p.method("java/util/Arrays", "toString", "([Ljava/lang/Object;)Ljava/lang/String;")
    greeter_cls = p.cls("fixture/dep/Greeter")

    def print_anns(cls_index):
        ldc = (b"\x12" + u1(cls_index)) if cls_index < 256 else (b"\x13" + u2(cls_index))
        return b"\xb2" + u2(out) + ldc + b"\xb6" + u2(get_anns) + b"\xb8" + u2(to_string) + b"\xb6" + u2(println)

    code = b"\xb2" + u2(out) + b"\xb8" + u2(greet) + b"\xb6" + u2(println)
    code += print_anns(this) + print_anns(greeter_cls) + b"\xb1"
    methods = [init_method(p), member(p, ACC_PUBLIC | ACC_STATIC, "main", "([Ljava/lang/String;)V",
                                      [code_attr(p, 2, 1, code)])]
    return classfile(52, p, ACC_PUBLIC | ACC_SUPER, this, sup, [], [], methods,
                     [attr(p, "SourceFile", u2(p.utf8("Main.java")))])


def write(path, data):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "wb") as f:
        f.write(data)


def main():
    classes = os.path.join(HERE, "classes")
    shapes = [("Plain", plain_class), ("Iface", interface_class), ("Handler", handler_class), ("Modern", modern_class)]
    for major in range(52, 66):
        for seed, (label, fn) in enumerate(shapes):
            name = "fixture/v%d/%s%d" % (major, label, seed)
            write(os.path.join(classes, "v%d_%s.class" % (major, label)), fn(major, name, seed))
    write(os.path.join(classes, "module-info_v53.class"), module_info(53, "fixture.alpha", [], ["fixture/v53"]))
    write(os.path.join(classes, "module-info_v61.class"), module_info(61, "fixture.beta", ["java.sql"], ["fixture/v61", "fixture/v60"]))
    write(os.path.join(classes, "module-info_v65.class"), module_info(65, "fixture.gamma", ["fixture.beta"], []))
    write(os.path.join(classes, "package-info_v52.class"), package_info(52, "fixture/v52"))
    write(os.path.join(classes, "package-info_v61.class"), package_info(61, "fixture/v61"))
    write(os.path.join(classes, "ClassportInfo.class"), provenance_annotation_type())
    write(os.path.join(classes, "Multi_v55.class"), multi_annotated(55))
    write(os.path.join(classes, "Multi_v65.class"), multi_annotated(65))

    jvm = os.path.join(HERE, "jvm")
    write(os.path.join(jvm, "fixture/app/Main.class"), main_class())
    write(os.path.join(jvm, "fixture/dep/Greeter.class"), greeter())
    write(os.path.join(jvm, "io/github/chainsproject/classport/commons/ClassportInfo.class"),
          provenance_annotation_type())

    foreign_jar(os.path.join(HERE, "foreign.jar"))


def foreign_jar(path):
    """An archive from a different ZIP writer: mixed methods, a comment."""
    stamp = (2020, 1, 2, 3, 4, 6)
    with zipfile.ZipFile(path, "w") as z:
        z.writestr(zipfile.ZipInfo("META-INF/", date_time=stamp), b"")
        z.writestr(zipfile.ZipInfo("META-INF/MANIFEST.MF", date_time=stamp),
                   b"Manifest-Version: 1.0\r\n\r\n", compress_type=zipfile.ZIP_DEFLATED)
        z.writestr(zipfile.ZipInfo("stored.txt", date_time=stamp), b"stored content\n",
                   compress_type=zipfile.ZIP_STORED)
        z.writestr(zipfile.ZipInfo("deflated.txt", date_time=stamp), b"deflate me " * 100,
                   compress_type=zipfile.ZIP_DEFLATED)
        z.writestr(zipfile.ZipInfo("empty.txt", date_time=stamp), b"")
        z.comment = b"archive comment"


if __name__ == "__main__":
    main()
