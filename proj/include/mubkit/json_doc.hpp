/*
 * Copyright 2026 The mubkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * Minimal JSON document builder for the emitters. Keys keep insertion order
 * and doubles are printed with 17 significant digits, so identical inputs
 * always produce identical bytes (the reproducibility contract of the CLI).
 * Parsing of incoming files is done elsewhere with nlohmann/json; this type
 * only writes.
 */

#pragma once

#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace mubkit {

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class JDoc {
  public:
    enum class Kind { Null, Bool, Int, Dbl, Str, Arr, Obj };

    JDoc() : kind_(Kind::Null) {}
    static JDoc null() { return JDoc(); }
    static JDoc boolean(bool b) {
        JDoc j;
        j.kind_ = Kind::Bool;
        j.int_ = b ? 1 : 0;
        return j;
    }
    static JDoc integer(long long v) {
        JDoc j;
        j.kind_ = Kind::Int;
        j.int_ = v;
        return j;
    }
    static JDoc number(double v) {
        JDoc j;
        j.kind_ = Kind::Dbl;
        j.dbl_ = v;
        return j;
    }
    static JDoc str(std::string s) {
        JDoc j;
        j.kind_ = Kind::Str;
        j.str_ = std::move(s);
        return j;
    }
    static JDoc arr() {
        JDoc j;
        j.kind_ = Kind::Arr;
        return j;
    }
    static JDoc obj() {
        JDoc j;
        j.kind_ = Kind::Obj;
        return j;
    }

    JDoc& push(JDoc v) {
        items_.push_back(std::move(v));
        return *this;
    }
    JDoc& set(std::string key, JDoc v) {
        keys_.push_back(std::move(key));
        items_.push_back(std::move(v));
        return *this;
    }

    std::string dump(int indent = 2) const {
        std::string out;
        write(out, indent, 0);
        out.push_back('\n');
        return out;
    }

  private:
    static void escape(std::string& out, const std::string& s) {
        out.push_back('"');
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                case '\r': out += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        out += buf;
                    } else {
                        out.push_back(c);
                    }
            }
        }
        out.push_back('"');
    }

    void write(std::string& out, int indent, int depth) const {
        const std::string pad(static_cast<size_t>(indent) * depth, ' ');
        const std::string pad_in(static_cast<size_t>(indent) * (depth + 1), ' ');
        switch (kind_) {
            case Kind::Null: out += "null"; break;
            case Kind::Bool: out += int_ ? "true" : "false"; break;
            case Kind::Int: out += std::to_string(int_); break;
            case Kind::Dbl: out += format_double(dbl_); break;
            case Kind::Str: escape(out, str_); break;
            case Kind::Arr: {
                if (items_.empty()) {
                    out += "[]";
                    break;
                }
                // arrays of scalars stay on one line; nested structures indent
                bool flat = true;
                for (const JDoc& v : items_)
                    if (v.kind_ == Kind::Arr || v.kind_ == Kind::Obj) flat = false;
                out.push_back('[');
                for (size_t i = 0; i < items_.size(); ++i) {
                    if (i) out.push_back(',');
                    if (!flat) {
                        out.push_back('\n');
                        out += pad_in;
                    } else if (i) {
                        out.push_back(' ');
                    }
                    items_[i].write(out, indent, depth + 1);
                }
                if (!flat) {
                    out.push_back('\n');
                    out += pad;
                }
                out.push_back(']');
                break;
            }
            case Kind::Obj: {
                if (items_.empty()) {
                    out += "{}";
                    break;
                }
                out.push_back('{');
                for (size_t i = 0; i < items_.size(); ++i) {
                    if (i) out.push_back(',');
                    out.push_back('\n');
                    out += pad_in;
                    escape(out, keys_[i]);
                    out += ": ";
                    items_[i].write(out, indent, depth + 1);
                }
                out.push_back('\n');
                out += pad;
                out.push_back('}');
                break;
            }
        }
    }

    Kind kind_ = Kind::Null;
    long long int_ = 0;
    double dbl_ = 0.0;
    std::string str_;
    std::vector<std::string> keys_;
    std::vector<JDoc> items_;
};

}  // namespace mubkit
