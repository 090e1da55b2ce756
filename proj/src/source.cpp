/*
   Copyright 2026 The gasgauge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gasgauge/source.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace gasgauge {

std::string to_string(const U256& v) { return v.str(); }

U256 parse_u256(std::string_view text) {
    U256 value = 0;
    try {
        if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
            for (char c : text.substr(2)) {
                unsigned digit = 0;
                if (c >= '0' && c <= '9') {
                    digit = static_cast<unsigned>(c - '0');
                } else if (c >= 'a' && c <= 'f') {
                    digit = static_cast<unsigned>(c - 'a' + 10);
                } else if (c >= 'A' && c <= 'F') {
                    digit = static_cast<unsigned>(c - 'A' + 10);
                } else {
                    throw Error(ErrorKind::Syntax, "malformed hex literal '" + std::string(text) + "'");
                }
                value = value * 16 + digit;
            }
            return value;
        }
        if (text.empty()) {
            throw Error(ErrorKind::Syntax, "empty numeric literal");
        }
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw Error(ErrorKind::Syntax, "malformed numeric literal '" + std::string(text) + "'");
            }
            value = value * 10 + static_cast<unsigned>(c - '0');
        }
    } catch (const std::overflow_error&) {
        throw Error(ErrorKind::Syntax, "numeric literal '" + std::string(text) + "' exceeds 256 bits");
    }
    return value;
}

bool fits_u64(const U256& v) { return v <= U256(std::numeric_limits<std::uint64_t>::max()); }

SourceFile::SourceFile(std::string path, std::string content)
    : path_(std::move(path)), content_(std::move(content)) {
    line_index_.push_back(0);
    for (std::size_t i = 0; i < content_.size(); ++i) {
        if (content_[i] == '\n' && i + 1 < content_.size()) {
            line_index_.push_back(static_cast<std::uint32_t>(i + 1));
        }
    }
}

SourceFile SourceFile::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return SourceFile(path.string(), buf.str());
}

Location SourceFile::location(std::uint32_t offset) const {
    auto it = std::upper_bound(line_index_.begin(), line_index_.end(), offset);
    auto line = static_cast<std::uint32_t>(it - line_index_.begin());
    return {line, offset - line_index_[line - 1] + 1};
}

std::string_view SourceFile::text(const Span& span) const {
    if (span.begin > content_.size() || span.end > content_.size() || span.begin > span.end) {
        return {};
    }
    return std::string_view(content_).substr(span.begin, span.end - span.begin);
}

std::string SourceFile::describe(const Span& span) const {
    auto from = location(span.begin);
    auto to = location(span.end > span.begin ? span.end - 1 : span.begin);
    return std::to_string(from.line) + ":" + std::to_string(from.column) + "-" + std::to_string(to.line) +
           ":" + std::to_string(to.column);
}

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Lex: return "lex";
        case ErrorKind::Syntax: return "syntax";
        case ErrorKind::Unsupported: return "unsupported construct";
        case ErrorKind::Semantic: return "semantic";
        case ErrorKind::Analysis: return "analysis";
        case ErrorKind::Patch: return "patch";
        case ErrorKind::Io: return "io";
        case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, std::string message, std::optional<Span> span)
    : std::runtime_error(std::move(message)), kind_(kind), span_(span) {}

std::string Error::format(const SourceFile& file) const {
    std::string out = file.path();
    if (span_) {
        auto loc = file.location(span_->begin);
        out += ":" + std::to_string(loc.line) + ":" + std::to_string(loc.column);
    }
    out += ": ";
    out += to_string(kind_);
    out += " error: ";
    out += what();
    return out;
}

}  // namespace gasgauge
