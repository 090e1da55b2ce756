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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gasgauge {

// 256-bit unsigned integer; overflow and underflow throw instead of wrapping.
using U256 = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    256, 256, boost::multiprecision::unsigned_magnitude, boost::multiprecision::checked, void>>;

std::string to_string(const U256& v);
U256 parse_u256(std::string_view text);  // decimal or 0x-prefixed hex
bool fits_u64(const U256& v);

// Half-open byte range [begin, end) into a SourceFile's content.
struct Span {
    std::uint32_t begin{0};
    std::uint32_t end{0};

    [[nodiscard]] bool contains(const Span& other) const {
        return begin <= other.begin && other.end <= end;
    }
    friend bool operator==(const Span&, const Span&) = default;
};

struct Location {
    std::uint32_t line{1};    // 1-based
    std::uint32_t column{1};  // 1-based, in bytes
};

class SourceFile {
  public:
    SourceFile() = default;
    SourceFile(std::string path, std::string content);

    static SourceFile load(const std::filesystem::path& path);

    [[nodiscard]] const std::string& path() const { return path_; }
    [[nodiscard]] const std::string& content() const { return content_; }
    [[nodiscard]] const std::vector<std::uint32_t>& line_index() const { return line_index_; }
    [[nodiscard]] std::size_t line_count() const { return line_index_.size(); }

    [[nodiscard]] Location location(std::uint32_t offset) const;
    [[nodiscard]] std::string_view text(const Span& span) const;
    [[nodiscard]] std::string describe(const Span& span) const;  // "line:col-line:col"

  private:
    std::string path_;
    std::string content_;
    std::vector<std::uint32_t> line_index_;
};

enum class ErrorKind {
    Lex,
    Syntax,
    Unsupported,
    Semantic,
    Analysis,
    Patch,
    Io,
    Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message, std::optional<Span> span = std::nullopt);

    [[nodiscard]] ErrorKind kind() const { return kind_; }
    [[nodiscard]] const std::optional<Span>& span() const { return span_; }

    // "path:line:col: <kind> error: message"
    [[nodiscard]] std::string format(const SourceFile& file) const;

  private:
    ErrorKind kind_;
    std::optional<Span> span_;
};

}  // namespace gasgauge
