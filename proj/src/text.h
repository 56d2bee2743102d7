// Copyright 2026 The amegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Line-oriented parsing shared by the text formats.

#ifndef AMEGRAPH_SRC_TEXT_H
#define AMEGRAPH_SRC_TEXT_H

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "amegraph/error.h"

namespace amegraph::detail {

/// Whitespace-separated integers; anything else is a ParseError.
inline std::vector<long long> parse_numbers(std::string_view line, std::size_t line_no) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
        if (pos >= line.size()) {
            break;
        }
        long long v = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
        if (ec != std::errc() ||
            (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
            throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": expected integers");
        }
        out.push_back(v);
        pos = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

struct Line {
    std::size_t number;
    std::string_view text;
};

/// Splits into blocks of non-comment lines separated by blank lines.
inline std::vector<std::vector<Line>> split_blocks(std::string_view text) {
    std::vector<std::vector<Line>> blocks(1);
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) {
            if (!blocks.back().empty()) {
                blocks.emplace_back();
            }
        } else if (line[first] != '#') {
            blocks.back().push_back({line_no, line});
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    if (blocks.back().empty()) {
        blocks.pop_back();
    }
    return blocks;
}

inline std::string at_line(std::size_t line_no) {
    return "line " + std::to_string(line_no) + ": ";
}

}  // namespace amegraph::detail

#endif
