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

#include "amegraph/codes.h"

#include <charconv>
#include <sstream>

#include "amegraph/entanglement.h"
#include "amegraph/error.h"
#include "text.h"

namespace amegraph {

LinearCode::LinearCode(FieldMat generator) : g_(std::move(generator)) {
    if (g_.cols() == 0 || g_.cols() > g_.rows()) {
        throw Error(ErrorCode::kInvalidInput, "code dimension must satisfy 1 <= k <= n");
    }
    if (mat_rank(g_) != g_.cols()) {
        throw Error(ErrorCode::kInvalidInput, "generator columns must be independent");
    }
}

FieldMat parity_check(const LinearCode &c) {
    FieldMat k = kernel_basis(c.generator().transpose());
    return k.rows() == 0 ? k : rref(k);
}

std::size_t min_distance(const LinearCode &c, std::uint64_t budget) {
    const std::uint32_t p = c.prime().value();
    const std::size_t k = c.dimension();
    const std::size_t n = c.length();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= p;
        if (total > budget) {
            throw Error(ErrorCode::kTooLarge, "too many codewords to enumerate");
        }
    }
    // Gray-style odometer: the codeword is updated incrementally per step.
    std::vector<Residue> x(k, 0);
    std::vector<Residue> word(n, 0);
    std::size_t best = n;
    const FieldMat &g = c.generator();
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t j = 0;
        while (x[j] == p - 1) {
            x[j] = 0;
            for (std::size_t i = 0; i < n; ++i) {
                word[i] = mod_sub(word[i], mod_mul(p - 1, g.at(i, j), c.prime()), c.prime());
            }
            ++j;
        }
        ++x[j];
        std::size_t weight = 0;
        for (std::size_t i = 0; i < n; ++i) {
            word[i] = mod_add(word[i], g.at(i, j), c.prime());
            weight += word[i] != 0;
        }
        best = std::min(best, weight);
    }
    return best;
}

bool is_mds(const LinearCode &c) {
    return min_distance(c) == c.length() - c.dimension() + 1;
}

bool is_ame_code(const LinearCode &c) {
    return c.length() == 2 * c.dimension() && is_mds(c);
}

LinearCode grs_code(Prime p, std::size_t n, std::size_t k, const std::vector<Residue> &points) {
    if (n > p.value()) {
        throw Error(ErrorCode::kLengthExceedsField, "evaluation codes need n <= p");
    }
    if (points.size() != n) {
        throw Error(ErrorCode::kInvalidArgument, "need exactly n evaluation points");
    }
    std::vector<bool> seen(p.value(), false);
    for (Residue x : points) {
        if (x >= p.value()) {
            throw Error(ErrorCode::kWeightOutOfRange, "evaluation point out of range");
        }
        if (seen[x]) {
            throw Error(ErrorCode::kPointsNotDistinct, "evaluation points must be distinct");
        }
        seen[x] = true;
    }
    FieldMat g(p, n, k);
    for (std::size_t i = 0; i < n; ++i) {
        Residue power = 1;
        for (std::size_t j = 0; j < k; ++j) {
            g.set(i, j, power);
            power = mod_mul(power, points[i], p);
        }
    }
    return LinearCode(std::move(g));
}

LinearCode grs_code(Prime p, std::size_t n, std::size_t k) {
    std::vector<Residue> points;
    for (std::size_t i = 0; i < n && i < p.value(); ++i) {
        points.push_back(static_cast<Residue>(i));
    }
    if (n > p.value()) {
        throw Error(ErrorCode::kLengthExceedsField, "evaluation codes need n <= p");
    }
    return grs_code(p, n, k, points);
}

LinearCode hamming433() {
    return LinearCode(FieldMat::from_rows(Prime(3), {{1, 0}, {0, 1}, {1, 1}, {2, 1}}));
}

GeneratorMatrix ame_generator_matrix(const LinearCode &c) {
    if (!is_ame_code(c)) {
        throw Error(ErrorCode::kNotAmeCode, "need an MDS code with n = 2k");
    }
    const Prime p = c.prime();
    const std::size_t n = c.length();
    const std::size_t k = c.dimension();
    FieldMat gt = c.generator().transpose();
    FieldMat h = parity_check(c);
    FieldMat x = gt.vstack(FieldMat(p, n - k, n));
    FieldMat z = FieldMat(p, k, n).vstack(h);
    return GeneratorMatrix(std::move(x), std::move(z));
}

Graph code_to_ame_graph(const LinearCode &c) {
    Graph g = to_graph(ame_generator_matrix(c)).graph;
    if (!is_ame(g)) {
        throw Error(ErrorCode::kInternalError, "code graph failed the AME check");
    }
    return g;
}

std::string to_text(const LinearCode &c) {
    std::ostringstream out;
    out << c.prime().value() << ' ' << c.length() << ' ' << c.dimension() << '\n';
    for (std::size_t j = 0; j < c.dimension(); ++j) {
        for (std::size_t i = 0; i < c.length(); ++i) {
            out << (i == 0 ? "" : " ") << c.generator().at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

LinearCode parse_code(std::string_view text) {
    using detail::at_line;
    auto blocks = detail::split_blocks(text);
    if (blocks.size() != 1) {
        throw Error(ErrorCode::kParseError, "expected a single code");
    }
    const auto &lines = blocks[0];
    auto header = detail::parse_numbers(lines[0].text, lines[0].number);
    if (header.size() != 3 || header[0] < 2 || header[0] > 0xFFFFFFFFLL || header[1] < 1 || header[2] < 1 ||
        !is_prime(static_cast<std::uint64_t>(header[0]))) {
        throw Error(ErrorCode::kParseError, at_line(lines[0].number) + "expected header 'p n k' with p prime");
    }
    Prime p(static_cast<std::uint32_t>(header[0]));
    auto n = static_cast<std::size_t>(header[1]);
    auto k = static_cast<std::size_t>(header[2]);
    if (lines.size() != k + 1) {
        throw Error(ErrorCode::kParseError, "expected " + std::to_string(k) + " generator columns");
    }
    FieldMat g(p, n, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto nums = detail::parse_numbers(lines[j + 1].text, lines[j + 1].number);
        if (nums.size() != n) {
            throw Error(ErrorCode::kParseError, at_line(lines[j + 1].number) + "expected n residues");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (nums[i] < 0 || nums[i] >= static_cast<long long>(p.value())) {
                throw Error(ErrorCode::kParseError, at_line(lines[j + 1].number) + "residue out of range");
            }
            g.set(i, j, static_cast<Residue>(nums[i]));
        }
    }
    try {
        return LinearCode(std::move(g));
    } catch (const Error &e) {
        throw Error(ErrorCode::kParseError, e.what());
    }
}

LinearCode load_code(const std::string &name_or_path) {
    if (name_or_path == "hamming433") {
        return hamming433();
    }
    if (name_or_path.rfind("grs:", 0) == 0) {
        std::vector<std::uint64_t> params;
        std::string_view rest = std::string_view(name_or_path).substr(4);
        while (!rest.empty()) {
            std::size_t comma = rest.find(',');
            std::string_view tok = rest.substr(0, comma);
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw Error(ErrorCode::kParseError, "bad code name " + name_or_path);
            }
            params.push_back(v);
            rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
        }
        if (params.size() != 3 || params[0] > 0xFFFFFFFFULL || !is_prime(params[0])) {
            throw Error(ErrorCode::kParseError, "expected grs:p,n,k with p prime");
        }
        return grs_code(Prime(static_cast<std::uint32_t>(params[0])), params[1], params[2]);
    }
    return parse_code(read_text_file(name_or_path));
}

}  // namespace amegraph
