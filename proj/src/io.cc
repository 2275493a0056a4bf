// Copyright 2026 The ksconf Authors
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


#include "ksconf/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace ksconf {

namespace {

struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

// Splits on whitespace, dropping '#' comments, keeping 1-based positions.
std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            line++;
            column = 1;
            i++;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') i++;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            column++;
            i++;
        } else {
            std::size_t start = i;
            std::size_t start_column = column;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
                i++;
                column++;
            }
            out.push_back({text.substr(start, i - start), line, start_column});
        }
    }
    return out;
}

std::optional<int64_t> parse_int(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

// Position just past the last line, for errors about missing input.
std::pair<std::size_t, std::size_t> end_position(std::string_view text) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (char c : text) {
        if (c == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return {line, column};
}

}  // namespace

ParseError::ParseError(std::string source, std::size_t line, std::size_t column, const std::string &message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

std::optional<GaussianInt> parse_gaussian(std::string_view token) {
    if (token.empty()) {
        return std::nullopt;
    }
    if (token.back() != 'j') {
        auto re = parse_int(token);
        return re ? std::optional<GaussianInt>(GaussianInt(*re)) : std::nullopt;
    }
    std::string_view body = token.substr(0, token.size() - 1);
    // The imaginary part starts at the last sign that is not the first char.
    std::size_t split = body.find_last_of("+-");
    if (split == std::string_view::npos || split == 0) {
        auto im = parse_int(body);
        return im ? std::optional<GaussianInt>(GaussianInt(0, *im)) : std::nullopt;
    }
    auto re = parse_int(body.substr(0, split));
    auto im = parse_int(body.substr(split));
    if (!re || !im) {
        return std::nullopt;
    }
    return GaussianInt(*re, *im);
}

std::vector<Ray> parse_vectors(std::string_view text, std::size_t dim, std::optional<std::size_t> expected_count,
                               const std::string &source) {
    if (dim == 0) {
        throw std::invalid_argument("dimension must be positive");
    }
    std::vector<Token> tokens = tokenize(text);
    std::vector<GaussianInt> coords;
    for (const Token &t : tokens) {
        auto g = parse_gaussian(t.text);
        if (!g) {
            throw ParseError(source, t.line, t.column, "expected an integer or a+bj coordinate, got '" +
                                                            std::string(t.text) + "'");
        }
        coords.push_back(*g);
    }
    if (coords.size() % dim != 0) {
        auto [line, column] = end_position(text);
        throw ParseError(source, line, column,
                         std::to_string(coords.size()) + " coordinates do not split into vectors of dimension " +
                             std::to_string(dim));
    }
    std::vector<Ray> rays;
    for (std::size_t i = 0; i < coords.size(); i += dim) {
        std::vector<GaussianInt> v(coords.begin() + i, coords.begin() + i + dim);
        bool zero = std::all_of(v.begin(), v.end(), [](GaussianInt c) { return c.is_zero(); });
        if (zero) {
            throw ParseError(source, tokens[i].line, tokens[i].column,
                             "vector " + std::to_string(i / dim) + " is zero, which is not a ray");
        }
        rays.push_back(make_ray(std::move(v)));
    }
    if (expected_count && rays.size() != *expected_count) {
        auto [line, column] = end_position(text);
        throw ParseError(source, line, column,
                         "expected " + std::to_string(*expected_count) + " vectors, found " +
                             std::to_string(rays.size()));
    }
    return rays;
}

std::string format_vectors(const std::vector<Ray> &rays) {
    std::string out;
    for (const Ray &r : rays) {
        for (std::size_t k = 0; k < r.dim(); k++) {
            if (k) out += ' ';
            out += r.coords()[k].str();
        }
        out += '\n';
    }
    return out;
}

std::vector<std::size_t> parse_index_list(std::string_view text, const std::string &source) {
    std::vector<std::size_t> out;
    for (const Token &t : tokenize(text)) {
        auto v = parse_int(t.text);
        if (!v || *v < 0) {
            throw ParseError(source, t.line, t.column, "expected a non-negative index, got '" + std::string(t.text) + "'");
        }
        out.push_back(static_cast<std::size_t>(*v));
    }
    return out;
}

std::string format_index_sets(const std::vector<std::vector<std::size_t>> &sets) {
    std::string out;
    for (const auto &set : sets) {
        for (std::size_t i : set) {
            if (!out.empty()) out += ' ';
            out += std::to_string(i);
        }
    }
    out += '\n';
    return out;
}

ProbabilityWeight parse_weights(std::string_view text, std::size_t rays, const std::string &source) {
    std::vector<Rational> values(rays, Rational(0));
    std::set<std::size_t> seen;
    std::vector<Token> tokens = tokenize(text);
    for (std::size_t i = 0; i < tokens.size(); i += 2) {
        const Token &idx = tokens[i];
        if (i + 1 >= tokens.size() || tokens[i + 1].line != idx.line) {
            throw ParseError(source, idx.line, idx.column, "expected 'index p/q'");
        }
        const Token &val = tokens[i + 1];
        if (i + 2 < tokens.size() && tokens[i + 2].line == idx.line) {
            throw ParseError(source, tokens[i + 2].line, tokens[i + 2].column, "trailing token on weight line");
        }
        auto index = parse_int(idx.text);
        if (!index || *index < 0 || static_cast<std::size_t>(*index) >= rays) {
            throw ParseError(source, idx.line, idx.column,
                             "ray index '" + std::string(idx.text) + "' outside 0.." + std::to_string(rays - 1));
        }
        if (!seen.insert(*index).second) {
            throw ParseError(source, idx.line, idx.column, "ray " + std::string(idx.text) + " weighted twice");
        }
        std::size_t slash = val.text.find('/');
        auto num = parse_int(val.text.substr(0, slash));
        std::optional<int64_t> den = slash == std::string_view::npos ? std::optional<int64_t>(1)
                                                                      : parse_int(val.text.substr(slash + 1));
        if (!num || !den || *den <= 0) {
            throw ParseError(source, val.line, val.column, "expected a fraction p/q, got '" + std::string(val.text) + "'");
        }
        values[*index] = Rational(*num, *den);
    }
    return ProbabilityWeight::exact(std::move(values));
}

std::string format_weights(const ProbabilityWeight &f) {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < f.size(); i++) {
        if (f.is_exact()) {
            const Rational &v = f.exact_values()[i];
            if (v != Rational(0)) {
                out << i << ' ' << v.numerator() << '/' << v.denominator() << '\n';
            }
        } else if (f.value(i) != 0) {
            out << i << ' ' << f.value(i) << '\n';
        }
    }
    return out.str();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace ksconf
