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


#ifndef KSCONF_IO_H
#define KSCONF_IO_H

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ksconf/entropy.h"
#include "ksconf/rays.h"

namespace ksconf {

/// A malformed input, located by 1-based line and column.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::string source, std::size_t line, std::size_t column, const std::string &message);

    const std::string &source() const { return source_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

   private:
    std::string source_;
    std::size_t line_;
    std::size_t column_;
};

/// Parses one coordinate token: an integer, "bj", or "a+bj" / "a-bj".
/// Returns nullopt if the token is malformed.
std::optional<GaussianInt> parse_gaussian(std::string_view token);

/// Reads a whitespace-separated stream of N*dim coordinates, vector i taking
/// tokens i*dim .. i*dim+dim-1. Text after '#' on a line is ignored. Throws
/// ParseError on a bad token, a token count not divisible by dim, a zero
/// vector or a count different from `expected_count`.
std::vector<Ray> parse_vectors(std::string_view text, std::size_t dim,
                               std::optional<std::size_t> expected_count = std::nullopt,
                               const std::string &source = "<input>");

/// One vector per line, tokens separated by single spaces.
std::string format_vectors(const std::vector<Ray> &rays);

/// A whitespace-separated list of non-negative indices.
std::vector<std::size_t> parse_index_list(std::string_view text, const std::string &source = "<input>");
/// Indices separated by single spaces, newline-terminated; several sets are
/// concatenated on one line.
std::string format_index_sets(const std::vector<std::vector<std::size_t>> &sets);

/// Lines "index p/q" (or "index p"); unlisted rays weigh 0. Throws ParseError
/// on malformed lines, repeated or out-of-range indices.
ProbabilityWeight parse_weights(std::string_view text, std::size_t rays, const std::string &source = "<input>");
/// "index p/q" for every nonzero value of an exact weight, "index value" for a
/// floating one.
std::string format_weights(const ProbabilityWeight &f);

/// Whole file contents; throws std::runtime_error when unreadable.
std::string read_file(const std::string &path);

}  // namespace ksconf

#endif
