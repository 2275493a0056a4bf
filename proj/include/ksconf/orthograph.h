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

#ifndef KSCONF_ORTHOGRAPH_H
#define KSCONF_ORTHOGRAPH_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksconf/bitset.h"
#include "ksconf/rays.h"

namespace ksconf {

/// Clique and anticlique counts by size; element k-1 holds the count for size
/// k. Both rows are truncated after their last nonzero entry.
struct Signature {
    std::vector<uint64_t> cliques;
    std::vector<uint64_t> anticliques;

    auto operator<=>(const Signature &) const = default;

    /// Two comma-separated rows, cliques first.
    std::string str() const;
};

/// A set of pairwise orthogonal rays, held as a membership mask over the
/// parent configuration.
using CliqueSet = Bitset;

/// Counts of cliques of every size in the graph given by `adjacency`
/// restricted to `vertices`. Enumeration stops at size `max_size`.
std::vector<uint64_t> clique_counts(const std::vector<Bitset> &adjacency, const Bitset &vertices,
                                    std::size_t max_size);

uint64_t count_cliques(const Configuration &config, std::size_t k);
uint64_t count_anticliques(const Configuration &config, std::size_t k);
Signature signature(const Configuration &config);

/// All cliques of exactly k rays, lexicographically ordered.
std::vector<CliqueSet> cliques_of_size(const Configuration &config, std::size_t k);

/// All cliques of size d (the configuration's dimension), lexicographically
/// ordered.
std::vector<CliqueSet> maximal_cliques(const Configuration &config);

struct SaturationResult {
    bool saturated = true;
    /// On failure: a clique of size < d that no ray extends.
    std::optional<std::vector<std::size_t>> counterexample;

    explicit operator bool() const { return saturated; }
};

SaturationResult is_saturated(const Configuration &config);

/// True iff every (d-1)-clique lies in exactly one d-clique.
bool steiner_check(const Configuration &config);

/// Number of d-cliques.
uint64_t capacity(const Configuration &config);

/// Number of cliques from `cliques` contained in `subset`.
uint64_t capacity_within(const std::vector<CliqueSet> &cliques, const Bitset &subset);

/// Sizes of pairwise intersections of distinct cliques, as a histogram
/// indexed by intersection size.
std::vector<uint64_t> intersection_histogram(const std::vector<CliqueSet> &cliques);

}  // namespace ksconf

#endif
