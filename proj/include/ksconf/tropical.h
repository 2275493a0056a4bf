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

#ifndef KSCONF_TROPICAL_H
#define KSCONF_TROPICAL_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ksconf/bitset.h"
#include "ksconf/orthograph.h"
#include "ksconf/rays.h"

namespace ksconf {

/// Looks for an anticlique section of a collection of d-cliques of `parent`:
/// a set of rays, pairwise non-orthogonal in the parent, meeting every clique
/// of the collection (necessarily exactly once). Throws std::invalid_argument
/// if the collection is empty or a member is not a d-clique of `parent`.
std::optional<Bitset> admits_anticlique_section(const Configuration &parent, std::span<const CliqueSet> collection);

/// Returns an orthogonal pair contained in no d-clique, if there is one.
std::optional<std::pair<std::size_t, std::size_t>> uncovered_orthogonal_pair(const Configuration &config);

struct TropicalWitness {
    /// Indices into maximal_cliques(config), increasing.
    std::vector<std::size_t> clique_indices;
    Bitset union_set;
};

struct TropicalProgress {
    std::size_t n = 0;
    std::size_t first_index = 0;
    std::size_t clique_count = 0;
    uint64_t collections_checked = 0;
    uint64_t witnesses = 0;
};

struct TropicalOptions {
    std::size_t max_n = 6;
    /// Check every n-subset of the d-cliques. Otherwise only collections of
    /// pairwise-disjoint cliques are enumerated exhaustively, plus
    /// `overlap_samples` random collections per n.
    bool exhaustive = false;
    std::size_t overlap_samples = 1000;
    uint64_t seed = 20120101;
    /// Exhaustive mode only: a JSON file recording finished work, read on
    /// start and rewritten after every top-level branch.
    std::string checkpoint_path;
    std::function<void(const TropicalProgress &)> progress;
};

struct TropicalResult {
    std::size_t dimension = 0;
    /// Every section-free collection of `dimension` cliques that the search
    /// visited, in lexicographic order of clique indices.
    std::vector<TropicalWitness> witnesses;
    bool exhaustive = false;
    uint64_t collections_checked = 0;
    /// Witnesses found only by sampling overlapping collections.
    std::size_t overlapping_witnesses = 0;
};

/// The smallest n <= max_n for which some n maximal cliques admit no
/// anticlique section, or nullopt if there is none. Throws
/// std::invalid_argument if some orthogonal pair lies in no d-clique.
std::optional<TropicalResult> tropical_dimension(const Configuration &config, const TropicalOptions &options = {});

/// Distinct witness unions, lexicographically ordered.
std::vector<Bitset> tropical_unions(const TropicalResult &result);

/// Index sets of the tropical subconfigurations (empty if none up to max_n).
std::vector<Bitset> tropical_subconfiguration_sets(const Configuration &config, const TropicalOptions &options = {});

std::vector<Configuration> enumerate_tropical_subconfigurations(const Configuration &config,
                                                                const TropicalOptions &options = {});

}  // namespace ksconf

#endif
