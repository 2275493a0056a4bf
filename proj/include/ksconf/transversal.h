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

#ifndef KSCONF_TRANSVERSAL_H
#define KSCONF_TRANSVERSAL_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ksconf/bitset.h"

namespace ksconf {

/// Finds an independent set S (no two members adjacent) that meets every
/// given clique. Because members of a clique are pairwise adjacent, S meets
/// each clique exactly once.
///
/// The search always branches on the unmet clique with the fewest remaining
/// candidates and tries candidates in increasing index order, so the witness
/// returned is a deterministic function of the input.
class TransversalSearch {
   public:
    TransversalSearch(const std::vector<Bitset> &adjacency, std::span<const Bitset> cliques);

    std::optional<Bitset> solve();

    /// Search nodes visited by the last solve().
    uint64_t nodes() const { return nodes_; }

   private:
    bool recurse(Bitset &chosen, const Bitset &blocked, std::vector<uint64_t> &met);

    const std::vector<Bitset> &adjacency_;
    std::span<const Bitset> cliques_;
    // For each ray, the cliques containing it as a bit mask over clique indices.
    std::vector<std::vector<uint64_t>> containing_;
    std::size_t words_ = 0;
    uint64_t nodes_ = 0;
};

std::optional<Bitset> find_independent_transversal(const std::vector<Bitset> &adjacency,
                                                   std::span<const Bitset> cliques);

/// Specialization for at most 64 cliques with no heap traffic; used in the
/// hot loop of tuple enumeration.
bool has_independent_transversal_small(const std::vector<Bitset> &adjacency, std::span<const Bitset> cliques);

}  // namespace ksconf

#endif
