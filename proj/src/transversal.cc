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

#include "ksconf/transversal.h"

#include <bit>
#include <stdexcept>

namespace ksconf {

TransversalSearch::TransversalSearch(const std::vector<Bitset> &adjacency, std::span<const Bitset> cliques)
    : adjacency_(adjacency), cliques_(cliques) {
    words_ = (cliques.size() + 63) / 64;
    containing_.assign(adjacency.size(), std::vector<uint64_t>(words_, 0));
    for (std::size_t c = 0; c < cliques.size(); c++) {
        cliques[c].for_each([&](std::size_t v) {
            if (v >= adjacency.size()) {
                throw std::invalid_argument("clique member outside the configuration");
            }
            containing_[v][c >> 6] |= uint64_t{1} << (c & 63);
        });
    }
}

std::optional<Bitset> TransversalSearch::solve() {
    nodes_ = 0;
    Bitset chosen;
    std::vector<uint64_t> met(words_, 0);
    if (recurse(chosen, Bitset{}, met)) {
        return chosen;
    }
    return std::nullopt;
}

bool TransversalSearch::recurse(Bitset &chosen, const Bitset &blocked, std::vector<uint64_t> &met) {
    nodes_++;
    std::size_t best = cliques_.size();
    std::size_t best_count = kMaxRays + 1;
    for (std::size_t w = 0; w < words_; w++) {
        uint64_t open = ~met[w];
        if (w == words_ - 1 && cliques_.size() % 64) {
            open &= (uint64_t{1} << (cliques_.size() % 64)) - 1;
        }
        while (open) {
            std::size_t c = 64 * w + std::countr_zero(open);
            open &= open - 1;
            std::size_t n = (cliques_[c] - blocked).count();
            if (n < best_count) {
                best_count = n;
                best = c;
                if (n == 0) {
                    return false;
                }
            }
        }
    }
    if (best == cliques_.size()) {
        return true;
    }
    Bitset candidates = cliques_[best] - blocked;
    std::vector<uint64_t> saved = met;
    for (std::size_t v = candidates.first(); v != kMaxRays; v = candidates.next(v)) {
        for (std::size_t w = 0; w < words_; w++) {
            met[w] = saved[w] | containing_[v][w];
        }
        chosen.set(v);
        Bitset next_blocked = blocked | adjacency_[v];
        next_blocked.set(v);
        if (recurse(chosen, next_blocked, met)) {
            return true;
        }
        chosen.reset(v);
    }
    met = saved;
    return false;
}

std::optional<Bitset> find_independent_transversal(const std::vector<Bitset> &adjacency,
                                                   std::span<const Bitset> cliques) {
    TransversalSearch search(adjacency, cliques);
    return search.solve();
}

namespace {

bool small_rec(const std::vector<Bitset> &adjacency, std::span<const Bitset> cliques, uint64_t open,
               const Bitset &blocked) {
    if (open == 0) {
        return true;
    }
    std::size_t best = 0;
    std::size_t best_count = kMaxRays + 1;
    for (uint64_t o = open; o; o &= o - 1) {
        std::size_t c = std::countr_zero(o);
        std::size_t n = (cliques[c] - blocked).count();
        if (n < best_count) {
            if (n == 0) {
                return false;
            }
            best_count = n;
            best = c;
        }
    }
    Bitset candidates = cliques[best] - blocked;
    for (std::size_t v = candidates.first(); v != kMaxRays; v = candidates.next(v)) {
        uint64_t still_open = 0;
        for (uint64_t o = open; o; o &= o - 1) {
            std::size_t c = std::countr_zero(o);
            if (!cliques[c].test(v)) {
                still_open |= uint64_t{1} << c;
            }
        }
        Bitset next_blocked = blocked | adjacency[v];
        next_blocked.set(v);
        if (small_rec(adjacency, cliques, still_open, next_blocked)) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool has_independent_transversal_small(const std::vector<Bitset> &adjacency, std::span<const Bitset> cliques) {
    if (cliques.size() > 64) {
        throw std::invalid_argument("small transversal search handles at most 64 cliques");
    }
    uint64_t open = cliques.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << cliques.size()) - 1;
    return small_rec(adjacency, cliques, open, Bitset{});
}

}  // namespace ksconf
