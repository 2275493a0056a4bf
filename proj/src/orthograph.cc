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

#include "ksconf/orthograph.h"

#include <sstream>

namespace ksconf {

namespace {

void truncate(std::vector<uint64_t> &row) {
    while (!row.empty() && row.back() == 0) {
        row.pop_back();
    }
}

// Counts cliques extending the current one (of size `depth`) by members of
// `candidates`, all of which exceed the current members.
void count_rec(const std::vector<Bitset> &adj, const Bitset &candidates, std::size_t depth, std::size_t max_size,
               std::vector<uint64_t> &counts) {
    counts[depth] += candidates.count();
    if (depth + 1 == max_size) {
        return;
    }
    candidates.for_each([&](std::size_t v) {
        Bitset next = (candidates & adj[v]).above(v);
        if (next.any()) {
            count_rec(adj, next, depth + 1, max_size, counts);
        }
    });
}

template <typename Fn>
void enumerate_rec(const std::vector<Bitset> &adj, Bitset &members, const Bitset &candidates, std::size_t remaining,
                   Fn &fn) {
    if (remaining == 0) {
        fn(members);
        return;
    }
    candidates.for_each([&](std::size_t v) {
        Bitset next = (candidates & adj[v]).above(v);
        if (next.count() + 1 < remaining) {
            return;
        }
        members.set(v);
        enumerate_rec(adj, members, next, remaining - 1, fn);
        members.reset(v);
    });
}

}  // namespace

std::string Signature::str() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < cliques.size(); k++) {
        out << (k ? "," : "") << cliques[k];
    }
    out << '\n';
    for (std::size_t k = 0; k < anticliques.size(); k++) {
        out << (k ? "," : "") << anticliques[k];
    }
    out << '\n';
    return out.str();
}

std::vector<uint64_t> clique_counts(const std::vector<Bitset> &adjacency, const Bitset &vertices,
                                    std::size_t max_size) {
    std::vector<uint64_t> counts(max_size, 0);
    if (max_size > 0 && vertices.any()) {
        count_rec(adjacency, vertices, 0, max_size, counts);
    }
    truncate(counts);
    return counts;
}

uint64_t count_cliques(const Configuration &config, std::size_t k) {
    if (k == 0 || k > config.size()) {
        return 0;
    }
    auto counts = clique_counts(config.adjacency(), config.all(), k);
    return counts.size() >= k ? counts[k - 1] : 0;
}

uint64_t count_anticliques(const Configuration &config, std::size_t k) {
    if (k == 0 || k > config.size()) {
        return 0;
    }
    auto counts = clique_counts(config.complement_adjacency(), config.all(), k);
    return counts.size() >= k ? counts[k - 1] : 0;
}

Signature signature(const Configuration &config) {
    Signature s;
    s.cliques = clique_counts(config.adjacency(), config.all(), config.size());
    s.anticliques = clique_counts(config.complement_adjacency(), config.all(), config.size());
    return s;
}

std::vector<CliqueSet> cliques_of_size(const Configuration &config, std::size_t k) {
    std::vector<CliqueSet> out;
    if (k == 0 || k > config.size()) {
        return out;
    }
    Bitset members;
    auto collect = [&](const Bitset &m) { out.push_back(m); };
    enumerate_rec(config.adjacency(), members, config.all(), k, collect);
    return out;
}

std::vector<CliqueSet> maximal_cliques(const Configuration &config) { return cliques_of_size(config, config.dim()); }

namespace {

// `common` holds the rays orthogonal to every member; `size` members so far.
bool saturation_rec(const Configuration &config, Bitset &members, const Bitset &common, std::size_t last,
                    std::size_t size, SaturationResult &result) {
    if (size >= config.dim()) {
        return true;
    }
    if (common.none()) {
        result.saturated = false;
        result.counterexample = members.indices();
        return false;
    }
    Bitset candidates = common.above(last);
    for (std::size_t v = candidates.first(); v != kMaxRays; v = candidates.next(v)) {
        members.set(v);
        bool ok = saturation_rec(config, members, common & config.neighbours(v), v, size + 1, result);
        members.reset(v);
        if (!ok) {
            return false;
        }
    }
    return true;
}

}  // namespace

SaturationResult is_saturated(const Configuration &config) {
    SaturationResult result;
    Bitset members;
    for (std::size_t v = 0; v < config.size(); v++) {
        members.set(v);
        bool ok = saturation_rec(config, members, config.neighbours(v), v, 1, result);
        members.reset(v);
        if (!ok) {
            break;
        }
    }
    return result;
}

bool steiner_check(const Configuration &config) {
    if (config.dim() < 2) {
        return true;
    }
    bool ok = true;
    auto check = [&](const Bitset &members) {
        if (!ok) {
            return;
        }
        Bitset common = config.all() - members;
        members.for_each([&](std::size_t v) { common &= config.neighbours(v); });
        ok = common.count() == 1;
    };
    Bitset members;
    enumerate_rec(config.adjacency(), members, config.all(), config.dim() - 1, check);
    return ok;
}

uint64_t capacity(const Configuration &config) { return count_cliques(config, config.dim()); }

uint64_t capacity_within(const std::vector<CliqueSet> &cliques, const Bitset &subset) {
    uint64_t n = 0;
    for (const CliqueSet &c : cliques) {
        n += c.is_subset_of(subset);
    }
    return n;
}

std::vector<uint64_t> intersection_histogram(const std::vector<CliqueSet> &cliques) {
    std::vector<uint64_t> hist;
    for (std::size_t a = 0; a < cliques.size(); a++) {
        for (std::size_t b = a + 1; b < cliques.size(); b++) {
            std::size_t k = (cliques[a] & cliques[b]).count();
            if (hist.size() <= k) {
                hist.resize(k + 1, 0);
            }
            hist[k]++;
        }
    }
    return hist;
}

}  // namespace ksconf
