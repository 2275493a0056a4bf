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

#include "ksconf/tropical.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <stdexcept>

#include "ksconf/transversal.h"

namespace ksconf {

namespace {

using Words = std::vector<uint64_t>;

Words make_words(std::size_t bits) { return Words((bits + 63) / 64, 0); }

std::size_t popcount(const Words &w) {
    std::size_t n = 0;
    for (uint64_t x : w) {
        n += std::popcount(x);
    }
    return n;
}

struct Checkpoint {
    std::size_t n = 0;
    std::size_t next_first = 0;
    uint64_t collections_checked = 0;
    std::vector<std::vector<std::size_t>> witnesses;
};

std::optional<Checkpoint> load_checkpoint(const std::string &path, std::size_t rays, std::size_t cliques) {
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("rays").get<std::size_t>() != rays || j.at("cliques").get<std::size_t>() != cliques) {
        throw std::invalid_argument("checkpoint " + path + " belongs to a different configuration");
    }
    Checkpoint cp;
    cp.n = j.at("n").get<std::size_t>();
    cp.next_first = j.at("next_first").get<std::size_t>();
    cp.collections_checked = j.at("collections_checked").get<uint64_t>();
    cp.witnesses = j.at("witnesses").get<std::vector<std::vector<std::size_t>>>();
    return cp;
}

void save_checkpoint(const std::string &path, std::size_t rays, std::size_t cliques, const Checkpoint &cp) {
    nlohmann::json j;
    j["rays"] = rays;
    j["cliques"] = cliques;
    j["n"] = cp.n;
    j["next_first"] = cp.next_first;
    j["collections_checked"] = cp.collections_checked;
    j["witnesses"] = cp.witnesses;
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump() << '\n';
    }
    std::rename(tmp.c_str(), path.c_str());
}

// Enumerates n-subsets of the cliques in lexicographic order, optionally
// restricted to pairwise-disjoint members, and records those without an
// anticlique section.
class TupleSearch {
   public:
    TupleSearch(const Configuration &config, const std::vector<CliqueSet> &cliques, bool disjoint_only)
        : config_(config), cliques_(cliques), disjoint_only_(disjoint_only) {
        const std::size_t c = cliques.size();
        later_.assign(c, make_words(c));
        for (std::size_t a = 0; a < c; a++) {
            for (std::size_t b = a + 1; b < c; b++) {
                if (!disjoint_only || !cliques[a].intersects(cliques[b])) {
                    later_[a][b >> 6] |= uint64_t{1} << (b & 63);
                }
            }
        }
    }

    // Runs all tuples whose first member is `first`.
    void run_first(std::size_t n, std::size_t first, std::vector<std::vector<std::size_t>> &witnesses,
                   uint64_t &checked) {
        n_ = n;
        chosen_.assign(n, CliqueSet{});
        indices_.assign(n, 0);
        levels_.assign(n + 1, make_words(cliques_.size()));
        witnesses_ = &witnesses;
        checked_ = &checked;
        chosen_[0] = cliques_[first];
        indices_[0] = first;
        if (n == 1) {
            leaf();
            return;
        }
        levels_[1] = later_[first];
        recurse(1);
    }

   private:
    void recurse(std::size_t depth) {
        const Words &avail = levels_[depth];
        Words &next = levels_[depth + 1];
        const std::size_t still_needed = n_ - depth - 1;
        for (std::size_t w = 0; w < avail.size(); w++) {
            for (uint64_t bits = avail[w]; bits; bits &= bits - 1) {
                std::size_t c = 64 * w + std::countr_zero(bits);
                chosen_[depth] = cliques_[c];
                indices_[depth] = c;
                if (still_needed == 0) {
                    leaf();
                    continue;
                }
                for (std::size_t k = 0; k < next.size(); k++) {
                    next[k] = avail[k] & later_[c][k];
                }
                if (popcount(next) < still_needed) {
                    continue;
                }
                recurse(depth + 1);
            }
        }
    }

    void leaf() {
        (*checked_)++;
        if (!has_independent_transversal_small(config_.adjacency(), chosen_)) {
            witnesses_->push_back(indices_);
        }
    }

    const Configuration &config_;
    const std::vector<CliqueSet> &cliques_;
    bool disjoint_only_;
    std::vector<Words> later_;
    std::size_t n_ = 0;
    std::vector<CliqueSet> chosen_;
    std::vector<std::size_t> indices_;
    std::vector<Words> levels_;
    std::vector<std::vector<std::size_t>> *witnesses_ = nullptr;
    uint64_t *checked_ = nullptr;
};

bool pairwise_disjoint(const std::vector<CliqueSet> &cliques, const std::vector<std::size_t> &indices) {
    for (std::size_t a = 0; a < indices.size(); a++) {
        for (std::size_t b = a + 1; b < indices.size(); b++) {
            if (cliques[indices[a]].intersects(cliques[indices[b]])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::optional<Bitset> admits_anticlique_section(const Configuration &parent, std::span<const CliqueSet> collection) {
    if (collection.empty()) {
        throw std::invalid_argument("anticlique section of an empty collection");
    }
    for (const CliqueSet &u : collection) {
        bool ok = u.count() == parent.dim() && u.is_subset_of(parent.all());
        u.for_each([&](std::size_t v) { ok = ok && (u - parent.neighbours(v)).count() == 1; });
        if (!ok) {
            throw std::invalid_argument("collection member is not a " + std::to_string(parent.dim()) +
                                        "-clique of the configuration");
        }
    }
    return find_independent_transversal(parent.adjacency(), collection);
}

std::optional<std::pair<std::size_t, std::size_t>> uncovered_orthogonal_pair(const Configuration &config) {
    std::vector<Bitset> covered(config.size());
    for (const CliqueSet &u : maximal_cliques(config)) {
        u.for_each([&](std::size_t v) { covered[v] |= u; });
    }
    for (std::size_t v = 0; v < config.size(); v++) {
        Bitset missing = config.neighbours(v) - covered[v];
        if (missing.any()) {
            return std::make_pair(v, missing.first());
        }
    }
    return std::nullopt;
}

std::optional<TropicalResult> tropical_dimension(const Configuration &config, const TropicalOptions &options) {
    if (auto pair = uncovered_orthogonal_pair(config)) {
        throw std::invalid_argument("orthogonal pair (" + std::to_string(pair->first) + ", " +
                                    std::to_string(pair->second) + ") lies in no " +
                                    std::to_string(config.dim()) + "-clique");
    }
    const auto cliques = maximal_cliques(config);
    const std::size_t c = cliques.size();
    TropicalResult result;
    result.exhaustive = options.exhaustive;
    TupleSearch search(config, cliques, !options.exhaustive);
    std::mt19937_64 rng(options.seed);

    std::size_t start_n = 1;
    std::optional<Checkpoint> resume;
    if (options.exhaustive && !options.checkpoint_path.empty()) {
        resume = load_checkpoint(options.checkpoint_path, config.size(), c);
        if (resume) {
            start_n = resume->n;
        }
    }

    for (std::size_t n = start_n; n <= std::min(options.max_n, c); n++) {
        std::vector<std::vector<std::size_t>> found;
        std::size_t first = 0;
        if (resume && resume->n == n) {
            found = resume->witnesses;
            result.collections_checked = resume->collections_checked;
            first = resume->next_first;
        }
        for (; first + n <= c; first++) {
            search.run_first(n, first, found, result.collections_checked);
            if (options.exhaustive && !options.checkpoint_path.empty()) {
                save_checkpoint(options.checkpoint_path, config.size(), c,
                                Checkpoint{n, first + 1, result.collections_checked, found});
            }
            if (options.progress) {
                options.progress({n, first, c, result.collections_checked, found.size()});
            }
        }
        if (!options.exhaustive && n > 1) {
            std::vector<std::size_t> pool(c);
            for (std::size_t i = 0; i < c; i++) {
                pool[i] = i;
            }
            std::vector<CliqueSet> chosen(n);
            for (std::size_t s = 0; s < options.overlap_samples; s++) {
                std::vector<std::size_t> pick;
                std::sample(pool.begin(), pool.end(), std::back_inserter(pick), n, rng);
                if (pairwise_disjoint(cliques, pick)) {
                    continue;
                }
                result.collections_checked++;
                for (std::size_t k = 0; k < n; k++) {
                    chosen[k] = cliques[pick[k]];
                }
                if (!has_independent_transversal_small(config.adjacency(), chosen)) {
                    found.push_back(pick);
                    result.overlapping_witnesses++;
                }
            }
        }
        if (!found.empty()) {
            std::sort(found.begin(), found.end());
            found.erase(std::unique(found.begin(), found.end()), found.end());
            result.dimension = n;
            for (auto &idx : found) {
                TropicalWitness w;
                for (std::size_t i : idx) {
                    w.union_set |= cliques[i];
                }
                w.clique_indices = std::move(idx);
                result.witnesses.push_back(std::move(w));
            }
            return result;
        }
        if (options.exhaustive && !options.checkpoint_path.empty()) {
            save_checkpoint(options.checkpoint_path, config.size(), c,
                            Checkpoint{n + 1, 0, result.collections_checked, {}});
        }
    }
    return std::nullopt;
}

std::vector<Bitset> tropical_unions(const TropicalResult &result) {
    std::vector<Bitset> unions;
    for (const TropicalWitness &w : result.witnesses) {
        unions.push_back(w.union_set);
    }
    std::sort(unions.begin(), unions.end(), lex_less);
    unions.erase(std::unique(unions.begin(), unions.end()), unions.end());
    return unions;
}

std::vector<Bitset> tropical_subconfiguration_sets(const Configuration &config, const TropicalOptions &options) {
    auto result = tropical_dimension(config, options);
    if (!result) {
        return {};
    }
    return tropical_unions(*result);
}

std::vector<Configuration> enumerate_tropical_subconfigurations(const Configuration &config,
                                                                const TropicalOptions &options) {
    std::vector<Configuration> out;
    for (const Bitset &u : tropical_subconfiguration_sets(config, options)) {
        out.push_back(config.subconfiguration(u));
    }
    return out;
}

}  // namespace ksconf
