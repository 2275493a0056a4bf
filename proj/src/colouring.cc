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

#include "ksconf/colouring.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ksconf/transversal.h"

namespace ksconf {

Bitset Colouring::colour_class(int colour) const {
    Bitset out;
    for (std::size_t i = 0; i < values.size(); i++) {
        if (values[i] == colour) {
            out.set(i);
        }
    }
    return out;
}

void validate_partition(const std::vector<int> &partition, std::size_t d) {
    if (partition.size() < 2) {
        throw std::invalid_argument("a partition needs at least two parts");
    }
    if (partition.size() > 16) {
        throw std::invalid_argument("at most 16 colours are supported");
    }
    for (std::size_t i = 0; i < partition.size(); i++) {
        if (partition[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && partition[i] > partition[i - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
    }
    if (std::accumulate(partition.begin(), partition.end(), std::size_t{0}) != d) {
        throw std::invalid_argument("partition does not sum to the dimension " + std::to_string(d));
    }
}

std::optional<Colouring> find_ks_colouring(const Configuration &config) {
    const auto cliques = maximal_cliques(config);
    auto ones = find_independent_transversal(config.adjacency(), cliques);
    if (!ones) {
        return std::nullopt;
    }
    Colouring c;
    c.values.assign(config.size(), 0);
    ones->for_each([&](std::size_t v) { c.values[v] = 1; });
    c.partition = {static_cast<int>(config.dim()) - 1, 1};
    return c;
}

bool is_ks_configuration(const Configuration &config) { return !find_ks_colouring(config).has_value(); }

bool is_critical(const Configuration &config) {
    if (!is_ks_configuration(config)) {
        return false;
    }
    for (std::size_t v = 0; v < config.size(); v++) {
        if (is_ks_configuration(config.without(v))) {
            return false;
        }
    }
    return true;
}

bool verify_ks_colouring(const Configuration &config, const std::vector<int> &values) {
    if (values.size() != config.size()) {
        return false;
    }
    for (std::size_t i = 0; i < config.size(); i++) {
        if (values[i] != 0 && values[i] != 1) {
            return false;
        }
        if (values[i] == 1) {
            bool clash = false;
            config.neighbours(i).for_each([&](std::size_t j) { clash |= values[j] == 1; });
            if (clash) {
                return false;
            }
        }
    }
    for (const CliqueSet &u : maximal_cliques(config)) {
        int sum = 0;
        u.for_each([&](std::size_t v) { sum += values[v]; });
        if (sum != 1) {
            return false;
        }
    }
    return true;
}

namespace {

// Backtracking over d-cliques with per-clique colour counts. Each ray keeps a
// mask of colours still allowed; a colour is withdrawn from the open rays of
// a clique once that clique holds its quota, and rays left with a single
// allowed colour are assigned immediately.
class PartitionSearch {
   public:
    PartitionSearch(const Configuration &config, const std::vector<int> &partition)
        : config_(config), need_(partition), colours_(static_cast<int>(partition.size())) {
        cliques_ = maximal_cliques(config);
        ray_cliques_.resize(config.size());
        for (std::size_t c = 0; c < cliques_.size(); c++) {
            cliques_[c].for_each([&](std::size_t v) { ray_cliques_[v].push_back(static_cast<uint32_t>(c)); });
        }
    }

    std::optional<std::vector<int>> solve() {
        State s;
        s.colour.assign(config_.size(), -1);
        s.allowed.assign(config_.size(), static_cast<uint16_t>((1u << colours_) - 1));
        s.counts.assign(cliques_.size() * colours_, 0);
        s.open.assign(cliques_.size(), static_cast<uint8_t>(config_.dim()));
        s.used.assign(colours_, 0);
        if (!search(s)) {
            return std::nullopt;
        }
        std::vector<int> values(s.colour.begin(), s.colour.end());
        for (int &c : values) {
            if (c < 0) {
                c = 0;  // rays outside every d-clique are unconstrained
            }
        }
        return values;
    }

   private:
    struct State {
        std::vector<int8_t> colour;
        std::vector<uint16_t> allowed;
        std::vector<uint8_t> counts;
        std::vector<uint8_t> open;
        std::vector<uint32_t> used;
    };

    bool assign(State &s, std::size_t ray, int colour) const {
        std::deque<std::pair<std::size_t, int>> queue{{ray, colour}};
        while (!queue.empty()) {
            auto [v, a] = queue.front();
            queue.pop_front();
            if (s.colour[v] >= 0) {
                if (s.colour[v] != a) {
                    return false;
                }
                continue;
            }
            if (!(s.allowed[v] >> a & 1)) {
                return false;
            }
            s.colour[v] = static_cast<int8_t>(a);
            s.allowed[v] = static_cast<uint16_t>(1u << a);
            s.used[a]++;
            for (uint32_t c : ray_cliques_[v]) {
                uint8_t &count = s.counts[c * colours_ + a];
                count++;
                s.open[c]--;
                if (count > need_[a]) {
                    return false;
                }
                if (count < need_[a]) {
                    continue;
                }
                bool failed = false;
                cliques_[c].for_each([&](std::size_t u) {
                    if (failed || s.colour[u] >= 0 || !(s.allowed[u] >> a & 1)) {
                        return;
                    }
                    s.allowed[u] &= static_cast<uint16_t>(~(1u << a));
                    if (s.allowed[u] == 0) {
                        failed = true;
                    } else if (std::has_single_bit(s.allowed[u])) {
                        queue.emplace_back(u, std::countr_zero(s.allowed[u]));
                    }
                });
                if (failed) {
                    return false;
                }
            }
        }
        return true;
    }

    bool search(State &s) const {
        std::size_t best = cliques_.size();
        int best_open = 1 << 30;
        for (std::size_t c = 0; c < cliques_.size(); c++) {
            if (s.open[c] > 0 && s.open[c] < best_open) {
                best_open = s.open[c];
                best = c;
            }
        }
        if (best == cliques_.size()) {
            return true;
        }
        std::size_t ray = kMaxRays;
        cliques_[best].for_each([&](std::size_t v) {
            if (ray == kMaxRays && s.colour[v] < 0) {
                ray = v;
            }
        });
        for (int a = 0; a < colours_; a++) {
            if (!(s.allowed[ray] >> a & 1)) {
                continue;
            }
            // Unused colours with equal quotas are interchangeable: try only
            // the first of them.
            if (s.used[a] == 0 && a > 0 && need_[a] == need_[a - 1] && s.used[a - 1] == 0) {
                continue;
            }
            State next = s;
            if (assign(next, ray, a) && search(next)) {
                s = std::move(next);
                return true;
            }
        }
        return false;
    }

    const Configuration &config_;
    std::vector<int> need_;
    int colours_;
    std::vector<CliqueSet> cliques_;
    std::vector<std::vector<uint32_t>> ray_cliques_;
};

}  // namespace

std::optional<Colouring> find_partition_colouring(const Configuration &config, const std::vector<int> &partition) {
    validate_partition(partition, config.dim());
    PartitionSearch search(config, partition);
    auto values = search.solve();
    if (!values) {
        return std::nullopt;
    }
    return Colouring{*values, partition};
}

bool verify_partition_colouring(const Configuration &config, const Colouring &colouring) {
    if (colouring.values.size() != config.size()) {
        return false;
    }
    const int s = static_cast<int>(colouring.partition.size());
    for (int v : colouring.values) {
        if (v < 0 || v >= s) {
            return false;
        }
    }
    for (const CliqueSet &u : maximal_cliques(config)) {
        std::vector<int> counts(s, 0);
        u.for_each([&](std::size_t v) { counts[colouring.values[v]]++; });
        if (counts != colouring.partition) {
            return false;
        }
    }
    return true;
}

CriticalReport critical_reduce(const Configuration &config) {
    if (!is_ks_configuration(config)) {
        throw std::invalid_argument("critical reduction needs a non-colourable configuration");
    }
    CriticalReport report;
    std::vector<Bitset> level = {config.all()};
    while (!level.empty()) {
        ReductionIteration it;
        std::map<Signature, std::size_t> classes;
        for (const Bitset &parent : level) {
            bool reducible = false;
            parent.for_each([&](std::size_t v) {
                Bitset child = parent;
                child.reset(v);
                Configuration sub = config.subconfiguration(child);
                if (!is_ks_configuration(sub)) {
                    return;
                }
                reducible = true;
                it.survivors++;
                auto [pos, inserted] = classes.emplace(signature(sub), it.representatives.size());
                if (inserted) {
                    it.representatives.push_back(child);
                }
            });
            if (!reducible) {
                report.critical_sets.push_back(parent);
                report.results.push_back(config.subconfiguration(parent));
            }
        }
        if (it.representatives.empty()) {
            break;
        }
        it.signature_classes = it.representatives.size();
        level = it.representatives;
        report.iterations.push_back(std::move(it));
    }
    return report;
}

}  // namespace ksconf
