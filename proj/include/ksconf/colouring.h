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

#ifndef KSCONF_COLOURING_H
#define KSCONF_COLOURING_H

#include <cstdint>
#include <optional>
#include <vector>

#include "ksconf/bitset.h"
#include "ksconf/orthograph.h"
#include "ksconf/rays.h"

namespace ksconf {

/// An assignment of colours 0..s-1 to every ray, together with the partition
/// N_0 >= ... >= N_{s-1} of the dimension it is meant to respect: every
/// d-clique carries exactly N_a rays of colour a. A KS colouring is the
/// partition (d-1, 1), colour 1 marking the rays valued 1.
struct Colouring {
    std::vector<int> values;
    std::vector<int> partition;

    /// Rays with the given colour.
    Bitset colour_class(int colour) const;
};

/// Throws std::invalid_argument unless `partition` is non-increasing, has at
/// least two positive parts and sums to d.
void validate_partition(const std::vector<int> &partition, std::size_t d);

/// Searches for a KS colouring: an independent set meeting every d-clique.
/// Returns nullopt only after an exhaustive search.
std::optional<Colouring> find_ks_colouring(const Configuration &config);

bool is_ks_configuration(const Configuration &config);

/// A KS configuration whose every single-ray deletion is colourable.
bool is_critical(const Configuration &config);

/// Checks both defining conditions of a 0/1 KS colouring literally: no
/// orthogonal pair is valued (1, 1) and every d-clique sums to 1.
bool verify_ks_colouring(const Configuration &config, const std::vector<int> &values);

std::optional<Colouring> find_partition_colouring(const Configuration &config, const std::vector<int> &partition);

bool verify_partition_colouring(const Configuration &config, const Colouring &colouring);

/// One pass of the signature-based reduction.
struct ReductionIteration {
    /// Deletions that remained non-colourable, summed over the pass's inputs.
    std::size_t survivors = 0;
    /// Distinct signatures among those survivors.
    std::size_t signature_classes = 0;
    /// First survivor of each signature class, as index sets over the input.
    std::vector<Bitset> representatives;
};

struct CriticalReport {
    std::vector<ReductionIteration> iterations;
    /// Critical configurations reached, as index sets over the input.
    std::vector<Bitset> critical_sets;
    std::vector<Configuration> results;
};

/// Deletes rays one at a time, keeping only non-colourable results and one
/// representative per signature (the smallest deleted index among the
/// earliest parent), until only critical configurations remain. Throws
/// std::invalid_argument if `config` is colourable.
CriticalReport critical_reduce(const Configuration &config);

}  // namespace ksconf

#endif
