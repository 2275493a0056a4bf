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

#ifndef KSCONF_DATASETS_H
#define KSCONF_DATASETS_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ksconf/orthograph.h"
#include "ksconf/rational.h"
#include "ksconf/rays.h"

namespace ksconf {

enum class DatasetName { M, N, T0, TROPICALS, KP40, KP36, E8, A, B };

std::optional<DatasetName> parse_dataset_name(std::string_view name);
std::string dataset_name(DatasetName name);
const std::vector<DatasetName> &all_dataset_names();

/// The configuration(s) registered under `name`. TROPICALS runs the
/// disjoint-cover tropical enumeration over M and returns its 32 unions.
std::vector<Configuration> builtin(DatasetName name);

/// Single-configuration datasets; throws std::invalid_argument for TROPICALS.
Configuration builtin_one(DatasetName name);

/// The 64-ray saturated configuration over {0, +-1}.
Configuration saturated_64();
/// Index set of the 36-ray critical subconfiguration within saturated_64().
const std::vector<std::size_t> &critical_36_indices();
/// Index set of the 48-ray tropical subconfiguration containing it.
const std::vector<std::size_t> &tropical_48_indices();
/// Witness sets for the (6,2) and (4,4) partition colourings of saturated_64().
const std::vector<std::size_t> &partition_62_witness();
const std::vector<std::size_t> &partition_44_witness();

/// The 40 rays of the Kernaghan-Peres configuration, in their published order.
Configuration kernaghan_peres_40();
/// Rays deleted from it to obtain the 36-ray critical configuration.
const std::vector<std::size_t> &kernaghan_peres_excluded();

/// The 120 E8 root rays: first the 64 full-support (1, +-1, ..., +-1) with an
/// even number of minus signs, then the 56 two-support rays e_i +- e_j.
Configuration e8_120();

/// A d x d matrix of rationals acting on column vectors.
struct LinearMap {
    std::vector<std::vector<Rational>> matrix;

    std::size_t dim() const { return matrix.size(); }
    std::vector<Rational> apply(const std::vector<Rational> &v) const;
    /// Image of a real ray, re-canonicalized. Throws if the image is zero.
    Ray apply(const Ray &r) const;
    /// c with matrix^T matrix = c * identity, if such a positive c exists.
    std::optional<Rational> orthogonality_scale() const;
};

/// The unique linear map taking each of `sources` to the corresponding entry
/// of `images`. Throws if the sources are linearly dependent.
LinearMap solve_linear_map(const std::vector<std::vector<int64_t>> &sources,
                           const std::vector<std::vector<int64_t>> &images);

/// The eight-point transformation pairing full-support E8 rays with
/// two-block rays; see transform_sources() / transform_images().
LinearMap build_transform_T();
const std::vector<std::vector<int64_t>> &transform_sources();
const std::vector<std::vector<int64_t>> &transform_images();

/// Full-support part of E8 (64 rays).
Configuration full_support_e8();
/// Its image under build_transform_T() (64 rays).
Configuration transformed_full_support_e8();
/// The union of the two (128 rays): the full-support rays first, then their
/// images in the same order.
Configuration doubled_full_support_e8();

/// Outcome of the maximal-capacity construction that assembles the 64-ray
/// configuration from two copies of the full-support E8 rays.
struct MaximalCapacityReport {
    /// Distinct capacities of unions of two disjoint d-cliques of A.
    std::vector<uint64_t> clique_pair_capacities;
    /// 16-ray unions attaining the maximum of those capacities (W-sets).
    std::vector<Bitset> w_sets;
    /// Distinct capacities of unions of two disjoint W-sets.
    std::vector<uint64_t> w_pair_capacities;
    /// 32-ray unions attaining that maximum (Q-sets), over A's indices.
    std::vector<Bitset> q_sets;
    /// The same construction run on T(A), over T(A)'s indices.
    std::vector<Bitset> q_tilde_sets;
    /// Whether q_tilde_sets equals the image of q_sets under T.
    bool q_tilde_is_image = false;
    uint64_t capacity_a = 0;
    /// Whether A is the union of two Q-sets.
    bool a_splits_into_two_q = false;
    /// Capacity of every Q_i union Q~_j inside B, with the number of (i, j)
    /// attaining it.
    std::map<uint64_t, std::size_t> union_capacity_histogram;
    uint64_t max_union_capacity = 0;
    /// Every (i, j) whose union has the requested capacity.
    uint64_t target_capacity = 0;
    std::vector<std::pair<std::size_t, std::size_t>> target_pairs;
    /// The unions of target_pairs as index sets over doubled_full_support_e8().
    std::vector<Bitset> target_unions;
    std::vector<Signature> target_union_signatures;
    /// How many target unions equal saturated_64() as ray sets.
    std::size_t unions_equal_to_m = 0;
};

MaximalCapacityReport maximal_capacity_pipeline(uint64_t target_capacity = 320);

}  // namespace ksconf

#endif
