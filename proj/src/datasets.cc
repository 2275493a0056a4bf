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

#include "ksconf/datasets.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ksconf/tropical.h"

namespace ksconf {

namespace {

// Rows are the coordinate vectors in the order they are indexed.
const int8_t kSaturated64[64][8] = {
    { 1, -1, -1, -1, -1, -1, -1,  1},  // 0
    { 1, -1, -1, -1, -1, -1,  1, -1},  // 1
    { 1, -1, -1, -1,  1,  1, -1,  1},  // 2
    { 1, -1, -1, -1,  1,  1,  1, -1},  // 3
    { 1, -1, -1,  1, -1, -1, -1, -1},  // 4
    { 1, -1, -1,  1, -1, -1,  1,  1},  // 5
    { 1, -1, -1,  1,  1,  1, -1, -1},  // 6
    { 1, -1, -1,  1,  1,  1,  1,  1},  // 7
    { 1, -1,  1, -1, -1, -1, -1, -1},  // 8
    { 1, -1,  1, -1, -1, -1,  1,  1},  // 9
    { 1, -1,  1, -1,  1,  1, -1, -1},  // 10
    { 1, -1,  1, -1,  1,  1,  1,  1},  // 11
    { 1, -1,  1,  1, -1, -1, -1,  1},  // 12
    { 1, -1,  1,  1, -1, -1,  1, -1},  // 13
    { 1, -1,  1,  1,  1,  1, -1,  1},  // 14
    { 1, -1,  1,  1,  1,  1,  1, -1},  // 15
    { 1,  1, -1, -1, -1,  1, -1,  1},  // 16
    { 1,  1, -1, -1, -1,  1,  1, -1},  // 17
    { 1,  1, -1, -1,  1, -1, -1,  1},  // 18
    { 1,  1, -1, -1,  1, -1,  1, -1},  // 19
    { 1,  1, -1,  1, -1,  1, -1, -1},  // 20
    { 1,  1, -1,  1, -1,  1,  1,  1},  // 21
    { 1,  1, -1,  1,  1, -1, -1, -1},  // 22
    { 1,  1, -1,  1,  1, -1,  1,  1},  // 23
    { 1,  1,  1, -1, -1,  1, -1, -1},  // 24
    { 1,  1,  1, -1, -1,  1,  1,  1},  // 25
    { 1,  1,  1, -1,  1, -1, -1, -1},  // 26
    { 1,  1,  1, -1,  1, -1,  1,  1},  // 27
    { 1,  1,  1,  1, -1,  1, -1,  1},  // 28
    { 1,  1,  1,  1, -1,  1,  1, -1},  // 29
    { 1,  1,  1,  1,  1, -1, -1,  1},  // 30
    { 1,  1,  1,  1,  1, -1,  1, -1},  // 31
    { 1, -1, -1,  1,  0,  0,  0,  0},  // 32
    { 1, -1, -1, -1,  0,  0,  0,  0},  // 33
    { 1, -1,  0,  0,  0,  0, -1,  1},  // 34
    { 1, -1,  0,  0,  0,  0, -1, -1},  // 35
    { 1, -1,  0,  0,  0,  0,  1,  1},  // 36
    { 1, -1,  0,  0,  0,  0,  1, -1},  // 37
    { 1, -1,  1,  1,  0,  0,  0,  0},  // 38
    { 1, -1,  1, -1,  0,  0,  0,  0},  // 39
    { 1,  1, -1,  1,  0,  0,  0,  0},  // 40
    { 1,  1, -1, -1,  0,  0,  0,  0},  // 41
    { 1,  1,  0,  0,  0,  0, -1,  1},  // 42
    { 1,  1,  0,  0,  0,  0, -1, -1},  // 43
    { 1,  1,  0,  0,  0,  0,  1,  1},  // 44
    { 1,  1,  0,  0,  0,  0,  1, -1},  // 45
    { 1,  1,  1,  1,  0,  0,  0,  0},  // 46
    { 1,  1,  1, -1,  0,  0,  0,  0},  // 47
    { 0,  0,  1, -1, -1,  1,  0,  0},  // 48
    { 0,  0,  1,  1, -1,  1,  0,  0},  // 49
    { 0,  0,  0,  0,  1, -1, -1,  1},  // 50
    { 0,  0,  0,  0,  1, -1, -1, -1},  // 51
    { 0,  0,  0,  0,  1, -1,  1,  1},  // 52
    { 0,  0,  0,  0,  1, -1,  1, -1},  // 53
    { 0,  0,  1,  1,  1, -1,  0,  0},  // 54
    { 0,  0,  1, -1,  1, -1,  0,  0},  // 55
    { 0,  0,  1, -1, -1, -1,  0,  0},  // 56
    { 0,  0,  1,  1, -1, -1,  0,  0},  // 57
    { 0,  0,  0,  0,  1,  1, -1,  1},  // 58
    { 0,  0,  0,  0,  1,  1, -1, -1},  // 59
    { 0,  0,  0,  0,  1,  1,  1,  1},  // 60
    { 0,  0,  0,  0,  1,  1,  1, -1},  // 61
    { 0,  0,  1,  1,  1,  1,  0,  0},  // 62
    { 0,  0,  1, -1,  1,  1,  0,  0},  // 63
};

const int8_t kKernaghanPeres40[40][8] = {
    { 1,  0,  0,  0,  0,  0,  0,  0},  // 0
    { 0,  1,  0,  0,  0,  0,  0,  0},  // 1
    { 0,  0,  1,  0,  0,  0,  0,  0},  // 2
    { 0,  0,  0,  1,  0,  0,  0,  0},  // 3
    { 0,  0,  0,  0,  1,  0,  0,  0},  // 4
    { 0,  0,  0,  0,  0,  1,  0,  0},  // 5
    { 0,  0,  0,  0,  0,  0,  1,  0},  // 6
    { 0,  0,  0,  0,  0,  0,  0,  1},  // 7
    { 1,  1,  1,  1,  0,  0,  0,  0},  // 8
    { 1,  1, -1, -1,  0,  0,  0,  0},  // 9
    { 1, -1,  1, -1,  0,  0,  0,  0},  // 10
    { 1, -1, -1,  1,  0,  0,  0,  0},  // 11
    { 0,  0,  0,  0,  1,  1,  1,  1},  // 12
    { 0,  0,  0,  0,  1,  1, -1, -1},  // 13
    { 0,  0,  0,  0,  1, -1,  1, -1},  // 14
    { 0,  0,  0,  0,  1, -1, -1,  1},  // 15
    { 1,  1,  0,  0,  1,  1,  0,  0},  // 16
    { 1,  1,  0,  0, -1, -1,  0,  0},  // 17
    { 1, -1,  0,  0,  1, -1,  0,  0},  // 18
    { 1, -1,  0,  0, -1,  1,  0,  0},  // 19
    { 0,  0,  1,  1,  0,  0,  1,  1},  // 20
    { 0,  0,  1,  1,  0,  0, -1, -1},  // 21
    { 0,  0,  1, -1,  0,  0,  1, -1},  // 22
    { 0,  0,  1, -1,  0,  0, -1,  1},  // 23
    { 1,  0,  1,  0,  1,  0,  1,  0},  // 24
    { 1,  0,  1,  0, -1,  0, -1,  0},  // 25
    { 1,  0, -1,  0,  1,  0, -1,  0},  // 26
    { 1,  0, -1,  0, -1,  0,  1,  0},  // 27
    { 0,  1,  0,  1,  0,  1,  0,  1},  // 28
    { 0,  1,  0,  1,  0, -1,  0, -1},  // 29
    { 0,  1,  0, -1,  0,  1,  0, -1},  // 30
    { 0,  1,  0, -1,  0, -1,  0,  1},  // 31
    { 1,  0,  0,  1,  0,  1, -1,  0},  // 32
    { 1,  0,  0, -1,  0,  1,  1,  0},  // 33
    { 1,  0,  0,  1,  0, -1,  1,  0},  // 34
    { 1,  0,  0, -1,  0, -1, -1,  0},  // 35
    { 0,  1,  1,  0, -1,  0,  0,  1},  // 36
    { 0,  1, -1,  0,  1,  0,  0,  1},  // 37
    { 0, -1,  1,  0,  1,  0,  0,  1},  // 38
    { 0, -1, -1,  0, -1,  0,  0,  1},  // 39
};

template <std::size_t Rows>
Configuration from_table(const int8_t (&table)[Rows][8]) {
    std::vector<Ray> rays;
    rays.reserve(Rows);
    for (const auto &row : table) {
        rays.push_back(make_ray(std::vector<int64_t>(row, row + 8)));
    }
    return build_configuration(std::move(rays));
}

const std::vector<std::pair<DatasetName, std::string>> kNames = {
    {DatasetName::M, "M"},       {DatasetName::N, "N"},       {DatasetName::T0, "T0"},
    {DatasetName::TROPICALS, "TROPICALS"}, {DatasetName::KP40, "KP40"}, {DatasetName::KP36, "KP36"},
    {DatasetName::E8, "E8"},     {DatasetName::A, "A"},       {DatasetName::B, "B"},
};


// Unions of disjoint pairs drawn from `sets`, keeping only those whose
// capacity (d-cliques of `cliques` inside the union) is maximal. Returns the
// distinct capacities seen and the distinct maximizing unions, sorted.
std::pair<std::vector<uint64_t>, std::vector<Bitset>> maximal_capacity_step(const std::vector<Bitset> &sets,
                                                                            const std::vector<CliqueSet> &cliques) {
    std::set<uint64_t> seen;
    uint64_t best = 0;
    std::vector<Bitset> winners;
    for (std::size_t i = 0; i < sets.size(); i++) {
        for (std::size_t j = i + 1; j < sets.size(); j++) {
            if (sets[i].intersects(sets[j])) {
                continue;
            }
            Bitset u = sets[i] | sets[j];
            uint64_t cap = capacity_within(cliques, u);
            seen.insert(cap);
            if (cap > best) {
                best = cap;
                winners.clear();
            }
            if (cap == best) {
                winners.push_back(u);
            }
        }
    }
    std::sort(winners.begin(), winners.end(), lex_less);
    winners.erase(std::unique(winners.begin(), winners.end()), winners.end());
    return {std::vector<uint64_t>(seen.begin(), seen.end()), winners};
}

Bitset shift(const Bitset &b, std::size_t offset) {
    Bitset out;
    b.for_each([&](std::size_t i) { out.set(i + offset); });
    return out;
}

}  // namespace

std::optional<DatasetName> parse_dataset_name(std::string_view name) {
    for (const auto &[id, text] : kNames) {
        if (text == name) {
            return id;
        }
    }
    return std::nullopt;
}

std::string dataset_name(DatasetName name) {
    for (const auto &[id, text] : kNames) {
        if (id == name) {
            return text;
        }
    }
    return "?";
}

const std::vector<DatasetName> &all_dataset_names() {
    static const std::vector<DatasetName> names = [] {
        std::vector<DatasetName> out;
        for (const auto &entry : kNames) {
            out.push_back(entry.first);
        }
        return out;
    }();
    return names;
}

Configuration saturated_64() { return from_table(kSaturated64); }

const std::vector<std::size_t> &critical_36_indices() {
    static const std::vector<std::size_t> indices = {2,  3,  4,  9,  12, 13, 14, 15, 16, 19, 21, 23,
                                                     24, 25, 26, 27, 29, 30, 32, 33, 34, 37, 39, 40,
                                                     41, 43, 46, 48, 51, 52, 55, 58, 59, 60, 61, 62};
    return indices;
}

const std::vector<std::size_t> &tropical_48_indices() {
    static const std::vector<std::size_t> indices = {0,  1,  2,  3,  4,  7,  9,  10, 12, 13, 14, 15,
                                                     16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 29, 30,
                                                     32, 33, 34, 37, 38, 39, 40, 41, 43, 44, 46, 47,
                                                     48, 50, 51, 52, 53, 55, 57, 58, 59, 60, 61, 62};
    return indices;
}

const std::vector<std::size_t> &partition_62_witness() {
    static const std::vector<std::size_t> indices = {0, 1, 3, 4, 5, 7, 11, 15, 32, 33, 36, 37, 60, 61, 62, 63};
    return indices;
}

const std::vector<std::size_t> &partition_44_witness() {
    static const std::vector<std::size_t> indices = {0,  1,  2,  3,  4,  5,  6,  7,  8,  9,  10,
                                                     11, 12, 13, 14, 15, 32, 33, 34, 35, 36, 37,
                                                     38, 39, 56, 57, 58, 59, 60, 61, 62, 63};
    return indices;
}

Configuration kernaghan_peres_40() { return from_table(kKernaghanPeres40); }

const std::vector<std::size_t> &kernaghan_peres_excluded() {
    static const std::vector<std::size_t> indices = {0, 12, 22, 31};
    return indices;
}

Configuration e8_120() {
    std::vector<Ray> rays;
    for (uint32_t mask = 0; mask < 128; mask++) {
        if (std::popcount(mask) % 2 != 0) {
            continue;
        }
        std::vector<int64_t> v(8, 1);
        for (int k = 0; k < 7; k++) {
            if (mask >> k & 1) {
                v[k + 1] = -1;
            }
        }
        rays.push_back(make_ray(v));
    }
    for (int i = 0; i < 8; i++) {
        for (int j = i + 1; j < 8; j++) {
            for (int sign : {1, -1}) {
                std::vector<int64_t> v(8, 0);
                v[i] = 1;
                v[j] = sign;
                rays.push_back(make_ray(v));
            }
        }
    }
    return build_configuration(std::move(rays));
}

std::vector<Rational> LinearMap::apply(const std::vector<Rational> &v) const {
    if (v.size() != dim()) {
        throw std::invalid_argument("linear map applied to a vector of the wrong dimension");
    }
    std::vector<Rational> out(dim(), Rational(0));
    for (std::size_t r = 0; r < dim(); r++) {
        for (std::size_t c = 0; c < dim(); c++) {
            out[r] += matrix[r][c] * v[c];
        }
    }
    return out;
}

Ray LinearMap::apply(const Ray &r) const {
    if (!r.is_real()) {
        throw std::invalid_argument("linear maps act on real rays only");
    }
    std::vector<Rational> v;
    for (GaussianInt c : r.coords()) {
        v.emplace_back(c.re);
    }
    std::vector<Rational> image = apply(v);
    int64_t den = 1;
    for (const Rational &x : image) {
        den = std::lcm(den, x.denominator());
    }
    std::vector<int64_t> scaled;
    for (const Rational &x : image) {
        scaled.push_back(x.numerator() * (den / x.denominator()));
    }
    return make_ray(scaled);
}

std::optional<Rational> LinearMap::orthogonality_scale() const {
    std::optional<Rational> scale;
    for (std::size_t a = 0; a < dim(); a++) {
        for (std::size_t b = 0; b < dim(); b++) {
            Rational dot(0);
            for (std::size_t r = 0; r < dim(); r++) {
                dot += matrix[r][a] * matrix[r][b];
            }
            if (a != b && dot != Rational(0)) {
                return std::nullopt;
            }
            if (a == b) {
                if (dot <= Rational(0) || (scale && *scale != dot)) {
                    return std::nullopt;
                }
                scale = dot;
            }
        }
    }
    return scale;
}

LinearMap solve_linear_map(const std::vector<std::vector<int64_t>> &sources,
                           const std::vector<std::vector<int64_t>> &images) {
    const std::size_t d = sources.size();
    if (images.size() != d) {
        throw std::invalid_argument("need as many images as sources");
    }
    // Gauss-Jordan on [S | I] where S has the sources as columns.
    std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(2 * d, Rational(0)));
    for (std::size_t c = 0; c < d; c++) {
        if (sources[c].size() != d || images[c].size() != d) {
            throw std::invalid_argument("source/image vectors must have the map's dimension");
        }
        for (std::size_t r = 0; r < d; r++) {
            aug[r][c] = sources[c][r];
        }
        aug[c][d + c] = 1;
    }
    for (std::size_t col = 0; col < d; col++) {
        std::size_t pivot = col;
        while (pivot < d && aug[pivot][col] == Rational(0)) {
            pivot++;
        }
        if (pivot == d) {
            throw std::invalid_argument("source vectors are linearly dependent");
        }
        std::swap(aug[pivot], aug[col]);
        Rational inv = Rational(1) / aug[col][col];
        for (auto &x : aug[col]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < d; r++) {
            if (r != col && aug[r][col] != Rational(0)) {
                Rational f = aug[r][col];
                for (std::size_t k = 0; k < 2 * d; k++) {
                    aug[r][k] -= f * aug[col][k];
                }
            }
        }
    }
    // matrix = Images * S^{-1}
    LinearMap map;
    map.matrix.assign(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            Rational acc(0);
            for (std::size_t k = 0; k < d; k++) {
                acc += Rational(images[k][r]) * aug[k][d + c];
            }
            map.matrix[r][c] = acc;
        }
    }
    return map;
}

const std::vector<std::vector<int64_t>> &transform_sources() {
    static const std::vector<std::vector<int64_t>> v = {
        {1, -1, -1, -1, -1, -1, -1, 1}, {1, -1, -1, -1, 1, 1, 1, -1}, {1, -1, 1, 1, -1, -1, 1, -1},
        {1, -1, 1, 1, 1, 1, -1, 1},     {1, 1, -1, 1, -1, 1, -1, -1}, {1, 1, -1, 1, 1, -1, 1, 1},
        {1, 1, 1, -1, -1, 1, 1, 1},     {1, 1, 1, -1, 1, -1, -1, -1},
    };
    return v;
}

const std::vector<std::vector<int64_t>> &transform_images() {
    static const std::vector<std::vector<int64_t>> v = {
        {1, -1, -1, 1, 0, 0, 0, 0}, {1, -1, 1, -1, 0, 0, 0, 0}, {1, 1, -1, -1, 0, 0, 0, 0},
        {1, 1, 1, 1, 0, 0, 0, 0},   {0, 0, 0, 0, 1, -1, -1, 1}, {0, 0, 0, 0, 1, -1, 1, -1},
        {0, 0, 0, 0, 1, 1, -1, -1}, {0, 0, 0, 0, 1, 1, 1, 1},
    };
    return v;
}

LinearMap build_transform_T() {
    LinearMap t = solve_linear_map(transform_sources(), transform_images());
    if (!t.orthogonality_scale()) {
        throw std::logic_error("transform is not orthogonal up to scale");
    }
    return t;
}

Configuration full_support_e8() {
    Configuration e8 = e8_120();
    return e8.subconfiguration(Bitset::prefix(64));
}

Configuration transformed_full_support_e8() {
    LinearMap t = build_transform_T();
    const Configuration source = full_support_e8();
    std::vector<Ray> rays;
    for (const Ray &r : source.rays()) {
        rays.push_back(t.apply(r));
    }
    return build_configuration(std::move(rays));
}

Configuration doubled_full_support_e8() {
    std::vector<Ray> rays = full_support_e8().rays();
    const Configuration image = transformed_full_support_e8();
    for (const Ray &r : image.rays()) {
        rays.push_back(r);
    }
    return build_configuration(std::move(rays));
}

std::vector<Configuration> builtin(DatasetName name) {
    if (name == DatasetName::TROPICALS) {
        return enumerate_tropical_subconfigurations(saturated_64());
    }
    return {builtin_one(name)};
}

Configuration builtin_one(DatasetName name) {
    switch (name) {
        case DatasetName::M:
            return saturated_64();
        case DatasetName::N:
            return saturated_64().subconfiguration(critical_36_indices());
        case DatasetName::T0:
            return saturated_64().subconfiguration(tropical_48_indices());
        case DatasetName::KP40:
            return kernaghan_peres_40();
        case DatasetName::KP36: {
            Bitset keep = Bitset::prefix(40) - Bitset::from_indices(kernaghan_peres_excluded());
            return kernaghan_peres_40().subconfiguration(keep);
        }
        case DatasetName::E8:
            return e8_120();
        case DatasetName::A:
            return full_support_e8();
        case DatasetName::B:
            return doubled_full_support_e8();
        case DatasetName::TROPICALS:
            break;
    }
    throw std::invalid_argument("dataset " + dataset_name(name) + " holds several configurations");
}

MaximalCapacityReport maximal_capacity_pipeline(uint64_t target_capacity) {
    MaximalCapacityReport report;
    report.target_capacity = target_capacity;
    const Configuration a = full_support_e8();
    const Configuration ta = transformed_full_support_e8();
    const Configuration b = doubled_full_support_e8();

    const auto a_cliques = maximal_cliques(a);
    report.capacity_a = a_cliques.size();
    auto [pair_caps, w_sets] = maximal_capacity_step(a_cliques, a_cliques);
    report.clique_pair_capacities = pair_caps;
    report.w_sets = w_sets;
    auto [w_caps, q_sets] = maximal_capacity_step(w_sets, a_cliques);
    report.w_pair_capacities = w_caps;
    report.q_sets = q_sets;

    const auto ta_cliques = maximal_cliques(ta);
    auto [ta_pair_caps, ta_w_sets] = maximal_capacity_step(ta_cliques, ta_cliques);
    auto [ta_w_caps, ta_q_sets] = maximal_capacity_step(ta_w_sets, ta_cliques);
    report.q_tilde_sets = ta_q_sets;

    // T(A) lists the images of A's rays in A's order, so the image of an
    // index set is the same index set.
    std::vector<Bitset> images = q_sets;
    std::sort(images.begin(), images.end(), lex_less);
    report.q_tilde_is_image = images == ta_q_sets;

    Bitset all_a = a.all();
    for (std::size_t i = 0; i < q_sets.size() && !report.a_splits_into_two_q; i++) {
        for (std::size_t j = i + 1; j < q_sets.size(); j++) {
            if ((q_sets[i] | q_sets[j]) == all_a) {
                report.a_splits_into_two_q = true;
                break;
            }
        }
    }

    const auto b_cliques = maximal_cliques(b);
    const Configuration m = saturated_64();
    const std::set<Ray> m_rays(m.rays().begin(), m.rays().end());
    for (std::size_t i = 0; i < q_sets.size(); i++) {
        for (std::size_t j = 0; j < ta_q_sets.size(); j++) {
            Bitset u = q_sets[i] | shift(ta_q_sets[j], a.size());
            uint64_t cap = capacity_within(b_cliques, u);
            report.union_capacity_histogram[cap]++;
            report.max_union_capacity = std::max(report.max_union_capacity, cap);
            if (cap == target_capacity) {
                report.target_pairs.emplace_back(i, j);
                report.target_unions.push_back(u);
            }
        }
    }
    for (const Bitset &u : report.target_unions) {
        Configuration sub = b.subconfiguration(u);
        report.target_union_signatures.push_back(signature(sub));
        std::set<Ray> rays(sub.rays().begin(), sub.rays().end());
        report.unions_equal_to_m += rays == m_rays;
    }
    return report;
}

}  // namespace ksconf
