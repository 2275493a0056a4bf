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

#include <gtest/gtest.h>

#include "ksconf/datasets.h"
#include "oracles.h"

namespace ksconf {
namespace {

Colouring indicator(std::size_t n, const std::vector<std::size_t> &ones, std::vector<int> partition) {
    // Colour 1 on the listed rays; colour 0 (the larger part) elsewhere.
    Colouring c{std::vector<int>(n, 0), std::move(partition)};
    for (std::size_t i : ones) c.values[i] = 1;
    return c;
}

void expect_literal_ks_colouring(const Configuration &config, const Colouring &c) {
    ASSERT_EQ(c.values.size(), config.size());
    for (std::size_t i = 0; i < config.size(); i++) {
        for (std::size_t j = 0; j < config.size(); j++) {
            if (config.orthogonal(i, j)) ASSERT_FALSE(c.values[i] == 1 && c.values[j] == 1);
        }
    }
    for (const CliqueSet &u : maximal_cliques(config)) {
        int sum = 0;
        u.for_each([&](std::size_t v) { sum += c.values[v]; });
        ASSERT_EQ(sum, 1);
    }
    EXPECT_TRUE(verify_ks_colouring(config, c.values));
}

TEST(KsColouring, KnownConfigurations) {
    EXPECT_FALSE(find_ks_colouring(saturated_64()).has_value());
    EXPECT_TRUE(is_ks_configuration(saturated_64()));
    EXPECT_FALSE(is_ks_configuration(builtin_one(DatasetName::A)));
    Configuration basis = standard_basis(8);
    auto c = find_ks_colouring(basis);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->colour_class(1).count(), 1u);
    expect_literal_ks_colouring(basis, *c);
}

TEST(KsColouring, EveryDeletionFromNIsColourable) {
    Configuration n = builtin_one(DatasetName::N);
    for (std::size_t v = 0; v < n.size(); v++) {
        Configuration sub = n.without(v);
        auto c = find_ks_colouring(sub);
        ASSERT_TRUE(c.has_value()) << "deleting ray " << v;
        expect_literal_ks_colouring(sub, *c);
    }
}

TEST(KsColouring, VerifyRejectsBrokenAssignments) {
    Configuration m = saturated_64();
    EXPECT_FALSE(verify_ks_colouring(m, std::vector<int>(64, 0)));
    EXPECT_FALSE(verify_ks_colouring(m, std::vector<int>(64, 1)));
    EXPECT_FALSE(verify_ks_colouring(m, std::vector<int>(3, 0)));
}

TEST(KsColouring, AgreesWithNaiveEnumeration) {
    Configuration m = saturated_64();
    std::mt19937_64 rng(31);
    auto cliques = maximal_cliques(m);
    for (int trial = 0; trial < 80; trial++) {
        std::vector<std::size_t> idx;
        if (trial % 2 == 0) {
            idx = oracle::random_subset(rng, m.size(), 8 + trial % 9);
        } else {
            // Two overlapping 8-cliques give instances that actually constrain the search.
            Bitset u = cliques[rng() % cliques.size()] | cliques[rng() % cliques.size()];
            idx = u.indices();
        }
        Configuration sub = m.subconfiguration(idx);
        bool naive = oracle::naive_ks_colourable(oracle::orthogonality(sub.rays()), sub.dim());
        ASSERT_EQ(!is_ks_configuration(sub), naive) << "trial " << trial;
    }
}

// An 18-ray set in dimension 4 with no KS colouring, small enough for the
// brute-force oracle.
Configuration eighteen_rays() {
    const std::vector<std::vector<int64_t>> v = {
        {0, 0, 0, 1},  {0, 0, 1, 0},   {1, 1, 0, 0},   {1, -1, 0, 0},  {0, 1, 0, 0},  {1, 0, 1, 0},
        {1, 0, -1, 0}, {1, -1, 1, -1}, {1, -1, -1, 1}, {0, 0, 1, 1},   {1, 1, 1, 1},  {0, 1, 0, -1},
        {1, 0, 0, 1},  {1, 0, 0, -1},  {0, 1, -1, 0},  {1, 1, -1, 1},  {1, 1, 1, -1}, {-1, 1, 1, 1}};
    std::vector<Ray> rays;
    for (const auto &x : v) rays.push_back(make_ray(x));
    return build_configuration(rays);
}

TEST(KsColouring, AgreesWithNaiveOnNonColourableSet) {
    Configuration c = eighteen_rays();
    EXPECT_GE(capacity(c), 9u);
    EXPECT_FALSE(oracle::naive_ks_colourable(oracle::orthogonality(c.rays()), c.dim()));
    EXPECT_TRUE(is_ks_configuration(c));
    // Every deletion is colourable, by both deciders.
    for (std::size_t v = 0; v < c.size(); v++) {
        Configuration sub = c.without(v);
        bool naive = oracle::naive_ks_colourable(oracle::orthogonality(sub.rays()), sub.dim());
        ASSERT_EQ(naive, !is_ks_configuration(sub)) << "deleting " << v;
        ASSERT_TRUE(naive);
    }
    EXPECT_TRUE(is_critical(c));
}

TEST(KsColouring, MonotoneUnderSubconfigurations) {
    Configuration a = builtin_one(DatasetName::A);
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 30; trial++) {
        Configuration sub = a.subconfiguration(oracle::random_subset(rng, a.size(), std::min<std::size_t>(a.size(), 10 + trial * 3)));
        auto c = find_ks_colouring(sub);
        ASSERT_TRUE(c.has_value());
        expect_literal_ks_colouring(sub, *c);
    }
}

TEST(KsColouring, PartitionSevenOneMatchesKsSearch) {
    Configuration m = saturated_64();
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 30; trial++) {
        Configuration sub = m.subconfiguration(oracle::random_subset(rng, m.size(), 20 + trial));
        bool ks = find_ks_colouring(sub).has_value();
        auto p = find_partition_colouring(sub, {7, 1});
        ASSERT_EQ(p.has_value(), ks);
        if (p) EXPECT_TRUE(verify_partition_colouring(sub, *p));
    }
}

TEST(Criticality, KnownConfigurations) {
    EXPECT_TRUE(is_critical(builtin_one(DatasetName::N)));
    EXPECT_TRUE(is_critical(builtin_one(DatasetName::KP36)));
    EXPECT_FALSE(is_critical(saturated_64()));
    EXPECT_FALSE(is_critical(builtin_one(DatasetName::KP40)));
    EXPECT_FALSE(is_critical(builtin_one(DatasetName::A)));
}

TEST(PartitionColouring, ValidatesPartition) {
    Configuration m = saturated_64();
    EXPECT_THROW(find_partition_colouring(m, {8}), std::invalid_argument);
    EXPECT_THROW(find_partition_colouring(m, {2, 6}), std::invalid_argument);
    EXPECT_THROW(find_partition_colouring(m, {5, 2}), std::invalid_argument);
    EXPECT_THROW(find_partition_colouring(m, {8, 0}), std::invalid_argument);
    EXPECT_NO_THROW(validate_partition({4, 4}, 8));
}

TEST(PartitionColouring, WitnessSetsOfM) {
    Configuration m = saturated_64();
    auto a = indicator(m.size(), partition_62_witness(), {6, 2});
    auto b = indicator(m.size(), partition_44_witness(), {4, 4});
    EXPECT_EQ(partition_62_witness().size(), 16u);
    EXPECT_EQ(partition_44_witness().size(), 32u);
    EXPECT_TRUE(verify_partition_colouring(m, a));
    EXPECT_TRUE(verify_partition_colouring(m, b));
    EXPECT_FALSE(verify_partition_colouring(m, indicator(m.size(), partition_62_witness(), {4, 4})));
    EXPECT_FALSE(verify_partition_colouring(m, indicator(m.size(), {}, {7, 1})));
}

TEST(PartitionColouring, SearchOnM) {
    Configuration m = saturated_64();
    for (std::vector<int> p : {std::vector<int>{6, 2}, std::vector<int>{4, 4}}) {
        auto c = find_partition_colouring(m, p);
        ASSERT_TRUE(c.has_value());
        EXPECT_TRUE(verify_partition_colouring(m, *c));
    }
    EXPECT_FALSE(find_partition_colouring(m, {5, 3}).has_value());
}

TEST(PartitionColouring, BasisSplitsAnyWay) {
    Configuration basis = standard_basis(8);
    auto c = find_partition_colouring(basis, {4, 4});
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->colour_class(0).count(), 4u);
    EXPECT_EQ(c->colour_class(1).count(), 4u);
    auto three = find_partition_colouring(basis, {4, 2, 2});
    ASSERT_TRUE(three.has_value());
    EXPECT_TRUE(verify_partition_colouring(basis, *three));
}

TEST(CriticalReduce, KernaghanPeresReachesCriticalSubset) {
    Configuration kp = builtin_one(DatasetName::KP40);
    CriticalReport r = critical_reduce(kp);
    ASSERT_EQ(r.results.size(), 1u);
    EXPECT_EQ(r.results[0].rays(), builtin_one(DatasetName::KP36).rays());
    EXPECT_TRUE(r.critical_sets[0].is_subset_of(kp.all()));
    for (const Configuration &c : r.results) EXPECT_TRUE(is_critical(c));
    ASSERT_FALSE(r.iterations.empty());
    EXPECT_EQ(r.iterations[0].survivors, 40u);
    EXPECT_EQ(r.iterations[0].signature_classes, 1u);

    CriticalReport again = critical_reduce(kp);
    ASSERT_EQ(again.iterations.size(), r.iterations.size());
    for (std::size_t i = 0; i < r.iterations.size(); i++) {
        EXPECT_EQ(again.iterations[i].survivors, r.iterations[i].survivors);
        EXPECT_EQ(again.iterations[i].representatives, r.iterations[i].representatives);
    }
    EXPECT_EQ(again.critical_sets, r.critical_sets);
}

TEST(CriticalReduce, CriticalInputIsItsOwnResult) {
    Configuration n = builtin_one(DatasetName::N);
    CriticalReport r = critical_reduce(n);
    EXPECT_TRUE(r.iterations.empty());
    ASSERT_EQ(r.critical_sets.size(), 1u);
    EXPECT_EQ(r.critical_sets[0], n.all());
}

TEST(CriticalReduce, RejectsColourableInput) {
    EXPECT_THROW(critical_reduce(standard_basis(4)), std::invalid_argument);
}

}  // namespace
}  // namespace ksconf
