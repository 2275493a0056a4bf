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


#include "ksconf/rays.h"

#include <gtest/gtest.h>

#include "ksconf/datasets.h"
#include "oracles.h"

namespace ksconf {
namespace {

std::vector<GaussianInt> ints(std::initializer_list<int64_t> v) { return {v.begin(), v.end()}; }

TEST(MakeRay, CanonicalizesSignAndUnits) {
    EXPECT_EQ(make_ray(ints({-1, 1, 1, -1, 0, 0, 0, 0})).str(), make_ray(ints({1, -1, -1, 1, 0, 0, 0, 0})).str());
    EXPECT_EQ(make_ray(ints({1, -1, -1, 1, 0, 0, 0, 0})).coords(), ints({1, -1, -1, 1, 0, 0, 0, 0}));
    // i * (1, i) = (i, -1) and (2, 2i) name the same ray as (1, i).
    Ray r = make_ray({GaussianInt(1), GaussianInt(0, 1)});
    EXPECT_EQ(make_ray({GaussianInt(0, 1), GaussianInt(-1)}), r);
    EXPECT_EQ(make_ray({GaussianInt(2), GaussianInt(0, 2)}), r);
    EXPECT_EQ(make_ray({GaussianInt(0), GaussianInt(0, -3)}).coords(), ints({0, 1}));
}

TEST(MakeRay, RejectsZeroAndEmpty) {
    try {
        make_ray(ints({0, 0, 0}));
        FAIL() << "zero vector accepted";
    } catch (const std::invalid_argument &e) {
        EXPECT_STREQ(e.what(), "zero vector is not a ray");
    }
    EXPECT_THROW(make_ray(std::vector<GaussianInt>{}), std::invalid_argument);
}

TEST(MakeRay, IdempotentAndUnitInvariantOnRandomVectors) {
    std::mt19937_64 rng(11);
    const GaussianInt units[] = {GaussianInt(1), GaussianInt(-1), GaussianInt(0, 1), GaussianInt(0, -1)};
    for (int trial = 0; trial < 2000; trial++) {
        auto v = oracle::random_gaussian_vector(rng, 1 + trial % 6);
        Ray r = make_ray(v);
        ASSERT_EQ(make_ray(r.coords()), r);
        for (GaussianInt u : units) {
            std::vector<GaussianInt> w = v;
            for (auto &c : w) c *= u;
            ASSERT_EQ(make_ray(w), r);
        }
        // The leading coordinate lies in the quadrant re > 0, im >= 0.
        auto lead = *std::find_if(r.coords().begin(), r.coords().end(), [](GaussianInt c) { return !c.is_zero(); });
        ASSERT_GT(lead.re, 0);
        ASSERT_GE(lead.im, 0);
    }
}

TEST(InnerProduct, MatchesDirectSum) {
    Ray psi0 = make_ray(std::vector<int64_t>{1, -1, -1, -1, -1, -1, -1, 1});
    Ray psi32 = make_ray(std::vector<int64_t>{1, -1, -1, 1, 0, 0, 0, 0});
    Ray psi48 = make_ray(std::vector<int64_t>{0, 0, 1, -1, -1, 1, 0, 0});
    EXPECT_EQ(inner_product(psi0, psi32), GaussianInt(2));
    EXPECT_EQ(inner_product(psi32, psi32), GaussianInt(4));
    EXPECT_EQ(inner_product(psi48, psi32), GaussianInt(-2));
    EXPECT_THROW(inner_product(psi0, make_ray(std::vector<int64_t>{1, 0})), std::invalid_argument);
}

TEST(InnerProduct, ConjugateSymmetricAndScalarInvariant) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 1000; trial++) {
        std::size_t d = 1 + trial % 5;
        Ray x = make_ray(oracle::random_gaussian_vector(rng, d));
        Ray y = make_ray(oracle::random_gaussian_vector(rng, d));
        GaussianInt xy = inner_product(x, y);
        ASSERT_EQ(inner_product(y, x), xy.conj());
        auto direct = oracle::inner(oracle::coords(x), oracle::coords(y));
        ASSERT_EQ(xy.re, direct.real());
        ASSERT_EQ(xy.im, direct.imag());
    }
}

TEST(BuildConfiguration, AdjacencyMatchesOracle) {
    Configuration m = saturated_64();
    EXPECT_EQ(m.size(), 64u);
    EXPECT_EQ(m.edge_count(), 992u);
    auto orth = oracle::orthogonality(m.rays());
    for (std::size_t i = 0; i < m.size(); i++) {
        EXPECT_EQ(m.neighbours(i).count(), 31u) << "ray " << i;
        EXPECT_FALSE(m.orthogonal(i, i));
        for (std::size_t j = 0; j < m.size(); j++) {
            ASSERT_EQ(m.orthogonal(i, j), orth[i][j]);
            ASSERT_EQ(m.orthogonal(i, j), m.orthogonal(j, i));
        }
    }
    Configuration again = build_configuration(m.rays());
    EXPECT_EQ(again.adjacency(), m.adjacency());
}

TEST(BuildConfiguration, StandardBasisIsComplete) {
    Configuration b = standard_basis(8);
    EXPECT_EQ(b.edge_count(), 28u);
}

TEST(BuildConfiguration, RejectsDuplicatesNamingPositions) {
    Ray psi32 = make_ray(std::vector<int64_t>{1, -1, -1, 1, 0, 0, 0, 0});
    Ray other = make_ray(std::vector<int64_t>{1, 1, 1, 1, 0, 0, 0, 0});
    try {
        build_configuration({psi32, other, psi32});
        FAIL() << "duplicate accepted";
    } catch (const std::invalid_argument &e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("0"), std::string::npos);
        EXPECT_NE(msg.find("2"), std::string::npos);
    }
    EXPECT_THROW(build_configuration({psi32, make_ray(std::vector<int64_t>{1, 0})}), std::invalid_argument);
}

TEST(Configuration, SubconfigurationKeepsAdjacency) {
    Configuration m = saturated_64();
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; trial++) {
        auto idx = oracle::random_subset(rng, m.size(), 1 + trial % 40);
        Configuration sub = m.subconfiguration(idx);
        Configuration rebuilt = build_configuration(sub.rays());
        ASSERT_EQ(sub.adjacency(), rebuilt.adjacency());
        for (std::size_t k = 0; k < idx.size(); k++) ASSERT_EQ(sub.ray(k), m.ray(idx[k]));
    }
    EXPECT_THROW(m.subconfiguration(std::vector<std::size_t>{1, 1}), std::invalid_argument);
    EXPECT_THROW(m.subconfiguration(std::vector<std::size_t>{64}), std::invalid_argument);
    EXPECT_EQ(m.without(5).size(), 63u);
    EXPECT_EQ(m.index_of(m.ray(17)), 17u);
}

}  // namespace
}  // namespace ksconf
