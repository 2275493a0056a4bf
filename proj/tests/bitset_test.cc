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


#include "ksconf/bitset.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

namespace ksconf {
namespace {

std::set<std::size_t> random_set(std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> size(0, 40);
    std::uniform_int_distribution<std::size_t> elem(0, kMaxRays - 1);
    std::set<std::size_t> s;
    for (std::size_t n = size(rng); s.size() < n;) s.insert(elem(rng));
    return s;
}

Bitset to_bitset(const std::set<std::size_t> &s) { return Bitset::from_indices({s.begin(), s.end()}); }

TEST(Bitset, PrefixAndAbove) {
    EXPECT_EQ(Bitset::prefix(0).count(), 0u);
    EXPECT_EQ(Bitset::prefix(64).count(), 64u);
    EXPECT_EQ(Bitset::prefix(kMaxRays).count(), kMaxRays);
    Bitset p = Bitset::prefix(130);
    EXPECT_TRUE(p.test(129));
    EXPECT_FALSE(p.test(130));
    EXPECT_EQ(p.above(63).first(), 64u);
    EXPECT_EQ(p.above(129).count(), 0u);
    EXPECT_EQ(Bitset().first(), kMaxRays);
}

TEST(Bitset, OperationsAgreeWithStdSet) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; trial++) {
        auto a = random_set(rng), b = random_set(rng);
        Bitset x = to_bitset(a), y = to_bitset(b);
        std::set<std::size_t> inter, uni, diff, sym;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(inter, inter.end()));
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(uni, uni.end()));
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(diff, diff.end()));
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(sym, sym.end()));
        ASSERT_EQ((x & y), to_bitset(inter));
        ASSERT_EQ((x | y), to_bitset(uni));
        ASSERT_EQ((x - y), to_bitset(diff));
        ASSERT_EQ((x ^ y), to_bitset(sym));
        ASSERT_EQ(x.count(), a.size());
        ASSERT_EQ(x.intersects(y), !inter.empty());
        ASSERT_EQ(x.is_subset_of(y), std::includes(b.begin(), b.end(), a.begin(), a.end()));
        ASSERT_EQ(x.indices(), std::vector<std::size_t>(a.begin(), a.end()));
        ASSERT_EQ(lex_less(x, y), std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
        std::vector<std::size_t> walked;
        for (std::size_t i = x.first(); i != kMaxRays; i = x.next(i)) walked.push_back(i);
        ASSERT_EQ(walked, x.indices());
    }
}

}  // namespace
}  // namespace ksconf
