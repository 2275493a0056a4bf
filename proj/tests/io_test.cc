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


#include "ksconf/io.h"

#include <gtest/gtest.h>

#include "ksconf/datasets.h"
#include "oracles.h"

namespace ksconf {
namespace {

TEST(ParseGaussian, Forms) {
    EXPECT_EQ(parse_gaussian("-3"), GaussianInt(-3));
    EXPECT_EQ(parse_gaussian("0+1j"), GaussianInt(0, 1));
    EXPECT_EQ(parse_gaussian("2-5j"), GaussianInt(2, -5));
    EXPECT_EQ(parse_gaussian("-1j"), GaussianInt(0, -1));
    EXPECT_EQ(parse_gaussian("+4"), GaussianInt(4));
    for (std::string_view bad : {"", "x", "1+", "1+j", "1.5", "j", "--1", "1+2i"}) {
        EXPECT_FALSE(parse_gaussian(bad).has_value()) << bad;
    }
}

TEST(ParseVectors, FlatStream) {
    auto rays = parse_vectors("1 -1 -1 1\n0 0 0 0 # comment\n 0 0 1 -1 -1 1 0 0", 8);
    ASSERT_EQ(rays.size(), 2u);
    EXPECT_EQ(rays[0], make_ray(std::vector<int64_t>{1, -1, -1, 1, 0, 0, 0, 0}));
    EXPECT_EQ(rays[1], make_ray(std::vector<int64_t>{0, 0, 1, -1, -1, 1, 0, 0}));
    auto complex = parse_vectors("1 0+1j", 2);
    EXPECT_EQ(complex[0].coords()[1], GaussianInt(0, 1));
}

TEST(ParseVectors, ErrorsCarryPosition) {
    try {
        parse_vectors("1 0\n0 1\n1 x 0 0", 2, std::nullopt, "v.txt");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.source(), "v.txt");
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 3u);
        EXPECT_EQ(std::string(e.what()).rfind("v.txt:3:3:", 0), 0u) << e.what();
    }
    EXPECT_THROW(parse_vectors("1 0 0", 2), ParseError);
    EXPECT_THROW(parse_vectors("0 0 1 0", 2), ParseError);
    EXPECT_THROW(parse_vectors("1 0 0 1", 2, 3), ParseError);
    EXPECT_NO_THROW(parse_vectors("1 0 0 1", 2, 2));
}

TEST(ParseVectors, RoundTripOnRandomRays) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t d = 1 + trial % 6;
        std::vector<Ray> rays;
        for (int k = 0; k < 5; k++) rays.push_back(make_ray(oracle::random_gaussian_vector(rng, d)));
        ASSERT_EQ(parse_vectors(format_vectors(rays), d), rays);
    }
    Configuration m = saturated_64();
    EXPECT_EQ(parse_vectors(format_vectors(m.rays()), 8, 64), m.rays());
}

TEST(IndexLists, RoundTrip) {
    EXPECT_EQ(parse_index_list("0 5\n7 # tail\n"), (std::vector<std::size_t>{0, 5, 7}));
    EXPECT_THROW(parse_index_list("1 -2"), ParseError);
    EXPECT_THROW(parse_index_list("1 2a"), ParseError);
    std::string text = format_index_sets({critical_36_indices()});
    EXPECT_EQ(parse_index_list(text), critical_36_indices());
}

TEST(Weights, RoundTripAndErrors) {
    std::vector<Rational> v(4, Rational(0));
    v[1] = Rational(1, 2);
    v[3] = Rational(1, 2);
    ProbabilityWeight f = ProbabilityWeight::exact(v);
    ProbabilityWeight back = parse_weights(format_weights(f), 4);
    ASSERT_TRUE(back.is_exact());
    EXPECT_EQ(back.exact_values(), v);
    EXPECT_THROW(parse_weights("0 1/2\n9 1/2\n", 4), ParseError);
    try {
        parse_weights("0 1/2\n1 1/0\n", 4, "w.txt");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 3u);
    }
}

TEST(ReadFile, MissingFileThrows) { EXPECT_THROW(read_file("/nonexistent/ksconf/file"), std::runtime_error); }

}  // namespace
}  // namespace ksconf
