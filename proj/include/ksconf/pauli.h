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


#ifndef KSCONF_PAULI_H
#define KSCONF_PAULI_H

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ksconf/rays.h"

namespace ksconf {

/// A tensor product of the real matrices I, X, Y = [[0, 1], [-1, 0]] and Z.
///
/// Letter k acts on bit k of the vector index and is the k-th character of
/// the compact notation, so "XIZ" has X on bit 0. Internally a letter is a
/// (flip, phase) bit pair: I = (0, 0), X = (1, 0), Y = (1, 1), Z = (0, 1), and
/// the word maps x to y with y_i = (-1)^|i & phase| x_{i ^ flip}.
class PauliWord {
   public:
    static constexpr std::size_t kMaxQubits = 16;

    PauliWord() = default;
    /// Throws std::invalid_argument on an empty string, a letter outside
    /// IXYZ or more than kMaxQubits letters.
    static PauliWord parse(std::string_view letters);
    /// Decodes alpha = sum_k code_k 4^k with codes I=0, X=1, Y=2, Z=3.
    static PauliWord from_index(std::size_t qubits, uint64_t alpha);
    static PauliWord identity(std::size_t qubits);
    /// Builds a word from its flip and phase masks.
    static PauliWord from_bits(std::size_t qubits, uint32_t flip, uint32_t phase);

    std::size_t qubits() const { return qubits_; }
    uint32_t flip() const { return flip_; }
    uint32_t phase() const { return phase_; }
    /// Letter code 0..3 of qubit k.
    int code(std::size_t k) const;
    uint64_t index() const;
    bool is_identity() const { return flip_ == 0 && phase_ == 0; }
    std::size_t y_count() const;
    std::string str() const;

    /// Matrix action on a vector of length 2^qubits.
    std::vector<GaussianInt> apply(const std::vector<GaussianInt> &x) const;

    auto operator<=>(const PauliWord &) const = default;

   private:
    PauliWord(std::size_t qubits, uint32_t flip, uint32_t phase) : qubits_(qubits), flip_(flip), phase_(phase) {}
    std::size_t qubits_ = 0;
    uint32_t flip_ = 0;
    uint32_t phase_ = 0;
};

struct SignedWord {
    int sign = 1;
    PauliWord word;

    std::string str() const;
    auto operator<=>(const SignedWord &) const = default;
};

/// Exact product; throws std::invalid_argument on a qubit-count mismatch.
SignedWord pauli_mul(const SignedWord &a, const SignedWord &b);
/// True when the words anticommute on an even number of qubits.
bool commutes(const PauliWord &a, const PauliWord &b);

/// Mutually commuting words whose product is sign * identity.
struct ParityTuple {
    std::vector<PauliWord> words;
    int sign = 1;
};

/// Product of commuting words; throws if the words have different lengths.
SignedWord product(const std::vector<PauliWord> &words);

/// Every increasing (by index) s-tuple of distinct non-identity, mutually
/// commuting words on n qubits whose product is +-identity.
std::vector<ParityTuple> enumerate_parity_tuples(std::size_t qubits, std::size_t s);

/// The 2^n joint eigenrays of a family of commuting words that generates a
/// maximal abelian subgroup, sorted. Throws std::invalid_argument when the
/// words do not commute, some word squares to -identity, or they generate
/// fewer than n independent elements.
std::vector<Ray> joint_eigenrays(const std::vector<PauliWord> &words);

struct HyperEdge {
    std::vector<PauliWord> words;
    int sign = 1;
};

struct SignedHypergraph {
    std::vector<HyperEdge> edges;

    /// Distinct words appearing in some edge, sorted.
    std::vector<PauliWord> vertices() const;
    /// Number of edges containing the word.
    std::size_t degree(const PauliWord &w) const;
};

/// An odd number of negative edges and every vertex of even degree. Throws
/// std::invalid_argument when an edge is not a parity tuple or its recorded
/// sign differs from the recomputed one.
bool verify_parity_proof(const SignedHypergraph &h);

/// A parity proof built from negative 4-edges plus exactly one positive one.
struct MinedProof {
    /// Bit e selects negative_edges[e].
    uint32_t negative_mask = 0;
    std::size_t positive_edge = 0;
    /// n_k: vertices of the pool lying in exactly k negative edges.
    std::vector<int> profile;
};

struct MiningResult {
    std::vector<PauliWord> vertices;
    std::vector<HyperEdge> negative_edges;
    std::vector<HyperEdge> positive_edges;
    std::vector<MinedProof> proofs;
    std::set<std::vector<int>> profiles;

    SignedHypergraph hypergraph(const MinedProof &proof) const;
};

/// Searches every odd subset of the negative 4-edges over `vertices` whose
/// odd-degree vertices form a positive 4-edge. Supports at most 32 negative
/// edges and 64 vertices.
MiningResult mine_parity_proofs(const std::vector<PauliWord> &vertices);

/// The eight maximal commuting families whose joint eigenrays form the
/// saturated 64-ray configuration.
const std::vector<std::vector<PauliWord>> &saturated_lines();
/// The 26 distinct words of saturated_lines(), in their listed order.
const std::vector<PauliWord> &saturated_words();
/// Seven negative 4-edges and one positive one over saturated_words().
SignedHypergraph simple_parity_proof();

/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
uint64_t binomial(uint64_t n, uint64_t k);

}  // namespace ksconf

#endif
