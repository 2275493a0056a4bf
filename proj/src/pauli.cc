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


#include "ksconf/pauli.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace ksconf {

namespace {

constexpr char kLetters[] = "IXYZ";

// Code -> (flip, phase) and back.
constexpr uint32_t kFlip[] = {0, 1, 1, 0};
constexpr uint32_t kPhase[] = {0, 0, 1, 1};

int parity(uint32_t x) { return std::popcount(x) & 1; }

void require_same_length(const PauliWord &a, const PauliWord &b) {
    if (a.qubits() != b.qubits()) {
        throw std::invalid_argument("Pauli words " + a.str() + " and " + b.str() + " have different lengths");
    }
}

}  // namespace

PauliWord PauliWord::parse(std::string_view letters) {
    if (letters.empty() || letters.size() > kMaxQubits) {
        throw std::invalid_argument("Pauli word must have 1 to " + std::to_string(kMaxQubits) + " letters");
    }
    uint32_t flip = 0;
    uint32_t phase = 0;
    for (std::size_t k = 0; k < letters.size(); k++) {
        const char *hit = std::char_traits<char>::find(kLetters, 4, letters[k]);
        if (hit == nullptr) {
            throw std::invalid_argument("unexpected letter '" + std::string(1, letters[k]) + "' in Pauli word " +
                                        std::string(letters));
        }
        int code = static_cast<int>(hit - kLetters);
        flip |= kFlip[code] << k;
        phase |= kPhase[code] << k;
    }
    return PauliWord(letters.size(), flip, phase);
}

PauliWord PauliWord::from_index(std::size_t qubits, uint64_t alpha) {
    if (qubits == 0 || qubits > kMaxQubits || (qubits < 32 && alpha >> (2 * qubits))) {
        throw std::invalid_argument("Pauli index " + std::to_string(alpha) + " out of range for " +
                                    std::to_string(qubits) + " qubits");
    }
    uint32_t flip = 0;
    uint32_t phase = 0;
    for (std::size_t k = 0; k < qubits; k++) {
        int code = static_cast<int>((alpha >> (2 * k)) & 3);
        flip |= kFlip[code] << k;
        phase |= kPhase[code] << k;
    }
    return PauliWord(qubits, flip, phase);
}

PauliWord PauliWord::identity(std::size_t qubits) { return from_index(qubits, 0); }

PauliWord PauliWord::from_bits(std::size_t qubits, uint32_t flip, uint32_t phase) {
    if (qubits == 0 || qubits > kMaxQubits || ((flip | phase) >> qubits) != 0) {
        throw std::invalid_argument("Pauli masks out of range for " + std::to_string(qubits) + " qubits");
    }
    return PauliWord(qubits, flip, phase);
}

int PauliWord::code(std::size_t k) const {
    uint32_t f = (flip_ >> k) & 1;
    uint32_t p = (phase_ >> k) & 1;
    return f ? (p ? 2 : 1) : (p ? 3 : 0);
}

uint64_t PauliWord::index() const {
    uint64_t alpha = 0;
    for (std::size_t k = 0; k < qubits_; k++) {
        alpha |= static_cast<uint64_t>(code(k)) << (2 * k);
    }
    return alpha;
}

std::size_t PauliWord::y_count() const { return std::popcount(flip_ & phase_); }

std::string PauliWord::str() const {
    std::string s;
    for (std::size_t k = 0; k < qubits_; k++) {
        s += kLetters[code(k)];
    }
    return s;
}

std::vector<GaussianInt> PauliWord::apply(const std::vector<GaussianInt> &x) const {
    if (x.size() != (std::size_t{1} << qubits_)) {
        throw std::invalid_argument("vector length does not match Pauli word " + str());
    }
    std::vector<GaussianInt> y(x.size());
    for (std::size_t i = 0; i < x.size(); i++) {
        GaussianInt v = x[i ^ flip_];
        y[i] = parity(static_cast<uint32_t>(i) & phase_) ? -v : v;
    }
    return y;
}

std::string SignedWord::str() const { return (sign < 0 ? "-" : "+") + word.str(); }

SignedWord pauli_mul(const SignedWord &a, const SignedWord &b) {
    require_same_length(a.word, b.word);
    // D_pa P_fa D_pb P_fb = (-1)^|fa & pb| D_(pa^pb) P_(fa^fb).
    int sign = a.sign * b.sign * (parity(a.word.flip() & b.word.phase()) ? -1 : 1);
    return {sign, PauliWord::from_bits(a.word.qubits(), a.word.flip() ^ b.word.flip(), a.word.phase() ^ b.word.phase())};
}

bool commutes(const PauliWord &a, const PauliWord &b) {
    require_same_length(a, b);
    return parity((a.flip() & b.phase()) ^ (b.flip() & a.phase())) == 0;
}

SignedWord product(const std::vector<PauliWord> &words) {
    if (words.empty()) {
        throw std::invalid_argument("product of an empty word list");
    }
    SignedWord acc{1, PauliWord::identity(words.front().qubits())};
    for (const PauliWord &w : words) {
        acc = pauli_mul(acc, {1, w});
    }
    return acc;
}

std::vector<ParityTuple> enumerate_parity_tuples(std::size_t qubits, std::size_t s) {
    const uint64_t total = uint64_t{1} << (2 * qubits);
    std::vector<PauliWord> pool;
    for (uint64_t alpha = 1; alpha < total; alpha++) {
        pool.push_back(PauliWord::from_index(qubits, alpha));
    }
    std::vector<ParityTuple> out;
    if (s == 0) {
        return out;
    }
    std::vector<std::size_t> chosen;
    SignedWord acc{1, PauliWord::identity(qubits)};
    auto rec = [&](auto &&self, std::size_t start) -> void {
        if (chosen.size() == s) {
            if (acc.word.is_identity()) {
                ParityTuple t;
                for (std::size_t i : chosen) {
                    t.words.push_back(pool[i]);
                }
                t.sign = acc.sign;
                out.push_back(std::move(t));
            }
            return;
        }
        for (std::size_t i = start; i + (s - chosen.size()) <= pool.size(); i++) {
            bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t j) { return commutes(pool[i], pool[j]); });
            if (!ok) {
                continue;
            }
            SignedWord saved = acc;
            acc = pauli_mul(acc, {1, pool[i]});
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            acc = saved;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Ray> joint_eigenrays(const std::vector<PauliWord> &words) {
    if (words.empty()) {
        throw std::invalid_argument("joint eigenrays of an empty family");
    }
    const std::size_t n = words.front().qubits();
    for (std::size_t i = 0; i < words.size(); i++) {
        if (words[i].y_count() % 2 != 0) {
            throw std::invalid_argument(words[i].str() + " squares to -identity and has no real eigenvalues");
        }
        for (std::size_t j = i + 1; j < words.size(); j++) {
            if (!commutes(words[i], words[j])) {
                throw std::invalid_argument(words[i].str() + " and " + words[j].str() + " do not commute");
            }
        }
    }
    // Greedy independent generators, tracking the span as (flip, phase) keys.
    std::vector<PauliWord> gens;
    std::set<std::pair<uint32_t, uint32_t>> span = {{0, 0}};
    for (const PauliWord &w : words) {
        if (span.count({w.flip(), w.phase()})) {
            continue;
        }
        gens.push_back(w);
        std::set<std::pair<uint32_t, uint32_t>> grown = span;
        for (auto [f, p] : span) {
            grown.insert({f ^ w.flip(), p ^ w.phase()});
        }
        span = std::move(grown);
    }
    if (gens.size() != n) {
        throw std::invalid_argument("family generates " + std::to_string(gens.size()) + " independent words, need " +
                                    std::to_string(n));
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Ray> rays;
    for (uint32_t pattern = 0; pattern < dim; pattern++) {
        // prod_k (I + s_k g_k) applied to basis vectors until one survives.
        for (std::size_t basis = 0; basis < dim; basis++) {
            std::vector<GaussianInt> v(dim);
            v[basis] = 1;
            for (std::size_t k = 0; k < n; k++) {
                std::vector<GaussianInt> gv = gens[k].apply(v);
                bool negative = (pattern >> k) & 1;
                for (std::size_t i = 0; i < dim; i++) {
                    v[i] = negative ? v[i] - gv[i] : v[i] + gv[i];
                }
            }
            if (std::any_of(v.begin(), v.end(), [](GaussianInt c) { return !c.is_zero(); })) {
                rays.push_back(make_ray(std::move(v)));
                break;
            }
        }
    }
    std::sort(rays.begin(), rays.end());
    return rays;
}

std::vector<PauliWord> SignedHypergraph::vertices() const {
    std::set<PauliWord> all;
    for (const HyperEdge &e : edges) {
        all.insert(e.words.begin(), e.words.end());
    }
    return {all.begin(), all.end()};
}

std::size_t SignedHypergraph::degree(const PauliWord &w) const {
    return std::count_if(edges.begin(), edges.end(), [&](const HyperEdge &e) {
        return std::find(e.words.begin(), e.words.end(), w) != e.words.end();
    });
}

bool verify_parity_proof(const SignedHypergraph &h) {
    std::size_t negative = 0;
    for (const HyperEdge &e : h.edges) {
        if (e.words.size() < 2) {
            throw std::invalid_argument("hyper-edge with fewer than two words");
        }
        for (std::size_t i = 0; i < e.words.size(); i++) {
            for (std::size_t j = i + 1; j < e.words.size(); j++) {
                if (e.words[i] == e.words[j] || !commutes(e.words[i], e.words[j])) {
                    throw std::invalid_argument("hyper-edge words " + e.words[i].str() + " and " + e.words[j].str() +
                                                " are repeated or do not commute");
                }
            }
        }
        SignedWord p = product(e.words);
        if (!p.word.is_identity()) {
            throw std::invalid_argument("hyper-edge product is " + p.str() + ", not a multiple of identity");
        }
        if (p.sign != e.sign) {
            throw std::invalid_argument("hyper-edge recorded with sign " + std::to_string(e.sign) +
                                        " but its product has sign " + std::to_string(p.sign));
        }
        negative += e.sign < 0;
    }
    if (negative % 2 == 0) {
        return false;
    }
    for (const PauliWord &v : h.vertices()) {
        if (h.degree(v) % 2 != 0) {
            return false;
        }
    }
    return true;
}

SignedHypergraph MiningResult::hypergraph(const MinedProof &proof) const {
    SignedHypergraph h;
    for (std::size_t e = 0; e < negative_edges.size(); e++) {
        if ((proof.negative_mask >> e) & 1) {
            h.edges.push_back(negative_edges[e]);
        }
    }
    h.edges.push_back(positive_edges[proof.positive_edge]);
    return h;
}

MiningResult mine_parity_proofs(const std::vector<PauliWord> &vertices) {
    MiningResult result;
    result.vertices = vertices;
    const std::size_t nv = vertices.size();
    if (nv > 64) {
        throw std::invalid_argument("mining supports at most 64 vertices");
    }
    std::vector<uint64_t> neg_masks;
    std::unordered_map<uint64_t, std::size_t> positive_by_mask;
    std::size_t idx[4];
    for (idx[0] = 0; idx[0] < nv; idx[0]++) {
        for (idx[1] = idx[0] + 1; idx[1] < nv; idx[1]++) {
            if (!commutes(vertices[idx[0]], vertices[idx[1]])) continue;
            for (idx[2] = idx[1] + 1; idx[2] < nv; idx[2]++) {
                if (!commutes(vertices[idx[0]], vertices[idx[2]]) || !commutes(vertices[idx[1]], vertices[idx[2]]))
                    continue;
                for (idx[3] = idx[2] + 1; idx[3] < nv; idx[3]++) {
                    HyperEdge e;
                    uint64_t mask = 0;
                    for (std::size_t i : idx) {
                        e.words.push_back(vertices[i]);
                        mask |= uint64_t{1} << i;
                    }
                    if (!commutes(e.words[3], e.words[0]) || !commutes(e.words[3], e.words[1]) ||
                        !commutes(e.words[3], e.words[2])) {
                        continue;
                    }
                    SignedWord p = product(e.words);
                    if (!p.word.is_identity()) {
                        continue;
                    }
                    e.sign = p.sign;
                    if (e.sign < 0) {
                        neg_masks.push_back(mask);
                        result.negative_edges.push_back(std::move(e));
                    } else {
                        positive_by_mask.emplace(mask, result.positive_edges.size());
                        result.positive_edges.push_back(std::move(e));
                    }
                }
            }
        }
    }
    const std::size_t ne = neg_masks.size();
    if (ne > 32) {
        throw std::invalid_argument("mining supports at most 32 negative edges");
    }
    // Gray-code walk over all subsets, tracking vertex-degree parity.
    uint64_t parity_mask = 0;
    uint64_t subset = 0;
    const uint64_t steps = uint64_t{1} << ne;
    for (uint64_t g = 1; g < steps; g++) {
        std::size_t bit = std::countr_zero(g);
        subset ^= uint64_t{1} << bit;
        parity_mask ^= neg_masks[bit];
        if (std::popcount(subset) % 2 == 0 || std::popcount(parity_mask) != 4) {
            continue;
        }
        auto hit = positive_by_mask.find(parity_mask);
        if (hit == positive_by_mask.end()) {
            continue;
        }
        MinedProof proof;
        proof.negative_mask = static_cast<uint32_t>(subset);
        proof.positive_edge = hit->second;
        std::vector<int> degree(nv, 0);
        for (std::size_t e = 0; e < ne; e++) {
            if ((subset >> e) & 1) {
                for (std::size_t v = 0; v < nv; v++) {
                    degree[v] += (neg_masks[e] >> v) & 1;
                }
            }
        }
        proof.profile.assign(std::max<std::size_t>(ne, 1), 0);
        for (int d : degree) {
            proof.profile[d]++;
        }
        result.profiles.insert(proof.profile);
        result.proofs.push_back(std::move(proof));
    }
    std::sort(result.proofs.begin(), result.proofs.end(), [](const MinedProof &a, const MinedProof &b) {
        return std::tie(a.positive_edge, a.negative_mask) < std::tie(b.positive_edge, b.negative_mask);
    });
    return result;
}

const std::vector<std::vector<PauliWord>> &saturated_lines() {
    static const std::vector<std::vector<PauliWord>> lines = [] {
        const char *table[8][7] = {
            {"XII", "IXI", "XXI", "IIZ", "XIZ", "IXZ", "XXZ"}, {"XII", "IXX", "XXX", "IYY", "XYY", "IZZ", "XZZ"},
            {"IXI", "ZIX", "ZXX", "YIY", "YXY", "XIZ", "XXZ"}, {"XXI", "YYX", "ZZX", "ZYY", "YZY", "XIZ", "IXZ"},
            {"ZXI", "YYI", "XZI", "IIZ", "ZXZ", "YYZ", "XZZ"}, {"ZXI", "ZIX", "IXX", "XYY", "YZY", "YYZ", "XZZ"},
            {"YYI", "XXX", "ZZX", "YIY", "IYY", "ZXZ", "XZZ"}, {"XZI", "ZXX", "YYX", "YXY", "ZYY", "XIZ", "IZZ"},
        };
        std::vector<std::vector<PauliWord>> out;
        for (const auto &row : table) {
            std::vector<PauliWord> line;
            for (const char *w : row) {
                line.push_back(PauliWord::parse(w));
            }
            out.push_back(std::move(line));
        }
        return out;
    }();
    return lines;
}

const std::vector<PauliWord> &saturated_words() {
    static const std::vector<PauliWord> words = [] {
        std::vector<PauliWord> out;
        for (const auto &line : saturated_lines()) {
            out.insert(out.end(), line.begin(), line.end());
        }
        std::sort(out.begin(), out.end(), [](const PauliWord &a, const PauliWord &b) { return a.index() < b.index(); });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }();
    return words;
}

SignedHypergraph simple_parity_proof() {
    const char *table[8][4] = {
        {"IXI", "ZIX", "YXY", "XIZ"}, {"IXI", "ZXX", "YIY", "XIZ"}, {"ZXI", "YYI", "IIZ", "XZZ"},
        {"ZXI", "XZI", "IIZ", "YYZ"}, {"YYI", "XXX", "YIY", "XZZ"}, {"XZI", "ZXX", "YXY", "IZZ"},
        {"ZIX", "IXX", "YYZ", "XZZ"}, {"IXX", "XXX", "IZZ", "XZZ"},
    };
    SignedHypergraph h;
    for (std::size_t r = 0; r < 8; r++) {
        HyperEdge e;
        for (const char *w : table[r]) {
            e.words.push_back(PauliWord::parse(w));
        }
        e.sign = r < 7 ? -1 : 1;
        h.edges.push_back(std::move(e));
    }
    return h;
}

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (uint64_t i = 1; i <= k; i++) {
        // acc * (n - k + i) / i stays exact: acc is C(n - k + i - 1, i - 1).
        acc = acc * (n - k + i) / i;
        if (acc > UINT64_MAX) {
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
        }
    }
    return static_cast<uint64_t>(acc);
}

}  // namespace ksconf
