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

#ifndef KSCONF_BITSET_H
#define KSCONF_BITSET_H

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ksconf {

/// Maximum number of rays a Configuration may hold.
inline constexpr std::size_t kMaxRays = 256;

/// Fixed-capacity set of ray indices. All orthogonality-graph kernels operate
/// on these, so the operations are branch-free word loops.
class Bitset {
   public:
    static constexpr std::size_t kWords = kMaxRays / 64;

    constexpr Bitset() = default;

    static Bitset from_indices(const std::vector<std::size_t> &indices) {
        Bitset b;
        for (std::size_t i : indices) {
            b.set(i);
        }
        return b;
    }

    /// The set {0, 1, ..., n-1}.
    static Bitset prefix(std::size_t n) {
        Bitset b;
        for (std::size_t w = 0; w < kWords; w++) {
            if (n >= 64 * (w + 1)) {
                b.words_[w] = ~uint64_t{0};
            } else if (n > 64 * w) {
                b.words_[w] = (uint64_t{1} << (n - 64 * w)) - 1;
            }
        }
        return b;
    }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    std::size_t count() const {
        std::size_t c = 0;
        for (uint64_t w : words_) {
            c += std::popcount(w);
        }
        return c;
    }
    bool none() const {
        uint64_t acc = 0;
        for (uint64_t w : words_) {
            acc |= w;
        }
        return acc == 0;
    }
    bool any() const { return !none(); }

    /// Smallest member, or kMaxRays when empty.
    std::size_t first() const {
        for (std::size_t w = 0; w < kWords; w++) {
            if (words_[w]) {
                return 64 * w + std::countr_zero(words_[w]);
            }
        }
        return kMaxRays;
    }

    /// Smallest member strictly greater than i, or kMaxRays.
    std::size_t next(std::size_t i) const {
        std::size_t k = i + 1;
        if (k >= kMaxRays) {
            return kMaxRays;
        }
        std::size_t w = k >> 6;
        uint64_t cur = words_[w] & (~uint64_t{0} << (k & 63));
        while (true) {
            if (cur) {
                return 64 * w + std::countr_zero(cur);
            }
            if (++w == kWords) {
                return kMaxRays;
            }
            cur = words_[w];
        }
    }

    /// Members strictly greater than i.
    Bitset above(std::size_t i) const {
        Bitset r = *this;
        std::size_t k = i + 1;
        for (std::size_t w = 0; w < kWords; w++) {
            if (k >= 64 * (w + 1)) {
                r.words_[w] = 0;
            } else if (k > 64 * w) {
                r.words_[w] &= ~uint64_t{0} << (k - 64 * w);
            }
        }
        return r;
    }

    bool is_subset_of(const Bitset &other) const {
        for (std::size_t w = 0; w < kWords; w++) {
            if (words_[w] & ~other.words_[w]) {
                return false;
            }
        }
        return true;
    }
    bool intersects(const Bitset &other) const {
        for (std::size_t w = 0; w < kWords; w++) {
            if (words_[w] & other.words_[w]) {
                return true;
            }
        }
        return false;
    }

    template <typename Fn>
    void for_each(Fn &&fn) const {
        for (std::size_t w = 0; w < kWords; w++) {
            uint64_t cur = words_[w];
            while (cur) {
                fn(64 * w + std::countr_zero(cur));
                cur &= cur - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    Bitset &operator&=(const Bitset &o) {
        for (std::size_t w = 0; w < kWords; w++) words_[w] &= o.words_[w];
        return *this;
    }
    Bitset &operator|=(const Bitset &o) {
        for (std::size_t w = 0; w < kWords; w++) words_[w] |= o.words_[w];
        return *this;
    }
    Bitset &operator^=(const Bitset &o) {
        for (std::size_t w = 0; w < kWords; w++) words_[w] ^= o.words_[w];
        return *this;
    }
    /// Set difference.
    Bitset &operator-=(const Bitset &o) {
        for (std::size_t w = 0; w < kWords; w++) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset &b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset &b) { return a ^= b; }
    friend Bitset operator-(Bitset a, const Bitset &b) { return a -= b; }

    bool operator==(const Bitset &o) const = default;

    std::size_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

    const std::array<uint64_t, kWords> &words() const { return words_; }

   private:
    std::array<uint64_t, kWords> words_{};
};

/// Lexicographic order on the sorted member lists.
inline bool lex_less(const Bitset &a, const Bitset &b) {
    std::size_t i = a.first();
    std::size_t j = b.first();
    while (i == j && i != kMaxRays) {
        i = a.next(i);
        j = b.next(j);
    }
    if (i == j) {
        return false;
    }
    // A proper prefix sorts first.
    if (i == kMaxRays || j == kMaxRays) {
        return i == kMaxRays;
    }
    return i < j;
}

struct BitsetHash {
    std::size_t operator()(const Bitset &b) const { return b.hash(); }
};

}  // namespace ksconf

#endif
