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

#ifndef KSCONF_RAYS_H
#define KSCONF_RAYS_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksconf/bitset.h"

namespace ksconf {

struct GaussianInt {
    int64_t re = 0;
    int64_t im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(int64_t re_, int64_t im_ = 0) : re(re_), im(im_) {}

    constexpr bool is_zero() const { return re == 0 && im == 0; }
    constexpr GaussianInt conj() const { return {re, -im}; }
    constexpr int64_t norm() const { return re * re + im * im; }

    friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
    friend constexpr GaussianInt operator-(GaussianInt a, GaussianInt b) { return {a.re - b.re, a.im - b.im}; }
    friend constexpr GaussianInt operator-(GaussianInt a) { return {-a.re, -a.im}; }
    friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianInt &operator+=(GaussianInt o) { return *this = *this + o; }
    GaussianInt &operator*=(GaussianInt o) { return *this = *this * o; }

    constexpr auto operator<=>(const GaussianInt &) const = default;

    std::string str() const;
};

/// Exact division when `b` divides `a`; otherwise the nearest-quotient used
/// by the Euclidean algorithm.
GaussianInt round_div(GaussianInt a, GaussianInt b);
GaussianInt gaussian_gcd(GaussianInt a, GaussianInt b);

/// A one-dimensional subspace of C^d, held by its canonical representative:
/// coordinates share no non-unit Gaussian factor and the first nonzero
/// coordinate lies in the quadrant re > 0, im >= 0 (it is exactly 1 whenever
/// it is a unit).
class Ray {
   public:
    const std::vector<GaussianInt> &coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }
    bool is_real() const;
    std::string str() const;

    auto operator<=>(const Ray &) const = default;

   private:
    friend Ray make_ray(std::vector<GaussianInt> coords);
    std::vector<GaussianInt> coords_;
};

/// Canonicalizes a nonzero vector; throws std::invalid_argument on the zero
/// vector or an empty coordinate list.
Ray make_ray(std::vector<GaussianInt> coords);
Ray make_ray(const std::vector<int64_t> &real_coords);

/// <x, y> = sum conj(x_k) y_k.
GaussianInt inner_product(const Ray &x, const Ray &y);

/// An immutable, ordered set of distinct rays with its orthogonality graph.
class Configuration {
   public:
    Configuration() = default;

    std::size_t size() const { return rays_.size(); }
    bool empty() const { return rays_.empty(); }
    std::size_t dim() const { return dim_; }
    const Ray &ray(std::size_t i) const { return rays_[i]; }
    const std::vector<Ray> &rays() const { return rays_; }

    /// Rays orthogonal to ray i.
    const Bitset &neighbours(std::size_t i) const { return adjacency_[i]; }
    const std::vector<Bitset> &adjacency() const { return adjacency_; }
    bool orthogonal(std::size_t i, std::size_t j) const { return adjacency_[i].test(j); }
    Bitset all() const { return Bitset::prefix(rays_.size()); }

    /// Number of orthogonal pairs.
    std::size_t edge_count() const;

    std::optional<std::size_t> index_of(const Ray &r) const;

    /// Restriction to the given ray indices, kept in increasing index order.
    /// Adjacency is copied rather than recomputed.
    Configuration subconfiguration(const Bitset &members) const;
    Configuration subconfiguration(const std::vector<std::size_t> &indices) const;
    /// This configuration with a single ray deleted.
    Configuration without(std::size_t index) const;

    /// Adjacency of the complement graph (non-orthogonal pairs, no loops).
    std::vector<Bitset> complement_adjacency() const;

   private:
    friend Configuration build_configuration(std::vector<Ray> rays);
    std::vector<Ray> rays_;
    std::vector<Bitset> adjacency_;
    std::size_t dim_ = 0;
};

/// Builds the orthogonality graph; throws std::invalid_argument on duplicate
/// rays, mixed dimensions or more than kMaxRays rays.
Configuration build_configuration(std::vector<Ray> rays);

/// The standard basis of C^d as a configuration.
Configuration standard_basis(std::size_t d);

}  // namespace ksconf

#endif
