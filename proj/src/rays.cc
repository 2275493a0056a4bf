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

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ksconf {

namespace {

// Nearest integer to num/den, den > 0, ties toward +inf.
int64_t round_quotient(int64_t num, int64_t den) {
    int64_t twice = 2 * num + den;
    int64_t q = twice / (2 * den);
    if (twice % (2 * den) != 0 && twice < 0) {
        q -= 1;
    }
    return q;
}

}  // namespace

std::string GaussianInt::str() const {
    if (im == 0) {
        return std::to_string(re);
    }
    std::string s = std::to_string(re);
    if (im >= 0) {
        s += '+';
    }
    return s + std::to_string(im) + "j";
}

GaussianInt round_div(GaussianInt a, GaussianInt b) {
    if (b.is_zero()) {
        throw std::invalid_argument("division by zero Gaussian integer");
    }
    GaussianInt num = a * b.conj();
    int64_t den = b.norm();
    return {round_quotient(num.re, den), round_quotient(num.im, den)};
}

GaussianInt gaussian_gcd(GaussianInt a, GaussianInt b) {
    while (!b.is_zero()) {
        GaussianInt r = a - round_div(a, b) * b;
        a = b;
        b = r;
    }
    return a;
}

bool Ray::is_real() const {
    return std::all_of(coords_.begin(), coords_.end(), [](GaussianInt c) { return c.im == 0; });
}

std::string Ray::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < coords_.size(); k++) {
        if (k) {
            out << ", ";
        }
        out << coords_[k].str();
    }
    out << ')';
    return out.str();
}

Ray make_ray(std::vector<GaussianInt> coords) {
    if (coords.empty()) {
        throw std::invalid_argument("a ray needs at least one coordinate");
    }
    GaussianInt g;
    for (GaussianInt c : coords) {
        g = gaussian_gcd(g, c);
    }
    if (g.is_zero()) {
        throw std::invalid_argument("zero vector is not a ray");
    }
    for (GaussianInt &c : coords) {
        c = round_div(c, g);
    }
    auto lead = std::find_if(coords.begin(), coords.end(), [](GaussianInt c) { return !c.is_zero(); });
    // Exactly one associate of the leading entry has re > 0 and im >= 0.
    const GaussianInt units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (GaussianInt u : units) {
        GaussianInt v = *lead * u;
        if (v.re > 0 && v.im >= 0) {
            for (GaussianInt &c : coords) {
                c *= u;
            }
            break;
        }
    }
    Ray r;
    r.coords_ = std::move(coords);
    return r;
}

Ray make_ray(const std::vector<int64_t> &real_coords) {
    return make_ray(std::vector<GaussianInt>(real_coords.begin(), real_coords.end()));
}

GaussianInt inner_product(const Ray &x, const Ray &y) {
    if (x.dim() != y.dim()) {
        throw std::invalid_argument("inner product of rays with different dimensions");
    }
    GaussianInt acc;
    for (std::size_t k = 0; k < x.dim(); k++) {
        acc += x.coords()[k].conj() * y.coords()[k];
    }
    return acc;
}

std::size_t Configuration::edge_count() const {
    std::size_t twice = 0;
    for (const Bitset &row : adjacency_) {
        twice += row.count();
    }
    return twice / 2;
}

std::optional<std::size_t> Configuration::index_of(const Ray &r) const {
    auto it = std::find(rays_.begin(), rays_.end(), r);
    if (it == rays_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - rays_.begin());
}

Configuration Configuration::subconfiguration(const Bitset &members) const {
    return subconfiguration(members.indices());
}

Configuration Configuration::subconfiguration(const std::vector<std::size_t> &indices) const {
    std::vector<std::size_t> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("subconfiguration index listed twice");
    }
    if (!sorted.empty() && sorted.back() >= rays_.size()) {
        throw std::invalid_argument("subconfiguration index " + std::to_string(sorted.back()) +
                                    " out of range for " + std::to_string(rays_.size()) + " rays");
    }
    Configuration sub;
    sub.dim_ = dim_;
    sub.rays_.reserve(sorted.size());
    sub.adjacency_.assign(sorted.size(), Bitset{});
    for (std::size_t a = 0; a < sorted.size(); a++) {
        sub.rays_.push_back(rays_[sorted[a]]);
        for (std::size_t b = 0; b < sorted.size(); b++) {
            if (adjacency_[sorted[a]].test(sorted[b])) {
                sub.adjacency_[a].set(b);
            }
        }
    }
    return sub;
}

Configuration Configuration::without(std::size_t index) const {
    Bitset keep = all();
    keep.reset(index);
    return subconfiguration(keep);
}

std::vector<Bitset> Configuration::complement_adjacency() const {
    std::vector<Bitset> out(rays_.size());
    Bitset everything = all();
    for (std::size_t i = 0; i < rays_.size(); i++) {
        out[i] = everything - adjacency_[i];
        out[i].reset(i);
    }
    return out;
}

Configuration build_configuration(std::vector<Ray> rays) {
    if (rays.size() > kMaxRays) {
        throw std::invalid_argument("configuration has " + std::to_string(rays.size()) +
                                    " rays; at most " + std::to_string(kMaxRays) + " are supported");
    }
    Configuration c;
    c.dim_ = rays.empty() ? 0 : rays.front().dim();
    for (std::size_t i = 0; i < rays.size(); i++) {
        if (rays[i].dim() != c.dim_) {
            throw std::invalid_argument("ray " + std::to_string(i) + " has dimension " +
                                        std::to_string(rays[i].dim()) + ", expected " + std::to_string(c.dim_));
        }
    }
    c.adjacency_.assign(rays.size(), Bitset{});
    for (std::size_t i = 0; i < rays.size(); i++) {
        for (std::size_t j = i + 1; j < rays.size(); j++) {
            if (rays[i] == rays[j]) {
                throw std::invalid_argument("duplicate ray " + rays[i].str() + " at positions " +
                                            std::to_string(i) + " and " + std::to_string(j));
            }
            if (inner_product(rays[i], rays[j]).is_zero()) {
                c.adjacency_[i].set(j);
                c.adjacency_[j].set(i);
            }
        }
    }
    c.rays_ = std::move(rays);
    return c;
}

Configuration standard_basis(std::size_t d) {
    std::vector<Ray> rays;
    for (std::size_t i = 0; i < d; i++) {
        std::vector<int64_t> v(d, 0);
        v[i] = 1;
        rays.push_back(make_ray(v));
    }
    return build_configuration(std::move(rays));
}

}  // namespace ksconf
