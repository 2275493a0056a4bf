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


#include "ksconf/entropy.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ksconf {

namespace {

double to_double(const Rational &r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

double plogp(double p) { return p > 0 ? p * std::log(p) : 0.0; }

void require_saturated(const Configuration &config) {
    if (!is_saturated(config)) {
        throw std::invalid_argument("probability weights need a saturated configuration");
    }
}

// Entropy of one clique. Exact weights are grouped by value so that equal
// multisets give bit-identical results.
double clique_entropy(const CliqueSet &u, const ProbabilityWeight &f) {
    if (f.is_exact()) {
        std::map<Rational, int64_t> counts;
        u.for_each([&](std::size_t x) { counts[f.exact_values()[x]]++; });
        double s = 0;
        for (const auto &[p, n] : counts) {
            if (p > Rational(0)) {
                s -= to_double(Rational(n) * p) * std::log(to_double(p));
            }
        }
        return s;
    }
    double s = 0;
    u.for_each([&](std::size_t x) { s -= plogp(f.value(x)); });
    return s;
}

std::vector<Rational> sorted_values(const CliqueSet &u, const std::vector<Rational> &v) {
    std::vector<Rational> out;
    u.for_each([&](std::size_t x) { out.push_back(v[x]); });
    std::sort(out.begin(), out.end());
    return out;
}

// Projected gradient descent on mean clique entropy plus a spread penalty,
// over {C f = 1} intersected with the unit box.
class ContinuousSearch {
   public:
    ContinuousSearch(const Configuration &config, const std::vector<CliqueSet> &cliques)
        : n_(config.size()), cliques_(cliques), c_(cliques.size(), config.size()) {
        c_.setZero();
        for (std::size_t u = 0; u < cliques.size(); u++) {
            cliques[u].for_each([&](std::size_t x) { c_(u, x) = 1.0; });
        }
        pinv_ = Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(c_).pseudoInverse();
    }

    std::optional<std::vector<double>> run(std::mt19937_64 &rng, std::size_t iterations, double tol) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        Eigen::VectorXd f(n_);
        for (std::size_t i = 0; i < n_; i++) {
            f(i) = unit(rng);
        }
        project(f, 500);
        const double lambda = 10.0;
        double step = 0.05;
        for (std::size_t it = 0; it < iterations; it++) {
            Eigen::VectorXd s = entropies(f);
            double mean = s.mean();
            Eigen::VectorXd grad = Eigen::VectorXd::Zero(n_);
            for (std::size_t u = 0; u < cliques_.size(); u++) {
                double w = (1.0 + 2.0 * lambda * (s(u) - mean)) / cliques_.size();
                cliques_[u].for_each([&](std::size_t x) { grad(x) -= w * (std::log(std::max(f(x), 1e-12)) + 1.0); });
            }
            f -= step * grad;
            project(f, 5);
            step *= 0.995;
        }
        project(f, 2000);
        // Snap negligible values to zero and certify.
        for (std::size_t i = 0; i < n_; i++) {
            if (f(i) < 1e-12) f(i) = 0;
        }
        if ((c_ * f - Eigen::VectorXd::Ones(cliques_.size())).cwiseAbs().maxCoeff() > tol) {
            return std::nullopt;
        }
        Eigen::VectorXd s = entropies(f);
        if (s.maxCoeff() - s.minCoeff() > tol) {
            return std::nullopt;
        }
        return std::vector<double>(f.data(), f.data() + n_);
    }

   private:
    Eigen::VectorXd entropies(const Eigen::VectorXd &f) const {
        Eigen::VectorXd s(cliques_.size());
        for (std::size_t u = 0; u < cliques_.size(); u++) {
            double acc = 0;
            cliques_[u].for_each([&](std::size_t x) { acc -= plogp(f(x)); });
            s(u) = acc;
        }
        return s;
    }

    // Alternating projections onto the affine constraint set and the box.
    void project(Eigen::VectorXd &f, int rounds) const {
        const Eigen::VectorXd ones = Eigen::VectorXd::Ones(cliques_.size());
        for (int round = 0; round < rounds; round++) {
            f -= pinv_ * (c_ * f - ones);
            f = f.cwiseMax(0.0).cwiseMin(1.0);
            if ((c_ * f - ones).cwiseAbs().maxCoeff() < 1e-13) {
                break;
            }
        }
    }

    std::size_t n_;
    const std::vector<CliqueSet> &cliques_;
    Eigen::MatrixXd c_;
    Eigen::MatrixXd pinv_;
};

}  // namespace

ProbabilityWeight ProbabilityWeight::exact(std::vector<Rational> values) {
    ProbabilityWeight w;
    w.values_ = std::move(values);
    return w;
}

ProbabilityWeight ProbabilityWeight::floating(std::vector<double> values) {
    ProbabilityWeight w;
    w.values_ = std::move(values);
    return w;
}

std::size_t ProbabilityWeight::size() const {
    return std::visit([](const auto &v) { return v.size(); }, values_);
}

double ProbabilityWeight::value(std::size_t i) const {
    if (is_exact()) {
        return to_double(std::get<std::vector<Rational>>(values_)[i]);
    }
    return std::get<std::vector<double>>(values_)[i];
}

const std::vector<Rational> &ProbabilityWeight::exact_values() const {
    if (!is_exact()) {
        throw std::logic_error("floating weight has no exact values");
    }
    return std::get<std::vector<Rational>>(values_);
}

std::vector<double> ProbabilityWeight::values() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < out.size(); i++) {
        out[i] = value(i);
    }
    return out;
}

bool validate_probability_weight(const Configuration &config, const ProbabilityWeight &f, double tol) {
    require_saturated(config);
    if (f.size() != config.size()) {
        throw std::invalid_argument("weight has " + std::to_string(f.size()) + " values for " +
                                    std::to_string(config.size()) + " rays");
    }
    const auto cliques = maximal_cliques(config);
    if (f.is_exact()) {
        const auto &v = f.exact_values();
        if (std::any_of(v.begin(), v.end(), [](const Rational &x) { return x < Rational(0) || x > Rational(1); })) {
            return false;
        }
        return std::all_of(cliques.begin(), cliques.end(), [&](const CliqueSet &u) {
            Rational sum(0);
            u.for_each([&](std::size_t x) { sum += v[x]; });
            return sum == Rational(1);
        });
    }
    for (std::size_t i = 0; i < f.size(); i++) {
        double x = f.value(i);
        if (!(x >= -tol && x <= 1 + tol)) {
            return false;
        }
    }
    return std::all_of(cliques.begin(), cliques.end(), [&](const CliqueSet &u) {
        double sum = 0;
        u.for_each([&](std::size_t x) { sum += f.value(x); });
        return std::abs(sum - 1) <= tol;
    });
}

EntropyReport entropy_report(const Configuration &config, const ProbabilityWeight &f, double tol) {
    if (!validate_probability_weight(config, f, tol)) {
        throw std::invalid_argument("not a probability weight on the configuration");
    }
    EntropyReport report;
    report.cliques = maximal_cliques(config);
    for (const CliqueSet &u : report.cliques) {
        report.per_clique.push_back(clique_entropy(u, f));
    }
    if (f.is_exact()) {
        const auto first = sorted_values(report.cliques.front(), f.exact_values());
        report.exact = std::all_of(report.cliques.begin(), report.cliques.end(),
                                   [&](const CliqueSet &u) { return sorted_values(u, f.exact_values()) == first; });
    }
    auto [lo, hi] = std::minmax_element(report.per_clique.begin(), report.per_clique.end());
    report.equientropic = report.exact || *hi - *lo <= tol;
    if (report.equientropic) {
        report.common_value = report.per_clique.front();
        report.upper_bound = report.common_value;
        report.statistical_weight = std::exp(*report.upper_bound);
    }
    report.witness = f;
    report.witness_source = "given weight";
    return report;
}

ProbabilityWeight weight_from_partition_colouring(const Configuration &config, const Colouring &colouring,
                                                  const std::vector<Rational> &colour_values) {
    if (colour_values.size() != colouring.partition.size()) {
        throw std::invalid_argument("need one value per colour of the partition");
    }
    if (!verify_partition_colouring(config, colouring)) {
        throw std::invalid_argument("colouring does not respect its partition");
    }
    Rational total(0);
    for (std::size_t a = 0; a < colour_values.size(); a++) {
        if (colour_values[a] < Rational(0) || colour_values[a] > Rational(1)) {
            throw std::invalid_argument("colour values must lie in [0, 1]");
        }
        total += Rational(colouring.partition[a]) * colour_values[a];
    }
    if (total != Rational(1)) {
        throw std::invalid_argument("colour values weighted by the partition sum to " +
                                    std::to_string(total.numerator()) + "/" + std::to_string(total.denominator()) +
                                    ", not 1");
    }
    std::vector<Rational> values(config.size());
    for (std::size_t x = 0; x < config.size(); x++) {
        values[x] = colour_values[colouring.values[x]];
    }
    return ProbabilityWeight::exact(std::move(values));
}

WeightSpec extract_weight_spec(const Configuration &config, const ProbabilityWeight &f) {
    if (!f.is_exact()) {
        throw std::invalid_argument("mixed colours need an exact weight");
    }
    if (!validate_probability_weight(config, f)) {
        throw std::invalid_argument("not a probability weight on the configuration");
    }
    const auto &v = f.exact_values();
    WeightSpec spec;
    spec.values.assign(v.begin(), v.end());
    std::sort(spec.values.begin(), spec.values.end());
    spec.values.erase(std::unique(spec.values.begin(), spec.values.end()), spec.values.end());
    for (const Rational &w : spec.values) {
        spec.gamma = std::lcm(spec.gamma, w.denominator());
    }
    for (const Rational &w : spec.values) {
        spec.numerators.push_back(w.numerator() * (spec.gamma / w.denominator()));
    }
    for (const CliqueSet &u : maximal_cliques(config)) {
        std::vector<int> mult(spec.values.size(), 0);
        u.for_each([&](std::size_t x) {
            auto it = std::lower_bound(spec.values.begin(), spec.values.end(), v[x]);
            mult[it - spec.values.begin()]++;
        });
        spec.multiplicities.push_back(std::move(mult));
    }
    return spec;
}

EntropyReport minimize_entropy(const Configuration &config, const EntropyOptions &options) {
    require_saturated(config);
    const std::size_t d = config.dim();
    std::optional<EntropyReport> best;

    // A colour class meeting every clique c times, valued 1/c, has entropy
    // log c, and any colouring-induced weight is at least log of its smallest
    // part; so the first feasible (d - c, c) is optimal among them.
    for (std::size_t c = 1; 2 * c <= d && !best; c++) {
        std::vector<int> partition = {static_cast<int>(d - c), static_cast<int>(c)};
        if (auto colouring = find_partition_colouring(config, partition)) {
            auto w = weight_from_partition_colouring(config, *colouring, {Rational(0), Rational(1, c)});
            best = entropy_report(config, w, options.tolerance);
            best->witness_source = "partition (" + std::to_string(d - c) + "," + std::to_string(c) + ") colouring";
        }
    }

    if (options.starts > 0) {
        const auto cliques = maximal_cliques(config);
        ContinuousSearch search(config, cliques);
        std::mt19937_64 rng(options.seed);
        for (std::size_t s = 0; s < options.starts; s++) {
            auto f = search.run(rng, options.iterations, options.tolerance);
            if (!f) {
                continue;
            }
            EntropyReport r = entropy_report(config, ProbabilityWeight::floating(*f), options.tolerance);
            if (r.equientropic && (!best || !best->upper_bound || *r.upper_bound < *best->upper_bound - options.tolerance)) {
                r.witness_source = "continuous search";
                best = std::move(r);
            }
        }
    }

    if (!best) {
        // The uniform weight always exists on a saturated configuration.
        best = entropy_report(config, ProbabilityWeight::exact(std::vector<Rational>(config.size(), Rational(1, d))),
                              options.tolerance);
        best->witness_source = "uniform weight";
    }
    return *best;
}

}  // namespace ksconf
