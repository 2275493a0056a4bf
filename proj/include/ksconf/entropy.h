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


#ifndef KSCONF_ENTROPY_H
#define KSCONF_ENTROPY_H

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ksconf/colouring.h"
#include "ksconf/orthograph.h"
#include "ksconf/rational.h"
#include "ksconf/rays.h"

namespace ksconf {

/// A function on the rays of a saturated configuration summing to 1 over
/// every d-clique, held either exactly or in floating point.
class ProbabilityWeight {
   public:
    static ProbabilityWeight exact(std::vector<Rational> values);
    static ProbabilityWeight floating(std::vector<double> values);

    bool is_exact() const { return std::holds_alternative<std::vector<Rational>>(values_); }
    std::size_t size() const;
    double value(std::size_t i) const;
    /// Throws std::logic_error in floating mode.
    const std::vector<Rational> &exact_values() const;
    std::vector<double> values() const;

   private:
    std::variant<std::vector<Rational>, std::vector<double>> values_;
};

/// Every clique sums to 1 (exactly, or within `tol` in floating mode) and
/// every value lies in [0, 1]. Throws std::invalid_argument when the
/// configuration is not saturated or the sizes differ.
bool validate_probability_weight(const Configuration &config, const ProbabilityWeight &f, double tol = 1e-9);

struct EntropyReport {
    std::vector<CliqueSet> cliques;
    /// S_U = -sum f log f over each clique, natural log, 0 log 0 = 0.
    std::vector<double> per_clique;
    bool equientropic = false;
    /// Set when equientropy was decided exactly: every clique carries the
    /// same multiset of rational values.
    bool exact = false;
    std::optional<double> common_value;
    /// An equientropic weight bounds the configuration entropy from above.
    std::optional<double> upper_bound;
    /// exp(upper_bound).
    std::optional<double> statistical_weight;
    std::optional<ProbabilityWeight> witness;
    std::string witness_source;
};

/// Throws std::invalid_argument when `f` does not validate.
EntropyReport entropy_report(const Configuration &config, const ProbabilityWeight &f, double tol = 1e-9);

/// f(x) = colour_values[colour of x]. Throws std::invalid_argument unless the
/// colouring verifies, the values lie in [0, 1] and sum_a N_a v_a = 1.
ProbabilityWeight weight_from_partition_colouring(const Configuration &config, const Colouring &colouring,
                                                  const std::vector<Rational> &colour_values);

/// Distinct values w_0 < ... < w_{m-1} of an exact weight written as q_i / gamma
/// with gamma minimal, and the multiplicity of each value in every clique.
struct WeightSpec {
    std::vector<Rational> values;
    int64_t gamma = 1;
    std::vector<int64_t> numerators;
    /// multiplicities[u][i]: rays of clique u carrying values[i].
    std::vector<std::vector<int>> multiplicities;
};

/// Throws std::invalid_argument for a floating weight or one that does not
/// validate.
WeightSpec extract_weight_spec(const Configuration &config, const ProbabilityWeight &f);

struct EntropyOptions {
    /// Random starts of the continuous search; 0 disables it.
    std::size_t starts = 8;
    std::size_t iterations = 300;
    uint64_t seed = 20120101;
    double tolerance = 1e-9;
};

/// Smallest common entropy found over weights induced by two-colour partition
/// colourings and a projected-gradient search over equientropic weights. The
/// result is an upper bound on the configuration entropy, never a claim of
/// optimality. Throws std::invalid_argument on a non-saturated configuration.
EntropyReport minimize_entropy(const Configuration &config, const EntropyOptions &options = {});

}  // namespace ksconf

#endif
