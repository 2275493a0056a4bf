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


// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "ksconf/colouring.h"
#include "ksconf/datasets.h"
#include "ksconf/entropy.h"
#include "ksconf/orthograph.h"
#include "ksconf/pauli.h"
#include "ksconf/tropical.h"
#include "oracles.h"

namespace ksconf {
namespace {

// Collects failed sub-checks of one criterion.
class Check {
   public:
    void expect(bool ok, const std::string &what) {
        if (!ok) failures_.push_back(what);
    }
    void note(const std::string &s) { notes_ << (notes_.tellp() > 0 ? "; " : "") << s; }
    bool ok() const { return failures_.empty(); }
    std::string details() const {
        std::string out = notes_.str();
        for (const auto &f : failures_) out += (out.empty() ? "" : "; ") + std::string("failed: ") + f;
        return out;
    }

   private:
    std::vector<std::string> failures_;
    std::ostringstream notes_;
};

template <typename T>
std::string join(const T &values) {
    std::ostringstream out;
    bool first = true;
    for (const auto &v : values) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    return out.str();
}

std::set<Ray> ray_set(const Configuration &c) { return {c.rays().begin(), c.rays().end()}; }

void signatures(Check &c) {
    struct Row {
        DatasetName name;
        std::vector<uint64_t> cliques, anticliques;
    };
    const Row rows[] = {
        {DatasetName::M, {64, 992, 5056, 11504, 13312, 8192, 2560, 320}, {64, 1024, 4864, 8512, 5632, 1536}},
        {DatasetName::N, {36, 346, 1224, 2063, 1776, 830, 204, 21}, {36, 284, 536, 212}},
        {DatasetName::T0, {48, 600, 2752, 6096, 7008, 4304, 1344, 168}, {48, 528, 1536, 1312, 384}},
        {DatasetName::KP40, {40, 460, 1880, 2990, 1880, 780, 200, 25}, {40, 320, 640, 320}},
        {DatasetName::KP36, {36, 374, 1384, 1991, 1120, 416, 96, 11}, {36, 256, 448, 192}},
        {DatasetName::E8,
         {120, 3780, 37800, 122850, 113400, 56700, 16200, 2025},
         {120, 3360, 31360, 120960, 241920, 241920, 103680, 8640}},
    };
    for (const Row &r : rows) {
        Signature s = signature(builtin_one(r.name));
        c.expect(s.cliques == r.cliques, dataset_name(r.name) + " cliques " + join(s.cliques));
        c.expect(s.anticliques == r.anticliques, dataset_name(r.name) + " anticliques " + join(s.anticliques));
    }
    c.note("M, N, T0, KP40, KP36, E8 compared row by row");
}

void classification(Check &c) {
    for (DatasetName n : {DatasetName::M, DatasetName::N, DatasetName::T0, DatasetName::B, DatasetName::E8}) {
        c.expect(is_ks_configuration(builtin_one(n)), dataset_name(n) + " is KS");
    }
    c.expect(!is_ks_configuration(builtin_one(DatasetName::A)), "A is colourable");
    for (DatasetName n : {DatasetName::M, DatasetName::A, DatasetName::B, DatasetName::E8}) {
        c.expect(is_saturated(builtin_one(n)).saturated, dataset_name(n) + " saturated");
    }
    c.expect(!is_saturated(builtin_one(DatasetName::N)).saturated, "N not saturated");
    c.note(std::string("T0 saturated=") + (is_saturated(builtin_one(DatasetName::T0)).saturated ? "yes" : "no"));
    for (DatasetName n : {DatasetName::N, DatasetName::KP36}) {
        c.expect(is_critical(builtin_one(n)), dataset_name(n) + " critical");
    }
    for (DatasetName n : {DatasetName::M, DatasetName::T0, DatasetName::KP40}) {
        c.expect(!is_critical(builtin_one(n)), dataset_name(n) + " not critical");
    }
    Configuration m = saturated_64();
    c.expect(steiner_check(m), "M Steiner");
    auto hist = intersection_histogram(maximal_cliques(m));
    c.expect(hist.size() <= 7, "M clique intersections within 0..6");
    c.note("M clique intersection sizes 0.." + std::to_string(hist.size() - 1));
}

void partition_colourings(Check &c) {
    Configuration m = saturated_64();
    auto cliques = maximal_cliques(m);
    Bitset a = Bitset::from_indices(partition_62_witness());
    Bitset b = Bitset::from_indices(partition_44_witness());
    c.expect(cliques.size() == 320, "320 cliques in M");
    bool a_ok = true, b_ok = true;
    for (const CliqueSet &u : cliques) {
        a_ok = a_ok && (u & a).count() == 2;
        b_ok = b_ok && (u & b).count() == 4;
    }
    c.expect(a_ok, "#U&A = 2 on every clique");
    c.expect(b_ok, "#U&B = 4 on every clique");
    for (std::vector<int> p : {std::vector<int>{6, 2}, std::vector<int>{4, 4}}) {
        auto found = find_partition_colouring(m, p);
        c.expect(found && verify_partition_colouring(m, *found), "colouring for (" + join(p) + ")");
    }
    for (std::vector<int> p : {std::vector<int>{5, 3}, std::vector<int>{7, 1}}) {
        c.expect(!find_partition_colouring(m, p), "no colouring for (" + join(p) + ")");
    }
    c.note("(6,2),(4,4) found and verified; (5,3),(7,1) exhaustively absent");
}

void critical_reduction(Check &c) {
    CriticalReport r = critical_reduce(builtin_one(DatasetName::T0));
    std::ostringstream trace;
    for (const auto &it : r.iterations) trace << "(" << it.survivors << "," << it.signature_classes << ")";
    c.note("T0 trace " + trace.str() + ", " + std::to_string(r.iterations.size()) + " iterations, " +
           std::to_string(r.results.size()) + " critical sets");
    c.expect(!r.iterations.empty() && r.iterations[0].survivors == 47 && r.iterations[0].signature_classes == 2,
             "first iteration (47,2)");
    auto n = ray_set(builtin_one(DatasetName::N));
    bool has_n = false;
    for (const Configuration &res : r.results) has_n = has_n || ray_set(res) == n;
    c.expect(has_n, "T0 reduces to N");
    CriticalReport kp = critical_reduce(builtin_one(DatasetName::KP40));
    c.expect(kp.results.size() == 1 && ray_set(kp.results[0]) == ray_set(builtin_one(DatasetName::KP36)),
             "KP40 reduces to KP36");
}

void tropical(Check &c) {
    Configuration m = saturated_64();
    Configuration t0 = builtin_one(DatasetName::T0);
    auto t0_cliques = maximal_cliques(t0);
    std::vector<CliqueSet> cover;
    std::function<bool(Bitset)> rec = [&](Bitset left) {
        if (left.none()) return true;
        std::size_t v = left.first();
        for (const CliqueSet &u : t0_cliques) {
            if (u.test(v) && u.is_subset_of(left)) {
                cover.push_back(u);
                if (rec(left - u)) return true;
                cover.pop_back();
            }
        }
        return false;
    };
    c.expect(rec(t0.all()) && cover.size() == 6, "6 disjoint cliques cover T0");
    c.expect(!admits_anticlique_section(t0, cover), "cover of T0 has no section");

    auto cliques = maximal_cliques(m);
    std::mt19937_64 rng(20120101);
    int sampled = 0;
    for (int trial = 0; trial < 1000; trial++) {
        std::vector<CliqueSet> pick;
        for (std::size_t i : oracle::random_subset(rng, cliques.size(), 5)) pick.push_back(cliques[i]);
        sampled += admits_anticlique_section(m, pick).has_value();
    }
    c.expect(sampled == 1000, "sampled 5-subsets with sections: " + std::to_string(sampled));

    auto result = tropical_dimension(m);
    c.expect(result && result->dimension == 6, "tropical dimension 6");
    if (!result) return;
    auto unions = tropical_unions(*result);
    Signature t_sig = signature(t0);
    Bitset n = Bitset::from_indices(critical_36_indices());
    std::size_t same = 0, containing = 0;
    for (const Bitset &u : unions) {
        same += signature(m.subconfiguration(u)) == t_sig;
        containing += n.is_subset_of(u);
    }
    c.expect(unions.size() == 32, "32 unions, got " + std::to_string(unions.size()));
    c.expect(same == unions.size(), "all unions share T0's signature");
    c.expect(containing == 1, "exactly one union contains N, got " + std::to_string(containing));
    c.note("restricted run: " + std::to_string(result->witnesses.size()) + " witnesses over " +
           std::to_string(result->collections_checked) + " collections, " + std::to_string(unions.size()) +
           " unions of 48 rays");
}

void pauli(Check &c) {
    c.expect(enumerate_parity_tuples(3, 7).size() == 135, "135 parity 7-tuples");
    std::set<Ray> rays;
    std::size_t total = 0;
    for (const auto &line : saturated_lines()) {
        auto r = joint_eigenrays(line);
        total += r.size();
        rays.insert(r.begin(), r.end());
    }
    c.expect(total == 64 && rays.size() == 64, "64 distinct eigenrays");
    c.expect(rays == ray_set(saturated_64()), "eigenrays equal M");

    SignedHypergraph h = simple_parity_proof();
    c.expect(verify_parity_proof(h), "8-edge hypergraph verifies");
    std::vector<std::string> degree4;
    bool others_two = true;
    for (const PauliWord &w : h.vertices()) {
        if (h.degree(w) == 4) {
            degree4.push_back(w.str());
        } else {
            others_two = others_two && h.degree(w) == 2;
        }
    }
    c.note("degree-4 vertices {" + join(degree4) + "}, IZZ degree " +
           std::to_string(h.degree(PauliWord::parse("IZZ"))));
    c.expect(degree4 == std::vector<std::string>{"IZZ"} && others_two, "IZZ alone has degree 4");

    MiningResult mined = mine_parity_proofs(saturated_words());
    c.expect(mined.negative_edges.size() == 24, "24 negative 4-edges");
    c.expect(mined.positive_edges.size() == 54, "54 positive 4-edges");
    c.expect(mined.profiles.size() == 33, "33 profiles, got " + std::to_string(mined.profiles.size()));
    c.note(std::to_string(mined.proofs.size()) + " proofs mined");
    c.expect(binomial(135, 8) == 2214919483920ULL, "C(135,8)");
}

void pipeline(Check &c) {
    MaximalCapacityReport r = maximal_capacity_pipeline(320);
    c.expect(r.w_sets.size() == 420, "420 W-sets, got " + std::to_string(r.w_sets.size()));
    bool subset = true;
    for (uint64_t cap : r.w_pair_capacities) subset = subset && (cap == 8 || cap == 16 || cap == 24);
    c.expect(subset, "W-pair capacities within {8,16,24}: " + join(r.w_pair_capacities));
    c.expect(r.q_sets.size() == 70, "70 Q-sets");
    auto a_cliques = maximal_cliques(builtin_one(DatasetName::A));
    bool q_ok = true;
    for (const Bitset &q : r.q_sets) q_ok = q_ok && q.count() == 32 && capacity_within(a_cliques, q) == 24;
    c.expect(q_ok, "each Q-set has 32 rays and capacity 24");
    c.expect(r.capacity_a == 240, "capacity(A) = 240");
    c.expect(r.target_pairs.size() == 12, "12 pairs at 320, got " + std::to_string(r.target_pairs.size()));
    c.expect(r.unions_equal_to_m >= 1, "a union equals M");
    c.note("pairs at 320: " + std::to_string(r.target_pairs.size()) + ", equal to M: " +
           std::to_string(r.unions_equal_to_m) + ", largest union capacity observed " +
           std::to_string(r.max_union_capacity));
}

void entropy(Check &c) {
    Configuration m = saturated_64();
    auto exact = entropy_report(m, ProbabilityWeight::exact(std::vector<Rational>(64, Rational(1, 8))));
    c.expect(exact.exact && exact.equientropic && *exact.common_value == std::log(8.0), "uniform exact log 8");
    auto floating = entropy_report(m, ProbabilityWeight::floating(std::vector<double>(64, 0.125)));
    c.expect(floating.equientropic && std::abs(*floating.common_value - std::log(8.0)) <= 1e-12,
             "uniform floating log 8");
    std::vector<Rational> a(64, Rational(0));
    for (std::size_t i : partition_62_witness()) a[i] = Rational(1, 2);
    auto ra = entropy_report(m, ProbabilityWeight::exact(a));
    c.expect(ra.exact && ra.equientropic && *ra.common_value == std::log(2.0), "A-set weight log 2");
    auto best = minimize_entropy(m);
    c.expect(best.upper_bound && *best.upper_bound <= std::log(2.0) + 1e-9, "bound on M <= log 2");
    c.expect(best.witness && validate_probability_weight(m, *best.witness) &&
                 entropy_report(m, *best.witness).equientropic,
             "M witness validates");
    auto basis = minimize_entropy(standard_basis(8));
    c.expect(basis.upper_bound && *basis.upper_bound == 0.0, "basis bound 0");
    std::ostringstream s;
    s << "bound on M " << (best.upper_bound ? *best.upper_bound : -1.0) << " from " << best.witness_source;
    c.note(s.str());
}

void oracle_equivalence(Check &c) {
    Configuration m = saturated_64();
    auto cliques = maximal_cliques(m);
    std::mt19937_64 rng(42);
    int cases = 0, agree = 0, non_colourable = 0;
    while (cases < 240) {
        std::vector<std::size_t> idx;
        if (cases % 2 == 0) {
            idx = oracle::random_subset(rng, m.size(), 1 + rng() % 16);
        } else {
            Bitset u = cliques[rng() % cliques.size()] | cliques[rng() % cliques.size()];
            if (u.count() > 16) continue;
            idx = u.indices();
        }
        Configuration sub = m.subconfiguration(idx);
        bool naive = oracle::naive_ks_colourable(oracle::orthogonality(sub.rays()), sub.dim());
        bool fast = !is_ks_configuration(sub);
        agree += naive == fast;
        non_colourable += !naive;
        cases++;
    }
    c.expect(agree == cases, std::to_string(cases - agree) + " disagreements");
    c.note(std::to_string(agree) + "/" + std::to_string(cases) + " agree, " + std::to_string(non_colourable) +
           " non-colourable");
}

}  // namespace
}  // namespace ksconf

int main() {
    using namespace ksconf;
    const std::pair<const char *, void (*)(Check &)> criteria[] = {
        {"signatures", signatures},
        {"classification", classification},
        {"partition colourings", partition_colourings},
        {"critical reduction", critical_reduction},
        {"tropical", tropical},
        {"pauli parity proofs", pauli},
        {"maximal capacity pipeline", pipeline},
        {"entropy", entropy},
        {"oracle equivalence", oracle_equivalence},
    };
    int failed = 0;
    int index = 1;
    for (auto [name, fn] : criteria) {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            fn(c);
        } catch (const std::exception &e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !c.ok();
        std::cout << (c.ok() ? "PASS" : "FAIL") << " " << index++ << " " << name << " (" << std::fixed
                  << std::setprecision(1) << secs << "s): " << c.details() << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
