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


#include "ksconf/cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "ksconf/colouring.h"
#include "ksconf/datasets.h"
#include "ksconf/entropy.h"
#include "ksconf/io.h"
#include "ksconf/orthograph.h"
#include "ksconf/pauli.h"
#include "ksconf/tropical.h"

namespace ksconf {

namespace {

using nlohmann::json;

const char *yes_no(bool b) { return b ? "yes" : "no"; }

struct InputOptions {
    std::string input;
    std::size_t dim = 0;
    std::optional<std::size_t> count;
    std::string subset_path;
};

struct LoadedInput {
    Configuration config;
    json descriptor;
};

void add_input_options(CLI::App *cmd, InputOptions &opts) {
    cmd->add_option("input", opts.input, "Built-in dataset name (M, N, T0, KP40, KP36, E8, A, B) or a vectors file")
        ->required();
    cmd->add_option("--dim", opts.dim, "Dimension of the vectors in a vectors file");
    cmd->add_option("--count", opts.count, "Expected number of vectors in a vectors file");
    cmd->add_option("--subset", opts.subset_path, "File of ray indices restricting the input");
}

LoadedInput load_input(const InputOptions &opts) {
    LoadedInput loaded;
    if (auto name = parse_dataset_name(opts.input)) {
        loaded.config = builtin_one(*name);
        loaded.descriptor = {{"builtin", dataset_name(*name)}};
    } else {
        if (opts.dim == 0) {
            throw std::invalid_argument("'" + opts.input + "' is not a built-in dataset; reading it as a file needs --dim");
        }
        std::string text = read_file(opts.input);
        loaded.config = build_configuration(parse_vectors(text, opts.dim, opts.count, opts.input));
        loaded.descriptor = {{"file", opts.input}, {"dim", opts.dim}};
    }
    if (!opts.subset_path.empty()) {
        auto indices = parse_index_list(read_file(opts.subset_path), opts.subset_path);
        loaded.config = loaded.config.subconfiguration(indices);
        loaded.descriptor["subset"] = opts.subset_path;
    }
    return loaded;
}

std::vector<std::vector<std::size_t>> index_lists(const std::vector<Bitset> &sets) {
    std::vector<std::vector<std::size_t>> out;
    for (const Bitset &b : sets) {
        out.push_back(b.indices());
    }
    return out;
}

std::vector<int> parse_partition(const std::string &text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::logic_error &) {
            throw std::invalid_argument("partition entries must be integers, got '" + item + "'");
        }
    }
    return parts;
}

std::string join(const std::vector<PauliWord> &words) {
    std::string s;
    for (const PauliWord &w : words) {
        if (!s.empty()) s += ' ';
        s += w.str();
    }
    return s;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Kochen-Specker configuration toolkit"};
    app.require_subcommand(1);
    std::string manifest_path;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--manifest", manifest_path, "Write a JSON run manifest to this file");
    app.add_option("--jobs", jobs, "Upper bound on worker threads; results do not depend on it")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    InputOptions in;
    json summary;
    std::function<void()> action;

    auto *check = app.add_subcommand("check", "Saturation, KS, criticality and Steiner property");
    add_input_options(check, in);
    check->callback([&] {
        action = [&] {
            LoadedInput loaded = load_input(in);
            const Configuration &c = loaded.config;
            bool saturated = is_saturated(c).saturated;
            bool ks = is_ks_configuration(c);
            bool critical = ks && is_critical(c);
            bool steiner = steiner_check(c);
            out << "saturated: " << yes_no(saturated) << "\nKS: " << yes_no(ks) << "\ncritical: " << yes_no(critical)
                << "\nSteiner: " << yes_no(steiner) << "\n";
            err << in.input << ": " << c.size() << " rays in dimension " << c.dim() << ", " << c.edge_count()
                << " orthogonal pairs\n";
            summary = {{"input", loaded.descriptor}, {"rays", c.size()},          {"saturated", saturated},
                       {"ks", ks},                   {"critical", critical},      {"steiner", steiner}};
        };
    });

    auto *sig = app.add_subcommand("signature", "Clique and anticlique counts");
    add_input_options(sig, in);
    sig->callback([&] {
        action = [&] {
            LoadedInput loaded = load_input(in);
            Signature s = signature(loaded.config);
            out << s.str();
            err << in.input << ": cliques up to size " << s.cliques.size() << ", anticliques up to size "
                << s.anticliques.size() << "\n";
            summary = {{"input", loaded.descriptor}, {"cliques", s.cliques}, {"anticliques", s.anticliques}};
        };
    });

    auto *reduce = app.add_subcommand("reduce", "Signature-guided reduction to critical subconfigurations");
    add_input_options(reduce, in);
    reduce->callback([&] {
        action = [&] {
            LoadedInput loaded = load_input(in);
            CriticalReport report = critical_reduce(loaded.config);
            json trace = json::array();
            for (std::size_t i = 0; i < report.iterations.size(); i++) {
                const auto &it = report.iterations[i];
                out << "iteration " << i + 1 << " m=" << it.survivors << " k=" << it.signature_classes << "\n";
                trace.push_back({it.survivors, it.signature_classes});
            }
            for (const Bitset &b : report.critical_sets) {
                out << "critical " << format_index_sets({b.indices()});
            }
            err << report.iterations.size() << " iterations, " << report.critical_sets.size()
                << " critical configuration(s)\n";
            summary = {{"input", loaded.descriptor},
                       {"iterations", trace},
                       {"critical", index_lists(report.critical_sets)}};
        };
    });

    TropicalOptions trop;
    auto *tropical = app.add_subcommand("tropical", "Smallest clique collection without an anticlique section");
    add_input_options(tropical, in);
    tropical->add_flag("--exhaustive", trop.exhaustive, "Check every n-subset of maximal cliques (very long)");
    tropical->add_option("--max-n", trop.max_n, "Largest collection size tried")->capture_default_str();
    tropical->add_option("--samples", trop.overlap_samples, "Random overlapping collections per size")
        ->capture_default_str();
    tropical->add_option("--seed", trop.seed, "Seed for the overlapping samples")->capture_default_str();
    tropical->add_option("--checkpoint", trop.checkpoint_path, "Resumable state file for --exhaustive");
    tropical->callback([&] {
        action = [&] {
            LoadedInput loaded = load_input(in);
            if (trop.exhaustive) {
                trop.progress = [&](const TropicalProgress &p) {
                    err << "n=" << p.n << " first clique " << p.first_index << "/" << p.clique_count << ", "
                        << p.collections_checked << " collections, " << p.witnesses << " witnesses\n";
                };
            }
            auto result = tropical_dimension(loaded.config, trop);
            if (!result) {
                out << "dimension none\n";
                err << "no collection of at most " << trop.max_n << " cliques lacks a section\n";
                summary = {{"input", loaded.descriptor}, {"dimension", nullptr}};
                return;
            }
            auto unions = tropical_unions(*result);
            out << "dimension " << result->dimension << "\nwitnesses " << result->witnesses.size() << "\nunions "
                << unions.size() << "\n"
                << format_index_sets(index_lists(unions));
            err << (result->exhaustive ? "exhaustive" : "disjoint collections plus samples") << ", "
                << result->collections_checked << " collections checked, " << result->overlapping_witnesses
                << " overlapping witnesses\n";
            summary = {{"input", loaded.descriptor},
                       {"dimension", result->dimension},
                       {"witnesses", result->witnesses.size()},
                       {"exhaustive", result->exhaustive},
                       {"collections_checked", result->collections_checked},
                       {"unions", index_lists(unions)}};
        };
    });

    std::string partition_text;
    auto *colour = app.add_subcommand("colour", "Colouring compatible with a partition of the dimension");
    add_input_options(colour, in);
    colour->add_option("--partition", partition_text, "Comma-separated parts, e.g. 6,2")->required();
    colour->callback([&] {
        action = [&] {
            LoadedInput loaded = load_input(in);
            auto parts = parse_partition(partition_text);
            auto found = find_partition_colouring(loaded.config, parts);
            if (!found) {
                out << "none\n";
                err << "no colouring compatible with (" << partition_text << ")\n";
                summary = {{"input", loaded.descriptor}, {"partition", parts}, {"colouring", nullptr}};
                return;
            }
            for (std::size_t i = 0; i < found->values.size(); i++) {
                out << (i ? " " : "") << found->values[i];
            }
            out << "\n";
            err << "colouring compatible with (" << partition_text << ") found\n";
            summary = {{"input", loaded.descriptor}, {"partition", parts}, {"colouring", found->values}};
        };
    });

    std::string witness_path;
    std::string weights_path;
    EntropyOptions eopts;
    auto *entropy = app.add_subcommand("entropy", "Upper bound on the configuration entropy");
    add_input_options(entropy, in);
    entropy->add_option("--witness", witness_path, "Write the witnessing weight to this file");
    entropy->add_option("--weights", weights_path, "Report on a given weight file instead of searching");
    entropy->add_option("--starts", eopts.starts, "Random starts of the continuous search")->capture_default_str();
    entropy->add_option("--seed", eopts.seed, "Seed of the continuous search")->capture_default_str();
    entropy->callback([&] {
        action = [&] {
            LoadedInput loaded = load_input(in);
            EntropyReport report =
                weights_path.empty()
                    ? minimize_entropy(loaded.config, eopts)
                    : entropy_report(loaded.config,
                                     parse_weights(read_file(weights_path), loaded.config.size(), weights_path));
            out.precision(17);
            out << "equientropic " << yes_no(report.equientropic) << "\n";
            if (report.upper_bound) {
                out << "upper_bound " << *report.upper_bound << "\nstatistical_weight " << *report.statistical_weight
                    << "\n";
            }
            if (!witness_path.empty() && report.witness) {
                std::ofstream w(witness_path);
                w << format_weights(*report.witness);
            }
            err << "witness: " << report.witness_source << "\n";
            summary = {{"input", loaded.descriptor},
                       {"equientropic", report.equientropic},
                       {"upper_bound", report.upper_bound ? json(*report.upper_bound) : json(nullptr)},
                       {"witness_source", report.witness_source}};
        };
    });

    auto *pauli = app.add_subcommand("pauli", "Pauli words, parity tuples and parity proofs");
    pauli->require_subcommand(1);
    auto *lines = pauli->add_subcommand("lines", "Joint eigenrays of the eight commuting families");
    lines->callback([&] {
        action = [&] {
            std::vector<Ray> rays;
            for (const auto &line : saturated_lines()) {
                auto r = joint_eigenrays(line);
                rays.insert(rays.end(), r.begin(), r.end());
            }
            out << format_vectors(rays);
            err << saturated_lines().size() << " families, " << rays.size() << " rays\n";
            summary = {{"families", saturated_lines().size()}, {"rays", rays.size()}};
        };
    });
    std::size_t qubits = 3;
    std::size_t tuple_size = 7;
    auto *tuples = pauli->add_subcommand("tuples", "Commuting tuples with product +-identity");
    tuples->add_option("--qubits", qubits, "Number of qubits")->capture_default_str();
    tuples->add_option("--size", tuple_size, "Tuple length")->capture_default_str();
    tuples->callback([&] {
        action = [&] {
            if (qubits == 0 || qubits > 4) {
                throw std::invalid_argument("tuple enumeration supports 1 to 4 qubits");
            }
            auto found = enumerate_parity_tuples(qubits, tuple_size);
            for (const ParityTuple &t : found) {
                out << (t.sign < 0 ? "- " : "+ ") << join(t.words) << "\n";
            }
            err << found.size() << " tuples\n";
            summary = {{"qubits", qubits}, {"size", tuple_size}, {"count", found.size()}};
        };
    });
    auto *mine = pauli->add_subcommand("mine", "Parity proofs with a single positive 4-edge");
    mine->callback([&] {
        action = [&] {
            MiningResult r = mine_parity_proofs(saturated_words());
            for (const auto &profile : r.profiles) {
                for (std::size_t k = 0; k < profile.size(); k++) {
                    out << (k ? " " : "") << profile[k];
                }
                out << "\n";
            }
            err << r.negative_edges.size() << " negative and " << r.positive_edges.size() << " positive 4-edges, "
                << r.proofs.size() << " proofs, " << r.profiles.size() << " profiles\n";
            summary = {{"negative_edges", r.negative_edges.size()},
                       {"positive_edges", r.positive_edges.size()},
                       {"proofs", r.proofs.size()},
                       {"profiles", r.profiles.size()}};
        };
    });
    std::vector<std::string> words_text;
    auto *eig = pauli->add_subcommand("eigenrays", "Joint eigenrays of commuting words");
    eig->add_option("words", words_text, "Words such as XII IXI")->required();
    eig->callback([&] {
        action = [&] {
            std::vector<PauliWord> words;
            for (const auto &w : words_text) {
                words.push_back(PauliWord::parse(w));
            }
            auto rays = joint_eigenrays(words);
            out << format_vectors(rays);
            err << rays.size() << " rays\n";
            summary = {{"words", words_text}, {"rays", rays.size()}};
        };
    });

    auto *dataset = app.add_subcommand("dataset", "Built-in datasets");
    dataset->require_subcommand(1);
    std::string dataset_arg;
    bool as_indices = false;
    auto *exp = dataset->add_subcommand("export", "Print a dataset's vectors, or its index set with --indices");
    exp->add_option("name", dataset_arg, "Dataset name")->required();
    exp->add_flag("--indices", as_indices, "Index sets: N, T0, TROPICALS over M; KP36 over KP40");
    exp->callback([&] {
        action = [&] {
            auto name = parse_dataset_name(dataset_arg);
            if (!name) {
                throw std::invalid_argument("unknown dataset '" + dataset_arg + "'");
            }
            if (as_indices) {
                std::vector<std::vector<std::size_t>> sets;
                switch (*name) {
                    case DatasetName::N:
                        sets = {critical_36_indices()};
                        break;
                    case DatasetName::T0:
                        sets = {tropical_48_indices()};
                        break;
                    case DatasetName::TROPICALS:
                        sets = index_lists(tropical_subconfiguration_sets(saturated_64()));
                        break;
                    case DatasetName::KP36: {
                        Bitset keep = Bitset::prefix(40) - Bitset::from_indices(kernaghan_peres_excluded());
                        sets = {keep.indices()};
                        break;
                    }
                    default:
                        throw std::invalid_argument("dataset " + dataset_arg + " is not an index set");
                }
                out << format_index_sets(sets);
                err << sets.size() << " index set(s)\n";
                summary = {{"dataset", dataset_arg}, {"index_sets", sets}};
                return;
            }
            if (*name == DatasetName::TROPICALS) {
                throw std::invalid_argument("TROPICALS holds 32 configurations; export it with --indices");
            }
            Configuration c = builtin_one(*name);
            out << format_vectors(c.rays());
            err << dataset_arg << ": " << c.size() << " rays in dimension " << c.dim() << "\n";
            summary = {{"dataset", dataset_arg}, {"rays", c.size()}, {"dim", c.dim()}};
        };
    });
    auto *list = dataset->add_subcommand("list", "Names of the built-in datasets");
    list->callback([&] {
        action = [&] {
            for (DatasetName n : all_dataset_names()) {
                out << dataset_name(n) << "\n";
            }
            summary = {{"datasets", all_dataset_names().size()}};
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument &e) {
        err << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!manifest_path.empty()) {
        json manifest = {{"command", args}, {"jobs", jobs}, {"elapsed_seconds", elapsed}, {"result", summary}};
        std::ofstream m(manifest_path);
        if (!m) {
            err << "error: cannot write manifest " << manifest_path << "\n";
            return kExitFailure;
        }
        m << manifest.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace ksconf
