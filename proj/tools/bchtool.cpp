/* Copyright 2026 The bchcoeff Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// bchtool: coefficient queries, series expansion, numerical verification,
// table inspection and the scaling benchmark.
//
// Exit status: 0 success, 1 usage or input error, 2 computation error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bch/bch.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;

constexpr std::size_t kNaiveWarnOrder = 20;
constexpr std::size_t kNaiveBenchCap = 16;

struct CoeffArgs {
    std::string word;
    bool naive = false;
};

struct ExpandArgs {
    std::size_t order = 0;
    bool prune_zero_coeff = false;
    bool prune_zero_monomial = false;
    std::string format = "json";
    std::string output;
    unsigned threads = 0;
};

struct VerifyArgs {
    std::size_t order = 0;
    std::size_t dim = 0;
    double epsilon = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::string format = "json";
};

struct TablesArgs {
    std::size_t max_order = 0;
    bool dump = false;
};

struct BenchArgs {
    std::size_t min_order = 0;
    std::size_t max_order = 0;
    std::string mode = "block";
    unsigned threads = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int run_coeff(const CoeffArgs& args) {
    const bch::Word word = bch::parse_word(args.word);
    if (args.naive) {
        if (word.size() > kNaiveWarnOrder) {
            std::cerr << "warning: naive coefficient of a word of order " << word.size()
                      << " enumerates about 3.4^N compositions\n";
        }
        std::cout << bch::coefficient_naive(word) << '\n';
        return 0;
    }
    const auto tables = bch::precompute_tables(word.size());
    std::cout << bch::coefficient_block(word, tables) << '\n';
    return 0;
}

int run_expand(const ExpandArgs& args) {
    const auto format = bch::parse_series_format(args.format);
    if (!format) {
        throw UsageError("unknown format '" + args.format + "'");
    }
    if (args.order == 0) {
        throw bch::Error(bch::ErrorKind::InvalidOrder, "--order must be at least 1");
    }
    const auto tables = bch::precompute_tables(args.order);
    const bch::ExpandOptions options{args.prune_zero_coeff, args.prune_zero_monomial, args.threads};
    const std::string text = bch::serialize(bch::expand(args.order, options, tables), *format);
    if (args.output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(args.output, std::ios::binary);
    if (!file || !(file << text) || !file.flush()) {
        throw std::runtime_error("cannot write " + args.output);
    }
    return 0;
}

int run_verify(const VerifyArgs& args) {
    if (args.order == 0) {
        throw bch::Error(bch::ErrorKind::InvalidOrder, "--order must be at least 1");
    }
    const auto tables = bch::precompute_tables(args.order);
    const auto report = bch::verify_convergence(args.order, args.dim, args.epsilon, args.samples, args.seed, tables);
    if (args.format == "json") {
        std::cout << bch::to_json(report);
        return 0;
    }
    std::cout << "order: " << report.order << '\n'
              << "dim: " << report.dim << '\n'
              << "epsilon: " << report.epsilon << '\n'
              << "samples: " << report.samples << '\n'
              << "seed: " << report.seed << '\n'
              << "generator: " << report.generator << '\n'
              << "norm: " << report.norm << '\n';
    std::cout << std::setprecision(17);
    for (std::size_t k = 0; k < report.residuals.size(); ++k) {
        std::cout << "residual[" << k << "]: " << report.residuals[k] << '\n';
    }
    std::cout << "max_residual: " << report.max_residual << '\n';
    return 0;
}

int run_tables(const TablesArgs& args) {
    const auto tables = bch::precompute_tables(args.max_order);
    if (!args.dump) {
        const std::size_t n = args.max_order;
        std::cout << "max_order " << n << ": " << n * (n + 1) / 2 << " f' entries, "
                  << "g' entries for every block with u + v <= " << n << '\n';
        return 0;
    }
    for (std::size_t u = 1; u <= tables.max_order(); ++u) {
        for (std::size_t n = 1; n <= u; ++n) {
            std::cout << (n > 1 ? "\t" : "") << bch::to_decimal(tables.f(u, n));
        }
        std::cout << '\n';
    }
    return 0;
}

int run_bench(const BenchArgs& args) {
    if (args.min_order < 1 || args.min_order > args.max_order) {
        throw UsageError("bench needs 1 <= --min-order <= --max-order");
    }
    const bool naive = args.mode == "naive";
    if (naive && args.max_order > kNaiveBenchCap) {
        throw UsageError("naive mode is capped at order " + std::to_string(kNaiveBenchCap));
    }
    const auto tables = bch::precompute_tables(args.max_order);
    const bch::ExpandOptions options{false, false, args.threads};
    std::cout << "order,mode,word_count,wall_time_seconds\n";
    for (std::size_t order = args.min_order; order <= args.max_order; ++order) {
        const auto start = std::chrono::steady_clock::now();
        const bch::BchSeries series =
            naive ? bch::expand_with(order, options, [](const bch::Word& w) { return bch::coefficient_naive(w); })
                  : bch::expand(order, options, tables);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::ostringstream seconds;
        seconds << std::setprecision(9) << elapsed.count();
        std::cout << order << ',' << args.mode << ',' << series.terms.size() << ',' << seconds.str() << '\n'
                  << std::flush;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Baker-Campbell-Hausdorff coefficients and truncated series", "bchtool"};
    app.set_version_flag("--version", std::string("bchtool ") + BCH_VERSION);
    app.require_subcommand(1);

    CoeffArgs coeff_args;
    auto* coeff = app.add_subcommand("coeff", "Print the coefficient M(w) of one word as num/den");
    coeff->add_option("--word", coeff_args.word, "Word over {X, Y}, e.g. XXY")->required();
    coeff->add_flag("--naive", coeff_args.naive, "Use brute-force composition enumeration");

    ExpandArgs expand_args;
    auto* expand = app.add_subcommand("expand", "Print the truncated series up to --order");
    expand->add_option("--order", expand_args.order, "Truncation order N")->required();
    expand->add_flag("--prune-zero-coeff", expand_args.prune_zero_coeff, "Drop terms with zero coefficient");
    expand->add_flag("--prune-zero-monomial", expand_args.prune_zero_monomial,
                     "Drop words whose last two letters agree");
    expand->add_option("--format", expand_args.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    expand->add_option("--output", expand_args.output, "Write to FILE instead of standard output");
    expand->add_option("--threads", expand_args.threads, "Worker threads (0 = all cores)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Compare the truncated series with log(exp X exp Y) on random matrices");
    verify->add_option("--order", verify_args.order, "Truncation order N")->required();
    verify->add_option("--dim", verify_args.dim, "Matrix dimension")->required();
    verify->add_option("--epsilon", verify_args.epsilon, "Entry scale, at most 0.1")->required();
    verify->add_option("--samples", verify_args.samples, "Number of (X, Y) pairs")->required();
    verify->add_option("--seed", verify_args.seed, "PRNG seed")->required();
    verify->add_option("--format", verify_args.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    TablesArgs tables_args;
    auto* tables = app.add_subcommand("tables", "Build the f' and g' tables");
    tables->add_option("--max-order", tables_args.max_order, "Largest order covered")->required();
    tables->add_flag("--dump", tables_args.dump, "Print f' rows, one u per line, tab-separated");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time full series expansion for a range of orders (CSV)");
    bench->add_option("--min-order", bench_args.min_order, "First order")->required();
    bench->add_option("--max-order", bench_args.max_order, "Last order")->required();
    bench->add_option("--mode", bench_args.mode, "block or naive")->check(CLI::IsMember({"block", "naive"}));
    bench->add_option("--threads", bench_args.threads, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        const CLI::App* context = &app;
        for (const CLI::App* sub : app.get_subcommands()) {
            context = sub;
        }
        std::cerr << context->help();
        return kExitUsage;
    }

    try {
        if (coeff->parsed()) return run_coeff(coeff_args);
        if (expand->parsed()) return run_expand(expand_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (tables->parsed()) return run_tables(tables_args);
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const bch::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.is_input_error() ? kExitUsage : kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitUsage;
}
