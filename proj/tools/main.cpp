#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "idlab/commands.hpp"

using namespace idlab;
using namespace idlab::cli;

// exit codes: 0 success, 1 usage/parse error, 2 verification mismatch, 3 I/O error

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the integral Lie ring of partitions: "
                 "counting sequences, idealizer-chain layers, and a brute-force "
                 "verification suite"};
    app.require_subcommand(1);
    app.fallthrough(); // --format/--out may follow the subcommand

    std::string format = "text";
    std::optional<std::string> out_path;
    app.add_option("--format", format, "Output format: text|json|csv")
        ->capture_default_str();
    app.add_option("--out", out_path, "Write output to a file instead of stdout");

    // seq
    auto* seq = app.add_subcommand("seq", "Partition counts a, with partial sums b and c");
    i64 seq_max = 14;
    std::optional<std::string> seq_bfile;
    seq->add_option("--max", seq_max, "Largest index to print")->capture_default_str();
    seq->add_option("--bfile", seq_bfile, "OEIS b-file to diff the a-sequence against");

    // levels
    auto* levels = app.add_subcommand("levels", "List one chain layer by direction");
    int lv_n = 5;
    i64 lv_i = 0;
    levels->add_option("--n", lv_n, "Ring rank (>= 3)")->capture_default_str();
    levels->add_option("--i", lv_i, "Layer index (>= 0)")->capture_default_str();

    // chain
    auto* chain = app.add_subcommand("chain", "Rank table of the idealizer chain");
    ChainOptions chain_opts;
    std::string method = "analytic";
    chain->add_option("--n", chain_opts.n, "Ring rank (>= 3)")->capture_default_str();
    chain->add_option("--i-max", chain_opts.i_max, "Last level to compute")->capture_default_str();
    chain->add_option("--method", method, "analytic|oracle|both")->capture_default_str();
    chain->add_option("--margin", chain_opts.margin, "Extra weight for oracle candidates")
        ->capture_default_str();
    chain->add_flag("--elements", chain_opts.elements, "Include element listings");

    // bracket
    auto* bracket = app.add_subcommand("bracket", "Bracket of two elements");
    int br_n = 5;
    std::string br_left, br_right;
    bracket->add_option("--n", br_n, "Ring rank (>= 3)")->capture_default_str();
    bracket->add_option("left", br_left, "Left element")->required();
    bracket->add_option("right", br_right, "Right element")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run the full verification suite");
    VerifyOptions verify_opts;
    verify->add_option("--n", verify_opts.n, "Ring rank (>= 3)")->capture_default_str();
    verify->add_option("--i-max", verify_opts.i_max, "Chain depth for the suite")
        ->capture_default_str();
    verify->add_option("--seed", verify_opts.seed, "RNG seed for randomized checks")
        ->capture_default_str();
    verify->add_option("--trials", verify_opts.trials, "Trials per randomized check")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const Format fmt = parse_format(format);
        std::ostream* sink = &std::cout;
        std::ofstream file;
        if (out_path) {
            file.open(*out_path, std::ios::binary);
            if (!file) {
                std::cerr << "cannot open output file " << *out_path << '\n';
                return 3;
            }
            sink = &file;
        }
        int code = 1;
        if (*seq)
            code = cmd_seq(seq_max, seq_bfile, fmt, *sink, std::cerr);
        else if (*levels)
            code = cmd_levels(lv_n, lv_i, fmt, *sink, std::cerr);
        else if (*chain) {
            chain_opts.method = parse_method(method);
            code = cmd_chain(chain_opts, fmt, *sink, std::cerr);
        } else if (*bracket)
            code = cmd_bracket(br_n, br_left, br_right, *sink, std::cerr);
        else if (*verify)
            code = cmd_verify(verify_opts, fmt, *sink, std::cerr);
        if (out_path) {
            file.flush();
            if (!file) {
                std::cerr << "write failed for " << *out_path << '\n';
                return 3;
            }
        }
        return code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
