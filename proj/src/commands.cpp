#include "idlab/commands.hpp"

#include <ostream>

#include "idlab/bfile.hpp"
#include "idlab/element_io.hpp"

namespace idlab::cli {

int cmd_seq(i64 max, const std::optional<std::string>& bfile, Format fmt,
            std::ostream& out, std::ostream& err) {
    if (max < 0) {
        err << "seq: --max must be >= 0\n";
        return 1;
    }
    SeqReport rep;
    rep.max = max;
    rep.counts = partition_counts(static_cast<int>(max));
    if (bfile) {
        rep.bfile_path = *bfile;
        std::map<i64, i64> snapshot;
        try {
            snapshot = load_bfile(*bfile);
        } catch (const BFileError& e) {
            err << e.what() << '\n';
            return 3;
        }
        for (i64 i = 0; i <= max; ++i) {
            auto it = snapshot.find(i);
            if (it == snapshot.end())
                break; // compare only the indices the snapshot provides
            ++rep.compared;
            if (it->second != rep.counts.a[static_cast<size_t>(i)]) {
                rep.first_diff = i;
                break;
            }
        }
    }
    out << render_seq(rep, fmt);
    return rep.bfile_path && !rep.bfile_match() ? 2 : 0;
}

int cmd_levels(int n, i64 i, Format fmt, std::ostream& out, std::ostream& err) {
    if (n < 3 || i < 0) {
        err << "levels: requires --n >= 3 and --i >= 0\n";
        return 1;
    }
    const RingContext ctx(n);
    const LevelIndex li = decompose(n, i);
    LevelsReport rep{n, i, li.h, li.r, {}};
    for (const auto& [k, elems] : enumerate_layer(ctx, i).by_direction) {
        std::vector<std::string>& printed = rep.elements[k];
        for (const BasisElement& e : elems)
            printed.push_back(print_basis_element(e));
    }
    out << render_levels(rep, fmt);
    (void)err;
    return 0;
}

ChainMethod parse_method(const std::string& name) {
    if (name == "analytic")
        return ChainMethod::analytic;
    if (name == "oracle")
        return ChainMethod::oracle;
    if (name == "both")
        return ChainMethod::both;
    throw std::invalid_argument("unknown method '" + name +
                                "' (expected analytic|oracle|both)");
}

ChainReport build_chain_report(const ChainOptions& opts) {
    const RingContext ctx(opts.n);
    ChainReport rep;
    rep.n = opts.n;
    const i64 threshold = periodicity_threshold(opts.n);

    std::optional<OracleChain> oracle;
    if (opts.method != ChainMethod::analytic) {
        OracleConfig cfg;
        cfg.weight_cap_margin = opts.margin;
        oracle = oracle_chain(ctx, opts.i_max, cfg);
    }

    for (i64 i = 0; i <= opts.i_max; ++i) {
        const LevelIndex li = decompose(opts.n, i);
        ChainReport::Level level;
        level.i = i;
        level.h = li.h;
        level.r = li.r;

        const LayerSet analytic = enumerate_layer(ctx, i);
        std::map<int, std::vector<BasisElement>> shown;
        if (opts.method == ChainMethod::oracle) {
            // layer = S_i \ S_{i-1}, split by direction
            for (const BasisElement& e : oracle->at(i))
                if (!oracle->at(i - 1).count(e))
                    shown[e.direction].push_back(e);
        } else {
            shown = analytic.by_direction;
        }
        for (const auto& [k, elems] : shown) {
            level.by_k[k] = static_cast<i64>(elems.size());
            level.total += static_cast<i64>(elems.size());
        }
        if (i > threshold) {
            PredictedSizes pred = predicted_sizes(opts.n, i);
            level.predicted_by_k = std::move(pred.by_direction);
            level.predicted_total = pred.total;
        }
        if (opts.method == ChainMethod::both) {
            std::set<BasisElement> oracle_layer;
            for (const BasisElement& e : oracle->at(i))
                if (!oracle->at(i - 1).count(e))
                    oracle_layer.insert(e);
            level.oracle_total = static_cast<i64>(oracle_layer.size());
            level.match_oracle = oracle_layer == analytic.as_set();
        } else if (opts.method == ChainMethod::oracle) {
            level.oracle_total = level.total;
        }
        if (opts.elements) {
            std::map<int, std::vector<std::string>> printed;
            for (const auto& [k, elems] : shown)
                for (const BasisElement& e : elems)
                    printed[k].push_back(print_basis_element(e));
            level.elements = std::move(printed);
        }
        rep.levels.push_back(std::move(level));
    }
    return rep;
}

int cmd_chain(const ChainOptions& opts, Format fmt, std::ostream& out, std::ostream& err) {
    if (opts.n < 3 || opts.i_max < 0 || opts.margin < 0) {
        err << "chain: requires --n >= 3, --i-max >= 0, --margin >= 0\n";
        return 1;
    }
    const ChainReport rep = build_chain_report(opts);
    out << render_chain(rep, fmt);
    if (rep.any_oracle_mismatch()) {
        err << "chain: oracle and analytic layers differ\n";
        return 2;
    }
    if (rep.any_prediction_mismatch()) {
        err << "chain: layer counts disagree with the predicted sizes\n";
        return 2;
    }
    return 0;
}

int cmd_bracket(int n, const std::string& left, const std::string& right,
                std::ostream& out, std::ostream& err) {
    if (n < 3) {
        err << "bracket: requires --n >= 3\n";
        return 1;
    }
    const RingContext ctx(n);
    try {
        RingElement x = parse_element(ctx, left);
        RingElement y = parse_element(ctx, right);
        out << print_element(bracket(ctx, x, y)) << '\n';
    } catch (const ParseError& e) {
        err << "bracket: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int cmd_verify(const VerifyOptions& opts, Format fmt, std::ostream& out, std::ostream& err) {
    if (opts.n < 3 || opts.i_max < 0 || opts.trials < 1) {
        err << "verify: requires --n >= 3, --i-max >= 0, --trials >= 1\n";
        return 1;
    }
    const VerifyReport rep = run_verify(opts);
    out << render_verify(rep, fmt);
    if (!rep.all_pass()) {
        i64 failed = 0;
        for (const CheckResult& c : rep.checks)
            failed += !c.pass;
        err << "verify: " << failed << " check(s) failed\n";
        return 2;
    }
    return 0;
}

} // namespace idlab::cli
