#ifndef IDLAB_COMMANDS_HPP
#define IDLAB_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "idlab/report.hpp"

namespace idlab::cli {

/* Subcommand bodies, separated from flag parsing so they can be driven
 * directly in tests. Each returns the process exit code:
 *   0 success, 1 usage/parse error, 2 verification mismatch, 3 I/O error.
 * Human/machine output goes to `out`, diagnostics to `err`.
 */

int cmd_seq(i64 max, const std::optional<std::string>& bfile, Format fmt,
            std::ostream& out, std::ostream& err);

int cmd_levels(int n, i64 i, Format fmt, std::ostream& out, std::ostream& err);

enum class ChainMethod { analytic, oracle, both };

ChainMethod parse_method(const std::string& name); // throws invalid_argument

struct ChainOptions {
    int n = 5;
    i64 i_max = 8;
    ChainMethod method = ChainMethod::analytic;
    i64 margin = 0;
    bool elements = false;
};

int cmd_chain(const ChainOptions& opts, Format fmt, std::ostream& out, std::ostream& err);

// builds the report without rendering (exposed for tests)
ChainReport build_chain_report(const ChainOptions& opts);

int cmd_bracket(int n, const std::string& left, const std::string& right,
                std::ostream& out, std::ostream& err);

int cmd_verify(const VerifyOptions& opts, Format fmt, std::ostream& out, std::ostream& err);

} // namespace idlab::cli

#endif
