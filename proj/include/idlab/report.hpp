#ifndef IDLAB_REPORT_HPP
#define IDLAB_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idlab/verify.hpp"

namespace idlab {

enum class Format { text, json, csv };

Format parse_format(const std::string& name); // throws invalid_argument

/* Per-level rank table of the chain. All serializations are
 * byte-deterministic: canonical ordering everywhere, no timestamps.
 *
 * JSON schema (stable):
 *   {"n":int,"levels":[{"i":int,"h":int,"r":int,"by_k":{"<k>":int,...},
 *     "total":int,"predicted_by_k":object|null,"predicted_total":int|null,
 *     "oracle_total":int|null,"match_oracle":bool|null,
 *     "elements":{"<k>":[string,...]}|null}]}
 *
 * CSV columns: n,i,h,r,k,count,predicted,oracle,match
 */
struct ChainReport {
    struct Level {
        i64 i = 0;
        i64 h = 0;
        i64 r = 0;
        std::map<int, i64> by_k;
        i64 total = 0;
        std::optional<std::map<int, i64>> predicted_by_k;
        std::optional<i64> predicted_total;
        std::optional<i64> oracle_total;
        std::optional<bool> match_oracle;
        std::optional<std::map<int, std::vector<std::string>>> elements;
    };

    int n = 0;
    std::vector<Level> levels;

    bool any_oracle_mismatch() const;
    // a predicted count that disagrees with the computed layer above the
    // threshold is a verification failure, never a cosmetic difference
    bool any_prediction_mismatch() const;
};

std::string render_chain(const ChainReport& rep, Format fmt);

// round-trip helpers for the stable JSON schema
std::string chain_to_json(const ChainReport& rep);
ChainReport chain_from_json(const std::string& text);

struct SeqReport {
    i64 max = 0;
    CountTriple counts;
    std::optional<std::string> bfile_path;
    std::optional<i64> first_diff; // only when a bfile was compared
    i64 compared = 0;

    bool bfile_match() const { return bfile_path && !first_diff; }
};

std::string render_seq(const SeqReport& rep, Format fmt);

struct LevelsReport {
    int n = 0;
    i64 i = 0;
    i64 h = 0;
    i64 r = 0;
    std::map<int, std::vector<std::string>> elements;
};

std::string render_levels(const LevelsReport& rep, Format fmt);

std::string render_verify(const VerifyReport& rep, Format fmt);

} // namespace idlab

#endif
