#ifndef IDLAB_BFILE_HPP
#define IDLAB_BFILE_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "idlab/checked.hpp"

namespace idlab {

struct BFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reads an OEIS b-file: one "index value" pair per line, '#' comment lines
// and blank lines ignored. A malformed line or a duplicate index throws
// BFileError naming the line number.
std::map<i64, i64> load_bfile(const std::string& path);

} // namespace idlab

#endif
