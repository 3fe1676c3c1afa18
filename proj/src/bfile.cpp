#include "idlab/bfile.hpp"

#include <fstream>
#include <sstream>

namespace idlab {

std::map<i64, i64> load_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw BFileError(path + ": cannot open file");
    std::map<i64, i64> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ss(line);
        i64 index = 0, value = 0;
        if (!(ss >> index >> value))
            throw BFileError(path + ":" + std::to_string(lineno) +
                             ": malformed line (expected \"index value\")");
        std::string rest;
        if (ss >> rest)
            throw BFileError(path + ":" + std::to_string(lineno) +
                             ": trailing content after value");
        if (!out.emplace(index, value).second)
            throw BFileError(path + ":" + std::to_string(lineno) +
                             ": duplicate index " + std::to_string(index));
    }
    return out;
}

} // namespace idlab
