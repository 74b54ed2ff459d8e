#pragma once

#include <iosfwd>
#include <string>

#include "rdg/verdict.hpp"

namespace rdg {

struct RunConfig {
    std::string command;
    std::string input;
    std::string output; ///< empty writes the artifact to `out`
    std::string svg;    ///< dualize only; empty skips rendering
    Mode mode = Mode::Effective;
    bool legacy = false;
    int grid = 0;
    int census_n = 0;
};

std::string read_file(const std::string &path);

/// Exit status: 0 accepted, 1 rejected, 2 input error (one line on `err`).
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace rdg
