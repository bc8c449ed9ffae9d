#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "regprod/types.hpp"

namespace regprod::cli {

// Exit codes: 0 success / all-pass, 1 verification failure, 2 usage error,
// 3 numerical non-convergence.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Accepts "a+bi", "(a,b)", "a", "bi", "i"; throws std::invalid_argument.
Cplx parse_complex(const std::string& text);

// Splits a comma-separated list, ignoring commas inside parentheses.
std::vector<std::string> split_list(const std::string& text);

}  // namespace regprod::cli
