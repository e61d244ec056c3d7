#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kring/linalg.hpp"

namespace kring {

// Entry point of the command-line tool, separated from main() for testing.
// Exit codes: 0 success, 1 verification failure, 2 usage/input/capacity
// errors, 3 internal errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Matrix dump format: one row per line, entries as integers or p/q.
std::string format_qmat(const QMat& m);
QMat parse_qmat(const std::string& text);

}  // namespace kring
