// Command-line front end. run() is the whole program (the binary's main is
// a one-liner) and is callable in-process, which is how the tests drive it.
// Exit codes: 0 ok, 1 selftest failure, 2 bad parameters, 3 I/O error.
#pragma once

#include <string_view>

#include "nda/bijection.hpp"

namespace nda::cli {

int run(int argc, const char* const* argv);

// Infix evaluator behind the `ops` subcommand. Operators (+) (-) (*) (/)
// are the generalized operations; plain numeric literals are upper values;
// `0p` and `one` denote 0' and 1'; a leading `-` negates the raw value of
// its operand; parentheses group. ParseError carries the 1-based column.
UpperReal eval_expression(const Bijection& ctx, std::string_view text);

}  // namespace nda::cli
