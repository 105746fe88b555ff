#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cuboid/cuboid_core.hpp"

namespace cuboid::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIncomplete = 3;

/// "a,b,c,d,e,f[,L]" with each entry "n" or "n/d". Throws DomainError.
CuboidTuple parse_tuple_literal(std::string_view text);
std::string format_tuple_literal(const CuboidTuple& t);

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuboid::cli
