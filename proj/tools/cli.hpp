#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace mextremal::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (args excludes the program name).
auto run(std::span<const std::string> args, std::ostream & out, std::ostream & err) -> int;

}
