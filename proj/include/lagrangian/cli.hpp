#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

namespace lagrangian::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerdictFailed = 2;

/// Runs one command line; `args` excludes the program name. Subcommands:
/// compute, clique, compress, verify, generate, sweep.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Seed used when no --seed is given: LAGRANGIAN_LAB_SEED if set, else the built-in default.
std::uint64_t default_seed();

}  // namespace lagrangian::cli
