#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace sigma8 {

/// Exit codes of `run`.
enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitInvalidInput = 2 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Deterministic seeded pass over every checker; returns true if all pass.
bool selftest(std::uint64_t seed, int count, std::ostream& out);

}  // namespace sigma8
