#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace urdd::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, io_error = 3 };

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma-separated list of angles, e.g. "0,1.5,3". Throws DomainError on
/// malformed input.
std::vector<double> parse_phase_list(const std::string& text);

/// count angles uniform in [0, 2 pi), reproducible from the seed on every
/// platform.
std::vector<double> sample_angles(std::uint64_t seed, int count);

}  // namespace urdd::cli
