#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace greycast::cli {

/// Environment variable naming a directory for report files.
inline constexpr const char *kOutputDirEnv = "GREYCAST_OUTPUT_DIR";

enum ExitCode : int {
	kOk = 0,
	kUsage = 2,
	kDataError = 3,
	kModelError = 4,
	kIoError = 5,
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out` unless redirected to a file; failures are written to `err` as a JSON
/// error object.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace greycast::cli
