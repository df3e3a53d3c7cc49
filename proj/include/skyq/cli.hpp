#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skyq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDataError = 3,
  kContainmentViolation = 4,
};

/// Entry point of the `skyq` tool. `args` excludes the program name.
///
///   skyq query <operator> --data FILE [options]
///   skyq compare --data FILE [options]
///   skyq generate --dist NAME --n N --d D --seed S [--out FILE]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skyq::cli
