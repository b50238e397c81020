#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torolog::cli {

struct VerbInfo {
  std::string path;                     ///< e.g. "monoid saturate"
  std::string summary;
  std::vector<std::string> operations;  ///< library operations the verb exercises
};

const std::vector<VerbInfo>& verbs();

/// Runs one command. Exit codes: 0 success, 1 validation failure,
/// 2 malformed input or unknown verb.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace torolog::cli
