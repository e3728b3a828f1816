#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toughwalks::cli {

enum ExitCode : int {
  kWitness = 0,      // witness produced and re-verified
  kCertificate = 1,  // sound negative answer
  kInputError = 2,   // parse or precondition failure
  kBudget = 3,       // an exponential search ran out of budget
};

/// Runs one command. `args` excludes the program name. JSON goes to `out`,
/// human-readable logs to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace toughwalks::cli
