#pragma once

// Command-line front end. run_cli is the whole program minus process exit, so
// tests can drive it in-process.
//
//   capslep shannon|spectrum|solve|eval|flm|error-analysis|verify [flags]
//
// Exit codes: 0 ok, 1 verification failure, 2 configuration error,
// 3 computation error.

#include <iosfwd>
#include <string>
#include <vector>

namespace capslep::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kComputeError = 3 };

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  [[nodiscard]] std::vector<double> values() const;
};

/// "a:b:count"; throws DomainError when malformed or count < 1.
GridSpec parse_grid(const std::string& text);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace capslep::cli
