#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kashaev::cli {

/// Runs the command line (without the program name). Returns the exit code:
/// 0 on success, 1 for invalid input, 2 for an internal consistency alarm.
/// Errors go to `err` as {"error": ..., "kind": ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::size_t random_count = 50;
  std::uint64_t seed = 1;
  double tol_rel = 1e-9;
};

struct VerifyRow {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Golden, property and oracle checks on the built-in corpus and on random
/// braid closures.
std::vector<VerifyRow> run_verify(const VerifyOptions& opts);

}  // namespace kashaev::cli
