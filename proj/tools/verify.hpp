#pragma once

#include "extweyl/lattice.hpp"
#include "extweyl/root_system.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace extweyl::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  bool ok = true;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int cap_rank = 6;
  std::size_t cases = 10000;
};

bool known_suite(const std::string& suite);
// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& opt);

// Reference invariant factors of the coinvariants for (left, right), as a describe() string.
std::string expected_coinvariants(const RootSystemType& t, Side left, Side right);

}  // namespace extweyl::cli
