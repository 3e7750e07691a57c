#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gencluster/patterns.hpp"

namespace gencluster {

enum class Suite {
  involution,  ///< μ_k^{ε'} μ_k^{ε} = id for all four sign pairs
  epsilon,     ///< μ_k^{+} = μ_k^{-}
  laurent,     ///< every cluster variable is a Laurent polynomial
  separation,  ///< x and y separation formulas against principal runs
  coherence,   ///< F has constant term 1, c-vectors are sign-coherent, g is defined
};

std::string to_string(Suite suite);
std::optional<Suite> parse_suite(const std::string& name);
const std::vector<Suite>& all_suites();

/// Default word-length budget per suite.
std::size_t default_budget(Suite suite);

struct CheckFailure {
  Word word;
  std::size_t index = 0;  // 0-based direction or variable
  std::string witness;
};

struct VerifyReport {
  Suite suite = Suite::involution;
  std::size_t budget = 0;
  std::size_t seeds = 0;
  std::size_t checks = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
  /// key=value lines followed by one "failure ..." line per failure (at most 20).
  std::string render() const;
};

struct VerifyOptions {
  std::size_t budget = 0;  ///< 0 selects default_budget(suite)
  MutationOptions mutation;
  /// ŷ convention used inside the separation formulas (row is a negative control).
  HatYConvention separation_formula = HatYConvention::column;
};

VerifyReport run_suite(Suite suite, const SeedData& data, const VerifyOptions& options = {});

}  // namespace gencluster
