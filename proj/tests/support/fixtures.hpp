#pragma once

#include <string>
#include <vector>

#include "gencluster/seed.hpp"
#include "gencluster/seed_io.hpp"

#ifndef GENCLUSTER_DATA_DIR
#error "GENCLUSTER_DATA_DIR must point at data/seeds"
#endif

namespace gencluster::testing {

inline std::string seed_path(const std::string& name) { return std::string(GENCLUSTER_DATA_DIR) + "/" + name + ".json"; }

inline const std::vector<std::string>& bundled_seeds() {
  static const std::vector<std::string> names{"a2", "rank2_generalized", "rank2_tropical", "rank3_generalized",
                                              "zero_interior"};
  return names;
}

/// Trivial-semifield data; z given by integer multiplicities (0 = zero element).
inline SeedData trivial_data(std::size_t n, std::vector<std::int64_t> b, std::vector<std::int64_t> d,
                             const std::vector<std::vector<long>>& z, SeedMode mode = SeedMode::strict()) {
  SeedData data;
  data.semifield = SemifieldContext::trivial();
  data.rank = n;
  data.b = std::move(b);
  data.d = std::move(d);
  data.mode = mode;
  const auto one = SemifieldElement::identity(data.semifield);
  for (const auto& zi : z) {
    std::vector<NonNegCombination> row;
    for (long m : zi) row.push_back(m == 0 ? NonNegCombination::zero(data.semifield) : NonNegCombination::term(one, m));
    data.z.push_back(std::move(row));
  }
  data.y.assign(n, one);
  return data;
}

/// B = [[0,1],[-1,0]], d = (2,1), z_1 = (1, 2, 1), z_2 = (1, 1), trivial coefficients.
inline SeedData worked_example() { return trivial_data(2, {0, 1, -1, 0}, {2, 1}, {{1, 2, 1}, {1, 1}}); }

inline SeedData a2() { return trivial_data(2, {0, 1, -1, 0}, {1, 1}, {{1, 1}, {1, 1}}); }

}  // namespace gencluster::testing
