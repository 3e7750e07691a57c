#pragma once

#include <sstream>
#include <string>

#include "gencluster/patterns.hpp"
#include "support/classical_oracle.hpp"
#include "support/generators.hpp"

namespace gencluster::testing {

/// Runs `word` on classical data (d = 1, z = (1,1)) through the engine and the
/// oracle, comparing B, x (at a random rational point), tropical y, and F (at a
/// random u), c and g of the principal run after every step. Empty on agreement.
inline std::string compare_with_classical(const SeedData& data, const Word& word, Rng& rng) {
  const auto n = data.rank;
  const auto m = data.semifield->rank();
  std::vector<mpq_class> x0, v, u;
  for (std::size_t i = 0; i < n; ++i) x0.push_back(random_rational(rng));
  for (std::size_t j = 0; j < m; ++j) v.push_back(random_rational(rng));
  for (std::size_t i = 0; i < n; ++i) u.push_back(random_rational(rng));

  std::vector<ClassicalOracle::Vec> y;
  for (const auto& yi : data.y) y.push_back(yi.exponents());
  ClassicalOracle oracle(n, data.b, y, x0, v, u);

  std::vector<mpq_class> general_point = x0;
  general_point.insert(general_point.end(), v.begin(), v.end());
  std::vector<mpq_class> f_point(n, mpq_class(1));
  f_point.insert(f_point.end(), u.begin(), u.end());
  f_point.resize(2 * n + m, mpq_class(1));

  Seed general = Seed::initial(data);
  Seed principal = principal_seed(data);
  const ExchangeMatrix b0 = principal.b();

  for (std::size_t t = 0; t <= word.size(); ++t) {
    if (t > 0) {
      const auto k = word[t - 1];
      general = mutate(general, k);
      principal = mutate(principal, k);
      oracle.mutate(k);
    }
    std::ostringstream where;
    where << "after [" << word_to_string(std::span(word).first(t)) << "]: ";
    if (general.b().entries() != oracle.b_entries()) return where.str() + "B differs";
    if (principal.b().entries() != oracle.b_entries()) return where.str() + "principal B differs";
    for (std::size_t i = 0; i < n; ++i) {
      const auto idx = std::to_string(i + 1);
      if (eval_rational(general.x()[i], general_point) != oracle.x(i)) return where.str() + "x" + idx + " differs";
      if (general.y()[i].exponents() != oracle.y(i)) return where.str() + "y" + idx + " differs";
      if (f_polynomial(principal, i).evaluate(f_point) != oracle.f(i)) return where.str() + "F" + idx + " differs";
      if (c_vector(principal, i) != oracle.c_vector(i)) return where.str() + "c" + idx + " differs";
      if (g_vector(principal, b0, i) != oracle.g_vector(i)) return where.str() + "g" + idx + " differs";
    }
  }
  return {};
}

}  // namespace gencluster::testing
