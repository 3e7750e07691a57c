#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gencluster/seed.hpp"

namespace gencluster {

using Word = std::vector<std::size_t>;

/// A mutation word together with every intermediate seed: seeds[t] is the seed
/// after the first t letters, seeds[0] the initial one.
struct Run {
  Word word;
  std::vector<Seed> seeds;
};

Run run_word(const Seed& initial, std::span<const std::size_t> word, const MutationOptions& options = {});

/// The principal-coefficient seed attached to the data: P = Trop(u_1..u_n) extended
/// by the data's own generators (which carry z), y_i = u_i. The extra generators are
/// marked as data generators, so z only enters the x-mutation.
Seed principal_seed(const SeedData& data);
Run run_principal(const SeedData& data, std::span<const std::size_t> word, const MutationOptions& options = {});

/// x_i of a principal seed with all cluster variables set to 1. Throws NotPolynomial
/// unless the result is a polynomial in u_1..u_n with integer coefficients.
LaurentPolynomial f_polynomial(const Seed& principal, std::size_t i);
LaurentPolynomial f_polynomial(const Run& principal, std::size_t t, std::size_t i);

/// F|_P(y, z̃): each monomial u^a·(data monomial) becomes ∏ y_j^{a_j}·(element of P),
/// + becomes ⊕ and integer coefficients fold by m_fold_sum.
SemifieldElement f_restricted_tilde(const LaurentPolynomial& f, std::size_t principal_rank,
                                    std::span<const SemifieldElement> y);

std::vector<std::int64_t> c_vector(const Seed& principal, std::size_t i);
std::vector<std::int64_t> c_vector(const Run& principal, std::size_t t, std::size_t i);

/// Multidegree of x_i under deg x_j = e_j, deg u_j = -(column j of initial_b).
/// Throws NotHomogeneous.
std::vector<std::int64_t> g_vector(const Seed& principal, const ExchangeMatrix& initial_b, std::size_t i);
std::vector<std::int64_t> g_vector(const Run& principal, std::size_t t, std::size_t i);

struct SeparationEntry {
  Word word;
  std::size_t index = 0;
  char kind = 'x';  // 'x' or 'y' separation
  bool pass = false;
  std::string witness;
};

struct SeparationReport {
  std::vector<SeparationEntry> entries;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  void append(const SeparationReport& other);
};

/// Checks x_i^t = x^{g_i^t} F_i^t(ŷ; z) / F_i^t|_P(y, z̃) against the principal seed
/// reached by the same word. The empty string means the identity holds.
std::string check_x_separation(const Seed& general_initial, const Seed& general, const Seed& principal,
                               const ExchangeMatrix& initial_b, std::size_t i,
                               HatYConvention convention = HatYConvention::column);
/// Checks y_i^t = ∏_j y_j^{c_ji} ∏_j F_j^t|_P(y, z̃)^{b_ji^t}.
std::string check_y_separation(const Seed& general_initial, const Seed& general, const Seed& principal,
                               std::size_t i);

SeparationReport verify_x_separation(const Run& general, const Run& principal,
                                     HatYConvention convention = HatYConvention::column);
SeparationReport verify_y_separation(const Run& general, const Run& principal);

/// Depth-first walk over every reduced word (no letter twice in a row) of length
/// <= depth. `step(state, k)` produces the child state, `visit(word, state)` is
/// called for every node including the root.
template <class State, class Step, class Visit>
void walk_reduced_words(std::size_t rank, std::size_t depth, const State& root, Step&& step, Visit&& visit) {
  Word word;
  auto recurse = [&](auto&& self, const State& state) -> void {
    visit(static_cast<const Word&>(word), state);
    if (word.size() == depth) return;
    for (std::size_t k = 0; k < rank; ++k) {
      if (!word.empty() && word.back() == k) continue;
      State child = step(state, k);
      word.push_back(k);
      self(self, child);
      word.pop_back();
    }
  };
  recurse(recurse, root);
}

/// Separation checks over all reduced words up to `depth` for the given general
/// initial data (its y is used as y⁰).
SeparationReport verify_separation_tree(const SeedData& general, std::size_t depth, const MutationOptions& options = {},
                                        HatYConvention formula_convention = HatYConvention::column);

std::string word_to_string(std::span<const std::size_t> word);
/// Parses a 1-based, whitespace- or comma-separated word; letters must lie in 1..rank.
Word parse_word(const std::string& text, std::size_t rank);

}  // namespace gencluster
