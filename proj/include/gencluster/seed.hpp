#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gencluster/exactalg.hpp"
#include "gencluster/semifield.hpp"

namespace gencluster {

/// Skew-symmetrizable integer n×n matrix together with its minimal positive
/// symmetrizer r (r_i b_ij = -r_j b_ji).
class ExchangeMatrix {
 public:
  /// Throws InvalidSeed(NotSkewSymmetrizable) when no symmetrizer exists.
  ExchangeMatrix(std::size_t n, std::vector<std::int64_t> row_major);

  static std::optional<std::vector<std::int64_t>> find_symmetrizer(std::size_t n, std::span<const std::int64_t> row_major);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  const std::vector<std::int64_t>& symmetrizer() const noexcept { return symmetrizer_; }

  bool operator==(const ExchangeMatrix& other) const { return n_ == other.n_ && entries_ == other.entries_; }

 private:
  ExchangeMatrix(std::size_t n, std::vector<std::int64_t> entries, std::vector<std::int64_t> symmetrizer)
      : n_(n), entries_(std::move(entries)), symmetrizer_(std::move(symmetrizer)) {}
  friend ExchangeMatrix mutate_matrix(const ExchangeMatrix&, std::span<const std::int64_t>, std::size_t, int);

  std::size_t n_;
  std::vector<std::int64_t> entries_;
  std::vector<std::int64_t> symmetrizer_;
};

/// z[i][s] for 0 <= s <= d_i.
using CoefficientTuples = std::vector<std::vector<NonNegCombination>>;

enum class SeedIssue {
  dimension_mismatch,
  not_skew_symmetrizable,
  bad_degree,
  bad_tuple_length,
  bad_boundary_coefficient,
  non_reciprocal,
  context_mismatch,
};

std::string to_string(SeedIssue issue);

struct SeedDiagnostic {
  SeedIssue issue;
  std::string message;
};

class InvalidSeed : public Error {
 public:
  explicit InvalidSeed(SeedDiagnostic diagnostic)
      : Error(diagnostic.message), diagnostic_(std::move(diagnostic)) {}
  SeedIssue issue() const noexcept { return diagnostic_.issue; }

 private:
  SeedDiagnostic diagnostic_;
};

/// Which normalization conditions on the coefficient tuples are enforced.
/// Strict (the default) is z_{i,0} = z_{i,d_i} = 1 and z_{i,s} = z_{i,d_i-s}.
struct SeedMode {
  bool normalized = true;
  bool reciprocal = true;

  static SeedMode strict() { return {}; }
  static SeedMode relaxed() { return {false, false}; }
  bool operator==(const SeedMode&) const = default;
};

/// Initial-seed data (everything except the cluster variables).
struct SeedData {
  SemifieldContextPtr semifield = SemifieldContext::trivial();
  std::size_t rank = 0;
  std::vector<std::int64_t> b;  // row-major rank×rank
  std::vector<std::int64_t> d;
  CoefficientTuples z;
  std::vector<SemifieldElement> y;
  /// Trailing semifield generators that only carry coefficient data. They are
  /// sent to 1 before z̃ enters the y-mutation (used by principal runs).
  std::size_t data_generators = 0;
  SeedMode mode;
};

std::vector<SeedDiagnostic> validate_seed(const SeedData& data);
/// Throws InvalidSeed for the first diagnostic.
void require_valid(const SeedData& data);

enum class HatYConvention {
  column,  ///< ŷ_k = y_k ∏_j x_j^{b_jk}
  row,     ///< ŷ_k = y_k ∏_j x_j^{b_kj}; wrong, kept as a negative control for the verifiers
};

struct MutationOptions {
  int epsilon = +1;
  HatYConvention hat_y = HatYConvention::column;
};

/// Labeled seed (B, d, z, x, y). Cluster variables are stored as functions of
/// the initial cluster variables and the semifield generators.
class Seed {
 public:
  /// Initial seed: x_i is the i-th cluster variable. Validates the data.
  static Seed initial(SeedData data);
  static Seed initial(SeedData data, AlgebraContextPtr algebra);

  std::size_t rank() const noexcept { return b_.size(); }
  const SemifieldContextPtr& semifield() const noexcept { return semifield_; }
  const AlgebraContextPtr& algebra() const noexcept { return algebra_; }
  const ExchangeMatrix& b() const noexcept { return b_; }
  const std::vector<std::int64_t>& d() const noexcept { return d_; }
  const CoefficientTuples& z() const noexcept { return z_; }
  const std::vector<RationalFunction>& x() const noexcept { return x_; }
  const std::vector<SemifieldElement>& y() const noexcept { return y_; }
  std::size_t data_generators() const noexcept { return data_generators_; }
  SeedMode mode() const noexcept { return mode_; }

  /// B, d, z, y exactly and x by cross-multiplication.
  friend bool operator==(const Seed& a, const Seed& b);

  /// Reassembles the data part (useful for re-rooting a pattern at this seed).
  SeedData data() const;

 private:
  Seed(SemifieldContextPtr semifield, AlgebraContextPtr algebra, ExchangeMatrix b, std::vector<std::int64_t> d,
       CoefficientTuples z, std::vector<RationalFunction> x, std::vector<SemifieldElement> y,
       std::size_t data_generators, SeedMode mode)
      : semifield_(std::move(semifield)),
        algebra_(std::move(algebra)),
        b_(std::move(b)),
        d_(std::move(d)),
        z_(std::move(z)),
        x_(std::move(x)),
        y_(std::move(y)),
        data_generators_(data_generators),
        mode_(mode) {}
  friend Seed mutate(const Seed&, std::size_t, const MutationOptions&);

  SemifieldContextPtr semifield_;
  AlgebraContextPtr algebra_;
  ExchangeMatrix b_;
  std::vector<std::int64_t> d_;
  CoefficientTuples z_;
  std::vector<RationalFunction> x_;
  std::vector<SemifieldElement> y_;
  std::size_t data_generators_;
  SeedMode mode_;
};

/// Algebra x1..xn, then the semifield's generator names.
AlgebraContextPtr default_algebra(std::size_t rank, const SemifieldContextPtr& semifield);

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::span<const std::int64_t> d, std::size_t k, int epsilon = +1);
CoefficientTuples mutate_z(const CoefficientTuples& z, std::span<const std::int64_t> d, std::size_t k);

/// ⊕_{s} z̃_{k,s} y_k^{εs}, skipping zero coefficients; nullopt if all are zero.
std::optional<SemifieldElement> exchange_denominator_tilde(const Seed& seed, std::size_t k, int epsilon = +1);

/// ŷ_k in initial variables.
RationalFunction hat_y(const Seed& seed, std::size_t k, HatYConvention convention = HatYConvention::column);

std::vector<SemifieldElement> mutate_y(const Seed& seed, std::size_t k, int epsilon = +1);
std::vector<RationalFunction> mutate_x(const Seed& seed, std::size_t k, const MutationOptions& options = {});

Seed mutate(const Seed& seed, std::size_t k, const MutationOptions& options);
inline Seed mutate(const Seed& seed, std::size_t k, int epsilon = +1) {
  return mutate(seed, k, MutationOptions{epsilon, HatYConvention::column});
}
/// Applies the word left to right.
Seed mutate_along(const Seed& seed, std::span<const std::size_t> word, const MutationOptions& options = {});

/// Exponent of x_j in the s-th numerator term of x'_k: d_k[-εb_jk]_+ + εs·b_jk.
std::int64_t numerator_exponent(const ExchangeMatrix& b, std::span<const std::int64_t> d, std::size_t j,
                                std::size_t k, std::int64_t s, int epsilon);

/// Returns the Laurent polynomial or throws NonExactDivision with the remainder.
LaurentPolynomial certify_laurent(const RationalFunction& f);

}  // namespace gencluster
