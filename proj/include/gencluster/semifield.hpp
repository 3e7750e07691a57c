#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gencluster {

using Exponent = std::int64_t;
using ExponentVector = std::vector<Exponent>;

enum class SemifieldKind { trivial, tropical };

class SemifieldContext;
using SemifieldContextPtr = std::shared_ptr<const SemifieldContext>;

/// The coefficient semifield P: either the one-element semifield or the
/// tropical semifield Trop(u_1, ..., u_m) (Laurent monomials, ⊕ = componentwise min).
class SemifieldContext {
 public:
  static SemifieldContextPtr trivial();
  static SemifieldContextPtr tropical(std::vector<std::string> generator_names);
  /// Tropical context with generators prefix1 .. prefixm.
  static SemifieldContextPtr tropical(std::size_t rank, const std::string& prefix = "u");

  SemifieldKind kind() const noexcept { return kind_; }
  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }

  bool operator==(const SemifieldContext& other) const = default;

 private:
  SemifieldContext(SemifieldKind kind, std::vector<std::string> names)
      : kind_(kind), names_(std::move(names)) {}

  SemifieldKind kind_;
  std::vector<std::string> names_;
};

/// Two contexts are interchangeable if they are the same object or structurally equal.
bool same_context(const SemifieldContextPtr& a, const SemifieldContextPtr& b) noexcept;

/// Throws ContextError unless the contexts agree.
void require_same_context(const SemifieldContextPtr& a, const SemifieldContextPtr& b);

/// An element of P. Trivial elements carry an empty exponent vector, so the
/// tropical formulas specialise to the trivial semifield without branching.
class SemifieldElement {
 public:
  static SemifieldElement identity(SemifieldContextPtr ctx);
  static SemifieldElement monomial(SemifieldContextPtr ctx, ExponentVector exponents);
  static SemifieldElement generator(SemifieldContextPtr ctx, std::size_t index);

  const SemifieldContextPtr& context() const noexcept { return ctx_; }
  const ExponentVector& exponents() const noexcept { return exponents_; }
  bool is_identity() const noexcept;

  friend bool operator==(const SemifieldElement& a, const SemifieldElement& b) {
    return same_context(a.ctx_, b.ctx_) && a.exponents_ == b.exponents_;
  }
  friend std::strong_ordering operator<=>(const SemifieldElement& a, const SemifieldElement& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  SemifieldElement(SemifieldContextPtr ctx, ExponentVector exponents)
      : ctx_(std::move(ctx)), exponents_(std::move(exponents)) {}

  SemifieldContextPtr ctx_;
  ExponentVector exponents_;
};

SemifieldElement oplus(const SemifieldElement& a, const SemifieldElement& b);
SemifieldElement otimes(const SemifieldElement& a, const SemifieldElement& b);
SemifieldElement inv(const SemifieldElement& a);
SemifieldElement pow(const SemifieldElement& a, Exponent e);

/// m·p computed inside P, i.e. p ⊕ ... ⊕ p (m times). Throws DomainError for m <= 0.
SemifieldElement m_fold_sum(const mpz_class& m, const SemifieldElement& p);

/// Drops the listed generator exponents (sets them to 0). This is a semifield
/// homomorphism P -> P for both implemented kinds.
SemifieldElement kill_generators(const SemifieldElement& a, std::size_t first, std::size_t count);

std::string to_string(const SemifieldElement& a);

/// Element of Z_{>=0}P: a finite formal sum of elements of P with positive
/// integer multiplicities. The empty sum is the zero element, which is not in P.
class NonNegCombination {
 public:
  using TermMap = std::map<ExponentVector, mpz_class>;

  static NonNegCombination zero(SemifieldContextPtr ctx);
  /// The one-term combination {identity -> 1}.
  static NonNegCombination one(SemifieldContextPtr ctx);
  static NonNegCombination term(const SemifieldElement& p, const mpz_class& multiplicity);

  const SemifieldContextPtr& context() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;

  /// Adds multiplicity·p. Multiplicity must be positive (DomainError otherwise).
  void add_term(const SemifieldElement& p, const mpz_class& multiplicity);

  /// Elements of P appearing in the sum, in canonical order.
  std::vector<SemifieldElement> elements() const;

  friend NonNegCombination operator+(const NonNegCombination& a, const NonNegCombination& b);
  /// Convolution product of formal sums.
  friend NonNegCombination operator*(const NonNegCombination& a, const NonNegCombination& b);

  friend bool operator==(const NonNegCombination& a, const NonNegCombination& b) {
    return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
  }

 private:
  explicit NonNegCombination(SemifieldContextPtr ctx) : ctx_(std::move(ctx)) {}

  SemifieldContextPtr ctx_;
  TermMap terms_;
};

/// z ↦ z̃ = ⊕_j m_j p_j. Returns nullopt for the zero combination (the formal 0).
std::optional<SemifieldElement> project_tilde(const NonNegCombination& z);

std::string to_string(const NonNegCombination& z);

}  // namespace gencluster
