#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gencluster/errors.hpp"
#include "gencluster/semifield.hpp"

namespace gencluster {

class AlgebraContext;
using AlgebraContextPtr = std::shared_ptr<const AlgebraContext>;

/// Variable layout of the ambient field Q(x_1..x_n, u_1..u_m): cluster variables
/// first, then the generators of the coefficient semifield.
class AlgebraContext {
 public:
  static AlgebraContextPtr make(std::vector<std::string> cluster_names, std::vector<std::string> generator_names);
  /// x1..xn followed by the given generator names.
  static AlgebraContextPtr standard(std::size_t cluster_rank, std::vector<std::string> generator_names = {});

  std::size_t cluster_rank() const noexcept { return cluster_rank_; }
  std::size_t generator_count() const noexcept { return names_.size() - cluster_rank_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool operator==(const AlgebraContext& other) const = default;

 private:
  AlgebraContext(std::size_t cluster_rank, std::vector<std::string> names)
      : cluster_rank_(cluster_rank), names_(std::move(names)) {}

  std::size_t cluster_rank_;
  std::vector<std::string> names_;
};

bool same_context(const AlgebraContextPtr& a, const AlgebraContextPtr& b) noexcept;

struct Term {
  ExponentVector exponents;
  mpq_class coefficient;

  bool operator==(const Term& other) const = default;
};

/// Laurent polynomial with rational coefficients. Terms are kept strictly
/// decreasing in lexicographic exponent order with no zero coefficients, so the
/// representation is canonical and `==` is structural.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(AlgebraContextPtr ctx) : ctx_(std::move(ctx)) {}

  static LaurentPolynomial constant(AlgebraContextPtr ctx, const mpq_class& c);
  static LaurentPolynomial variable(AlgebraContextPtr ctx, std::size_t index);
  static LaurentPolynomial monomial(AlgebraContextPtr ctx, ExponentVector exponents, const mpq_class& c = 1);
  /// Builds from arbitrary terms, combining duplicates and dropping zeros.
  static LaurentPolynomial from_terms(AlgebraContextPtr ctx, std::vector<Term> terms);

  const AlgebraContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const;
  bool is_one() const;
  /// All exponents nonnegative.
  bool is_polynomial() const;
  const Term& leading_term() const { return terms_.front(); }
  mpq_class coefficient(const ExponentVector& exponents) const;

  /// Componentwise minimum / maximum of the exponents; zero vector for the zero polynomial.
  ExponentVector min_exponents() const;
  ExponentVector max_exponents() const;

  /// Multiplies by the Laurent monomial x^shift.
  LaurentPolynomial shifted(const ExponentVector& shift) const;
  LaurentPolynomial scaled(const mpq_class& c) const;
  LaurentPolynomial pow(unsigned e) const;

  LaurentPolynomial operator-() const { return scaled(-1); }
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const mpq_class& c) { return a + constant(a.ctx_, c); }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const mpq_class& c) { return a - constant(a.ctx_, c); }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  mpq_class evaluate(std::span<const mpq_class> point) const;

 private:
  AlgebraContextPtr ctx_;
  std::vector<Term> terms_;
};

/// Exact division failed; `remainder()` is the normal-form remainder of the
/// numerator with respect to the divisor (nonzero).
class NonExactDivision : public Error {
 public:
  explicit NonExactDivision(LaurentPolynomial remainder);
  const LaurentPolynomial& remainder() const noexcept { return remainder_; }

 private:
  LaurentPolynomial remainder_;
};

/// q with a = q·b exactly. Throws NonExactDivision (with remainder) or DivisionByZero.
LaurentPolynomial exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b);
/// As exact_div but gives up at the first obstruction without building a witness.
std::optional<LaurentPolynomial> try_exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Element of the ambient field. Normal form: the denominator has no monomial
/// factor and leading coefficient +1; whenever the function is a Laurent
/// polynomial the denominator is exactly 1. Equality is by cross-multiplication.
class RationalFunction {
 public:
  explicit RationalFunction(LaurentPolynomial numerator);
  RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator);

  static RationalFunction constant(AlgebraContextPtr ctx, const mpq_class& c);
  static RationalFunction variable(AlgebraContextPtr ctx, std::size_t index);

  const AlgebraContextPtr& context() const noexcept { return num_.context(); }
  const LaurentPolynomial& numerator() const noexcept { return num_; }
  const LaurentPolynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }
  std::optional<LaurentPolynomial> as_laurent() const;

  RationalFunction inverse() const;
  RationalFunction pow_int(long e) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  struct Normalized {};
  RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator, Normalized)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void normalize();

  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

/// Exact value at a point (one rational per variable of the context). Throws PoleAtPoint.
mpq_class eval_rational(const RationalFunction& f, std::span<const mpq_class> point);

/// Substitutes cluster variables x_i ↦ images.at(i); generators are left alone.
/// Throws if some occurring cluster variable has no image.
RationalFunction substitute(const RationalFunction& f, const std::map<std::size_t, RationalFunction>& images);

/// Ring homomorphism into `target`: variable i of f's context ↦ images[i].
RationalFunction map_variables(const RationalFunction& f, std::span<const RationalFunction> images,
                               const AlgebraContextPtr& target);

/// Embeds p as the monomial in the generator block of `algebra`.
RationalFunction embed_semifield(const SemifieldElement& p, const AlgebraContextPtr& algebra);
LaurentPolynomial embed_semifield_laurent(const SemifieldElement& p, const AlgebraContextPtr& algebra);
/// Embeds Σ m_j p_j as Σ m_j·(monomial of p_j); the zero combination embeds as 0.
RationalFunction embed_combination(const NonNegCombination& z, const AlgebraContextPtr& algebra);
LaurentPolynomial embed_combination_laurent(const NonNegCombination& z, const AlgebraContextPtr& algebra);

std::string to_string(const LaurentPolynomial& p);
/// Writes Laurent polynomials as (polynomial)/monomial and general functions as (num)/(den).
std::string to_string(const RationalFunction& f);

}  // namespace gencluster
