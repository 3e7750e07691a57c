#include "gencluster/semifield.hpp"

#include <algorithm>
#include <sstream>

#include "gencluster/errors.hpp"

namespace gencluster {

SemifieldContextPtr SemifieldContext::trivial() {
  static const SemifieldContextPtr instance{new SemifieldContext(SemifieldKind::trivial, {})};
  return instance;
}

SemifieldContextPtr SemifieldContext::tropical(std::vector<std::string> generator_names) {
  return SemifieldContextPtr{new SemifieldContext(SemifieldKind::tropical, std::move(generator_names))};
}

SemifieldContextPtr SemifieldContext::tropical(std::size_t rank, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (std::size_t j = 0; j < rank; ++j) names.push_back(prefix + std::to_string(j + 1));
  return tropical(std::move(names));
}

bool same_context(const SemifieldContextPtr& a, const SemifieldContextPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_context(const SemifieldContextPtr& a, const SemifieldContextPtr& b) {
  if (!same_context(a, b)) throw ContextError("semifield elements belong to different contexts");
}

SemifieldElement SemifieldElement::identity(SemifieldContextPtr ctx) {
  const auto rank = ctx->rank();
  return SemifieldElement(std::move(ctx), ExponentVector(rank, 0));
}

SemifieldElement SemifieldElement::monomial(SemifieldContextPtr ctx, ExponentVector exponents) {
  if (exponents.size() != ctx->rank()) {
    throw ContextError("exponent vector of length " + std::to_string(exponents.size()) +
                       " in a semifield of rank " + std::to_string(ctx->rank()));
  }
  return SemifieldElement(std::move(ctx), std::move(exponents));
}

SemifieldElement SemifieldElement::generator(SemifieldContextPtr ctx, std::size_t index) {
  if (index >= ctx->rank()) throw IndexError("generator index out of range");
  ExponentVector e(ctx->rank(), 0);
  e[index] = 1;
  return SemifieldElement(std::move(ctx), std::move(e));
}

bool SemifieldElement::is_identity() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

SemifieldElement oplus(const SemifieldElement& a, const SemifieldElement& b) {
  require_same_context(a.context(), b.context());
  ExponentVector e(a.exponents().size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = std::min(a.exponents()[j], b.exponents()[j]);
  return SemifieldElement::monomial(a.context(), std::move(e));
}

SemifieldElement otimes(const SemifieldElement& a, const SemifieldElement& b) {
  require_same_context(a.context(), b.context());
  ExponentVector e(a.exponents().size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = a.exponents()[j] + b.exponents()[j];
  return SemifieldElement::monomial(a.context(), std::move(e));
}

SemifieldElement inv(const SemifieldElement& a) { return pow(a, -1); }

SemifieldElement pow(const SemifieldElement& a, Exponent e) {
  ExponentVector out(a.exponents().size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.exponents()[j] * e;
  return SemifieldElement::monomial(a.context(), std::move(out));
}

SemifieldElement m_fold_sum(const mpz_class& m, const SemifieldElement& p) {
  if (sgn(m) <= 0) throw DomainError("m-fold sum needs a positive multiplicity");
  // p ⊕ p = p in both implemented semifields, so the fold collapses after one step.
  return p;
}

SemifieldElement kill_generators(const SemifieldElement& a, std::size_t first, std::size_t count) {
  ExponentVector e = a.exponents();
  if (first + count > e.size()) throw IndexError("generator range out of bounds");
  std::fill(e.begin() + static_cast<std::ptrdiff_t>(first),
            e.begin() + static_cast<std::ptrdiff_t>(first + count), 0);
  return SemifieldElement::monomial(a.context(), std::move(e));
}

namespace {

void write_monomial(std::ostream& os, const SemifieldContext& ctx, const ExponentVector& e) {
  bool any = false;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (any) os << '*';
    os << ctx.generator_names()[j];
    if (e[j] != 1) os << '^' << e[j];
    any = true;
  }
  if (!any) os << '1';
}

}  // namespace

std::string to_string(const SemifieldElement& a) {
  std::ostringstream os;
  write_monomial(os, *a.context(), a.exponents());
  return os.str();
}

NonNegCombination NonNegCombination::zero(SemifieldContextPtr ctx) { return NonNegCombination(std::move(ctx)); }

NonNegCombination NonNegCombination::one(SemifieldContextPtr ctx) {
  auto id = SemifieldElement::identity(ctx);
  return term(id, 1);
}

NonNegCombination NonNegCombination::term(const SemifieldElement& p, const mpz_class& multiplicity) {
  NonNegCombination z(p.context());
  z.add_term(p, multiplicity);
  return z;
}

bool NonNegCombination::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, m] = *terms_.begin();
  return m == 1 && std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
}

void NonNegCombination::add_term(const SemifieldElement& p, const mpz_class& multiplicity) {
  require_same_context(ctx_, p.context());
  if (sgn(multiplicity) <= 0) throw DomainError("multiplicities in Z_{>=0}P must be positive");
  terms_[p.exponents()] += multiplicity;
}

std::vector<SemifieldElement> NonNegCombination::elements() const {
  std::vector<SemifieldElement> out;
  out.reserve(terms_.size());
  for (const auto& [e, m] : terms_) out.push_back(SemifieldElement::monomial(ctx_, e));
  return out;
}

NonNegCombination operator+(const NonNegCombination& a, const NonNegCombination& b) {
  require_same_context(a.ctx_, b.ctx_);
  NonNegCombination out = a;
  for (const auto& [e, m] : b.terms_) out.terms_[e] += m;
  return out;
}

NonNegCombination operator*(const NonNegCombination& a, const NonNegCombination& b) {
  require_same_context(a.ctx_, b.ctx_);
  NonNegCombination out(a.ctx_);
  for (const auto& [ea, ma] : a.terms_) {
    for (const auto& [eb, mb] : b.terms_) {
      ExponentVector e(ea.size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      out.terms_[e] += ma * mb;
    }
  }
  return out;
}

std::optional<SemifieldElement> project_tilde(const NonNegCombination& z) {
  std::optional<SemifieldElement> acc;
  for (const auto& [e, m] : z.terms()) {
    auto folded = m_fold_sum(m, SemifieldElement::monomial(z.context(), e));
    acc = acc ? oplus(*acc, folded) : folded;
  }
  return acc;
}

std::string to_string(const NonNegCombination& z) {
  if (z.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, m] : z.terms()) {
    if (!first) os << " + ";
    first = false;
    const bool unit = std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
    if (unit) {
      os << m.get_str();
    } else {
      if (m != 1) os << m.get_str() << '*';
      write_monomial(os, *z.context(), e);
    }
  }
  return os.str();
}

}  // namespace gencluster
