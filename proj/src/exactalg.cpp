#include "gencluster/exactalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace gencluster {

namespace {

using TermAccumulator = std::map<ExponentVector, mpq_class, std::greater<>>;

void require_same(const AlgebraContextPtr& a, const AlgebraContextPtr& b) {
  if (!same_context(a, b)) throw ContextError("polynomials belong to different algebra contexts");
}

std::vector<Term> drain(TermAccumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (sgn(c) != 0) out.push_back(Term{e, std::move(c)});
  }
  return out;
}

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto v : e) h = (h ^ static_cast<std::uint64_t>(v)) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

bool integral(const std::vector<Term>& terms) {
  return std::all_of(terms.begin(), terms.end(), [](const Term& t) { return t.coefficient.get_den() == 1; });
}

// Integer coefficients skip the gcd work of mpq arithmetic; terms are sorted once at the end.
std::vector<Term> multiply_integral(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::unordered_map<ExponentVector, mpz_class, ExponentHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), std::size_t{1} << 16));
  ExponentVector e(a.front().exponents.size());
  for (const auto& s : a) {
    for (const auto& t : b) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.exponents[i] + t.exponents[i];
      auto [pos, inserted] = acc.try_emplace(e);
      mpz_addmul(pos->second.get_mpz_t(), s.coefficient.get_num_mpz_t(), t.coefficient.get_num_mpz_t());
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [exponents, c] : acc) {
    if (sgn(c) != 0) out.push_back(Term{exponents, mpq_class(c)});
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.exponents > y.exponents; });
  return out;
}

ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ExponentVector sub_exponents(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool nonnegative(const ExponentVector& e) {
  return std::all_of(e.begin(), e.end(), [](Exponent x) { return x >= 0; });
}

mpq_class power(const mpq_class& base, Exponent e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (sgn(base) == 0) throw PoleAtPoint("negative power of a variable evaluated at 0");
    return 1 / power(base, -e);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

// Division of a by b in the polynomial ring after both are shifted to be
// polynomials and b has no monomial factor. Returns the quotient when exact.
// With `remainder` non-null the full division algorithm runs and the remainder
// (of the shifted numerator) is stored there.
std::optional<LaurentPolynomial> divide(const LaurentPolynomial& a, const LaurentPolynomial& b,
                                        LaurentPolynomial* remainder) {
  if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
  require_same(a.context(), b.context());
  const auto& ctx = a.context();
  if (a.is_zero()) return LaurentPolynomial(ctx);
  if (b.is_monomial()) {
    const auto& lt = b.leading_term();
    std::vector<Term> q;
    q.reserve(a.size());
    for (const auto& t : a.terms()) q.push_back(Term{sub_exponents(t.exponents, lt.exponents), t.coefficient / lt.coefficient});
    return LaurentPolynomial::from_terms(ctx, std::move(q));
  }

  const ExponentVector a_shift = a.min_exponents();
  const ExponentVector b_shift = b.min_exponents();
  ExponentVector neg_a(a_shift.size());
  ExponentVector neg_b(b_shift.size());
  for (std::size_t i = 0; i < a_shift.size(); ++i) {
    neg_a[i] = -a_shift[i];
    neg_b[i] = -b_shift[i];
  }
  const LaurentPolynomial divisor = b.shifted(neg_b);
  const Term& lead = divisor.leading_term();

  // Cheap necessary condition: every exponent of the quotient is bounded by the
  // difference of maxima, so a's span must dominate b's span.
  const ExponentVector a_span = sub_exponents(a.max_exponents(), a_shift);
  const ExponentVector b_span = sub_exponents(divisor.max_exponents(), ExponentVector(b_shift.size(), 0));
  if (!remainder && !nonnegative(sub_exponents(a_span, b_span))) return std::nullopt;

  std::vector<Term> quotient;
  std::vector<Term> leftover;
  const bool unit_lead = abs(lead.coefficient) == 1;
  if (unit_lead && integral(a.terms()) && integral(divisor.terms())) {
    // Integer arithmetic throughout: a unit leading coefficient keeps the quotient integral.
    std::map<ExponentVector, mpz_class, std::greater<>> rest;
    for (const auto& t : a.terms()) rest.emplace(add_exponents(t.exponents, neg_a), t.coefficient.get_num());
    const bool negate = sgn(lead.coefficient) < 0;
    while (!rest.empty()) {
      auto it = rest.begin();
      ExponentVector qe = sub_exponents(it->first, lead.exponents);
      if (!nonnegative(qe)) {
        if (!remainder) return std::nullopt;
        leftover.push_back(Term{it->first, mpq_class(it->second)});
        rest.erase(it);
        continue;
      }
      mpz_class qc = negate ? mpz_class(-it->second) : it->second;
      for (const auto& t : divisor.terms()) {
        auto [pos, inserted] = rest.try_emplace(add_exponents(t.exponents, qe));
        mpz_submul(pos->second.get_mpz_t(), qc.get_mpz_t(), t.coefficient.get_num_mpz_t());
        if (sgn(pos->second) == 0) rest.erase(pos);
      }
      quotient.push_back(Term{std::move(qe), mpq_class(qc)});
    }
  } else {
    TermAccumulator rest;
    for (const auto& t : a.terms()) rest.emplace(add_exponents(t.exponents, neg_a), t.coefficient);
    while (!rest.empty()) {
      auto it = rest.begin();
      ExponentVector qe = sub_exponents(it->first, lead.exponents);
      if (!nonnegative(qe)) {
        if (!remainder) return std::nullopt;
        leftover.push_back(Term{it->first, it->second});
        rest.erase(it);
        continue;
      }
      mpq_class qc = it->second / lead.coefficient;
      for (const auto& t : divisor.terms()) {
        auto [pos, inserted] = rest.try_emplace(add_exponents(t.exponents, qe), 0);
        pos->second -= qc * t.coefficient;
        if (sgn(pos->second) == 0) rest.erase(pos);
      }
      quotient.push_back(Term{std::move(qe), std::move(qc)});
    }
  }
  if (!leftover.empty()) {
    *remainder = LaurentPolynomial::from_terms(ctx, std::move(leftover)).shifted(a_shift);
    return std::nullopt;
  }
  return LaurentPolynomial::from_terms(ctx, std::move(quotient)).shifted(sub_exponents(a_shift, b_shift));
}

}  // namespace

AlgebraContextPtr AlgebraContext::make(std::vector<std::string> cluster_names, std::vector<std::string> generator_names) {
  const auto n = cluster_names.size();
  cluster_names.insert(cluster_names.end(), generator_names.begin(), generator_names.end());
  return AlgebraContextPtr{new AlgebraContext(n, std::move(cluster_names))};
}

AlgebraContextPtr AlgebraContext::standard(std::size_t cluster_rank, std::vector<std::string> generator_names) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < cluster_rank; ++i) names.push_back("x" + std::to_string(i + 1));
  return make(std::move(names), std::move(generator_names));
}

bool same_context(const AlgebraContextPtr& a, const AlgebraContextPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

LaurentPolynomial LaurentPolynomial::constant(AlgebraContextPtr ctx, const mpq_class& c) {
  ExponentVector zero(ctx->size(), 0);
  return monomial(std::move(ctx), std::move(zero), c);
}

LaurentPolynomial LaurentPolynomial::variable(AlgebraContextPtr ctx, std::size_t index) {
  if (index >= ctx->size()) throw IndexError("variable index out of range");
  ExponentVector e(ctx->size(), 0);
  e[index] = 1;
  return monomial(std::move(ctx), std::move(e));
}

LaurentPolynomial LaurentPolynomial::monomial(AlgebraContextPtr ctx, ExponentVector exponents, const mpq_class& c) {
  if (exponents.size() != ctx->size()) throw ContextError("exponent vector length does not match the algebra");
  LaurentPolynomial p(std::move(ctx));
  if (sgn(c) != 0) p.terms_.push_back(Term{std::move(exponents), c});
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(AlgebraContextPtr ctx, std::vector<Term> terms) {
  LaurentPolynomial p(std::move(ctx));
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponents > b.exponents; });
  for (auto& t : terms) {
    if (t.exponents.size() != p.ctx_->size()) throw ContextError("exponent vector length does not match the algebra");
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coefficient += t.coefficient;
      if (sgn(p.terms_.back().coefficient) == 0) p.terms_.pop_back();
    } else if (sgn(t.coefficient) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(),
                                                              [](Exponent e) { return e == 0; }));
}

bool LaurentPolynomial::is_one() const { return terms_.size() == 1 && is_constant() && terms_[0].coefficient == 1; }

bool LaurentPolynomial::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return nonnegative(t.exponents); });
}

mpq_class LaurentPolynomial::coefficient(const ExponentVector& exponents) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponents,
                             [](const Term& t, const ExponentVector& e) { return t.exponents > e; });
  if (it != terms_.end() && it->exponents == exponents) return it->coefficient;
  return 0;
}

ExponentVector LaurentPolynomial::min_exponents() const {
  ExponentVector out(ctx_->size(), 0);
  if (terms_.empty()) return out;
  out = terms_[0].exponents;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], t.exponents[i]);
  return out;
}

ExponentVector LaurentPolynomial::max_exponents() const {
  ExponentVector out(ctx_->size(), 0);
  if (terms_.empty()) return out;
  out = terms_[0].exponents;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], t.exponents[i]);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& shift) const {
  LaurentPolynomial out(ctx_);
  out.terms_.reserve(terms_.size());
  // Translation preserves the lexicographic order.
  for (const auto& t : terms_) out.terms_.push_back(Term{add_exponents(t.exponents, shift), t.coefficient});
  return out;
}

LaurentPolynomial LaurentPolynomial::scaled(const mpq_class& c) const {
  LaurentPolynomial out(ctx_);
  if (sgn(c) == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result = constant(ctx_, 1);
  LaurentPolynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  require_same(a.ctx_, b.ctx_);
  LaurentPolynomial out(a.ctx_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->exponents > j->exponents)) {
      out.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->exponents > i->exponents) {
      out.terms_.push_back(*j++);
    } else {
      mpq_class c = i->coefficient + j->coefficient;
      if (sgn(c) != 0) out.terms_.push_back(Term{i->exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  require_same(a.ctx_, b.ctx_);
  LaurentPolynomial out(a.ctx_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.is_monomial() || b.is_monomial()) {
    const auto& m = a.is_monomial() ? a : b;
    const auto& p = a.is_monomial() ? b : a;
    return p.shifted(m.leading_term().exponents).scaled(m.leading_term().coefficient);
  }
  if (integral(a.terms_) && integral(b.terms_)) {
    out.terms_ = multiply_integral(a.terms_, b.terms_);
    return out;
  }
  TermAccumulator acc;
  ExponentVector e(a.ctx_->size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.exponents[i] + t.exponents[i];
      auto [pos, inserted] = acc.try_emplace(e, 0);
      pos->second += s.coefficient * t.coefficient;
    }
  }
  out.terms_ = drain(acc);
  return out;
}

mpq_class LaurentPolynomial::evaluate(std::span<const mpq_class> point) const {
  if (point.size() != ctx_->size()) throw ContextError("evaluation point has the wrong dimension");
  mpq_class total = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.exponents[i] != 0) v *= power(point[i], t.exponents[i]);
    }
    total += v;
  }
  return total;
}

NonExactDivision::NonExactDivision(LaurentPolynomial remainder)
    : Error("division is not exact; remainder " + to_string(remainder)), remainder_(std::move(remainder)) {}

LaurentPolynomial exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial rem(a.context());
  auto q = divide(a, b, &rem);
  if (!q) throw NonExactDivision(std::move(rem));
  return *std::move(q);
}

std::optional<LaurentPolynomial> try_exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return divide(a, b, nullptr);
}

RationalFunction::RationalFunction(LaurentPolynomial numerator)
    : num_(std::move(numerator)), den_(LaurentPolynomial::constant(num_.context(), 1)) {
  normalize();
}

RationalFunction::RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same(num_.context(), den_.context());
  normalize();
}

RationalFunction RationalFunction::constant(AlgebraContextPtr ctx, const mpq_class& c) {
  return RationalFunction(LaurentPolynomial::constant(std::move(ctx), c));
}

RationalFunction RationalFunction::variable(AlgebraContextPtr ctx, std::size_t index) {
  return RationalFunction(LaurentPolynomial::variable(std::move(ctx), index));
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  const auto& ctx = num_.context();
  if (num_.is_zero()) {
    den_ = LaurentPolynomial::constant(ctx, 1);
    return;
  }
  ExponentVector shift = den_.min_exponents();
  for (auto& e : shift) e = -e;
  const mpq_class lead = den_.leading_term().coefficient;
  den_ = den_.shifted(shift).scaled(1 / lead);
  num_ = num_.shifted(shift).scaled(1 / lead);
  if (den_.is_one()) return;
  if (auto q = try_exact_div(num_, den_)) {
    num_ = *std::move(q);
    den_ = LaurentPolynomial::constant(ctx, 1);
  }
}

std::optional<LaurentPolynomial> RationalFunction::as_laurent() const {
  if (is_laurent()) return num_;
  return std::nullopt;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow_int(long e) const {
  if (e < 0) return inverse().pow_int(-e);
  const auto ue = static_cast<unsigned>(e);
  if (is_laurent()) {
    if (num_.is_monomial()) {
      const auto& t = num_.leading_term();
      ExponentVector ex = t.exponents;
      for (auto& v : ex) v *= e;
      return RationalFunction(LaurentPolynomial::monomial(context(), std::move(ex), power(t.coefficient, e)),
                              LaurentPolynomial::constant(context(), 1), Normalized{});
    }
    return RationalFunction(num_.pow(ue), den_, Normalized{});
  }
  return RationalFunction(num_.pow(ue), den_.pow(ue));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Normalized{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  require_same(a.context(), b.context());
  if (a.den_ == b.den_) {
    if (a.is_laurent()) return RationalFunction(a.num_ + b.num_, a.den_, RationalFunction::Normalized{});
    return RationalFunction(a.num_ + b.num_, a.den_);
  }
  if (b.is_laurent()) return RationalFunction(a.num_ + b.num_ * a.den_, a.den_);
  if (a.is_laurent()) return RationalFunction(a.num_ * b.den_ + b.num_, b.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  require_same(a.context(), b.context());
  if (a.is_laurent() && b.is_laurent()) {
    return RationalFunction(a.num_ * b.num_, a.den_, RationalFunction::Normalized{});
  }
  if (a.is_laurent()) return RationalFunction(a.num_ * b.num_, b.den_);
  if (b.is_laurent()) return RationalFunction(a.num_ * b.num_, a.den_);
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (!same_context(a.context(), b.context())) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

mpq_class eval_rational(const RationalFunction& f, std::span<const mpq_class> point) {
  const mpq_class den = f.denominator().evaluate(point);
  if (sgn(den) == 0) throw PoleAtPoint("denominator vanishes at the evaluation point");
  return f.numerator().evaluate(point) / den;
}

RationalFunction map_variables(const RationalFunction& f, std::span<const RationalFunction> images,
                               const AlgebraContextPtr& target) {
  const auto& src = f.context();
  if (images.size() != src->size()) throw ContextError("substitution needs one image per variable");
  for (const auto& img : images) {
    if (!same_context(img.context(), target)) throw ContextError("substitution image in the wrong algebra");
  }
  const std::size_t nv = src->size();
  const LaurentPolynomial one = LaurentPolynomial::constant(target, 1);

  // Exponent ranges per variable over numerator and denominator.
  std::vector<Exponent> max_pos(nv, 0);
  std::vector<Exponent> max_neg(nv, 0);
  for (const auto* p : {&f.numerator(), &f.denominator()}) {
    for (const auto& t : p->terms()) {
      for (std::size_t i = 0; i < nv; ++i) {
        max_pos[i] = std::max(max_pos[i], t.exponents[i]);
        max_neg[i] = std::max(max_neg[i], -t.exponents[i]);
      }
    }
  }

  // Image i = N_i/D_i. A term x^e maps to ∏ N_i^{e_i+E-_i} D_i^{E+_i-e_i} over the
  // common denominator ∏ D_i^{E+_i} N_i^{E-_i}. Laurent-monomial numerators are
  // inverted directly so they never enter the denominator.
  struct Image {
    bool monomial_num = false;
    LaurentPolynomial num;
    LaurentPolynomial den;
    std::map<Exponent, LaurentPolynomial> num_pows;
    std::map<Exponent, LaurentPolynomial> den_pows;
  };
  std::vector<Image> img;
  img.reserve(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    Image m{false, images[i].numerator(), images[i].denominator(), {}, {}};
    if (max_pos[i] == 0 && max_neg[i] == 0) {
      img.push_back(std::move(m));
      continue;
    }
    if (max_neg[i] > 0 && m.num.is_zero()) throw DivisionByZero("negative power of a variable substituted by 0");
    m.monomial_num = m.num.is_monomial();
    img.push_back(std::move(m));
  }

  auto num_pow = [&](std::size_t i, Exponent e) -> const LaurentPolynomial& {
    auto& cache = img[i].num_pows;
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    LaurentPolynomial v = one;
    const auto& n = img[i].num;
    if (img[i].monomial_num) {
      const auto& t = n.leading_term();
      ExponentVector ex = t.exponents;
      for (auto& x : ex) x *= e;
      v = LaurentPolynomial::monomial(target, std::move(ex), power(t.coefficient, e));
    } else {
      v = n.pow(static_cast<unsigned>(e));
    }
    return cache.emplace(e, std::move(v)).first->second;
  };
  auto den_pow = [&](std::size_t i, Exponent e) -> const LaurentPolynomial& {
    auto& cache = img[i].den_pows;
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    return cache.emplace(e, img[i].den.pow(static_cast<unsigned>(e))).first->second;
  };

  auto image_of = [&](const LaurentPolynomial& p) {
    LaurentPolynomial total(target);
    for (const auto& t : p.terms()) {
      LaurentPolynomial term = LaurentPolynomial::constant(target, t.coefficient);
      for (std::size_t i = 0; i < nv; ++i) {
        const Exponent e = t.exponents[i];
        if (img[i].monomial_num) {
          if (e != 0) term = term * num_pow(i, e);
        } else {
          if (e + max_neg[i] != 0) term = term * num_pow(i, e + max_neg[i]);
        }
        if (!img[i].den.is_one() && max_pos[i] - e != 0) term = term * den_pow(i, max_pos[i] - e);
      }
      total = total + term;
    }
    return total;
  };

  // The common denominator cancels between numerator and denominator of f.
  return RationalFunction(image_of(f.numerator()), image_of(f.denominator()));
}

RationalFunction substitute(const RationalFunction& f, const std::map<std::size_t, RationalFunction>& images) {
  const auto& ctx = f.context();
  std::vector<RationalFunction> all;
  all.reserve(ctx->size());
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    auto it = images.find(i);
    if (i < ctx->cluster_rank() && it != images.end()) {
      if (!same_context(it->second.context(), ctx)) throw ContextError("substitution image in the wrong algebra");
      all.push_back(it->second);
      continue;
    }
    if (i < ctx->cluster_rank()) {
      bool occurs = false;
      for (const auto* p : {&f.numerator(), &f.denominator()})
        for (const auto& t : p->terms()) occurs = occurs || t.exponents[i] != 0;
      if (occurs) throw IndexError("no image given for variable " + ctx->name(i));
    }
    all.push_back(RationalFunction::variable(ctx, i));
  }
  return map_variables(f, all, ctx);
}

LaurentPolynomial embed_semifield_laurent(const SemifieldElement& p, const AlgebraContextPtr& algebra) {
  if (p.context()->rank() != algebra->generator_count()) {
    throw ContextError("semifield rank does not match the algebra's generator block");
  }
  ExponentVector e(algebra->size(), 0);
  std::copy(p.exponents().begin(), p.exponents().end(), e.begin() + static_cast<std::ptrdiff_t>(algebra->cluster_rank()));
  return LaurentPolynomial::monomial(algebra, std::move(e));
}

RationalFunction embed_semifield(const SemifieldElement& p, const AlgebraContextPtr& algebra) {
  return RationalFunction(embed_semifield_laurent(p, algebra));
}

LaurentPolynomial embed_combination_laurent(const NonNegCombination& z, const AlgebraContextPtr& algebra) {
  LaurentPolynomial out(algebra);
  for (const auto& p : z.elements()) {
    out = out + embed_semifield_laurent(p, algebra).scaled(mpq_class(z.terms().at(p.exponents())));
  }
  return out;
}

RationalFunction embed_combination(const NonNegCombination& z, const AlgebraContextPtr& algebra) {
  return RationalFunction(embed_combination_laurent(z, algebra));
}

namespace {

void write_monomial(std::ostream& os, const AlgebraContext& ctx, const ExponentVector& e, bool& any) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << '*';
    os << ctx.name(i);
    if (e[i] != 1) os << '^' << e[i];
    any = true;
  }
}

std::string monomial_string(const AlgebraContext& ctx, const ExponentVector& e) {
  std::ostringstream os;
  bool any = false;
  write_monomial(os, ctx, e, any);
  return any ? os.str() : "1";
}

bool needs_parens(const LaurentPolynomial& p) {
  if (p.size() > 1) return true;
  return p.size() == 1 && sgn(p.leading_term().coefficient) < 0;
}

// Sum of terms with negative exponents written inline.
std::string terms_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpq_class c = t.coefficient;
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    bool any = false;
    if (c != 1) {
      os << c.get_str();
      any = true;
    }
    bool mono = false;
    std::ostringstream ms;
    write_monomial(ms, *p.context(), t.exponents, mono);
    if (mono) {
      if (any) os << '*';
      os << ms.str();
    } else if (!any) {
      os << '1';
    }
  }
  return os.str();
}

}  // namespace

// Monomial denominators are pulled out: (x2^2 + 1)/x1 rather than x1^-1*x2^2 + x1^-1.
std::string to_string(const LaurentPolynomial& p) {
  ExponentVector lift = p.min_exponents();
  for (auto& e : lift) e = e < 0 ? -e : 0;
  if (std::all_of(lift.begin(), lift.end(), [](Exponent e) { return e == 0; })) return terms_string(p);
  const LaurentPolynomial top = p.shifted(lift);
  std::string out = needs_parens(top) ? "(" + terms_string(top) + ")" : terms_string(top);
  const auto nonzero = std::count_if(lift.begin(), lift.end(), [](Exponent e) { return e != 0; });
  const auto total = std::accumulate(lift.begin(), lift.end(), Exponent{0});
  const std::string den = monomial_string(*p.context(), lift);
  return out + "/" + (nonzero == 1 && total == 1 ? den : "(" + den + ")");
}

std::string to_string(const RationalFunction& f) {
  if (f.is_laurent()) return to_string(f.numerator());
  const auto wrap = [](const LaurentPolynomial& p) { return needs_parens(p) ? "(" + to_string(p) + ")" : to_string(p); };
  return wrap(f.numerator()) + "/" + wrap(f.denominator());
}

}  // namespace gencluster
