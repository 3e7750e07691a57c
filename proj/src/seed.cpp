#include "gencluster/seed.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

namespace gencluster {

namespace {

std::int64_t positive_part(std::int64_t v) { return v > 0 ? v : 0; }

[[noreturn]] void overflow() { throw DomainError("integer overflow in exchange matrix mutation"); }

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

void check_direction(std::size_t n, std::size_t k, int epsilon) {
  if (k >= n) throw IndexError("mutation direction " + std::to_string(k + 1) + " outside 1.." + std::to_string(n));
  if (epsilon != 1 && epsilon != -1) throw DomainError("epsilon must be +1 or -1");
}

}  // namespace

std::optional<std::vector<std::int64_t>> ExchangeMatrix::find_symmetrizer(std::size_t n,
                                                                          std::span<const std::int64_t> b) {
  if (b.size() != n * n) return std::nullopt;
  auto at = [&](std::size_t i, std::size_t j) { return b[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != 0) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = at(i, j);
      const auto c = at(j, i);
      if ((a == 0) != (c == 0)) return std::nullopt;
      if (a != 0 && (a > 0) == (c > 0)) return std::nullopt;
    }
  }
  // Propagate r_j = -r_i b_ij / b_ji through each connected component.
  std::vector<std::optional<mpq_class>> r(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (r[root]) continue;
    r[root] = mpq_class(1);
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (at(i, j) == 0) continue;
        mpq_class rj = -*r[i] * mpq_class(static_cast<long>(at(i, j))) / mpq_class(static_cast<long>(at(j, i)));
        if (!r[j]) {
          r[j] = rj;
          queue.push_back(j);
        } else if (*r[j] != rj) {
          return std::nullopt;
        }
      }
    }
  }
  mpz_class lcm_den = 1;
  for (const auto& v : r) lcm_den = lcm(lcm_den, mpz_class(v->get_den()));
  mpz_class g = 0;
  std::vector<mpz_class> scaled;
  for (const auto& v : r) {
    mpz_class s = mpz_class(v->get_num()) * (lcm_den / v->get_den());
    g = gcd(g, s);
    scaled.push_back(s);
  }
  std::vector<std::int64_t> out;
  for (auto& s : scaled) {
    s /= g;
    if (!s.fits_slong_p()) return std::nullopt;
    out.push_back(s.get_si());
  }
  return out;
}

ExchangeMatrix::ExchangeMatrix(std::size_t n, std::vector<std::int64_t> row_major) : n_(n) {
  if (row_major.size() != n * n) {
    throw InvalidSeed({SeedIssue::dimension_mismatch, "exchange matrix needs " + std::to_string(n * n) + " entries"});
  }
  auto r = find_symmetrizer(n, row_major);
  if (!r) throw InvalidSeed({SeedIssue::not_skew_symmetrizable, "exchange matrix is not skew-symmetrizable"});
  entries_ = std::move(row_major);
  symmetrizer_ = *std::move(r);
}

std::string to_string(SeedIssue issue) {
  switch (issue) {
    case SeedIssue::dimension_mismatch: return "DimensionMismatch";
    case SeedIssue::not_skew_symmetrizable: return "NotSkewSymmetrizable";
    case SeedIssue::bad_degree: return "BadDegree";
    case SeedIssue::bad_tuple_length: return "BadTupleLength";
    case SeedIssue::bad_boundary_coefficient: return "BadBoundaryCoefficient";
    case SeedIssue::non_reciprocal: return "NonReciprocal";
    case SeedIssue::context_mismatch: return "ContextMismatch";
  }
  return "Unknown";
}

std::vector<SeedDiagnostic> validate_seed(const SeedData& data) {
  std::vector<SeedDiagnostic> out;
  const auto n = data.rank;
  auto report = [&](SeedIssue issue, std::string msg) { out.push_back({issue, std::move(msg)}); };
  if (!data.semifield) {
    report(SeedIssue::context_mismatch, "seed has no semifield context");
    return out;
  }
  if (data.b.size() != n * n || data.d.size() != n || data.z.size() != n || data.y.size() != n) {
    report(SeedIssue::dimension_mismatch, "B, d, z and y must all have rank " + std::to_string(n));
    return out;
  }
  if (data.data_generators > data.semifield->rank()) {
    report(SeedIssue::dimension_mismatch, "more data generators than semifield generators");
  }
  if (!ExchangeMatrix::find_symmetrizer(n, data.b)) {
    report(SeedIssue::not_skew_symmetrizable, "exchange matrix is not skew-symmetrizable");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto label = std::to_string(i + 1);
    if (!same_context(data.y[i].context(), data.semifield)) {
      report(SeedIssue::context_mismatch, "y" + label + " lives in a different semifield");
    }
    if (data.d[i] < 1) {
      report(SeedIssue::bad_degree, "d" + label + " must be a positive integer");
      continue;
    }
    const auto& zi = data.z[i];
    const auto di = static_cast<std::size_t>(data.d[i]);
    if (zi.size() != di + 1) {
      report(SeedIssue::bad_tuple_length, "z" + label + " has " + std::to_string(zi.size()) + " entries, expected d" +
                                              label + "+1 = " + std::to_string(di + 1));
      continue;
    }
    bool contexts_ok = true;
    for (const auto& c : zi) {
      if (!same_context(c.context(), data.semifield)) contexts_ok = false;
    }
    if (!contexts_ok) {
      report(SeedIssue::context_mismatch, "z" + label + " lives in a different semifield");
      continue;
    }
    if (data.mode.normalized && (!zi.front().is_one() || !zi.back().is_one())) {
      report(SeedIssue::bad_boundary_coefficient, "z" + label + " must start and end with 1");
    }
    if (data.mode.reciprocal) {
      for (std::size_t s = 0; s <= di; ++s) {
        if (!(zi[s] == zi[di - s])) {
          report(SeedIssue::non_reciprocal, "z" + label + " is not reciprocal (z[s] != z[d-s])");
          break;
        }
      }
    }
  }
  return out;
}

void require_valid(const SeedData& data) {
  auto diagnostics = validate_seed(data);
  if (!diagnostics.empty()) throw InvalidSeed(std::move(diagnostics.front()));
}

AlgebraContextPtr default_algebra(std::size_t rank, const SemifieldContextPtr& semifield) {
  return AlgebraContext::standard(rank, semifield->generator_names());
}

Seed Seed::initial(SeedData data) {
  auto algebra = default_algebra(data.rank, data.semifield ? data.semifield : SemifieldContext::trivial());
  return initial(std::move(data), std::move(algebra));
}

Seed Seed::initial(SeedData data, AlgebraContextPtr algebra) {
  require_valid(data);
  if (algebra->cluster_rank() != data.rank || algebra->generator_count() != data.semifield->rank()) {
    throw ContextError("algebra layout does not match the seed");
  }
  std::vector<RationalFunction> x;
  x.reserve(data.rank);
  for (std::size_t i = 0; i < data.rank; ++i) x.push_back(RationalFunction::variable(algebra, i));
  ExchangeMatrix b(data.rank, std::move(data.b));
  return Seed(std::move(data.semifield), std::move(algebra), std::move(b), std::move(data.d), std::move(data.z),
              std::move(x), std::move(data.y), data.data_generators, data.mode);
}

SeedData Seed::data() const {
  return SeedData{semifield_, rank(), b_.entries(), d_, z_, y_, data_generators_, mode_};
}

bool operator==(const Seed& a, const Seed& b) {
  return same_context(a.semifield_, b.semifield_) && same_context(a.algebra_, b.algebra_) && a.b_ == b.b_ &&
         a.d_ == b.d_ && a.z_ == b.z_ && a.y_ == b.y_ && a.x_ == b.x_ && a.data_generators_ == b.data_generators_;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::span<const std::int64_t> d, std::size_t k, int epsilon) {
  const auto n = b.size();
  check_direction(n, k, epsilon);
  if (d.size() != n) throw IndexError("degree vector has the wrong length");
  std::vector<std::int64_t> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out[i * n + j] = -b(i, j);
        continue;
      }
      const auto corr = add(mul(positive_part(epsilon * b(i, k)), b(k, j)), mul(b(i, k), positive_part(-epsilon * b(k, j))));
      out[i * n + j] = add(b(i, j), mul(d[k], corr));
    }
  }
  // The symmetrizer is preserved by mutation.
  return ExchangeMatrix(n, std::move(out), b.symmetrizer());
}

CoefficientTuples mutate_z(const CoefficientTuples& z, std::span<const std::int64_t> d, std::size_t k) {
  if (k >= z.size()) throw IndexError("mutation direction out of range");
  if (d.size() != z.size() || z[k].size() != static_cast<std::size_t>(d[k]) + 1) {
    throw IndexError("coefficient tuple does not match the degree vector");
  }
  CoefficientTuples out = z;
  std::reverse(out[k].begin(), out[k].end());
  return out;
}

std::optional<SemifieldElement> exchange_denominator_tilde(const Seed& seed, std::size_t k, int epsilon) {
  check_direction(seed.rank(), k, epsilon);
  const auto& yk = seed.y()[k];
  const auto& ctx = seed.semifield();
  const std::size_t data_first = ctx->rank() - seed.data_generators();
  std::optional<SemifieldElement> acc;
  const auto& zk = seed.z()[k];
  for (std::size_t s = 0; s < zk.size(); ++s) {
    auto tilde = project_tilde(zk[s]);
    if (!tilde) continue;  // formal zero terms are ignored
    if (seed.data_generators() != 0) tilde = kill_generators(*tilde, data_first, seed.data_generators());
    auto term = otimes(*tilde, pow(yk, epsilon * static_cast<Exponent>(s)));
    acc = acc ? oplus(*acc, term) : term;
  }
  return acc;
}

RationalFunction hat_y(const Seed& seed, std::size_t k, HatYConvention convention) {
  check_direction(seed.rank(), k, 1);
  RationalFunction out = embed_semifield(seed.y()[k], seed.algebra());
  for (std::size_t j = 0; j < seed.rank(); ++j) {
    const auto e = convention == HatYConvention::column ? seed.b()(j, k) : seed.b()(k, j);
    if (e != 0) out = out * seed.x()[j].pow_int(e);
  }
  return out;
}

std::vector<SemifieldElement> mutate_y(const Seed& seed, std::size_t k, int epsilon) {
  check_direction(seed.rank(), k, epsilon);
  const auto denom = exchange_denominator_tilde(seed, k, epsilon);
  if (!denom) throw EmptyExchangeSum("every coefficient z_" + std::to_string(k + 1) + ",s is zero");
  const auto& yk = seed.y()[k];
  const auto dk = seed.d()[k];
  std::vector<SemifieldElement> out;
  out.reserve(seed.rank());
  for (std::size_t i = 0; i < seed.rank(); ++i) {
    if (i == k) {
      out.push_back(inv(yk));
      continue;
    }
    const auto bki = seed.b()(k, i);
    out.push_back(otimes(otimes(seed.y()[i], pow(yk, positive_part(epsilon * bki) * dk)), pow(*denom, -bki)));
  }
  return out;
}

std::int64_t numerator_exponent(const ExchangeMatrix& b, std::span<const std::int64_t> d, std::size_t j,
                                std::size_t k, std::int64_t s, int epsilon) {
  return d[k] * positive_part(-epsilon * b(j, k)) + epsilon * s * b(j, k);
}

std::vector<RationalFunction> mutate_x(const Seed& seed, std::size_t k, const MutationOptions& options) {
  const int eps = options.epsilon;
  check_direction(seed.rank(), k, eps);
  const auto denom = exchange_denominator_tilde(seed, k, eps);
  if (!denom) throw EmptyExchangeSum("every coefficient z_" + std::to_string(k + 1) + ",s is zero");

  const auto& alg = seed.algebra();
  const auto& b = seed.b();
  const auto n = seed.rank();
  const auto dk = seed.d()[k];
  std::vector<std::map<std::int64_t, RationalFunction>> pow_cache(n);
  auto x_pow = [&](std::size_t j, std::int64_t e) -> const RationalFunction& {
    auto it = pow_cache[j].find(e);
    if (it != pow_cache[j].end()) return it->second;
    return pow_cache[j].emplace(e, seed.x()[j].pow_int(e)).first->second;
  };

  // x_k^{-1} (∏ x_j^{[-εb_jk]_+})^{d_k} Σ_s z_{k,s} ŷ_k^{εs}, each summand expanded
  // into its monomial in the current cluster so that no spurious denominators arise.
  RationalFunction numerator = RationalFunction::constant(alg, 0);
  const auto& zk = seed.z()[k];
  for (std::size_t s = 0; s < zk.size(); ++s) {
    if (zk[s].is_zero()) continue;
    const auto ss = static_cast<std::int64_t>(s);
    RationalFunction term = embed_combination(zk[s], alg) * embed_semifield(pow(seed.y()[k], eps * ss), alg);
    for (std::size_t j = 0; j < n; ++j) {
      const auto hat_exp = options.hat_y == HatYConvention::column ? b(j, k) : b(k, j);
      const auto e = dk * positive_part(-eps * b(j, k)) + eps * ss * hat_exp;
      if (e != 0) term = term * x_pow(j, e);
    }
    numerator = numerator + term;
  }
  const RationalFunction divisor = seed.x()[k] * embed_semifield(*denom, alg);

  std::vector<RationalFunction> out = seed.x();
  out[k] = numerator / divisor;
  return out;
}

Seed mutate(const Seed& seed, std::size_t k, const MutationOptions& options) {
  check_direction(seed.rank(), k, options.epsilon);
  auto x = mutate_x(seed, k, options);
  auto y = mutate_y(seed, k, options.epsilon);
  auto b = mutate_matrix(seed.b(), seed.d(), k, options.epsilon);
  auto z = mutate_z(seed.z(), seed.d(), k);
  return Seed(seed.semifield(), seed.algebra(), std::move(b), seed.d(), std::move(z), std::move(x), std::move(y),
              seed.data_generators(), seed.mode());
}

Seed mutate_along(const Seed& seed, std::span<const std::size_t> word, const MutationOptions& options) {
  Seed current = seed;
  for (auto k : word) current = mutate(current, k, options);
  return current;
}

LaurentPolynomial certify_laurent(const RationalFunction& f) {
  if (auto p = f.as_laurent()) return *std::move(p);
  return exact_div(f.numerator(), f.denominator());
}

}  // namespace gencluster
