#include "gencluster/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace gencluster {

namespace {

std::string vector_string(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

void require_principal(const Seed& principal) {
  const auto n = principal.rank();
  if (principal.semifield()->kind() != SemifieldKind::tropical || principal.semifield()->rank() < n ||
      principal.semifield()->rank() - principal.data_generators() != n) {
    throw DomainError("seed does not carry principal coefficients");
  }
}

}  // namespace

Run run_word(const Seed& initial, std::span<const std::size_t> word, const MutationOptions& options) {
  Run run{Word(word.begin(), word.end()), {initial}};
  run.seeds.reserve(word.size() + 1);
  for (auto k : word) run.seeds.push_back(mutate(run.seeds.back(), k, options));
  return run;
}

Seed principal_seed(const SeedData& data) {
  if (data.data_generators != 0) throw DomainError("principal seed of a seed that already has data generators");
  require_valid(data);
  const auto n = data.rank;
  const auto& base = data.semifield;
  std::vector<std::string> names;
  std::set<std::string> taken;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("u" + std::to_string(i + 1));
    taken.insert(names.back());
    taken.insert("x" + std::to_string(i + 1));
  }
  for (const auto& name : base->generator_names()) {
    std::string fresh = name;
    while (taken.count(fresh) != 0) fresh = "p_" + fresh;
    taken.insert(fresh);
    names.push_back(fresh);
  }
  auto ctx = SemifieldContext::tropical(std::move(names));

  auto lift = [&](const NonNegCombination& c) {
    auto out = NonNegCombination::zero(ctx);
    for (const auto& [e, m] : c.terms()) {
      ExponentVector full(n, 0);
      full.insert(full.end(), e.begin(), e.end());
      out.add_term(SemifieldElement::monomial(ctx, std::move(full)), m);
    }
    return out;
  };

  SeedData pd;
  pd.semifield = ctx;
  pd.rank = n;
  pd.b = data.b;
  pd.d = data.d;
  pd.mode = data.mode;
  pd.data_generators = base->rank();
  for (const auto& zi : data.z) {
    std::vector<NonNegCombination> row;
    for (const auto& c : zi) row.push_back(lift(c));
    pd.z.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i) pd.y.push_back(SemifieldElement::generator(ctx, i));
  return Seed::initial(std::move(pd));
}

Run run_principal(const SeedData& data, std::span<const std::size_t> word, const MutationOptions& options) {
  return run_word(principal_seed(data), word, options);
}

LaurentPolynomial f_polynomial(const Seed& principal, std::size_t i) {
  require_principal(principal);
  if (i >= principal.rank()) throw IndexError("cluster index out of range");
  const auto n = principal.rank();
  const auto& xi = principal.x()[i];
  if (!xi.is_laurent()) throw NotPolynomial("x" + std::to_string(i + 1) + " is not a Laurent polynomial");
  std::vector<Term> terms;
  for (const auto& t : xi.numerator().terms()) {
    Term u{t.exponents, t.coefficient};
    std::fill(u.exponents.begin(), u.exponents.begin() + static_cast<std::ptrdiff_t>(n), 0);
    terms.push_back(std::move(u));
  }
  auto f = LaurentPolynomial::from_terms(xi.context(), std::move(terms));
  for (const auto& t : f.terms()) {
    if (t.coefficient.get_den() != 1) throw NotPolynomial("F-polynomial has a non-integer coefficient");
    for (std::size_t j = n; j < 2 * n; ++j) {
      if (t.exponents[j] < 0) throw NotPolynomial("F-polynomial has a negative exponent in u");
    }
  }
  return f;
}

LaurentPolynomial f_polynomial(const Run& principal, std::size_t t, std::size_t i) {
  return f_polynomial(principal.seeds.at(t), i);
}

SemifieldElement f_restricted_tilde(const LaurentPolynomial& f, std::size_t principal_rank,
                                    std::span<const SemifieldElement> y) {
  if (y.size() != principal_rank) throw DomainError("need one semifield element per principal generator");
  const auto& alg = *f.context();
  if (y.empty()) throw DomainError("empty principal rank");
  const auto& target = y.front().context();
  const std::size_t n = alg.cluster_rank();
  if (alg.generator_count() != principal_rank + target->rank()) {
    throw ContextError("F-polynomial generators do not match principal rank plus target semifield rank");
  }
  std::optional<SemifieldElement> acc;
  for (const auto& t : f.terms()) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t.exponents[j] != 0) throw NotPolynomial("F-polynomial depends on cluster variables");
    }
    if (t.coefficient.get_den() != 1 || sgn(t.coefficient) <= 0) {
      throw NotPolynomial("F-polynomial coefficient " + t.coefficient.get_str() + " is not a positive integer");
    }
    ExponentVector data(t.exponents.begin() + static_cast<std::ptrdiff_t>(n + principal_rank), t.exponents.end());
    SemifieldElement p = SemifieldElement::monomial(target, std::move(data));
    for (std::size_t j = 0; j < principal_rank; ++j) {
      const auto a = t.exponents[n + j];
      if (a != 0) p = otimes(p, pow(y[j], a));
    }
    p = m_fold_sum(mpz_class(t.coefficient.get_num()), p);
    acc = acc ? oplus(*acc, p) : p;
  }
  if (!acc) throw EmptyExchangeSum("F-polynomial is zero");
  return *acc;
}

std::vector<std::int64_t> c_vector(const Seed& principal, std::size_t i) {
  require_principal(principal);
  if (i >= principal.rank()) throw IndexError("cluster index out of range");
  const auto& e = principal.y()[i].exponents();
  const auto n = principal.rank();
  for (std::size_t j = n; j < e.size(); ++j) {
    if (e[j] != 0) throw DomainError("principal y-variable picked up a coefficient-data exponent");
  }
  return {e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<std::int64_t> c_vector(const Run& principal, std::size_t t, std::size_t i) {
  return c_vector(principal.seeds.at(t), i);
}

std::vector<std::int64_t> g_vector(const Seed& principal, const ExchangeMatrix& initial_b, std::size_t i) {
  require_principal(principal);
  const auto n = principal.rank();
  if (i >= n) throw IndexError("cluster index out of range");
  if (initial_b.size() != n) throw DomainError("initial exchange matrix has the wrong size");
  const auto& xi = principal.x()[i];
  if (!xi.is_laurent()) throw NotHomogeneous("x" + std::to_string(i + 1) + " is not a Laurent polynomial");
  std::optional<std::vector<std::int64_t>> degree;
  for (const auto& t : xi.numerator().terms()) {
    std::vector<std::int64_t> deg(t.exponents.begin(), t.exponents.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = t.exponents[n + j];
      if (a == 0) continue;
      for (std::size_t r = 0; r < n; ++r) deg[r] -= a * initial_b(r, j);
    }
    if (!degree) {
      degree = std::move(deg);
    } else if (*degree != deg) {
      throw NotHomogeneous("x" + std::to_string(i + 1) + " has terms of degree " + vector_string(*degree) + " and " +
                           vector_string(deg));
    }
  }
  if (!degree) throw NotHomogeneous("zero cluster variable");
  return *degree;
}

std::vector<std::int64_t> g_vector(const Run& principal, std::size_t t, std::size_t i) {
  return g_vector(principal.seeds.at(t), principal.seeds.front().b(), i);
}

std::size_t SeparationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
}

void SeparationReport::append(const SeparationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

std::string check_x_separation(const Seed& general_initial, const Seed& general, const Seed& principal,
                               const ExchangeMatrix& initial_b, std::size_t i, HatYConvention convention) {
  try {
    const auto n = general.rank();
    const auto& galg = general.algebra();
    const auto f = f_polynomial(principal, i);
    const auto g = g_vector(principal, initial_b, i);

    std::vector<RationalFunction> images;
    const auto& palg = principal.algebra();
    images.reserve(palg->size());
    for (std::size_t j = 0; j < n; ++j) images.push_back(RationalFunction::constant(galg, 1));
    for (std::size_t j = 0; j < n; ++j) images.push_back(hat_y(general_initial, j, convention));
    for (std::size_t l = 0; l < galg->generator_count(); ++l) images.push_back(RationalFunction::variable(galg, n + l));
    const auto f_hat = map_variables(RationalFunction(f), images, galg);

    const auto tropical = f_restricted_tilde(f, n, general_initial.y());
    ExponentVector xg(galg->size(), 0);
    std::copy(g.begin(), g.end(), xg.begin());
    const RationalFunction expected =
        RationalFunction(LaurentPolynomial::monomial(galg, xg)) * f_hat / embed_semifield(tropical, galg);
    if (expected == general.x()[i]) return {};
    return "x" + std::to_string(i + 1) + ": expected " + to_string(expected) + ", got " + to_string(general.x()[i]);
  } catch (const Error& e) {
    return "x" + std::to_string(i + 1) + ": " + e.what();
  }
}

std::string check_y_separation(const Seed& general_initial, const Seed& general, const Seed& principal,
                               std::size_t i) {
  try {
    const auto n = general.rank();
    const auto& y0 = general_initial.y();
    const auto c = c_vector(principal, i);
    SemifieldElement expected = SemifieldElement::identity(general.semifield());
    for (std::size_t j = 0; j < n; ++j) {
      expected = otimes(expected, pow(y0[j], c[j]));
      const auto bji = general.b()(j, i);
      if (bji != 0) expected = otimes(expected, pow(f_restricted_tilde(f_polynomial(principal, j), n, y0), bji));
    }
    if (expected == general.y()[i]) return {};
    return "y" + std::to_string(i + 1) + ": expected " + to_string(expected) + ", got " + to_string(general.y()[i]);
  } catch (const Error& e) {
    return "y" + std::to_string(i + 1) + ": " + e.what();
  }
}

namespace {

void require_matching(const Run& general, const Run& principal) {
  if (general.word != principal.word || general.seeds.size() != principal.seeds.size()) {
    throw DomainError("general and principal runs follow different words");
  }
  const auto& g0 = general.seeds.front();
  const auto& p0 = principal.seeds.front();
  if (!(g0.b() == p0.b()) || g0.d() != p0.d()) throw DomainError("general and principal runs start from different data");
}

}  // namespace

SeparationReport verify_x_separation(const Run& general, const Run& principal, HatYConvention convention) {
  require_matching(general, principal);
  SeparationReport report;
  for (std::size_t t = 0; t < general.seeds.size(); ++t) {
    Word prefix(general.word.begin(), general.word.begin() + static_cast<std::ptrdiff_t>(t));
    for (std::size_t i = 0; i < general.seeds[t].rank(); ++i) {
      auto witness = check_x_separation(general.seeds.front(), general.seeds[t], principal.seeds[t],
                                        principal.seeds.front().b(), i, convention);
      report.entries.push_back({prefix, i, 'x', witness.empty(), std::move(witness)});
    }
  }
  return report;
}

SeparationReport verify_y_separation(const Run& general, const Run& principal) {
  require_matching(general, principal);
  SeparationReport report;
  for (std::size_t t = 0; t < general.seeds.size(); ++t) {
    Word prefix(general.word.begin(), general.word.begin() + static_cast<std::ptrdiff_t>(t));
    for (std::size_t i = 0; i < general.seeds[t].rank(); ++i) {
      auto witness = check_y_separation(general.seeds.front(), general.seeds[t], principal.seeds[t], i);
      report.entries.push_back({prefix, i, 'y', witness.empty(), std::move(witness)});
    }
  }
  return report;
}

SeparationReport verify_separation_tree(const SeedData& general, std::size_t depth, const MutationOptions& options,
                                        HatYConvention formula_convention) {
  SeparationReport report;
  const Seed g0 = Seed::initial(general);
  const Seed p0 = principal_seed(general);
  struct Node {
    Seed general;
    Seed principal;
  };
  try {
    walk_reduced_words(
        general.rank, depth, Node{g0, p0},
        [&](const Node& node, std::size_t k) {
          return Node{mutate(node.general, k, options), mutate(node.principal, k, options)};
        },
        [&](const Word& word, const Node& node) {
          for (std::size_t i = 0; i < general.rank; ++i) {
            auto wx = check_x_separation(g0, node.general, node.principal, p0.b(), i, formula_convention);
            report.entries.push_back({word, i, 'x', wx.empty(), std::move(wx)});
            auto wy = check_y_separation(g0, node.general, node.principal, i);
            report.entries.push_back({word, i, 'y', wy.empty(), std::move(wy)});
          }
        });
  } catch (const Error& e) {
    report.entries.push_back({{}, 0, 'x', false, std::string("mutation failed: ") + e.what()});
  }
  return report;
}

std::string word_to_string(std::span<const std::size_t> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i] + 1);
  }
  return out;
}

Word parse_word(const std::string& text, std::size_t rank) {
  Word out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) throw ParseError("word", 0, "'" + token + "' is not an integer");
    if (v < 1 || static_cast<unsigned long long>(v) > rank) {
      throw IndexError("mutation index " + token + " outside 1.." + std::to_string(rank));
    }
    out.push_back(static_cast<std::size_t>(v - 1));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\n') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return out;
}

}  // namespace gencluster
