#include "gencluster/verify.hpp"

#include <optional>
#include <sstream>

namespace gencluster {

namespace {

constexpr std::size_t kReportedFailures = 20;

struct Walker {
  std::size_t budget;
  MutationOptions options;
  VerifyReport& report;

  // Visits every seed reached by a reduced word of length <= budget. A failing
  // mutation is recorded against the word that produced it.
  template <class Visit>
  void run(const Seed& root, Visit&& visit) {
    Word word;
    auto recurse = [&](auto&& self, const Seed& seed) -> void {
      ++report.seeds;
      visit(static_cast<const Word&>(word), seed);
      if (word.size() == budget) return;
      for (std::size_t k = 0; k < seed.rank(); ++k) {
        if (!word.empty() && word.back() == k) continue;
        std::optional<Seed> child;
        try {
          child = mutate(seed, k, options);
        } catch (const Error& e) {
          report.failures.push_back({word, k, std::string("mutation failed: ") + e.what()});
          continue;
        }
        word.push_back(k);
        self(self, *child);
        word.pop_back();
      }
    };
    recurse(recurse, root);
  }
};

void check(VerifyReport& report, const Word& word, std::size_t index, const std::string& witness) {
  ++report.checks;
  if (!witness.empty()) report.failures.push_back({word, index, witness});
}

template <class F>
std::string guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return e.what();
  }
}

void involution(const SeedData& data, const VerifyOptions& opt, VerifyReport& report) {
  Walker{report.budget, opt.mutation, report}.run(Seed::initial(data), [&](const Word& word, const Seed& s) {
    for (std::size_t k = 0; k < s.rank(); ++k) {
      for (int e1 : {+1, -1}) {
        for (int e2 : {+1, -1}) {
          check(report, word, k, guarded([&]() -> std::string {
                  const MutationOptions o1{e1, opt.mutation.hat_y}, o2{e2, opt.mutation.hat_y};
                  if (mutate(mutate(s, k, o1), k, o2) == s) return {};
                  return "mu^" + std::string(e2 > 0 ? "+" : "-") + " mu^" + (e1 > 0 ? "+" : "-") +
                         " is not the identity in direction " + std::to_string(k + 1);
                }));
        }
      }
    }
  });
}

void epsilon(const SeedData& data, const VerifyOptions& opt, VerifyReport& report) {
  Walker{report.budget, opt.mutation, report}.run(Seed::initial(data), [&](const Word& word, const Seed& s) {
    for (std::size_t k = 0; k < s.rank(); ++k) {
      check(report, word, k, guarded([&]() -> std::string {
              const auto plus = mutate(s, k, MutationOptions{+1, opt.mutation.hat_y});
              const auto minus = mutate(s, k, MutationOptions{-1, opt.mutation.hat_y});
              if (plus == minus) return {};
              for (std::size_t i = 0; i < s.rank(); ++i) {
                if (!(plus.x()[i] == minus.x()[i])) {
                  return "x" + std::to_string(i + 1) + ": " + to_string(plus.x()[i]) + " vs " + to_string(minus.x()[i]);
                }
                if (!(plus.y()[i] == minus.y()[i])) {
                  return "y" + std::to_string(i + 1) + ": " + to_string(plus.y()[i]) + " vs " + to_string(minus.y()[i]);
                }
              }
              return "B, d or z differ";
            }));
    }
  });
}

void laurent(const SeedData& data, const VerifyOptions& opt, VerifyReport& report) {
  Walker{report.budget, opt.mutation, report}.run(Seed::initial(data), [&](const Word& word, const Seed& s) {
    for (std::size_t i = 0; i < s.rank(); ++i) {
      check(report, word, i, guarded([&]() -> std::string {
              try {
                certify_laurent(s.x()[i]);
                return {};
              } catch (const NonExactDivision& e) {
                return "x" + std::to_string(i + 1) + " leaves remainder " + to_string(e.remainder());
              }
            }));
    }
  });
}

void separation(const SeedData& data, const VerifyOptions& opt, VerifyReport& report) {
  const auto tree = verify_separation_tree(data, report.budget, opt.mutation, opt.separation_formula);
  std::size_t last_word_count = 0;
  const Word* last = nullptr;
  for (const auto& e : tree.entries) {
    if (!last || *last != e.word) {
      ++last_word_count;
      last = &e.word;
    }
    ++report.checks;
    if (!e.pass) report.failures.push_back({e.word, e.index, std::string(1, e.kind) + ": " + e.witness});
  }
  report.seeds = last_word_count;
}

void coherence(const SeedData& data, const VerifyOptions& opt, VerifyReport& report) {
  if (data.data_generators != 0) throw DomainError("coherence needs plain seed data");
  const Seed root = principal_seed(data);
  const auto n = data.rank;
  Walker{report.budget, opt.mutation, report}.run(root, [&](const Word& word, const Seed& s) {
    for (std::size_t i = 0; i < n; ++i) {
      check(report, word, i, guarded([&]() -> std::string {
              const auto f = f_polynomial(s, i);
              const auto& t = f.terms();
              // The constant term is the lex-smallest; every other term has a
              // positive u-exponent.
              std::size_t constants = 0;
              for (const auto& term : t) {
                bool u_free = true;
                for (std::size_t j = n; j < 2 * n; ++j) u_free = u_free && term.exponents[j] == 0;
                if (!u_free) continue;
                ++constants;
                bool one = term.coefficient == 1;
                for (std::size_t j = 2 * n; j < term.exponents.size(); ++j) one = one && term.exponents[j] == 0;
                if (!one) return "F" + std::to_string(i + 1) + " = " + to_string(f) + " has a u-free term other than 1";
              }
              if (constants != 1) return "F" + std::to_string(i + 1) + " = " + to_string(f) + " has no constant term 1";
              const auto c = c_vector(s, i);
              bool pos = false, neg = false;
              for (auto v : c) {
                pos = pos || v > 0;
                neg = neg || v < 0;
              }
              if (pos == neg) return "c" + std::to_string(i + 1) + " is zero or not sign-coherent";
              g_vector(s, root.b(), i);
              return {};
            }));
    }
  });
}

}  // namespace

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::involution: return "involution";
    case Suite::epsilon: return "epsilon";
    case Suite::laurent: return "laurent";
    case Suite::separation: return "separation";
    case Suite::coherence: return "coherence";
  }
  return "?";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{Suite::involution, Suite::epsilon, Suite::laurent, Suite::separation,
                                         Suite::coherence};
  return suites;
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (auto s : all_suites()) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::size_t default_budget(Suite suite) {
  switch (suite) {
    case Suite::involution: return 3;
    case Suite::epsilon: return 3;
    case Suite::laurent: return 6;
    case Suite::separation: return 4;
    case Suite::coherence: return 5;
  }
  return 3;
}

std::string VerifyReport::render() const {
  std::ostringstream os;
  os << "suite=" << to_string(suite) << '\n';
  os << "budget=" << budget << '\n';
  os << "seeds=" << seeds << '\n';
  os << "checks=" << checks << '\n';
  os << "failures=" << failures.size() << '\n';
  os << "result=" << (passed() ? "pass" : "fail") << '\n';
  for (std::size_t i = 0; i < failures.size() && i < kReportedFailures; ++i) {
    const auto& f = failures[i];
    os << "failure word=[" << word_to_string(f.word) << "] index=" << f.index + 1 << " witness=" << f.witness << '\n';
  }
  return os.str();
}

VerifyReport run_suite(Suite suite, const SeedData& data, const VerifyOptions& options) {
  require_valid(data);
  VerifyReport report;
  report.suite = suite;
  report.budget = options.budget ? options.budget : default_budget(suite);
  switch (suite) {
    case Suite::involution: involution(data, options, report); break;
    case Suite::epsilon: epsilon(data, options, report); break;
    case Suite::laurent: laurent(data, options, report); break;
    case Suite::separation: separation(data, options, report); break;
    case Suite::coherence: coherence(data, options, report); break;
  }
  return report;
}

}  // namespace gencluster
