#include "gencluster/commands.hpp"

#include <sstream>

#include "gencluster/orbit.hpp"
#include "gencluster/seed_io.hpp"
#include "gencluster/verify.hpp"

namespace gencluster {

namespace {

std::string error_kind(const Error& e) {
  if (auto* s = dynamic_cast<const InvalidSeed*>(&e)) return "InvalidSeed(" + to_string(s->issue()) + ")";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const IndexError*>(&e)) return "IndexError";
  if (dynamic_cast<const EmptyExchangeSum*>(&e)) return "EmptyExchangeSum";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const NonExactDivision*>(&e)) return "NonExactDivision";
  return "Error";
}

CommandResult input_error(const std::string& message) { return {2, "", "error: " + message + "\n"}; }

template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::string where;
    if (!e.field().empty()) where += " field " + e.field();
    if (e.line() != 0) where += " line " + std::to_string(e.line());
    return input_error("ParseError" + where + ": " + e.what());
  } catch (const Error& e) {
    return input_error(error_kind(e) + ": " + e.what());
  }
}

void require_epsilon(int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw DomainError("--epsilon must be +1 or -1");
}

std::string vec(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

CommandResult cmd_mutate(const MutateRequest& request) {
  return guarded([&]() -> CommandResult {
    require_epsilon(request.epsilon);
    if (request.format != "text" && request.format != "json") {
      throw DomainError("mutate supports --format text or json");
    }
    const auto data = load_seed_file(request.seed_path);
    const auto word = parse_word(request.word, data.rank);
    const auto seed = mutate_along(Seed::initial(data), word, MutationOptions{request.epsilon, HatYConvention::column});
    const auto body = request.format == "json" ? render_seed_json(seed) : render_seed_text(seed);
    return {0, body, ""};
  });
}

CommandResult cmd_orbit(const OrbitRequest& request) {
  return guarded([&]() -> CommandResult {
    require_epsilon(request.epsilon);
    OrbitOptions options;
    if (request.mode == "labeled") {
      options.mode = OrbitMode::labeled;
    } else if (request.mode == "unlabeled") {
      options.mode = OrbitMode::unlabeled;
    } else {
      throw DomainError("--mode must be labeled or unlabeled");
    }
    if (request.format != "text" && request.format != "dot" && request.format != "csv" &&
        request.format != "json") {
      throw DomainError("orbit supports --format text, dot, csv or json");
    }
    options.max_depth = request.max_depth;
    options.epsilon = request.epsilon;
    options.threads = request.threads;
    options.max_nodes = request.max_nodes;
    const auto graph = explore_orbit(Seed::initial(load_seed_file(request.seed_path)), options);
    if (request.format == "dot") return {0, orbit_to_dot(graph), ""};
    if (request.format == "csv") return {0, orbit_to_csv(graph), ""};
    if (request.format == "json") return {0, orbit_to_json(graph), ""};
    return {0, orbit_to_text(graph), ""};
  });
}

CommandResult cmd_fpoly(const FpolyRequest& request) {
  return guarded([&]() -> CommandResult {
    require_epsilon(request.epsilon);
    if (request.format != "text" && request.format != "csv") throw DomainError("fpoly supports --format text or csv");
    const auto data = load_seed_file(request.seed_path);
    const auto word = parse_word(request.word, data.rank);
    const auto run = run_principal(data, word, MutationOptions{request.epsilon, HatYConvention::column});
    std::ostringstream os;
    if (request.format == "csv") os << "t,word,i,F,c,g\n";
    for (std::size_t t = 0; t < run.seeds.size(); ++t) {
      const auto prefix = word_to_string(std::span(word).first(t));
      for (std::size_t i = 0; i < data.rank; ++i) {
        const auto f = to_string(f_polynomial(run, t, i));
        const auto c = vec(c_vector(run, t, i));
        const auto g = vec(g_vector(run, t, i));
        if (request.format == "csv") {
          os << t << ',' << csv_field(prefix) << ',' << i + 1 << ',' << csv_field(f) << ',' << csv_field(c) << ','
             << csv_field(g) << '\n';
        } else {
          os << "t=" << t << " word=[" << prefix << "] i=" << i + 1 << " F=" << f << " c=" << c << " g=" << g << '\n';
        }
      }
    }
    return {0, os.str(), ""};
  });
}

CommandResult cmd_verify(const VerifyRequest& request) {
  return guarded([&]() -> CommandResult {
    require_epsilon(request.epsilon);
    std::vector<Suite> suites;
    if (request.suite == "all") {
      suites = all_suites();
    } else if (auto s = parse_suite(request.suite)) {
      suites.push_back(*s);
    } else {
      throw DomainError("unknown suite '" + request.suite +
                        "' (expected all, involution, epsilon, laurent, separation or coherence)");
    }
    VerifyOptions options;
    options.budget = request.budget;
    options.mutation.epsilon = request.epsilon;
    if (request.hat_y == "row") {
      options.separation_formula = HatYConvention::row;
    } else if (request.hat_y != "column") {
      throw DomainError("--hat-y must be column or row");
    }
    const auto data = load_seed_file(request.seed_path);
    std::string out;
    bool ok = true;
    for (auto suite : suites) {
      const auto report = run_suite(suite, data, options);
      out += report.render();
      ok = ok && report.passed();
    }
    out += std::string("overall=") + (ok ? "pass" : "fail") + "\n";
    return {ok ? 0 : 1, out, ""};
  });
}

}  // namespace gencluster
