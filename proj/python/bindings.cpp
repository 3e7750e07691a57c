#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gencluster/orbit.hpp"
#include "gencluster/seed_io.hpp"
#include "gencluster/verify.hpp"

namespace py = pybind11;
using namespace gencluster;

namespace {

// Python words are 1-based, like the CLI.
Word to_word(const std::vector<long>& letters, std::size_t rank) {
  Word w;
  for (long k : letters) {
    if (k < 1 || static_cast<std::size_t>(k) > rank) {
      throw IndexError("mutation direction " + std::to_string(k) + " outside 1.." + std::to_string(rank));
    }
    w.push_back(static_cast<std::size_t>(k - 1));
  }
  return w;
}

std::vector<std::vector<std::int64_t>> matrix(const Seed& s) {
  std::vector<std::vector<std::int64_t>> out(s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i) {
    for (std::size_t j = 0; j < s.rank(); ++j) out[i].push_back(s.b()(i, j));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact mutation engine for generalized cluster seeds";

  static py::exception<Error> error(m, "Error");
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<InvalidSeed> invalid_seed(m, "InvalidSeed", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidSeed& e) {
      invalid_seed((to_string(e.issue()) + ": " + e.what()).c_str());
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<Seed>(m, "Seed")
      .def_static("from_json", [](const std::string& text) { return Seed::initial(parse_seed_document(text)); },
                  py::arg("text"))
      .def_static("from_file", [](const std::string& path) { return Seed::initial(load_seed_file(path)); },
                  py::arg("path"))
      .def_property_readonly("rank", &Seed::rank)
      .def_property_readonly("b", &matrix)
      .def_property_readonly("d", [](const Seed& s) { return s.d(); })
      .def_property_readonly("x", [](const Seed& s) {
        std::vector<std::string> out;
        for (const auto& x : s.x()) out.push_back(to_string(x));
        return out;
      })
      .def_property_readonly("y", [](const Seed& s) {
        std::vector<ExponentVector> out;
        for (const auto& y : s.y()) out.push_back(y.exponents());
        return out;
      })
      .def_property_readonly("z", [](const Seed& s) {
        std::vector<std::vector<std::string>> out;
        for (const auto& zi : s.z()) {
          out.emplace_back();
          for (const auto& c : zi) out.back().push_back(to_string(c));
        }
        return out;
      })
      .def(
          "mutate", [](const Seed& s, long k, int epsilon) { return mutate_along(s, to_word({k}, s.rank()), {epsilon}); },
          py::arg("k"), py::arg("epsilon") = 1, "Mutate in direction k (1-based)")
      .def(
          "mutate_along",
          [](const Seed& s, const std::vector<long>& word, int epsilon) {
            return mutate_along(s, to_word(word, s.rank()), {epsilon});
          },
          py::arg("word"), py::arg("epsilon") = 1)
      .def("to_json", [](const Seed& s) { return render_seed_json(s); })
      .def("__str__", &render_seed_text)
      .def("__eq__", [](const Seed& a, const Seed& b) { return a == b; });

  m.def(
      "fpoly",
      [](const Seed& seed, const std::vector<long>& letters, int epsilon) {
        const auto data = seed.data();
        const auto run = run_principal(data, to_word(letters, data.rank), {epsilon});
        py::list rows;
        for (std::size_t t = 0; t < run.seeds.size(); ++t) {
          for (std::size_t i = 0; i < data.rank; ++i) {
            py::dict row;
            row["t"] = t;
            row["i"] = i + 1;
            row["F"] = to_string(f_polynomial(run, t, i));
            row["c"] = c_vector(run, t, i);
            row["g"] = g_vector(run, t, i);
            rows.append(row);
          }
        }
        return rows;
      },
      py::arg("seed"), py::arg("word"), py::arg("epsilon") = 1,
      "F-polynomials, c- and g-vectors of the principal run re-rooted at `seed`");

  m.def(
      "orbit",
      [](const Seed& seed, std::size_t max_depth, const std::string& mode, std::size_t threads, std::size_t max_nodes) {
        OrbitOptions o;
        o.max_depth = max_depth;
        if (mode == "labeled") {
          o.mode = OrbitMode::labeled;
        } else if (mode == "unlabeled") {
          o.mode = OrbitMode::unlabeled;
        } else {
          throw DomainError("mode must be labeled or unlabeled");
        }
        o.threads = threads;
        o.max_nodes = max_nodes;
        OrbitGraph g;
        {
          py::gil_scoped_release release;
          g = explore_orbit(seed, o);
        }
        py::dict out;
        out["nodes"] = g.nodes.size();
        out["edges"] = g.edges.size();
        out["clusters"] = g.cluster_count();
        out["closed"] = g.closed;
        out["truncated"] = g.truncated;
        out["dot"] = orbit_to_dot(g);
        out["text"] = orbit_to_text(g);
        return out;
      },
      py::arg("seed"), py::arg("max_depth") = 4, py::arg("mode") = "labeled", py::arg("threads") = 1,
      py::arg("max_nodes") = 20000);

  m.def(
      "verify",
      [](const Seed& seed, const std::string& suite, std::size_t budget) {
        auto s = parse_suite(suite);
        if (!s) throw DomainError("unknown suite '" + suite + "'");
        VerifyOptions o;
        o.budget = budget;
        const auto report = run_suite(*s, seed.data(), o);
        py::dict out;
        out["passed"] = report.passed();
        out["checks"] = report.checks;
        out["failures"] = report.failures.size();
        out["report"] = report.render();
        return out;
      },
      py::arg("seed"), py::arg("suite"), py::arg("budget") = 0);
}
