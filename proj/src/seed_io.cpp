#include "gencluster/seed_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace gencluster {

namespace {

using json = nlohmann::json;

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

const json& field(const json& obj, const std::string& name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(name, 0, "missing field");
  return *it;
}

std::int64_t to_int(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw ParseError(where, 0, "integer does not fit in 64 bits");
    }
    return v.get<std::int64_t>();
  }
  throw ParseError(where, 0, "expected an integer");
}

mpz_class to_bigint(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? mpz_class(std::to_string(v.get<std::uint64_t>()))
                                  : mpz_class(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    mpz_class out;
    if (s.empty() || out.set_str(s, 10) != 0) throw ParseError(where, 0, "'" + s + "' is not a decimal integer");
    return out;
  }
  throw ParseError(where, 0, "expected an integer or a decimal string");
}

const json& array(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where, 0, "expected an array");
  return v;
}

ExponentVector exponents(const json& v, std::size_t length, const std::string& where) {
  array(v, where);
  if (v.size() != length) {
    throw ParseError(where, 0, "expected " + std::to_string(length) + " exponents, got " + std::to_string(v.size()));
  }
  ExponentVector e;
  for (std::size_t j = 0; j < v.size(); ++j) e.push_back(to_int(v[j], where + "[" + std::to_string(j + 1) + "]"));
  return e;
}

std::string bigint_json(const mpz_class& m) {
  if (m.fits_slong_p()) return m.get_str();
  return "\"" + m.get_str() + "\"";
}

std::string int_list(const std::vector<std::int64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

std::string combination_json(const NonNegCombination& c) {
  std::string out = "[";
  bool first = true;
  for (const auto& [e, m] : c.terms()) {
    out += first ? "" : ", ";
    first = false;
    out += "{\"exp\": " + int_list(e) + ", \"mult\": " + bigint_json(m) + "}";
  }
  return out + "]";
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string document_body(const SeedData& data) {
  const auto n = data.rank;
  const auto& ctx = *data.semifield;
  std::ostringstream os;
  os << "{\n";
  os << "  \"n\": " << n << ",\n";
  os << "  \"m\": " << ctx.rank() << ",\n";
  os << "  \"semifield\": \"" << (ctx.kind() == SemifieldKind::trivial ? "trivial" : "tropical") << "\",\n";
  const auto defaults = SemifieldContext::tropical(ctx.rank(), "u")->generator_names();
  if (ctx.kind() == SemifieldKind::tropical && ctx.generator_names() != defaults) {
    os << "  \"labels\": [";
    for (std::size_t j = 0; j < ctx.rank(); ++j) os << (j ? ", " : "") << quoted(ctx.generator_names()[j]);
    os << "],\n";
  }
  if (!(data.mode == SeedMode::strict())) {
    os << "  \"mode\": " << (data.mode == SeedMode::relaxed() ? "\"relaxed\"" : "{\"normalized\": " +
          std::string(data.mode.normalized ? "true" : "false") + ", \"reciprocal\": " +
          std::string(data.mode.reciprocal ? "true" : "false") + "}") << ",\n";
  }
  os << "  \"B\": [";
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> row(data.b.begin() + static_cast<std::ptrdiff_t>(i * n),
                                  data.b.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    os << (i ? ", " : "") << int_list(row);
  }
  os << "],\n";
  os << "  \"d\": " << int_list(data.d) << ",\n";
  os << "  \"z\": [";
  for (std::size_t i = 0; i < n; ++i) {
    os << (i ? "," : "") << "\n    [";
    for (std::size_t s = 0; s < data.z[i].size(); ++s) os << (s ? ", " : "") << combination_json(data.z[i][s]);
    os << "]";
  }
  os << (n ? "\n  " : "") << "],\n";
  os << "  \"y\": [";
  for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << int_list(data.y[i].exponents());
  os << "]";
  return os.str();
}

}  // namespace

SeedData parse_seed_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", line_of(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  if (!doc.is_object()) throw ParseError("", 1, "seed document must be a JSON object");

  const auto n_raw = to_int(field(doc, "n"), "n");
  const auto m_raw = to_int(field(doc, "m"), "m");
  if (n_raw < 0 || n_raw > 64) throw ParseError("n", 0, "rank must lie in 0..64");
  if (m_raw < 0 || m_raw > 64) throw ParseError("m", 0, "semifield rank must lie in 0..64");
  const auto n = static_cast<std::size_t>(n_raw);
  const auto m = static_cast<std::size_t>(m_raw);

  const auto& kind = field(doc, "semifield");
  if (!kind.is_string()) throw ParseError("semifield", 0, "expected \"trivial\" or \"tropical\"");
  SemifieldContextPtr ctx;
  if (kind == "trivial") {
    if (m != 0) throw ParseError("m", 0, "the trivial semifield has rank 0");
    ctx = SemifieldContext::trivial();
  } else if (kind == "tropical") {
    if (auto it = doc.find("labels"); it != doc.end()) {
      array(*it, "labels");
      if (it->size() != m) throw ParseError("labels", 0, "expected " + std::to_string(m) + " labels");
      std::vector<std::string> names;
      for (const auto& l : *it) {
        if (!l.is_string() || l.get_ref<const std::string&>().empty()) throw ParseError("labels", 0, "labels must be non-empty strings");
        names.push_back(l.get<std::string>());
      }
      ctx = SemifieldContext::tropical(std::move(names));
    } else {
      ctx = SemifieldContext::tropical(m, "u");
    }
  } else {
    throw ParseError("semifield", 0, "unknown semifield kind " + kind.dump());
  }

  SeedData data;
  data.semifield = ctx;
  data.rank = n;

  if (auto it = doc.find("mode"); it != doc.end()) {
    if (*it == "strict") {
      data.mode = SeedMode::strict();
    } else if (*it == "relaxed") {
      data.mode = SeedMode::relaxed();
    } else if (it->is_object()) {
      const auto& norm = field(*it, "normalized");
      const auto& reci = field(*it, "reciprocal");
      if (!norm.is_boolean() || !reci.is_boolean()) throw ParseError("mode", 0, "flags must be booleans");
      data.mode = SeedMode{norm.get<bool>(), reci.get<bool>()};
    } else {
      throw ParseError("mode", 0, "expected \"strict\", \"relaxed\" or an object of flags");
    }
  }

  const auto& b = array(field(doc, "B"), "B");
  if (b.size() != n) throw ParseError("B", 0, "expected " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < n; ++i) {
    const auto where = "B[" + std::to_string(i + 1) + "]";
    const auto& row = array(b[i], where);
    if (row.size() != n) throw ParseError(where, 0, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) data.b.push_back(to_int(row[j], where + "[" + std::to_string(j + 1) + "]"));
  }

  const auto& d = array(field(doc, "d"), "d");
  if (d.size() != n) throw ParseError("d", 0, "expected " + std::to_string(n) + " degrees");
  for (std::size_t i = 0; i < n; ++i) data.d.push_back(to_int(d[i], "d[" + std::to_string(i + 1) + "]"));

  const auto& z = array(field(doc, "z"), "z");
  if (z.size() != n) throw ParseError("z", 0, "expected " + std::to_string(n) + " coefficient tuples");
  for (std::size_t i = 0; i < n; ++i) {
    const auto where = "z[" + std::to_string(i + 1) + "]";
    std::vector<NonNegCombination> tuple;
    for (std::size_t s = 0; s < array(z[i], where).size(); ++s) {
      const auto ws = where + "[" + std::to_string(s) + "]";
      auto c = NonNegCombination::zero(ctx);
      for (const auto& t : array(z[i][s], ws)) {
        if (!t.is_object()) throw ParseError(ws, 0, "terms are objects {\"exp\": [...], \"mult\": k}");
        auto e = exponents(field(t, "exp"), m, ws + ".exp");
        auto mult = to_bigint(field(t, "mult"), ws + ".mult");
        if (sgn(mult) <= 0) throw ParseError(ws + ".mult", 0, "multiplicities must be positive");
        c.add_term(SemifieldElement::monomial(ctx, std::move(e)), mult);
      }
      tuple.push_back(std::move(c));
    }
    data.z.push_back(std::move(tuple));
  }

  const auto& y = array(field(doc, "y"), "y");
  if (y.size() != n) throw ParseError("y", 0, "expected " + std::to_string(n) + " exponent vectors");
  for (std::size_t i = 0; i < n; ++i) {
    data.y.push_back(SemifieldElement::monomial(ctx, exponents(y[i], m, "y[" + std::to_string(i + 1) + "]")));
  }

  require_valid(data);
  return data;
}

SeedData load_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", 0, "cannot open seed file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_seed_document(buffer.str());
}

std::string render_seed_document(const SeedData& data) { return document_body(data) + "\n}\n"; }

std::string render_seed_json(const Seed& seed) {
  std::string out = document_body(seed.data()) + ",\n  \"x\": [";
  for (std::size_t i = 0; i < seed.rank(); ++i) out += (i ? ", " : "") + quoted(to_string(seed.x()[i]));
  return out + "]\n}\n";
}

std::string render_seed_text(const Seed& seed) {
  const auto n = seed.rank();
  std::ostringstream os;
  os << "rank: " << n << '\n';
  os << "semifield: " << (seed.semifield()->kind() == SemifieldKind::trivial ? "trivial" : "tropical");
  for (const auto& g : seed.semifield()->generator_names()) os << ' ' << g;
  os << '\n';
  os << "B: [";
  for (std::size_t i = 0; i < n; ++i) {
    os << (i ? ", " : "") << '[';
    for (std::size_t j = 0; j < n; ++j) os << (j ? ", " : "") << seed.b()(i, j);
    os << ']';
  }
  os << "]\n";
  os << "d: " << int_list(seed.d()) << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    os << 'z' << i + 1 << ": (";
    for (std::size_t s = 0; s < seed.z()[i].size(); ++s) os << (s ? ", " : "") << to_string(seed.z()[i][s]);
    os << ")\n";
  }
  for (std::size_t i = 0; i < n; ++i) os << 'x' << i + 1 << ": " << to_string(seed.x()[i]) << '\n';
  for (std::size_t i = 0; i < n; ++i) os << 'y' << i + 1 << ": " << to_string(seed.y()[i]) << '\n';
  return os.str();
}

bool operator==(const SeedData& a, const SeedData& b) {
  return same_context(a.semifield, b.semifield) && a.rank == b.rank && a.b == b.b && a.d == b.d && a.z == b.z &&
         a.y == b.y && a.data_generators == b.data_generators && a.mode == b.mode;
}

}  // namespace gencluster
