#pragma once

#include <string>

#include "gencluster/seed.hpp"

namespace gencluster {

/// Parses a JSON seed document with fields n, m, semifield ("trivial" |
/// "tropical"), B (row-major rows), d, z, y and optional labels / mode.
/// z[i][s] is a list of {"exp": [...], "mult": k} terms; the empty list is 0.
/// Throws ParseError for malformed documents and InvalidSeed for bad data.
SeedData parse_seed_document(const std::string& text);
SeedData load_seed_file(const std::string& path);

/// Canonical rendering; parse_seed_document(render_seed_document(s)) == s and the
/// rendering of a parsed canonical document is byte-identical to it.
std::string render_seed_document(const SeedData& data);

/// Human-readable rendering of a (possibly mutated) seed, x in initial variables.
std::string render_seed_text(const Seed& seed);
/// The seed document of seed.data() with an extra "x" array of strings.
std::string render_seed_json(const Seed& seed);

bool operator==(const SeedData& a, const SeedData& b);

}  // namespace gencluster
