#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lagrangian/hypergraph.hpp"

namespace lagrangian {

/// Accepts either `{"n": 4, "edges": [[1,2],[2,3,4]]}` or the text form: the
/// first line holds n, every later nonempty line is one whitespace-separated
/// edge, and lines starting with '#' are comments. The format is detected
/// from the first non-blank character.
Hypergraph parse_hypergraph(std::string_view text);

Hypergraph hypergraph_from_json(const nlohmann::json& j);

Hypergraph read_hypergraph(const std::filesystem::path& path, const Limits& limits = {});

/// Canonical JSON: edges by cardinality, then lexicographic.
nlohmann::json to_json(const Hypergraph& h);
std::string to_text(const Hypergraph& h);

/// FNV-1a (64 bit) over the canonical text form, as 16 hex digits.
std::string canonical_hash(const Hypergraph& h);

void write_hypergraph(const Hypergraph& h, const std::filesystem::path& path, bool text_format);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace lagrangian
