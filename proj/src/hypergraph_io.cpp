#include "lagrangian/hypergraph_io.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lagrangian/error.hpp"

namespace lagrangian {

namespace {

Hypergraph parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  bool have_n = false;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long long> values;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
      }
    }
    if (values.empty()) continue;
    if (!have_n) {
      if (values.size() != 1)
        throw InputError("line " + std::to_string(line_no) + ": expected the vertex count alone");
      n = static_cast<int>(values[0]);
      have_n = true;
      continue;
    }
    Edge e;
    for (auto v : values) e.push_back(static_cast<Vertex>(v));
    edges.push_back(std::move(e));
  }
  if (!have_n) throw InputError("missing vertex count");
  return validate(n, std::move(edges));
}

}  // namespace

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InputError("hypergraph JSON needs \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw InputError("\"n\" must be an integer");
  if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array()) throw InputError("each edge must be an array of vertices");
    Edge edge;
    for (const auto& v : e) {
      if (!v.is_number_integer()) throw InputError("vertices must be integers");
      edge.push_back(v.get<Vertex>());
    }
    edges.push_back(std::move(edge));
  }
  return validate(j["n"].get<int>(), std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return hypergraph_from_json(j);
  }
  return parse_text(text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Hypergraph read_hypergraph(const std::filesystem::path& path, const Limits& limits) {
  auto h = parse_hypergraph(read_file(path));
  check_limits(h, limits);
  return h;
}

nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : h.all_edges()) edges.push_back(e);
  return {{"n", h.order()}, {"edges", edges}};
}

std::string to_text(const Hypergraph& h) {
  std::string out = std::to_string(h.order()) + "\n";
  for (const auto& e : h.all_edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

std::string canonical_hash(const Hypergraph& h) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : to_text(h)) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

void write_hypergraph(const Hypergraph& h, const std::filesystem::path& path, bool text_format) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  if (text_format) {
    out << to_text(h);
  } else {
    out << to_json(h).dump() << '\n';
  }
}

}  // namespace lagrangian
