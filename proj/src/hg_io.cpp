#include "hypermatch/hg_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace hypermatch {

namespace {

std::vector<long> parse_integers(std::string_view line, int line_no) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
      ++pos;
    }
    if (pos >= line.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' &&
                              *ptr != '\t' && *ptr != '\r')) {
      throw ParseError("line " + std::to_string(line_no) + ": expected base-10 integers");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<long> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    header = parse_integers(line, line_no);
    break;
  }
  if (header.size() != 3) throw ParseError("missing or malformed header \"k n m\"");
  const long k = header[0], n = header[1], m = header[2];
  if (k < 2 || n < k || m < 0) throw ParseError("header values out of range");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (static_cast<long>(edges.size()) < m && std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto ids = parse_integers(line, line_no);
    if (static_cast<long>(ids.size()) != k) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(k) +
                       " vertex ids");
    }
    Edge e;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] < 1 || ids[i] > n) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
      }
      if (i > 0 && ids[i] <= ids[i - 1]) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": vertex ids must be strictly ascending");
      }
      e.push_back(static_cast<Vertex>(ids[i]));
    }
    edges.push_back(std::move(e));
  }
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!skippable(line)) {
      throw ParseError("line " + std::to_string(line_no) + ": data after the last edge");
    }
  }
  return Hypergraph::build(static_cast<int>(n), static_cast<int>(k), std::move(edges));
}

void write_hg(std::ostream& out, const Hypergraph& h) {
  out << h.k() << ' ' << h.n() << ' ' << h.edge_count() << '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

Hypergraph read_hg_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_hg(in);
}

void write_hg_file(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_hg(out, h);
}

std::string to_hg_string(const Hypergraph& h) {
  std::ostringstream out;
  write_hg(out, h);
  return out.str();
}

Hypergraph from_hg_string(const std::string& text) {
  std::istringstream in(text);
  return read_hg(in);
}

Json to_json(const Hypergraph& h) {
  return {{"k", h.k()}, {"n", h.n()}, {"edges", h.edges()}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  try {
    return Hypergraph::build(j.at("n").get<int>(), j.at("k").get<int>(),
                             j.at("edges").get<std::vector<Edge>>());
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed hypergraph JSON: ") + ex.what());
  }
}

}  // namespace hypermatch
