#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

using Json = nlohmann::ordered_json;

// ".hg" text format:
//   # optional comment lines
//   k n m
//   m lines of k strictly ascending 1-based vertex ids
Hypergraph read_hg(std::istream& in);
void write_hg(std::ostream& out, const Hypergraph& h);

Hypergraph read_hg_file(const std::filesystem::path& path);
void write_hg_file(const std::filesystem::path& path, const Hypergraph& h);

std::string to_hg_string(const Hypergraph& h);
Hypergraph from_hg_string(const std::string& text);

// {"k":..., "n":..., "edges":[[...], ...]}
Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

}  // namespace hypermatch
