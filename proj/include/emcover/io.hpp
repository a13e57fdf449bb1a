#ifndef EMCOVER_IO_HPP
#define EMCOVER_IO_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "emcover/setsys.hpp"

namespace emcover {

using nlohmann::json;

// Canonical interchange:
//   hypergraph  {"n": int, "r": int, "edges": [[int,...],...]}
//   digraph     {"n": int, "arcs": [[int,int],...], "oriented": bool}

json to_json(const Hypergraph& h);
json to_json(const Digraph& d);

/// Throws std::invalid_argument on schema violations.
Hypergraph hypergraph_from_json(const json& j);
Digraph digraph_from_json(const json& j);

bool is_digraph_json(const json& j);

/// Edge-list text: header line "n r", then one edge per line, vertices
/// ascending and space separated.
std::string to_edgelist(const Hypergraph& h);
Hypergraph hypergraph_from_edgelist(std::istream& in);

}  // namespace emcover

#endif  // EMCOVER_IO_HPP
