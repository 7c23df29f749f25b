#pragma once

#include <string>

#include "json.hpp"
#include "tamcy/binary_tree.hpp"
#include "tamcy/interval_poset.hpp"
#include "tamcy/noncrossing.hpp"
#include "tamcy/poset.hpp"

namespace tamcy {

// Trees serialize as nested pairs, e.g. [null,[null,null]]; the in-order
// labels are implicit in the shape.
nlohmann::json tree_json(const BinaryTree& t);
BinaryTree tree_from_json(const nlohmann::json& j);

// {"n": int, "relations": [[from, to], ...]} with from <| to, sorted.
nlohmann::json ip_json(const IntervalPoset& ip);
IntervalPoset ip_from_json(const nlohmann::json& j);

// {"n": int, "edges": [[a, b], ...]} with a < b, sorted.
nlohmann::json nc_json(const NoncrossingTree& t);
NoncrossingTree nc_from_json(const nlohmann::json& j);

// {"elements": [names...], "covers": [[lower, upper], ...]}.  Reading accepts
// either "covers" or a full "leq" list; pair entries may be indices or names.
nlohmann::json poset_json(const FinitePoset& p);
FinitePoset poset_from_json(const nlohmann::json& j);

// Reads and parses a JSON file; throws parse_error with the path on failure.
nlohmann::json load_json_file(const std::string& path);

// Hasse diagram in DOT format, minimal elements at the bottom.
std::string poset_dot(const FinitePoset& p);

// Cover arrows of an interval-poset in DOT format.
std::string ip_dot(const IntervalPoset& ip);

} // namespace tamcy
