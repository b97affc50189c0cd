#pragma once

#include "sostar/hmap.hpp"
#include "sostar/verify.hpp"
#include "sostar/wallcross.hpp"

#include "json.hpp"

namespace sostar::io {

using nlohmann::json;

json to_json(const Shape& s);
/// {"shape": [...], "dominoes": [{"label": k, "squares": [[r,c],[r,c]]}]},
/// rows and columns counted from 1.
json to_json(const DominoTableau& t);
/// {"shape": [...], "start_signs": ["+", ...], "rows": ["+-", ...]}
json to_json(const SignedTableau& t);
json to_json(const OrbitDescriptor& d);
json to_json(const Clan& c, const HPair& p);
json to_json(const CellPartition& p);
json to_json(const Report& r);

json root_list(const std::vector<SimpleRoot>& roots);
json clan_list(const std::vector<Clan>& clans);

/// Graphviz rendering of the cell graph, one cluster per cell.
std::string to_dot(const CellPartition& p);

} // namespace sostar::io
