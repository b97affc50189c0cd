#include "serialize.hpp"

#include <sstream>

namespace sostar::io {

json to_json(const Shape& s) { return s.parts; }

json to_json(const DominoTableau& t) {
  json dominoes = json::array();
  for (const auto& [label, d] : t.dominoes())
    dominoes.push_back({{"label", label},
                        {"squares", {{d.first.row, d.first.col}, {d.second.row, d.second.col}}}});
  return {{"shape", to_json(t.shape())}, {"dominoes", dominoes}};
}

json to_json(const SignedTableau& t) {
  json signs = json::array();
  for (auto s : t.start_signs) signs.push_back(std::string(1, to_char(s)));
  return {{"shape", to_json(t.shape)}, {"start_signs", signs}, {"rows", sign_rows(t)}};
}

json to_json(const OrbitDescriptor& d) {
  return {{"normalized", to_json(d.normalized)}, {"very_even", d.very_even}, {"refinement", d.refinement}};
}

json to_json(const Clan& c, const HPair& p) {
  return {{"clan", format_clan(c)},
          {"parity", clan_parity(c) == Parity::even ? "even" : "odd"},
          {"tableau", to_json(p.t1)},
          {"signed_class", to_json(p.class2.representative)}};
}

json root_list(const std::vector<SimpleRoot>& roots) {
  json out = json::array();
  for (auto r : roots) out.push_back(root_name(r));
  return out;
}

json clan_list(const std::vector<Clan>& clans) {
  json out = json::array();
  for (const auto& c : clans) out.push_back(format_clan(c));
  return out;
}

json to_json(const CellPartition& p) {
  json cells = json::array();
  for (const auto& cell : p.cells) {
    json shapes = json::array();
    for (const auto& s : cell.shapes) shapes.push_back(to_json(s));
    json orbits = json::array();
    for (const auto& o : cell.orbits) orbits.push_back(to_json(o));
    cells.push_back({{"members", clan_list(cell.members)}, {"shapes", shapes}, {"orbits", orbits}});
  }
  json edges = json::array();
  for (const auto& e : p.edges)
    edges.push_back({{"from", format_clan(e.from)}, {"to", format_clan(e.to)}, {"op", e.op}});
  return {{"n", p.rank}, {"cell_count", p.cells.size()}, {"cells", cells}, {"edges", edges}};
}

json to_json(const Report& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"clan", f.clan}, {"op", f.op}, {"expected", f.expected}, {"actual", f.actual}});
  json notes = json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  return {{"suite", r.suite}, {"n", r.n},         {"checked", r.checked},
          {"passed", r.passed()}, {"failures", failures}, {"notes", notes}};
}

std::string to_dot(const CellPartition& p) {
  std::ostringstream out;
  out << "digraph cells_" << p.rank << " {\n";
  for (std::size_t k = 0; k < p.cells.size(); ++k) {
    out << "  subgraph cluster_" << k << " {\n    label=\"cell " << k + 1 << "\";\n";
    for (const auto& c : p.cells[k].members) out << "    \"" << format_clan(c) << "\";\n";
    out << "  }\n";
  }
  for (const auto& e : p.edges)
    out << "  \"" << format_clan(e.from) << "\" -> \"" << format_clan(e.to) << "\" [label=\"" << e.op
        << "\"];\n";
  out << "}\n";
  return out.str();
}

} // namespace sostar::io
