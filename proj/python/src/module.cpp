#include "sostar/cartan.hpp"
#include "sostar/clan.hpp"
#include "sostar/errors.hpp"
#include "sostar/hmap.hpp"
#include "sostar/verify.hpp"
#include "sostar/wallcross.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sostar;

namespace {

ClanFilter filter_of(const std::string& name) {
  if (name == "all") return ClanFilter::all;
  if (name == "even") return ClanFilter::even;
  if (name == "odd") return ClanFilter::odd;
  throw std::invalid_argument("filter must be all, even or odd");
}

std::vector<std::string> texts(const std::vector<Clan>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(format_clan(c));
  return out;
}

std::vector<std::string> tableau_rows(const DominoTableau& t) {
  std::vector<std::string> rows;
  std::string text = render(t), line;
  for (char ch : text) {
    if (ch == '\n') {
      rows.push_back(line);
      line.clear();
    } else {
      line += ch;
    }
  }
  if (!line.empty()) rows.push_back(line);
  return rows;
}

py::dict pair_dict(const HPair& p) {
  py::dict d;
  d["shape"] = p.t1.shape().parts;
  d["tableau"] = tableau_rows(p.t1);
  d["signs"] = sign_rows(p.class2.representative);
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bindings for the sostar library";

  // Domain and invariant failures surface as ValueError and RuntimeError.
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  m.def("format_clan", [](const std::string& text) { return format_clan(parse_clan(text)); },
        "Parse a clan and return its canonical text.");
  m.def("parity", [](const std::string& text) {
    return clan_parity(parse_clan(text)) == Parity::even ? "even" : "odd";
  });
  m.def("enumerate_clans", [](int n, const std::string& filter) { return texts(enumerate_clans(n, filter_of(filter))); },
        py::arg("n"), py::arg("filter") = "all");
  m.def("tau", [](const std::string& text) {
    std::vector<std::string> out;
    for (auto r : tau_invariant(parse_clan(text))) out.push_back(root_name(r));
    return out;
  });
  m.def("cross", [](const std::string& root, const std::string& text) {
    return format_clan(cross_action(parse_root(root), parse_clan(text)));
  });
  m.def("cayley", [](const std::string& root, const std::string& text) {
    return texts(cayley(parse_root(root), parse_clan(text)));
  });
  m.def("hmap", [](const std::string& text) { return pair_dict(hmap(parse_clan(text))); },
        "Image of a clan: shape, tableau rows and the sign rows of the class representative.");
  m.def("wallcross", [](const std::string& op, const std::string& text) {
    const auto spec = parse_operator(op);
    const Clan c = parse_clan(text);
    if (spec.rank4) return texts(rank4_clan(spec.rank4_op, c));
    return texts({rank2_clan(spec.rank2, c)});
  });
  m.def("cells", [](int n) {
    std::vector<std::vector<std::string>> out;
    for (const auto& cell : cells(n).cells) out.push_back(texts(cell.members));
    return out;
  });
  m.def("verify", [](const std::string& suite, int max_n, std::uint64_t seed, int trials) {
    bool ok = true;
    for (const auto& r : run_suite(suite, max_n, seed, trials)) ok = ok && r.passed();
    return ok;
  }, py::arg("suite") = "all", py::arg("max_n") = 4, py::arg("seed") = 1, py::arg("trials") = 1000);
}
