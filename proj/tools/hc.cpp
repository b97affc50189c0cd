// hc: command-line front end for the sostar library.
//
//   hc hmap "1+;2-"                       tableau pair of a clan
//   hc tau "1+;(2,3)-"                    tau-invariant of clan and tableau
//   hc cross --root b "1+;(2,3)+"         cross action
//   hc cayley --root a2 "1+;2-"           Cayley transform
//   hc wallcross --op T:a2,a3 "1+;2+;3-"  wall-crossing operator
//   hc cells --n 4 --format dot           cell graph of the even clans
//   hc enumerate --n 3 --filter even      list clans
//   hc verify --suite all --max-n 4       run the verification suites
//   hc orbit "1+;2-"                      normalized orbit label
//
// Exit status: 0 success, 1 domain or internal error, 2 usage error.

#include "serialize.hpp"

#include "sostar/errors.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace sostar;
using io::json;

namespace {

struct Options {
  std::string format = "json";
  std::uint64_t seed = 1;
  int max_n = 0; // 0: the command's own default
  std::string clan;
  std::string root;
  std::string op;
  std::string filter = "all";
  std::string suite = "all";
  int n = 0;
  int trials = 1000;
  bool with_hmap = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string text_rows(const SignedTableau& t) {
  std::string s;
  for (const auto& row : sign_rows(t)) s += row + "\n";
  return s;
}

std::string join(const json& list, const char* sep = " ") {
  std::string s;
  for (const auto& x : list) s += (s.empty() ? "" : sep) + x.get<std::string>();
  return s;
}

int bound(const Options& o, int fallback) { return o.max_n > 0 ? o.max_n : fallback; }

int run_hmap(const Options& o) {
  const Clan c = parse_clan(o.clan);
  const HPair p = hmap(c);
  emit(o, io::to_json(c, p),
       format_clan(c) + "\n" + render(p.t1) + "signs:\n" + text_rows(p.class2.representative));
  return 0;
}

int run_tau(const Options& o) {
  const Clan c = parse_clan(o.clan);
  const auto from_clan = io::root_list(tau_invariant(c));
  json from_tableau = json::array();
  if (c.rank() >= 2) from_tableau = io::root_list(tau_invariant_tableau(hmap(c).t1));
  const json j{{"clan", format_clan(c)}, {"tau", from_clan}, {"tableau_tau", from_tableau},
               {"agree", from_clan == from_tableau}};
  emit(o, j, "clan:    {" + join(from_clan, ", ") + "}\ntableau: {" + join(from_tableau, ", ") + "}\n");
  return 0;
}

int run_cross(const Options& o) {
  const Clan c = parse_clan(o.clan);
  const SimpleRoot r = parse_root(o.root);
  const Clan x = cross_action(r, c);
  emit(o, {{"clan", format_clan(c)}, {"root", o.root}, {"result", format_clan(x)}}, format_clan(x) + "\n");
  return 0;
}

int run_cayley(const Options& o) {
  const Clan c = parse_clan(o.clan);
  const SimpleRoot r = parse_root(o.root);
  const auto status = root_status(c, r);
  const auto out = io::clan_list(cayley(r, c));
  emit(o, {{"clan", format_clan(c)}, {"root", o.root}, {"status", to_string(status)}, {"results", out}},
       join(out, "\n") + "\n");
  return 0;
}

int run_wallcross(const Options& o) {
  const Clan c = parse_clan(o.clan);
  const OperatorSpec spec = parse_operator(o.op);
  std::vector<Clan> images;
  std::vector<DominoTableau> tableaux;
  const DominoTableau t = hmap(c).t1;
  if (spec.rank4) {
    if (!in_domain(spec.rank4_op, c))
      throw DomainError(format_clan(c) + " is not in the domain of " + operator_name(spec.rank4_op));
    images = rank4_clan(spec.rank4_op, c);
    tableaux = rank4_tableau(spec.rank4_op, t);
  } else {
    validate(spec.rank2, c.rank());
    if (!in_domain(spec.rank2, c))
      throw DomainError(format_clan(c) + " is not in the domain of " + operator_name(spec.rank2));
    images = {rank2_clan(spec.rank2, c)};
    tableaux = {rank2_tableau(spec.rank2, t)};
  }
  json tj = json::array();
  std::string text;
  for (const auto& x : images) text += format_clan(x) + "\n";
  for (const auto& x : tableaux) {
    tj.push_back(io::to_json(x));
    text += render(x) + "\n";
  }
  emit(o, {{"clan", format_clan(c)}, {"op", o.op}, {"images", io::clan_list(images)}, {"tableau_images", tj}},
       text);
  return 0;
}

int run_cells(const Options& o) {
  const CellPartition p = cells(o.n, bound(o, 6));
  if (o.format == "dot") {
    std::cout << io::to_dot(p);
    return 0;
  }
  std::string text;
  for (std::size_t k = 0; k < p.cells.size(); ++k) {
    const auto& cell = p.cells[k];
    text += "cell " + std::to_string(k + 1) + " (" + std::to_string(cell.members.size()) + "):";
    for (const auto& c : cell.members) text += " " + format_clan(c);
    text += "\n";
  }
  emit(o, io::to_json(p), text);
  return 0;
}

int run_enumerate(const Options& o) {
  const int limit = bound(o, kSearchRankLimit);
  if (o.n < 0 || o.n > limit)
    throw DomainError("rank " + std::to_string(o.n) + " exceeds --max-n " + std::to_string(limit));
  const ClanFilter f = o.filter == "even" ? ClanFilter::even : o.filter == "odd" ? ClanFilter::odd : ClanFilter::all;
  json list = json::array();
  std::string text;
  for_each_clan(o.n, f, [&](const Clan& c) {
    text += format_clan(c) + "\n";
    list.push_back(o.with_hmap ? io::to_json(c, hmap(c)) : json(format_clan(c)));
  });
  emit(o, {{"n", o.n}, {"filter", o.filter}, {"count", list.size()}, {"clans", list}}, text);
  return 0;
}

int run_verify(const Options& o) {
  const int max_n = bound(o, kExhaustiveBound);
  const auto reports = run_suite(o.suite, max_n, o.seed, o.trials);
  bool ok = true;
  json list = json::array();
  std::string text;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    list.push_back(io::to_json(r));
    text += (r.passed() ? "PASS " : "FAIL ") + r.suite + " n=" + std::to_string(r.n) +
            " checked=" + std::to_string(r.checked) + " failures=" + std::to_string(r.failures.size()) + "\n";
    for (const auto& f : r.failures)
      text += "  " + f.clan + " | " + f.op + " | expected " + f.expected + " | got " + f.actual + "\n";
  }
  emit(o, {{"suite", o.suite}, {"max_n", max_n}, {"seed", o.seed}, {"passed", ok}, {"reports", list}}, text);
  return ok ? 0 : 1;
}

int run_orbit(const Options& o) {
  const Clan c = parse_clan(o.clan);
  const HPair p = hmap(c);
  const OrbitDescriptor d = orbit_label(normalize_orbit(p.class2.representative));
  json j = io::to_json(d);
  j["clan"] = format_clan(c);
  emit(o, j, text_rows(d.normalized) + "refinement: " + d.refinement + "\n");
  return 0;
}

void report_error(const Options& o, const char* kind, const std::string& message) {
  if (o.format == "json")
    std::cerr << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
  else
    std::cerr << "hc: " << kind << " error: " << message << "\n";
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Clans, domino tableaux and wall-crossing for SO*(2n)", "hc"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format: json, text (cells also takes dot)")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--seed", o.seed, "Seed for randomized suites");
  app.add_option("--max-n", o.max_n, "Rank bound for searches and suites")->check(CLI::Range(1, 7));

  auto clan_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("clan", o.clan, "Clan such as \"1+;(2,3)-\"")->required();
    return sub;
  };
  auto* hmap_cmd = clan_command("hmap", "Domino tableau and signed class of a clan");
  auto* tau_cmd = clan_command("tau", "tau-invariant of a clan and of its tableau");
  auto* cross_cmd = clan_command("cross", "Cross action of a simple reflection");
  cross_cmd->add_option("--root", o.root, "Simple root: b, a2, ..., an")->required();
  auto* cayley_cmd = clan_command("cayley", "Cayley transform through a simple root");
  cayley_cmd->add_option("--root", o.root, "Simple root: b, a2, ..., an")->required();
  auto* wall_cmd = clan_command("wallcross", "Apply a wall-crossing operator");
  wall_cmd->add_option("--op", o.op, "T:a2,a3, T:b,a3, T:D,b or T:b,D")->required();
  auto* orbit_cmd = clan_command("orbit", "Normalized orbit label of a clan");

  auto* cells_cmd = app.add_subcommand("cells", "Cells of the even clans of rank n");
  cells_cmd->add_option("--n", o.n, "Rank")->required()->check(CLI::NonNegativeNumber);
  auto* enum_cmd = app.add_subcommand("enumerate", "List the clans of rank n");
  enum_cmd->add_option("--n", o.n, "Rank")->required()->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--filter", o.filter, "all, even or odd")->check(CLI::IsMember({"all", "even", "odd"}));
  enum_cmd->add_flag("--with-hmap", o.with_hmap, "Include the image of every clan");
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", o.suite, "Suite name or all")->check(CLI::IsMember(suites));
  verify_cmd->add_option("--trials", o.trials, "Trials for randomized suites")->check(CLI::NonNegativeNumber);
  // The global flags are also accepted after the command name.
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
    if (o.format == "dot" && !cells_cmd->parsed()) throw UsageError("--format dot is only available for cells");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "hc: " << e.what() << "\n";
    return 2;
  }

  try {
    if (hmap_cmd->parsed()) return run_hmap(o);
    if (tau_cmd->parsed()) return run_tau(o);
    if (cross_cmd->parsed()) return run_cross(o);
    if (cayley_cmd->parsed()) return run_cayley(o);
    if (wall_cmd->parsed()) return run_wallcross(o);
    if (cells_cmd->parsed()) return run_cells(o);
    if (enum_cmd->parsed()) return run_enumerate(o);
    if (verify_cmd->parsed()) return run_verify(o);
    if (orbit_cmd->parsed()) return run_orbit(o);
  } catch (const std::invalid_argument& e) {
    // Malformed clans, roots and operator names.
    report_error(o, "parse", e.what());
    return 2;
  } catch (const DomainError& e) {
    report_error(o, "domain", e.what());
    return 1;
  } catch (const InvariantError& e) {
    report_error(o, "invariant", e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error(o, "error", e.what());
    return 1;
  }
  return 2;
}
