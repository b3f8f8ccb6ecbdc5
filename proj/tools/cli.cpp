#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eternal/error.hpp"
#include "eternal/eternal_engine.hpp"
#include "eternal/families.hpp"
#include "eternal/graph.hpp"
#include "eternal/graph6.hpp"
#include "eternal/harness.hpp"
#include "eternal/params.hpp"
#include "eternal/tree_reduction.hpp"

namespace eternal::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string family;
  std::string g6_path;
  std::string edgelist_path;
  std::string format = "text";
  std::string model = "all-guards";
  std::string id;
  int k = 0;
  int n_max = 0;
  double time_budget = 0;
  int jobs = 1;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int source_count(const Config& c) {
  return int(!c.family.empty()) + int(!c.g6_path.empty()) + int(!c.edgelist_path.empty());
}

std::vector<Graph> load_graphs(const Config& c) {
  if (source_count(c) != 1) throw UsageError("give exactly one of --family, --g6, --edgelist");
  if (!c.family.empty()) return {named_family(c.family)};
  if (!c.edgelist_path.empty()) return {parse_edge_list(read_file(c.edgelist_path))};
  std::vector<Graph> out;
  std::istringstream lines(read_file(c.g6_path));
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    out.push_back(parse_graph6(line));
  }
  if (out.empty()) throw UsageError("'" + c.g6_path + "' holds no graph");
  return out;
}

Graph load_one(const Config& c) {
  auto graphs = load_graphs(c);
  if (graphs.size() != 1) throw UsageError("expected one graph, found " + std::to_string(graphs.size()));
  return graphs.front();
}

HarnessOptions harness_options(const Config& c) {
  HarnessOptions o;
  o.jobs = c.jobs;
  if (c.time_budget > 0) {
    o.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(c.time_budget));
  }
  return o;
}

SolveControl solve_control(const Config& c) {
  SolveControl s;
  s.deadline = harness_options(c).deadline;
  return s;
}

bool json_output(const Config& c) { return c.format == "json"; }

std::string parts_text(const std::vector<VertexSet>& parts) {
  std::string out;
  for (VertexSet p : parts) out += (out.empty() ? "" : " ") + to_string(p);
  return out;
}

int cmd_params(const Config& c, std::ostream& out) {
  const Graph g = load_one(c);
  const ParamReport row = compute_params(g, harness_options(c));
  if (json_output(c)) {
    out << to_json(row) << "\n";
  } else {
    auto line = [&](const char* name, const std::optional<int>& v, const std::string& extra = {}) {
      out << "  " << name << std::string(13 - std::string(name).size(), ' ') << "= " << (v ? std::to_string(*v) : "-");
      if (!extra.empty()) out << "   " << extra;
      out << "\n";
    };
    out << "graph: " << describe(g) << "\n";
    out << "graph6: " << row.graph6 << "\n";
    line("gamma", row.gamma, row.gamma_witness ? "witness " + to_string(*row.gamma_witness) : "");
    line("gamma_m_inf", row.gamma_m_inf);
    line("alpha", row.alpha, row.alpha_witness ? "witness " + to_string(*row.alpha_witness) : "");
    line("gamma_inf", row.gamma_inf);
    line("theta", row.theta, row.theta_parts.empty() ? "" : "parts " + parts_text(row.theta_parts));
    line("theta_c", row.theta_c, row.theta_c_parts.empty() ? "" : "parts " + parts_text(row.theta_c_parts));
    line("gamma_c", row.gamma_c, row.gamma_c_witness ? "witness " + to_string(*row.gamma_c_witness) : "");
    line("nu", row.matching);
    for (const std::string& e : row.errors) out << "  ! " << e << "\n";
  }
  if (!row.errors.empty()) {
    out << "limit exceeded; the parameters above were computed before it was hit\n";
    return kLimit;
  }
  return kOk;
}

void print_report(const Config& c, const TheoremReport& r, std::ostream& out) {
  if (json_output(c)) {
    out << to_json(r) << "\n";
  } else {
    out << to_text(r);
  }
}

int cmd_check(const Config& c, std::ostream& out) {
  const RegistryEntry* e = find_entry(c.id);
  if (!e) throw InvalidArgument("unknown theorem id '" + c.id + "'");
  if (!e->proven) throw UsageError(c.id + " is an open question; use search");
  const int n_max = c.n_max > 0 ? c.n_max : e->default_n_max;
  const TheoremReport r = check(c.id, universe_for(c.id, n_max), harness_options(c));
  print_report(c, r, out);
  return r.violations.empty() ? kOk : kFound;
}

int cmd_search(const Config& c, std::ostream& out) {
  const RegistryEntry* e = find_entry(c.id);
  if (!e) throw InvalidArgument("unknown question id '" + c.id + "'");
  if (e->proven) throw UsageError(c.id + " is a theorem; use check");
  const int n_max = c.n_max > 0 ? c.n_max : e->default_n_max;
  const SearchResult r = search_counterexample(c.id, n_max, harness_options(c));
  print_report(c, r.report, out);
  if (r.witness && !json_output(c)) out << "witness: " << to_graph6(*r.witness) << "\n";
  return r.witness ? kFound : kOk;
}

std::optional<int> parse_vertex(const std::string& text, int n) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (used != text.size() || v < 0 || v >= n) return std::nullopt;
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int cmd_play(const Config& c, std::istream& in, std::ostream& out) {
  const Graph g = load_one(c);
  const GuardModel model = parse_guard_model(c.model);
  const int n = g.order();
  const SolveControl control = solve_control(c);
  const int k = c.k > 0 ? c.k : eternal_value(g, model, control);
  if (k > n) throw UsageError("--k must lie in 1.." + std::to_string(n));

  std::vector<Removal> removals;
  SolveControl traced = control;
  traced.removals = &removals;
  const SafeFamily family = safe_family(g, k, model, traced);
  out << "graph: " << describe(g) << "\n";
  out << "model: " << to_string(model) << ", k = " << k << "\n";
  if (family.empty()) {
    const int gamma = domination_number(g).value;
    out << "refused: " << k << " guards cannot defend " << describe(g) << " under the " << to_string(model)
        << " model\n";
    if (k < gamma) {
      out << "reason: no dominating set of size " << k << " (gamma = " << gamma << ")\n";
    } else {
      out << "reason: " << (model == GuardModel::one_guard ? "gamma_inf" : "gamma_m_inf") << " = "
          << eternal_value(g, model, control) << "\n";
      const Removal& first = removals.front();
      out << "first losing position: guards on " << to_string(first.configuration) << ", attack at "
          << first.attack << "\n";
    }
    return kFound;
  }

  const DefenseStrategy strategy = extract_strategy(g, family);
  VertexSet guards = family.members.front();
  for (VertexSet m : family.members) {
    if (lex_less(m, guards)) guards = m;
  }
  out << "guards: " << to_string(guards) << "\n";
  std::string line;
  while (true) {
    out << "attack> " << std::flush;
    if (!std::getline(in, line)) break;
    line = trim(line);
    if (line.empty()) continue;
    if (line == "q" || line == "quit") break;
    const auto v = parse_vertex(line, n);
    if (!v) {
      out << "invalid vertex '" << line << "'; enter 0.." << n - 1 << "\n";
      continue;
    }
    if (guards.contains(*v)) {
      out << "vertex " << *v << " is already occupied\n";
      continue;
    }
    const auto reply = strategy.respond(guards, *v);
    if (!reply) throw Error("internal: strategy has no reply to attack " + std::to_string(*v));
    guards = *reply;
    out << "guards: " << to_string(guards) << "\n";
  }
  out << "\nbye\n";
  return kOk;
}

json trace_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const ReductionStep& s : t.steps) {
    steps.push_back({{"rule", s.rule == ReductionRule::r1 ? "R1" : "R2"},
                     {"stem", s.stem},
                     {"removed", s.removed.to_vector()}});
  }
  return {{"steps", steps}, {"terminal", star_name(t.terminal)}, {"terminal_vertices", t.terminal.to_vector()},
          {"value", t.value}};
}

int cmd_tree(const Config& c, std::ostream& out) {
  const Graph t = load_one(c);
  if (!t.is_tree()) throw UsageError("input is not a tree: " + describe(t));
  const TreeReduction red = reduce_tree(t);
  const int theta = tree_clique_cover(t);
  std::optional<R2Reducibility> r2;
  if (t.order() >= 2) r2 = r2_reduces_to_small_star(t);
  if (json_output(c)) {
    json j;
    j["graph6"] = to_graph6(t);
    j["gamma_m_inf"] = red.value;
    j["theta"] = theta;
    j["trace"] = trace_json(red.trace);
    j["r2_reducible"] = r2 ? json(r2->reducible) : json(nullptr);
    j["r2_trace"] = r2 && r2->trace ? trace_json(*r2->trace) : json(nullptr);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << render_trace(red.trace);
  out << "gamma_m_inf = " << red.value << "\n";
  out << "theta = " << theta << "\n";
  out << "R2-reduces to K2 or K1,2: ";
  if (!r2) {
    out << "n/a (single vertex)\n";
  } else if (r2->reducible) {
    out << "yes (-> " << star_name(r2->trace->terminal) << ")\n";
  } else {
    out << "no\n";
  }
  return kOk;
}

int cmd_sweep(const Config& c, std::ostream& out) {
  Universe u;
  if (source_count(c) == 0) {
    if (c.n_max <= 0) throw UsageError("sweep needs --n-max or one graph input");
    u = all_graphs(1, c.n_max);
  } else {
    if (c.n_max > 0) throw UsageError("--n-max and a graph input are exclusive");
    u = Universe{"input", load_graphs(c)};
  }
  const auto rows = parameter_sweep(u, harness_options(c));
  out << (json_output(c) ? to_json(rows) + "\n" : to_text(rows));
  return kOk;
}

int cmd_list(std::ostream& out) {
  out << "theorems (check):\n";
  for (const auto& e : theorem_registry()) out << "  " << e.id << "  " << e.statement << "\n";
  out << "questions (search):\n";
  for (const auto& e : question_registry()) out << "  " << e.id << "  " << e.statement << "\n";
  return kOk;
}

void add_input(CLI::App* sub, Config& c) {
  sub->add_option("--family", c.family, "named family, e.g. cycle:6, kmn-m:3,3,3, path:3*path:3");
  sub->add_option("--g6", c.g6_path, "file with graph6 lines");
  sub->add_option("--edgelist", c.edgelist_path, "file with 'n m' then m edges");
}

void add_format(CLI::App* sub, Config& c) {
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void add_limits(CLI::App* sub, Config& c) {
  sub->add_option("--time-budget", c.time_budget, "seconds before giving up (exit 3)")->check(CLI::PositiveNumber);
}

void add_jobs(CLI::App* sub, Config& c) {
  sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 256));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Eternal and m-eternal domination toolkit", "eternal"};
  app.require_subcommand(1);

  auto* params = app.add_subcommand("params", "compute every parameter of one graph");
  add_input(params, c);
  add_format(params, c);
  add_limits(params, c);

  auto* chk = app.add_subcommand("check", "verify a registered theorem over small graphs");
  chk->add_option("id", c.id, "theorem id (see list)")->required();
  chk->add_option("--n-max", c.n_max, "largest order")->check(CLI::PositiveNumber);
  add_format(chk, c);
  add_limits(chk, c);
  add_jobs(chk, c);

  auto* search = app.add_subcommand("search", "search small graphs for a counterexample or witness");
  search->add_option("id", c.id, "question id (see list)")->required();
  search->add_option("--n-max", c.n_max, "largest order (product vertices for product questions)")
      ->check(CLI::PositiveNumber);
  add_format(search, c);
  add_limits(search, c);
  add_jobs(search, c);

  auto* play = app.add_subcommand("play", "attack a graph from stdin; the defender answers");
  add_input(play, c);
  play->add_option("--k", c.k, "number of guards (default: the minimum)")->check(CLI::PositiveNumber);
  play->add_option("--model", c.model, "one-guard or all-guards");
  add_limits(play, c);

  auto* tree = app.add_subcommand("tree", "reduce a tree and report gamma_m_inf and theta");
  add_input(tree, c);
  add_format(tree, c);

  auto* sweep = app.add_subcommand("sweep", "parameter table for graphs or for all graphs up to --n-max");
  add_input(sweep, c);
  sweep->add_option("--n-max", c.n_max, "sweep all graphs of order 1..n-max")->check(CLI::PositiveNumber);
  add_format(sweep, c);
  add_limits(sweep, c);
  add_jobs(sweep, c);

  auto* list = app.add_subcommand("list", "list theorem and question ids");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (params->parsed()) return cmd_params(c, out);
    if (chk->parsed()) return cmd_check(c, out);
    if (search->parsed()) return cmd_search(c, out);
    if (play->parsed()) return cmd_play(c, in, out);
    if (tree->parsed()) return cmd_tree(c, out);
    if (sweep->parsed()) return cmd_sweep(c, out);
    if (list->parsed()) return cmd_list(out);
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kLimit;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    const std::string what = e.what();
    if (what.find("unknown theorem") != std::string::npos || what.find("unknown question") != std::string::npos) {
      err << "known ids:\n";
      cmd_list(err);
    }
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace eternal::cli
