#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "dnaprover/compiler.hpp"
#include "dnaprover/error.hpp"
#include "dnaprover/fixtures.hpp"
#include "dnaprover/graph_io.hpp"
#include "dnaprover/resolution.hpp"

namespace dnaprover::cli {
namespace {

using nlohmann::json;

constexpr std::size_t kDefaultMaxStates = 100'000;
constexpr std::size_t kDefaultMaxDepth = 64;

struct Config {
  std::string command;
  std::string input;
  std::string fixture;
  std::string goal;
  std::string codebook;
  std::string input_format = "auto";
  std::string format = "text";
  std::size_t max_states = 0;  // 0: not given on the command line
  std::size_t max_depth = 0;
  bool trace = false;
};

/// Bad arguments or input, reported with exit code kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t env_bound(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string_view(raw).size() || v == 0)
    throw UsageError(std::string(name) + " must be a positive integer, got '" + raw + "'");
  return static_cast<std::size_t>(v);
}

void resolve_bounds(Config& cfg) {
  if (cfg.max_states == 0) cfg.max_states = env_bound("DNAPROVE_MAX_STATES", kDefaultMaxStates);
  if (cfg.max_depth == 0) cfg.max_depth = env_bound("DNAPROVE_MAX_DEPTH", kDefaultMaxDepth);
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// ---------------------------------------------------------------------------
// Input detection and loading
// ---------------------------------------------------------------------------

std::string detect_format(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "clauses";
  const std::string_view body = text.substr(first);
  if (body.front() == '<' || body.rfind("⟨", 0) == 0) return "process";
  if (body.front() == '{') {
    const auto next = body.find_first_not_of(" \t\r\n", 1);
    if (next != std::string_view::npos && body[next] == '"') return "graph";
  }
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line))
    if (line.rfind("p cnf", 0) == 0) return "dimacs";
  if (text.find_first_of("&|()") != std::string_view::npos || text.find("->") != std::string_view::npos ||
      text.find("<-") != std::string_view::npos)
    return "formula";
  return "clauses";
}

struct Input {
  std::string kind;  // formula, clauses, dimacs, process, graph
  std::string text;
  std::string fixture;
};

Input load_input(const Config& cfg) {
  if (!cfg.fixture.empty() && !cfg.input.empty())
    throw UsageError("give either --input or --fixture, not both");
  if (cfg.fixture.empty() && cfg.input.empty()) throw UsageError("one of --input or --fixture is required");
  if (!cfg.fixture.empty()) return {"fixture", "", cfg.fixture};
  Input in;
  in.text = read_input(cfg.input);
  in.kind = cfg.input_format == "auto" ? detect_format(in.text) : cfg.input_format;
  return in;
}

ClauseSet clause_set_of(const Input& in) {
  if (in.kind == "fixture") {
    if (in.fixture == "S" || in.fixture == "theorem") return fixtures::clause_set_s();
    throw UsageError("fixture " + in.fixture + " is a process, not a clause set");
  }
  if (in.kind == "formula") return to_clausal_form(parse_formula(in.text));
  if (in.kind == "clauses") return parse_clause_text(in.text);
  if (in.kind == "dimacs") return parse_dimacs(in.text);
  throw UsageError("expected a formula or clause set, got " + in.kind + " input");
}

Codebook codebook_for(const Config& cfg, const ClauseSet& s) {
  if (!cfg.codebook.empty()) return parse_codebook(read_input(cfg.codebook));
  Codebook cb = default_codebook();
  const auto vars = variables(s);
  bool covered = true;
  for (const auto& v : vars) covered = covered && cb.has(v);
  if (covered) return cb;
  return generate_codebook(vars, 16, 6, 1);
}

struct LoadedGraph {
  StrandGraph graph;
  std::optional<Process> process;
  std::vector<fixtures::ProcessStep> script;
};

LoadedGraph graph_of(const Config& cfg, const Input& in) {
  if (in.kind == "fixture") {
    auto p = fixtures::process_named(in.fixture);
    if (!p) throw UsageError("unknown fixture " + in.fixture);
    return {from_process(*p), *p, fixtures::script_named(in.fixture)};
  }
  if (in.kind == "process") {
    Process p = parse_process(in.text);
    return {from_process(p), p, {}};
  }
  if (in.kind == "graph") return {parse_graph_json(in.text), std::nullopt, {}};
  const ClauseSet s = clause_set_of(in);
  Process p = compile(s, codebook_for(cfg, s)).process;
  return {from_process(p), p, {}};
}

// ---------------------------------------------------------------------------
// Shared rendering
// ---------------------------------------------------------------------------

std::string verdict_name(Verdict v) { return v == Verdict::kUnsat ? "Unsat" : "Satisfiable"; }

std::string outcome_name(HybridizationOutcome o) {
  return o == HybridizationOutcome::kUnsat ? "Unsat" : "Satisfiable";
}

json steps_json(const RefutationResult& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    json j{{"id", s.id}, {"clause", to_string(s.clause)}};
    if (s.source)
      j["from"] = {{"left", s.source->left}, {"right", s.source->right}, {"on", to_string(s.source->on)}};
    steps.push_back(std::move(j));
  }
  return steps;
}

std::string site_label(const StrandGraph& g, const Site& s) {
  return to_string(s) + " " + to_string(g.domain(s));
}

json explore_json(const ExploreReport& rep, bool with_traces) {
  json terminals = json::array();
  for (std::size_t t : rep.terminal) {
    json j{{"state", t}, {"depth", rep.states[t].depth}, {"current", json::array()}};
    for (const auto& e : rep.states[t].edges) j["current"].push_back(edge_to_json(e));
    if (with_traces) j["trace"] = trace_to_json(rep.trace_to(t));
    terminals.push_back(std::move(j));
  }
  return {{"status", to_string(rep.status)},
          {"states", rep.states.size()},
          {"transitions", rep.transitions},
          {"terminal", std::move(terminals)}};
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int run_prove(const Config& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  const ClauseSet s = clause_set_of(in);
  std::optional<Formula> goal;
  if (!cfg.goal.empty()) goal = parse_formula(cfg.goal);

  RefutationResult r;
  try {
    r = refute(s, goal);
  } catch (const LimitExceeded& e) {
    if (cfg.format == "json")
      out << json{{"command", "prove"}, {"verdict", "Indeterminate"}, {"reason", e.what()}}.dump(2) << "\n";
    else
      out << "verdict: Indeterminate (" << e.what() << ")\n";
    return kIndeterminate;
  }
  const int code = r.verdict == Verdict::kUnsat ? kProved : kSatisfiable;

  if (cfg.format == "json") {
    json j{{"command", "prove"}, {"verdict", verdict_name(r.verdict)}, {"steps", steps_json(r)}};
    if (r.verdict == Verdict::kUnsat) {
      j["depth"] = deduction_depth(r);
      j["leaves"] = deduction_leaves(r);
    }
    out << j.dump(2) << "\n";
    return code;
  }
  if (cfg.format == "dot") throw UsageError("prove has no dot output");

  out << "clauses: " << to_string(s) << "\n";
  if (goal) out << "goal: " << to_string(*goal) << "\n";
  out << "verdict: " << verdict_name(r.verdict) << "\n";
  if (r.verdict == Verdict::kUnsat) {
    out << "leaves: " << deduction_leaves(r).size() << ", resolutions: "
        << r.steps.size() - deduction_leaves(r).size() << ", depth: " << deduction_depth(r) << "\n";
    out << "deduction:\n" << render_deduction(r);
  } else {
    out << "saturated with " << r.steps.size() << " clauses\n";
  }
  if (cfg.trace) out << "trace:\n" << render_trace(r);
  return code;
}

int run_compile(const Config& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  const ClauseSet s = clause_set_of(in);
  const Codebook cb = codebook_for(cfg, s);
  const CompiledProgram prog = compile(s, cb);

  if (cfg.format == "json") {
    json strands = json::array();
    for (const auto& cc : prog.clauses) {
      json domains = json::array();
      for (const auto& d : cc.strand) domains.push_back(to_string(d));
      strands.push_back({{"clause", to_string(cc.clause)}, {"domains", domains}, {"bases", cc.bases}});
    }
    json codes = json::object();
    for (const auto& [var, code] : cb.sense()) codes[var] = code;
    out << json{{"process", to_string(prog.process)}, {"strands", strands}, {"codebook", codes}}.dump(2)
        << "\n";
  } else if (cfg.format == "dot") {
    out << graph_to_dot(from_process(prog.process));
  } else {
    out << "process: " << to_string(prog.process) << "\n";
    out << format_fasta(prog);
    if (cfg.trace) out << "codebook:\n" << format_codebook(cb);
  }
  return kProved;
}

int run_simulate(const Config& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  LoadedGraph loaded = graph_of(cfg, in);
  const StrandGraph& g = loaded.graph;

  // Scripted replay, process level and graph level side by side.
  struct Replayed {
    std::string label;
    std::string process;
    Move move;
    StrandGraph graph;
  };
  std::vector<Replayed> replayed;
  if (!loaded.script.empty()) {
    Process p = *loaded.process;
    StrandGraph before = g;
    for (const auto& step : loaded.script) {
      Process q = step.apply(p);
      StrandGraph after = from_process(q);
      auto move = find_move(before, after);
      if (!move) throw RuleError(step.label + " has no matching graph move");
      if (move->rule != step.graph_rule)
        throw RuleError(step.label + " maps to " + to_string(move->rule) + ", expected " +
                        to_string(step.graph_rule));
      replayed.push_back({step.label, to_string(q), *move, after});
      p = std::move(q);
      before = std::move(after);
    }
  }

  ExploreOptions opts;
  opts.max_states = cfg.max_states;
  opts.max_depth = cfg.max_depth;
  const ExploreReport rep = explore(g, opts);
  const bool complete = rep.status == ExploreStatus::kComplete;

  std::optional<std::size_t> all_bound;
  for (std::size_t i = 0; i < rep.states.size() && !all_bound; ++i)
    if (g.site_count() > 0 && rep.states[i].edges.size() * 2 == g.site_count()) all_bound = i;

  if (cfg.format == "json") {
    json script = json::array();
    for (const auto& r : replayed) {
      json j{{"label", r.label}, {"process", r.process}, {"rule", to_string(r.move.rule)}};
      j["removed"] = json::array();
      j["added"] = json::array();
      for (const auto& e : r.move.removed) j["removed"].push_back(edge_to_json(e));
      for (const auto& e : r.move.added) j["added"].push_back(edge_to_json(e));
      if (auto at = rep.find(r.graph.current())) j["explore_depth"] = rep.states[*at].depth;
      script.push_back(std::move(j));
    }
    json j{{"graph", graph_to_json(g)}, {"script", script}, {"explore", explore_json(rep, cfg.trace)}};
    if (all_bound) j["all_bound"] = {{"state", *all_bound}, {"trace", trace_to_json(rep.trace_to(*all_bound))}};
    out << j.dump(2) << "\n";
  } else if (cfg.format == "dot") {
    // One digraph per snapshot: the initial state, then each step of the
    // script, or of the trace to the first terminal state.
    std::vector<StrandGraph> snapshots{g};
    if (!replayed.empty()) {
      for (const auto& r : replayed) snapshots.push_back(r.graph);
    } else if (!rep.terminal.empty()) {
      StrandGraph cur = g;
      for (const auto& m : rep.trace_to(rep.terminal.front()).moves) {
        cur = apply(cur, m);
        snapshots.push_back(cur);
      }
    }
    for (std::size_t k = 0; k < snapshots.size(); ++k)
      out << graph_to_dot(snapshots[k], "step" + std::to_string(k));
  } else {
    if (loaded.process) out << "process: " << to_string(*loaded.process) << "\n";
    out << describe_graph(g);
    if (!replayed.empty()) {
      out << "script:\n";
      for (std::size_t k = 0; k < replayed.size(); ++k) {
        const auto& r = replayed[k];
        out << "  " << k + 1 << ": " << r.label << " => " << to_string(r.move)
            << " |E|=" << r.graph.current().size();
        if (auto at = rep.find(r.graph.current())) out << " (explore depth " << rep.states[*at].depth << ")";
        out << "\n";
        if (cfg.trace) out << "     " << r.process << "\n";
      }
    }
    out << "explore: " << to_string(rep.status) << ", " << rep.states.size() << " states, "
        << rep.transitions << " transitions, " << rep.terminal.size() << " terminal\n";
    for (std::size_t t : rep.terminal) {
      out << "terminal state " << t << " at depth " << rep.states[t].depth << ": "
          << format_edges(rep.states[t].edges) << "\n";
      if (cfg.trace) out << format_trace(rep.trace_to(t));
    }
    if (all_bound) {
      out << "all sites bound at depth " << rep.states[*all_bound].depth << "\n";
      if (cfg.trace) out << format_trace(rep.trace_to(*all_bound));
    }
  }
  return complete ? kProved : kIndeterminate;
}

int run_compare(const Config& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  const ClauseSet s = clause_set_of(in);
  const Process p = compile(s, codebook_for(cfg, s)).process;

  std::optional<Verdict> logic;
  std::string logic_note;
  try {
    logic = refute(s).verdict;
  } catch (const LimitExceeded& e) {
    logic_note = e.what();
  }

  HybridizationBounds bounds;
  bounds.max_states = cfg.max_states;
  bounds.max_depth = cfg.max_depth;
  std::optional<HybridizationVerdict> hyb;
  std::string hyb_note;
  try {
    hyb = hybridization_verdict(p, bounds);
  } catch (const LimitExceeded& e) {
    hyb_note = e.what();
  }

  const bool determinate = logic && hyb;
  const bool agree =
      determinate && ((*logic == Verdict::kUnsat) == (hyb->outcome == HybridizationOutcome::kUnsat));
  const std::string logic_text = logic ? verdict_name(*logic) : "Indeterminate";
  const std::string hyb_text = hyb ? outcome_name(hyb->outcome) : "Indeterminate";
  const std::string status = !determinate ? "INDETERMINATE" : agree ? "AGREE" : "DISAGREE";

  const StrandGraph g = from_process(p);
  if (cfg.format == "json") {
    json j{{"resolution", logic_text}, {"hybridization", hyb_text}, {"status", status}};
    if (!logic_note.empty()) j["resolution_note"] = logic_note;
    if (!hyb_note.empty()) j["hybridization_note"] = hyb_note;
    if (hyb) {
      j["free_sites"] = json::array();
      for (const auto& site : hyb->free_sites)
        j["free_sites"].push_back({{"site", {site.vertex, site.position}},
                                   {"domain", to_string(g.domain(site))},
                                   {"clause", to_string(*std::next(s.begin(), site.vertex - 1))}});
    }
    out << j.dump(2) << "\n";
  } else {
    out << "resolution: " << logic_text;
    if (!logic_note.empty()) out << " (" << logic_note << ")";
    out << "\nhybridization: " << hyb_text;
    if (!hyb_note.empty()) out << " (" << hyb_note << ")";
    out << "\n" << status << "\n";
    if (hyb && !hyb->free_sites.empty() && (cfg.trace || !agree)) {
      out << "free sites:";
      for (const auto& site : hyb->free_sites)
        out << " " << site_label(g, site) << " in " << to_string(*std::next(s.begin(), site.vertex - 1)) << ";";
      out << "\n";
    }
    if (hyb && cfg.trace) out << "witness:\n" << format_trace(hyb->witness);
  }
  if (!determinate) return kIndeterminate;
  return agree ? kProved : kDisagree;
}

int run_export(const Config& cfg, std::ostream& out) {
  const Input in = load_input(cfg);
  const LoadedGraph loaded = graph_of(cfg, in);
  if (cfg.format == "json")
    out << graph_to_json(loaded.graph).dump(2) << "\n";
  else if (cfg.format == "dot")
    out << graph_to_dot(loaded.graph);
  else
    out << describe_graph(loaded.graph);
  return kProved;
}

void add_common(CLI::App* sub, Config& cfg, bool with_goal) {
  sub->add_option("-i,--input", cfg.input, "input file ('-' for stdin)");
  sub->add_option("--fixture", cfg.fixture, "built-in example")
      ->check(CLI::IsMember(fixtures::names()));
  sub->add_option("--input-format", cfg.input_format, "input syntax")
      ->check(CLI::IsMember({"auto", "formula", "clauses", "dimacs", "process", "graph"}));
  sub->add_option("--codebook", cfg.codebook, "codebook file, one 'VAR SEQUENCE' per line");
  sub->add_option("--max-states", cfg.max_states, "exploration state budget")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-depth", cfg.max_depth, "exploration depth budget")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  sub->add_flag("--trace", cfg.trace, "print step traces");
  if (with_goal) sub->add_option("--goal", cfg.goal, "formula to prove from the input");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Resolution and DNA strand-graph prover", "dnaprove"};
  app.require_subcommand(1);
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Config&, std::ostream&);
  };
  const Command commands[] = {
      {"prove", "refute a clause set by resolution", run_prove},
      {"compile", "compile a clause set to strands", run_compile},
      {"simulate", "explore a strand graph", run_simulate},
      {"compare", "compare resolution with hybridization", run_compare},
      {"export", "write a strand graph as text, JSON or DOT", run_export},
  };
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, cfg, std::string_view(c.name) == "prove");
    sub->callback([&cfg, name = c.name] { cfg.command = name; });
  }

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    resolve_bounds(cfg);
    for (const auto& c : commands)
      if (cfg.command == c.name) return c.run(cfg, out);
    err << "no command\n";
    return kUsage;
  } catch (const LimitExceeded& e) {
    err << "indeterminate: " << e.what() << "\n";
    return kIndeterminate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace dnaprover::cli
