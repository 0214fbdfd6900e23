// Copyright 2026 The tctp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tctp/arena.hpp"
#include "tctp/block_dag.hpp"
#include "tctp/dagctp.hpp"
#include "tctp/expansion.hpp"
#include "tctp/gadgets.hpp"
#include "tctp/instance_io.hpp"
#include "tctp/litctp.hpp"
#include "tctp/policies.hpp"
#include "tctp/staticctp.hpp"
#include "tctp/utctp.hpp"

namespace tctp::cli {
namespace {

using nlohmann::json;

struct Globals {
  std::string format;
  std::uint64_t seed = 1;
  std::optional<std::size_t> limit;
  bool quiet = false;

  SearchLimits limits() const {
    SearchLimits l;
    if (limit) {
      if (*limit == 0) {
        l.override = true;
      } else {
        l.max_states = *limit;
      }
    }
    return l;
  }
  bool json_output(bool default_json = false) const {
    return format.empty() ? default_json : format == "json";
  }
};

std::string TimeText(Time t) {
  if (t == kForever) return "inf";
  if (t == kNever) return "-inf";
  return std::to_string(t);
}

json TimeJson(Time t) {
  if (t == kForever || t == kNever) return nullptr;
  return t;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

Time DefaultDeadline(const Instance& inst, const std::optional<Time>& flag) {
  if (flag) return *flag;
  return inst.deadline.value_or(kForever);
}

json TranscriptJson(const Instance& inst, const Transcript& t) {
  json events = json::array();
  std::istringstream lines(TranscriptToJsonLines(inst, t));
  for (std::string line; std::getline(lines, line);) events.push_back(json::parse(line));
  return events;
}

void RequireModel(const Instance& inst, std::initializer_list<Model> models,
                  const std::string& command) {
  if (std::find(models.begin(), models.end(), inst.model) == models.end()) {
    throw Error(ErrorCode::kInvalidArgument, command + " does not accept a " +
                                                 ToString(inst.model) + " instance");
  }
}

// --- expand ---------------------------------------------------------------

struct ExpandArgs {
  std::string path;
  Time t1 = 0;
  std::optional<Time> t2;
};

int RunExpand(const ExpandArgs& a, const Globals& g, std::ostream& out) {
  const Instance inst = ReadInstanceFile(a.path);
  RequireModel(inst, {Model::kTemporal}, "expand");
  const Time t2 = DefaultDeadline(inst, a.t2);
  const ExpandedDag x = BuildExpansion(inst, a.t1, t2);
  const Instance dag = ExpansionAsInstance(x, inst.names(), inst.k);
  if (g.json_output()) {
    out << SerializeInstanceJson(dag);
    return kExitWin;
  }
  std::ostringstream comment;
  comment << "expansion window [" << TimeText(a.t1) << ", " << TimeText(t2) << "]\n"
          << "nodes " << x.dag.num_nodes() << ", arcs " << x.dag.num_arcs() << "\n";
  for (NodeId n = 0; n < x.dag.num_nodes(); ++n) {
    comment << "node " << n << " " << x.label(n, inst.names()) << "\n";
  }
  std::string text = comment.str();
  text.pop_back();
  out << SerializeInstance(dag, text);
  return kExitWin;
}

// --- dag-solve ------------------------------------------------------------

struct DagArgs {
  std::string path;
  bool table = false;
  std::optional<Cost> deadline;
};

int RunDagSolve(const DagArgs& a, const Globals& g, std::ostream& out) {
  const Instance inst = ReadInstanceFile(a.path);
  RequireModel(inst, {Model::kDag}, "dag-solve");
  const BlockDag dag = BlockDag::FromStaticGraph(inst.static_graph());
  const PiTable pi = ComputePi(dag, inst.target, inst.k);
  const Cost value = pi.at(inst.source, inst.k);
  const std::optional<Cost> deadline = a.deadline ? a.deadline : inst.deadline;
  const bool wins = deadline ? DecideDag(pi, inst.source, *deadline) : value != kUnreachable;
  const VertexNames& names = inst.names();
  if (g.json_output()) {
    json j;
    j["k"] = inst.k;
    j["value"] = value == kUnreachable ? json(nullptr) : json(value);
    j["deadline"] = deadline ? json(*deadline) : json(nullptr);
    j["decision"] = wins;
    if (a.table) {
      json rows = json::array();
      for (NodeId v = 0; v < dag.num_nodes(); ++v) {
        json row;
        row["vertex"] = names.name(v);
        json values = json::array();
        for (int i = 0; i <= inst.k; ++i) {
          const Cost c = pi.at(v, i);
          values.push_back(c == kUnreachable ? json(nullptr) : json(c));
        }
        row["pi"] = std::move(values);
        rows.push_back(std::move(row));
      }
      j["table"] = std::move(rows);
    }
    out << j.dump(2) << "\n";
  } else if (a.table) {
    out << "vertex";
    for (int i = 0; i <= inst.k; ++i) out << "\tpi_" << i;
    out << "\n";
    for (NodeId v = 0; v < dag.num_nodes(); ++v) {
      out << names.name(v);
      for (int i = 0; i <= inst.k; ++i) {
        const Cost c = pi.at(v, i);
        out << "\t" << (c == kUnreachable ? std::string("inf") : std::to_string(c));
      }
      out << "\n";
    }
  } else {
    if (value == kUnreachable) {
      out << "UNREACHABLE\n";
    } else {
      out << value << "\n";
    }
  }
  return wins ? kExitWin : kExitLose;
}

// --- solve-u --------------------------------------------------------------

struct UArgs {
  std::string path;
  std::string objective = "decide";
  Time t1 = 0;
  std::optional<Time> t2;
};

int RunSolveU(const UArgs& a, const Globals& g, std::ostream& out) {
  const Instance inst = ReadInstanceFile(a.path);
  RequireModel(inst, {Model::kTemporal}, "solve-u");
  json j;
  j["objective"] = a.objective;
  bool found = false;
  if (a.objective == "decide") {
    const Time t2 = DefaultDeadline(inst, a.t2);
    const UStrategy s = SolveU(inst, a.t1, t2);
    const Cost v = s.pi.at(s.expansion.source, inst.k);
    found = s.wins;
    j["decision"] = s.wins;
    j["window"] = {TimeJson(a.t1), TimeJson(t2)};
    j["value"] = v == kUnreachable ? json(nullptr) : json(v);
    j["certificate"] = {{"expansion_nodes", s.expansion.dag.num_nodes()},
                        {"expansion_arcs", s.expansion.dag.num_arcs()},
                        {"pi_k_source", j["value"]}};
  } else if (a.objective == "earliest") {
    const auto v = EarliestArrival(inst);
    found = v.has_value();
    j["value"] = v ? json(*v) : json(nullptr);
    j["window"] = v ? json::array({0, *v}) : json(nullptr);
  } else if (a.objective == "latest") {
    const auto v = LatestDeparture(inst);
    found = v.has_value();
    j["value"] = v ? TimeJson(*v) : json(nullptr);
    j["window"] =
        v ? json::array({TimeJson(*v), TimeJson(inst.deadline.value_or(kForever))})
          : json(nullptr);
  } else {
    const auto w = ShortestDuration(inst);
    found = w.has_value();
    j["value"] = w ? json(w->second - w->first) : json(nullptr);
    j["window"] = w ? json::array({w->first, w->second}) : json(nullptr);
  }
  if (g.json_output(true)) {
    out << j.dump(2) << "\n";
  } else if (!found) {
    out << "UNREACHABLE\n";
  } else {
    out << a.objective << ": ";
    if (a.objective == "decide") {
      out << "WIN";
    } else {
      out << (j["value"].is_null() ? "inf" : j["value"].dump());
    }
    out << "\nwindow: [" << (j["window"][0].is_null() ? "inf" : j["window"][0].dump())
        << ", " << (j["window"][1].is_null() ? "inf" : j["window"][1].dump()) << "]\n";
  }
  return found ? kExitWin : kExitLose;
}

// --- solve-li -------------------------------------------------------------

struct LiArgs {
  std::string path;
  bool exact = false;
  Time t1 = 0;
  std::optional<Time> deadline;
};

int RunSolveLi(const LiArgs& a, const Globals& g, std::ostream& out) {
  const Instance inst = ReadInstanceFile(a.path);
  RequireModel(inst, {Model::kTemporal}, "solve-li");
  const Time t2 = DefaultDeadline(inst, a.deadline);
  json j;
  j["window"] = {TimeJson(a.t1), TimeJson(t2)};
  bool wins = false;
  if (!a.exact && inst.k == 1) {
    K1Options options;
    options.start = a.t1;
    options.deadline = t2;
    options.settle_all = true;
    const Pi1Table table = SolveK1(inst, options);
    wins = table.wins;
    j["method"] = "k1";
    j["decision"] = wins;
    json rows = json::array();
    for (VertexId v = 0; v < static_cast<VertexId>(inst.num_vertices()); ++v) {
      rows.push_back({{"vertex", inst.names().name(v)},
                      {"lambda1", TimeJson(table.lambda1[v])},
                      {"nu1", TimeJson(table.nu1[v])},
                      {"pi1", TimeJson(table.pi1[v])}});
    }
    j["table"] = std::move(rows);
    if (g.json_output()) {
      out << j.dump(2) << "\n";
    } else {
      out << "decision: " << (wins ? "WIN" : "LOSE") << "\nmethod: k1\n";
      out << "vertex\tlambda1\tnu1\tpi1\n";
      for (VertexId v = 0; v < static_cast<VertexId>(inst.num_vertices()); ++v) {
        out << inst.names().name(v) << "\t" << TimeText(table.lambda1[v]) << "\t"
            << TimeText(table.nu1[v]) << "\t" << TimeText(table.pi1[v]) << "\n";
      }
    }
    return wins ? kExitWin : kExitLose;
  }
  const SearchLimits limits = g.limits();
  LiSolver solver(inst, a.t1, t2, limits);
  wins = solver.Wins();
  GameRules rules;
  rules.model = GameModel::kLi;
  rules.t1 = a.t1;
  rules.deadline = t2;
  auto traveller = MakeExactLiTraveller(inst, a.t1, t2, limits);
  auto blocker = MakeExactLiBlocker(inst, a.t1, t2, limits);
  const Transcript t = Play(inst, *traveller, *blocker, rules);
  j["method"] = "exact";
  j["decision"] = wins;
  j["states"] = solver.states();
  if (g.json_output()) {
    j["transcript"] = TranscriptJson(inst, t);
    out << j.dump(2) << "\n";
  } else {
    out << "decision: " << (wins ? "WIN" : "LOSE") << "\nmethod: exact\n";
    out << "transcript:\n" << TranscriptToJsonLines(inst, t);
  }
  return wins ? kExitWin : kExitLose;
}

// --- solve-static ---------------------------------------------------------

struct StaticArgs {
  std::string path;
  std::optional<Cost> deadline;
};

int RunSolveStatic(const StaticArgs& a, const Globals& g, std::ostream& out) {
  const Instance inst = ReadInstanceFile(a.path);
  RequireModel(inst, {Model::kStatic, Model::kDag}, "solve-static");
  StaticOptions options;
  options.limits = g.limits();
  const Cost value = ExactStaticValue(inst, options);
  const std::optional<Cost> deadline = a.deadline ? a.deadline : inst.deadline;
  const bool wins = value != kUnreachable && (!deadline || value <= *deadline);
  GameRules rules;
  rules.model = inst.model == Model::kDag ? GameModel::kDag : GameModel::kStatic;
  rules.deadline = deadline.value_or(kForever);
  auto traveller = MakeExactStaticTraveller(inst, options);
  auto blocker = MakeExactStaticBlocker(inst, options);
  const Transcript t = Play(inst, *traveller, *blocker, rules);
  if (g.json_output()) {
    json j;
    j["value"] = value == kUnreachable ? json(nullptr) : json(value);
    j["deadline"] = deadline ? json(*deadline) : json(nullptr);
    j["decision"] = wins;
    j["transcript"] = TranscriptJson(inst, t);
    out << j.dump(2) << "\n";
  } else {
    if (value == kUnreachable) {
      out << "UNREACHABLE\n";
    } else {
      out << "value: " << value << "\n";
    }
    if (deadline) out << "decision: " << (wins ? "WIN" : "LOSE") << "\n";
    out << "transcript:\n" << TranscriptToJsonLines(inst, t);
  }
  return wins ? kExitWin : kExitLose;
}

// --- gen ------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::string path;
  std::string output;
};

int RunGen(const GenArgs& a, const Globals& g, std::ostream& out) {
  const QbfFormula parsed = ParseFormula(ReadFile(a.path));
  Gadget gadget;
  std::ostringstream comment;
  if (a.kind == "qbf") {
    QbfFormula q = parsed;
    if (!q.IsAlternating()) {
      const bool all_exists = std::none_of(q.universal.begin(), q.universal.end(),
                                           [](bool u) { return u; });
      if (!all_exists && q.n() % 2 == 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "quantifier prefix must alternate starting with 'e'");
      }
      q = AlternatingQbf(q.matrix);
    }
    gadget = GenLiPspace(q);
    comment << "locally informed game from a QBF with n=" << q.n()
            << ", m=" << q.matrix.m() << "; L=" << 7 * q.n() / 2;
  } else if (a.kind == "sat4") {
    gadget = GenStaticNp(parsed.matrix);
    comment << "static game from a 3-CNF with n=" << parsed.n()
            << ", m=" << parsed.matrix.m() << "; M=" << 2 * parsed.n() + 2 * parsed.matrix.m() + 1
            << ", T=" << *gadget.deadline;
  } else {
    gadget = GenLiNp(parsed.matrix);
    comment << "locally informed game from a 3-CNF with n=" << parsed.n()
            << ", m=" << parsed.matrix.m();
  }
  const std::string text = g.json_output() ? SerializeInstanceJson(gadget.instance)
                                           : SerializeInstance(gadget.instance, comment.str());
  if (a.output.empty()) {
    out << text;
  } else {
    WriteFile(a.output, text);
  }
  return kExitWin;
}

// --- play / verify ----------------------------------------------------------

struct PlayArgs {
  std::string path;
  std::string model;
  std::string traveller = "strategy";
  std::string blocker = "strategy";
  Time t1 = 0;
  std::optional<Time> deadline;
};

GameRules RulesFor(const Instance& inst, const PlayArgs& a) {
  GameRules rules = DefaultRules(inst);
  if (!a.model.empty()) {
    auto m = ParseGameModel(a.model);
    if (!m) throw Error(ErrorCode::kInvalidArgument, "unknown model '" + a.model + "'");
    rules.model = *m;
  }
  if (inst.model == Model::kTemporal) rules.t1 = a.t1;
  if (a.deadline) rules.deadline = *a.deadline;
  return rules;
}

std::unique_ptr<TravellerPolicy> TravellerFor(const std::string& choice, const Instance& inst,
                                              const GameRules& rules, const Globals& g) {
  if (std::filesystem::is_regular_file(choice)) {
    return MakeScriptedTraveller(TranscriptFromJsonLines(inst, ReadFile(choice)));
  }
  return MakeTraveller(choice, inst, rules, g.limits());
}

int PrintVerify(const Instance& inst, const VerifyResult& r, const Globals& g,
                std::ostream& out) {
  if (g.json_output()) {
    json j;
    j["verified"] = r.ok;
    j["states"] = r.states;
    j["counterexample"] =
        r.counterexample ? TranscriptJson(inst, *r.counterexample) : json(nullptr);
    out << j.dump(2) << "\n";
  } else if (r.ok) {
    out << "verified: every Blocker behavior loses (" << r.states << " states)\n";
  } else {
    out << "counterexample:\n" << TranscriptToJsonLines(inst, *r.counterexample);
  }
  return r.ok ? kExitWin : kExitLose;
}

int RunPlay(const PlayArgs& a, const Globals& g, std::ostream& out) {
  const Instance inst = ReadInstanceFile(a.path);
  const GameRules rules = RulesFor(inst, a);
  auto traveller = TravellerFor(a.traveller, inst, rules, g);
  if (a.blocker == "exhaustive") {
    return PrintVerify(inst, VerifyTravellerStrategy(inst, *traveller, rules, g.limits()), g,
                       out);
  }
  std::unique_ptr<BlockerPolicy> blocker;
  if (std::filesystem::is_regular_file(a.blocker)) {
    blocker = MakeScriptedBlocker(TranscriptFromJsonLines(inst, ReadFile(a.blocker)));
  } else {
    blocker = MakeBlocker(a.blocker, inst, rules, g.seed, g.limits());
  }
  const Transcript t = Play(inst, *traveller, *blocker, rules);
  if (g.json_output()) {
    out << TranscriptJson(inst, t).dump(2) << "\n";
  } else {
    out << TranscriptToJsonLines(inst, t);
  }
  return t.outcome == Outcome::kTravellerWin ? kExitWin : kExitLose;
}

int RunVerify(const PlayArgs& a, const Globals& g, std::ostream& out) {
  const Instance inst = ReadInstanceFile(a.path);
  const GameRules rules = RulesFor(inst, a);
  auto traveller = TravellerFor(a.traveller, inst, rules, g);
  return PrintVerify(inst, VerifyTravellerStrategy(inst, *traveller, rules, g.limits()), g,
                     out);
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canadian Traveller games on temporal and static graphs", "tctp"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", g.seed, "Seed for randomized policies (default 1)");
  app.add_option("--limit", g.limit, "Memoized state cap for exact searches; 0 = no cap");
  app.add_flag("--quiet", g.quiet, "Print nothing on success");

  std::function<int(std::ostream&)> run;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  ExpandArgs expand;
  CLI::App* c_expand = sub("expand", "Print the time-expanded DAG of a temporal instance");
  c_expand->add_option("instance", expand.path)->required();
  c_expand->add_option("--t1", expand.t1, "Window start (default 0)");
  c_expand->add_option("--t2", expand.t2, "Window end (default: instance deadline)");
  c_expand->callback([&] { run = [&](std::ostream& o) { return RunExpand(expand, g, o); }; });

  DagArgs dag;
  CLI::App* c_dag = sub("dag-solve", "Worst-case cost on a DAG instance");
  c_dag->add_option("instance", dag.path)->required();
  c_dag->add_flag("--table", dag.table, "Print pi_0..pi_k for every vertex as TSV");
  c_dag->add_option("--deadline", dag.deadline, "Cost bound for the decision");
  c_dag->callback([&] { run = [&](std::ostream& o) { return RunDagSolve(dag, g, o); }; });

  UArgs u;
  CLI::App* c_u = sub("solve-u", "Uninformed temporal game");
  c_u->add_option("instance", u.path)->required();
  c_u->add_option("--objective", u.objective)
      ->check(CLI::IsMember({"decide", "earliest", "latest", "duration"}));
  c_u->add_option("--t1", u.t1, "Window start (default 0)");
  c_u->add_option("--t2", u.t2, "Window end (default: instance deadline)");
  c_u->callback([&] { run = [&](std::ostream& o) { return RunSolveU(u, g, o); }; });

  LiArgs li;
  CLI::App* c_li = sub("solve-li", "Locally informed temporal game");
  c_li->add_option("instance", li.path)->required();
  c_li->add_flag("--exact", li.exact, "Exact game search instead of the k=1 labeling");
  c_li->add_option("--t1", li.t1, "Start time (default 0)");
  c_li->add_option("--deadline", li.deadline, "Arrival deadline");
  c_li->callback([&] { run = [&](std::ostream& o) { return RunSolveLi(li, g, o); }; });

  StaticArgs st;
  CLI::App* c_st = sub("solve-static", "Static game");
  c_st->add_option("instance", st.path)->required();
  c_st->add_option("--deadline", st.deadline, "Cost bound for the decision");
  c_st->callback([&] { run = [&](std::ostream& o) { return RunSolveStatic(st, g, o); }; });

  GenArgs gen;
  CLI::App* c_gen = sub("gen", "Build a game instance from a formula");
  c_gen->add_option("kind", gen.kind)->required()->check(CLI::IsMember({"qbf", "sat4", "sat2"}));
  c_gen->add_option("formula", gen.path)->required();
  c_gen->add_option("-o,--output", gen.output, "Instance file (default: standard output)");
  c_gen->callback([&] { run = [&](std::ostream& o) { return RunGen(gen, g, o); }; });

  PlayArgs play;
  CLI::App* c_play = sub("play", "Referee one game");
  c_play->add_option("instance", play.path)->required();
  c_play->add_option("--model", play.model)->check(CLI::IsMember({"li", "u", "static", "dag"}));
  c_play->add_option("--traveller", play.traveller,
                     "greedy|strategy|exact|k1 or a transcript file");
  c_play->add_option("--blocker", play.blocker,
                     "none|random|strategy|exact|exhaustive or a transcript file");
  c_play->add_option("--t1", play.t1);
  c_play->add_option("--deadline", play.deadline);
  c_play->callback([&] { run = [&](std::ostream& o) { return RunPlay(play, g, o); }; });

  PlayArgs verify;
  CLI::App* c_verify = sub("verify", "Check a Traveller policy against every Blocker");
  c_verify->add_option("instance", verify.path)->required();
  c_verify->add_option("--model", verify.model)
      ->check(CLI::IsMember({"li", "u", "static", "dag"}));
  c_verify->add_option("--traveller", verify.traveller,
                       "greedy|strategy|exact|k1 or a transcript file");
  c_verify->add_option("--t1", verify.t1);
  c_verify->add_option("--deadline", verify.deadline);
  c_verify->callback([&] { run = [&](std::ostream& o) { return RunVerify(verify, g, o); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitWin;
    err << "run 'tctp --help' for usage\n";
    return kExitUsage;
  }

  std::ostream null_stream(nullptr);
  std::ostream& sink = g.quiet ? null_stream : out;
  try {
    return run(sink);
  } catch (const Error& e) {
    err << "error: " << ToString(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kSizeLimit ? kExitSizeLimit : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tctp::cli
