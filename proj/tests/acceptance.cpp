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

// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tctp/arena.hpp"
#include "tctp/block_dag.hpp"
#include "tctp/dagctp.hpp"
#include "tctp/gadgets.hpp"
#include "tctp/instance_io.hpp"
#include "tctp/litctp.hpp"
#include "tctp/policies.hpp"
#include "tctp/random_instances.hpp"
#include "tctp/staticctp.hpp"
#include "tctp/utctp.hpp"
#include "test_util.hpp"

namespace tctp {
namespace {

// Pinned budgets and tolerances.
constexpr double kTwoWaySeconds = 1.0;
constexpr int kRandomDags = 300;
constexpr double kRandomDagSeconds = 60.0;
constexpr int kRandomTemporal = 200;
constexpr double kRandomTemporalSeconds = 120.0;
constexpr int kRandomK1 = 200;
constexpr double kRandomK1Seconds = 120.0;
constexpr std::size_t kMinQbfCorpus = 20;
constexpr std::size_t kMinCnfCorpus = 10;
constexpr Time kScanHorizon = 10;
constexpr int kScalingLayers = 60;
constexpr int kScalingWidth = 24;
constexpr int kScalingRepeats = 5;
constexpr double kMaxScalingSlope = 2.3;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Window {
  Time t1 = 0;
  Time t2 = kForever;
};

struct TemporalCase {
  Instance inst;
  Window random_window;
};

std::vector<Instance> DagSuite() {
  Rng rng(101);
  std::vector<Instance> out;
  for (int i = 0; i < kRandomDags; ++i) out.push_back(RandomDag(rng));
  return out;
}

std::vector<TemporalCase> TemporalSuite() {
  Rng rng(202);
  std::uniform_int_distribution<Time> pick(0, 6);
  std::vector<TemporalCase> out;
  for (int i = 0; i < kRandomTemporal; ++i) {
    TemporalCase c{RandomTemporal(rng), {}};
    Time a = pick(rng), b = pick(rng);
    if (a > b) std::swap(a, b);
    c.random_window = {a, b};
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Instance> K1Suite() {
  Rng rng(303);
  RandomTemporalOptions options;
  options.min_k = 1;
  options.max_k = 1;
  std::vector<Instance> out;
  for (int i = 0; i < kRandomK1; ++i) out.push_back(RandomTemporal(rng, options));
  return out;
}

struct Result {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void Report(int id, const std::string& title, const Result& r) {
  std::printf("%s criterion %d: %s%s%s\n", r.pass ? "PASS" : "FAIL", id, title.c_str(),
              r.detail.empty() ? "" : " -- ", r.detail.c_str());
  std::fflush(stdout);
  if (!r.pass) ++failures;
}

void Run(int id, const std::string& title, const std::function<Result()>& check) {
  try {
    Report(id, title, check());
  } catch (const std::exception& e) {
    Report(id, title, Result{false, std::string("exception: ") + e.what()});
  }
}

std::string Timing(double seconds) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3fs", seconds);
  return buf;
}

Result TwoWayReference() {
  const Instance inst = testing::TwoWay(2);
  Result r;
  auto timed = [&](const char* what, bool expected, const std::function<bool()>& f) {
    const auto start = Clock::now();
    const bool got = f();
    const double s = Seconds(start);
    if (got != expected || s >= kTwoWaySeconds) {
      r.pass = false;
      r.detail += std::string(what) + "=" + (got ? "true" : "false") + " in " + Timing(s) + "; ";
    }
  };
  timed("decide_u[0,3]", false, [&] { return DecideU(inst, 0, 3); });
  timed("decide_u[0,inf)", false, [&] { return DecideU(inst, 0, kForever); });
  timed("exact_li[0,inf)", true, [&] { return ExactLi(inst, 0, kForever); });
  return r;
}

Result RandomDagsMatchBruteForce() {
  const auto start = Clock::now();
  Result r;
  for (const Instance& inst : DagSuite()) {
    const BlockDag dag = BlockDag::FromStaticGraph(inst.static_graph());
    const Cost pi = ComputePi(dag, inst.target, inst.k).at(inst.source, inst.k);
    const Cost brute = BruteDagGame(dag, inst.source, inst.target, inst.k);
    if (pi != brute) return {false, "mismatch on\n" + SerializeInstance(inst)};
  }
  const double s = Seconds(start);
  r.pass = s < kRandomDagSeconds;
  r.detail = std::to_string(kRandomDags) + " instances in " + Timing(s);
  return r;
}

Result RandomTemporalMatchBruteForce() {
  const auto start = Clock::now();
  Result r;
  for (const TemporalCase& c : TemporalSuite()) {
    for (const Window& w : {Window{0, kForever}, c.random_window}) {
      if (DecideU(c.inst, w.t1, w.t2) != BruteUGame(c.inst, w.t1, w.t2)) {
        return {false, "mismatch on window [" + std::to_string(w.t1) + ", " +
                           std::to_string(w.t2) + "]\n" + SerializeInstance(c.inst)};
      }
    }
  }
  const double s = Seconds(start);
  r.pass = s < kRandomTemporalSeconds;
  r.detail = std::to_string(kRandomTemporal) + " instances in " + Timing(s);
  return r;
}

Result K1MatchesExact() {
  const auto start = Clock::now();
  Result r;
  int wins = 0;
  for (const Instance& inst : K1Suite()) {
    const bool k1 = SolveK1(inst).wins;
    wins += k1 ? 1 : 0;
    if (k1 != ExactLi(inst, 0, kForever)) return {false, "mismatch on\n" + SerializeInstance(inst)};
  }
  const double s = Seconds(start);
  r.pass = s < kRandomK1Seconds;
  r.detail = std::to_string(kRandomK1) + " instances (" + std::to_string(wins) + " wins) in " +
             Timing(s);
  return r;
}

Result QbfGadget() {
  const std::vector<QbfFormula> corpus = testing::QbfCorpus();
  Result r;
  if (corpus.size() < kMinQbfCorpus) return {false, "corpus too small"};
  int trues = 0;
  for (const QbfFormula& f : corpus) {
    const Gadget g = GenLiPspace(f);
    const bool expected = EvalQbf(f);
    trues += expected ? 1 : 0;
    if (ExactLi(g.instance, g.t1, g.t2) != expected) {
      return {false, "mismatch on\n" + FormatFormula(f, true)};
    }
  }
  r.detail = std::to_string(corpus.size()) + " formulas, " + std::to_string(trues) + " true";
  r.pass = trues > 0 && trues < static_cast<int>(corpus.size());
  return r;
}

Result CnfGadget(const char* name, const std::function<bool(const CnfFormula&)>& decide) {
  const std::vector<CnfFormula> corpus = testing::CnfCorpus();
  if (corpus.size() < kMinCnfCorpus) return {false, "corpus too small"};
  int sat = 0;
  for (const CnfFormula& f : corpus) {
    const bool expected = EvalCnfSat(f);
    sat += expected ? 1 : 0;
    if (decide(f) != expected) {
      return {false, std::string(name) + " mismatch on\n" +
                         FormatFormula(QbfFormula{f, std::vector<bool>(f.n, false)}, false)};
    }
  }
  Result r;
  r.detail = std::to_string(corpus.size()) + " formulas, " + std::to_string(sat) + " satisfiable";
  r.pass = sat > 0 && sat < static_cast<int>(corpus.size());
  return r;
}

// Every event time of the suite lies in [0, kScanHorizon].
Result OptimizersMatchScan() {
  for (const TemporalCase& c : TemporalSuite()) {
    const Instance& inst = c.inst;
    std::optional<Time> earliest;
    for (Time t2 = 0; t2 <= kScanHorizon && !earliest; ++t2) {
      if (DecideU(inst, 0, t2)) earliest = t2;
    }
    std::optional<Time> latest;
    if (inst.source == inst.target) {
      latest = kForever;
    } else {
      for (Time t1 = kScanHorizon; t1 >= 0 && !latest; --t1) {
        if (DecideU(inst, t1, kForever)) latest = t1;
      }
    }
    std::optional<std::pair<Time, Time>> shortest;
    for (Time t1 = 0; t1 <= kScanHorizon; ++t1) {
      for (Time t2 = t1; t2 <= kScanHorizon; ++t2) {
        if (shortest && t2 - t1 >= shortest->second - shortest->first) break;
        if (DecideU(inst, t1, t2)) {
          shortest = std::make_pair(t1, t2);
          break;
        }
      }
    }
    if (EarliestArrival(inst) != earliest) {
      return {false, "earliest mismatch on\n" + SerializeInstance(inst)};
    }
    if (LatestDeparture(inst) != latest) {
      return {false, "latest mismatch on\n" + SerializeInstance(inst)};
    }
    if (ShortestDuration(inst) != shortest) {
      return {false, "duration mismatch on\n" + SerializeInstance(inst)};
    }
  }
  return {true, std::to_string(kRandomTemporal) + " instances"};
}

// Over the suites of criteria 2-4: each true decision is certified by the
// extracted strategy against every Blocker; each false one lets the
// exhaustive Blocker beat the greedy Traveller.
Result StrategiesVerify() {
  int certified = 0, refuted = 0;
  auto check = [&](const Instance& inst, const GameRules& rules, bool wins,
                   TravellerPolicy& strategy) -> bool {
    if (wins) {
      ++certified;
      return VerifyTravellerStrategy(inst, strategy, rules).ok;
    }
    ++refuted;
    auto greedy = MakeGreedyTraveller();
    return !VerifyTravellerStrategy(inst, *greedy, rules).ok;
  };

  for (const Instance& dag : DagSuite()) {
    const Cost value =
        ComputePi(BlockDag::FromStaticGraph(dag.static_graph()), dag.target, dag.k)
            .at(dag.source, dag.k);
    GameRules rules = DefaultRules(dag);
    rules.deadline = value == kUnreachable ? kForever : value;
    auto traveller = MakeDagTraveller(dag);
    if (!check(dag, rules, value != kUnreachable, *traveller)) {
      return {false, "dag strategy failed on\n" + SerializeInstance(dag)};
    }
  }
  for (const TemporalCase& c : TemporalSuite()) {
    for (const Window& w : {Window{0, kForever}, c.random_window}) {
      GameRules rules;
      rules.model = GameModel::kU;
      rules.t1 = w.t1;
      rules.deadline = w.t2;
      auto traveller = MakeUTraveller(c.inst, w.t1, w.t2);
      if (!check(c.inst, rules, DecideU(c.inst, w.t1, w.t2), *traveller)) {
        return {false, "U strategy failed on window [" + std::to_string(w.t1) + ", " +
                           std::to_string(w.t2) + "]\n" + SerializeInstance(c.inst)};
      }
    }
  }
  for (const Instance& inst : K1Suite()) {
    GameRules rules;
    rules.model = GameModel::kLi;
    auto traveller = MakeK1Traveller(inst, 0, kForever);
    if (!check(inst, rules, SolveK1(inst).wins, *traveller)) {
      return {false, "k=1 strategy failed on\n" + SerializeInstance(inst)};
    }
  }
  return {true, std::to_string(certified) + " certified, " + std::to_string(refuted) +
                    " refuted"};
}

Result PiScaling() {
  const std::vector<int> ks = {8, 16, 32};
  std::vector<double> xs, ys;
  std::string detail;
  for (int k : ks) {
    Rng rng(1000 + k);
    const Instance inst = LayeredDag(rng, kScalingLayers, kScalingWidth, k);
    const BlockDag dag = BlockDag::FromStaticGraph(inst.static_graph());
    double best = 1e100;
    for (int rep = 0; rep < kScalingRepeats; ++rep) {
      const auto start = Clock::now();
      const PiTable pi = ComputePi(dag, inst.target, k);
      const double s = Seconds(start);
      if (pi.k() != k) return {false, "bad table"};
      best = std::min(best, s);
    }
    xs.push_back(std::log(static_cast<double>(k)));
    ys.push_back(std::log(std::max(best, 1e-9)));
    detail += "k=" + std::to_string(k) + ":" + Timing(best) + " ";
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  char buf[64];
  std::snprintf(buf, sizeof buf, "slope %.2f (max %.2f)", slope, kMaxScalingSlope);
  return {slope <= kMaxScalingSlope, detail + buf};
}

}  // namespace
}  // namespace tctp

int main() {
  using namespace tctp;
  Run(1, "two-way example: U loses on [0,3] and [0,inf), LI wins", TwoWayReference);
  Run(2, "pi recurrence equals DAG game brute force", RandomDagsMatchBruteForce);
  Run(3, "U decision equals U game brute force", RandomTemporalMatchBruteForce);
  Run(4, "k=1 labeling equals exact LI search", K1MatchesExact);
  Run(5, "QBF gadget: LI outcome equals QBF truth", QbfGadget);
  Run(6, "4-blocker static gadget: outcome equals satisfiability", [] {
    return CnfGadget("static", [](const CnfFormula& f) {
      const Gadget g = GenStaticNp(f);
      return DecideStatic(g.instance, *g.deadline);
    });
  });
  Run(7, "2-blocker LI gadget: outcome equals satisfiability", [] {
    return CnfGadget("li", [](const CnfFormula& f) {
      const Gadget g = GenLiNp(f);
      return ExactLi(g.instance, g.t1, g.t2);
    });
  });
  Run(8, "U optimizers equal an integer window scan", OptimizersMatchScan);
  Run(9, "extracted strategies verify; losing instances refute greedy", StrategiesVerify);
  Run(10, "pi computation scales at most quadratically in k", PiScaling);
  return failures == 0 ? 0 : 1;
}
