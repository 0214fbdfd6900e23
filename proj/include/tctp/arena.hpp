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

// Game referee for Traveller and Blocker policies.
//
// A game alternates reveals and Traveller actions. Before Traveller acts at
// a position, Blocker fixes the status of the edges the model reveals there:
//
//   LI      on first arrival at v, every undecided edge at v with tau >= clock
//   U       on arrival at (v, clock), the undecided edges at v with tau == clock
//   STATIC  on first arrival at v, every undecided edge at v (out-arcs only
//   DAG     when the graph is directed)
//
// Temporal games measure time; static and DAG games measure the cost paid so
// far in the same `clock` field. Illegal output is a FOUL and the other
// player wins.

#ifndef TCTP_ARENA_HPP_
#define TCTP_ARENA_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tctp/core.hpp"

namespace tctp {

enum class GameModel { kLi, kU, kStatic, kDag };

const char* ToString(GameModel model);
std::optional<GameModel> ParseGameModel(const std::string& tag);

struct GameRules {
  GameModel model = GameModel::kLi;
  // Start time (temporal) or 0; Traveller must reach t with clock <= deadline.
  Time t1 = 0;
  Time deadline = kForever;
  // Traveller actions after which the game is called for Blocker.
  std::size_t max_actions = 100'000;
};

// Rules from the instance: its deadline when set, and the model matching the
// graph kind (LI for temporal instances).
GameRules DefaultRules(const Instance& inst);

struct GameState {
  VertexId pos = 0;
  Time clock = 0;
  int used = 0;
  // Per edge: -1 if undecided, otherwise the number of blocked copies.
  std::vector<int> blocked;
  std::vector<bool> visited;

  bool open(EdgeId e, int copies) const { return blocked[e] < copies; }
};

struct EdgeBlock {
  EdgeId edge = 0;
  int copies = 0;
  friend bool operator==(const EdgeBlock&, const EdgeBlock&) = default;
};

struct Action {
  enum class Kind { kMove, kWait, kStop };
  Kind kind = Kind::kStop;
  EdgeId edge = -1;
  Time until = 0;

  static Action Move(EdgeId e) { return {Kind::kMove, e, 0}; }
  static Action Wait(Time until) { return {Kind::kWait, -1, until}; }
  static Action Stop() { return {}; }
  friend bool operator==(const Action&, const Action&) = default;
};

// What both players see.
struct GameView {
  const Instance& inst;
  const GameRules& rules;
  const GameState& state;
};

class TravellerPolicy {
 public:
  virtual ~TravellerPolicy() = default;
  virtual std::string name() const = 0;
  // Called after the reveal at state.pos.
  virtual Action Act(const GameView& view) = 0;
};

class BlockerPolicy {
 public:
  virtual ~BlockerPolicy() = default;
  virtual std::string name() const = 0;
  // Edges of `offered` left out of the result stay open.
  virtual std::vector<EdgeBlock> Reveal(const GameView& view,
                                        std::span<const EdgeId> offered) = 0;
};

enum class Outcome { kTravellerWin, kBlockerWin };
enum class Player { kTraveller, kBlocker };

struct Event {
  enum class Kind { kReveal, kMove, kWait };
  Kind kind = Kind::kReveal;
  VertexId vertex = 0;                 // reveal position, move tail, wait vertex
  std::vector<EdgeId> edges;           // kReveal: offered edges
  std::vector<int> statuses;           // kReveal: blocked copies per offered edge
  EdgeId edge = -1;                    // kMove
  VertexId to = 0;                     // kMove
  Time from = 0;                       // kMove: departure; kWait: start
  Time to_time = 0;                    // kMove: arrival; kWait: until
  friend bool operator==(const Event&, const Event&) = default;
};

struct Transcript {
  GameModel model = GameModel::kLi;
  std::vector<Event> events;
  Outcome outcome = Outcome::kBlockerWin;
  std::optional<Player> foul;
  std::string reason;
  Time final_time = 0;
  int budget_spent = 0;
  friend bool operator==(const Transcript&, const Transcript&) = default;
};

// Step-by-step referee; copyable so searches can branch on it.
class Game {
 public:
  Game(const Instance& inst, const GameRules& rules);

  const Instance& instance() const { return *inst_; }
  const GameRules& rules() const { return rules_; }
  const GameState& state() const { return state_; }
  const Transcript& transcript() const { return transcript_; }
  GameView view() const { return GameView{*inst_, rules_, state_}; }
  bool over() const { return over_; }

  // Undecided edges the model reveals now; empty once they are decided.
  std::vector<EdgeId> Offered() const;
  void ApplyReveal(std::span<const EdgeBlock> blocks);
  void ApplyAction(const Action& action);
  // Ends the game with a FOUL by `offender`.
  void Forfeit(Player offender, std::string reason);

  // Canonical state string; two games with equal keys play out identically
  // against the same policies.
  std::string Key() const;

 private:
  void Finish(Outcome outcome, std::optional<Player> foul, std::string reason);
  void CheckPosition();
  bool temporal() const;
  std::size_t num_edges() const;
  int copies(EdgeId e) const;

  const Instance* inst_;
  GameRules rules_;
  GameState state_;
  Transcript transcript_;
  std::size_t actions_ = 0;
  bool over_ = false;
};

Transcript Play(const Instance& inst, TravellerPolicy& traveller,
                BlockerPolicy& blocker, const GameRules& rules);

struct VerifyResult {
  bool ok = true;
  std::optional<Transcript> counterexample;
  std::size_t states = 0;
};

// Plays `traveller` against every Blocker behavior, partial blocks included.
// The policy must be a function of the game state. Throws kSizeLimit when
// more than limits.max_states game states are explored.
VerifyResult VerifyTravellerStrategy(const Instance& inst, TravellerPolicy& traveller,
                                     const GameRules& rules,
                                     const SearchLimits& limits = {});

// One JSON object per line: the events, then a summary line.
std::string TranscriptToJsonLines(const Instance& inst, const Transcript& t);
// Throws kParse.
Transcript TranscriptFromJsonLines(const Instance& inst, std::string_view text);

}  // namespace tctp

#endif  // TCTP_ARENA_HPP_
