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

// Formula oracles and the three formula-to-game instance generators.
//
// A literal is a nonzero int: +i is x_i, -i is not x_i (1-based). A
// "forced" edge has k+1 copies and so can never be blocked.

#ifndef TCTP_GADGETS_HPP_
#define TCTP_GADGETS_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tctp/core.hpp"

namespace tctp {

using Clause = std::array<int, 3>;

struct CnfFormula {
  int n = 0;
  std::vector<Clause> clauses;

  int m() const { return static_cast<int>(clauses.size()); }
  // Throws kInvalidArgument for literals outside 1..n.
  void Validate() const;
};

struct QbfFormula {
  CnfFormula matrix;
  // universal[i] quantifies x_{i+1}; existential when false.
  std::vector<bool> universal;

  int n() const { return matrix.n; }
  // True for exists x1 forall x2 exists x3 ... with n even.
  bool IsAlternating() const;
};

// exists x1 forall x2 ... over f, padded with a trailing universal variable
// that appears in no clause when f.n is odd.
QbfFormula AlternatingQbf(const CnfFormula& f);

// DIMACS CNF ("c" comments, "p cnf n m", clauses ending in 0) with exactly
// three literals per clause, and an optional "q e a e ..." prefix line giving
// one quantifier per variable. Without a prefix every variable is
// existential. Throws kParse.
QbfFormula ParseFormula(std::string_view text);
std::string FormatFormula(const QbfFormula& f, bool with_prefix);

bool Satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

// Exhaustive; n <= 20 unless limits.override. Throw kSizeLimit otherwise.
bool EvalQbf(const QbfFormula& f, const SearchLimits& limits = {});
std::optional<std::vector<bool>> SolveCnf(const CnfFormula& f,
                                          const SearchLimits& limits = {});
inline bool EvalCnfSat(const CnfFormula& f, const SearchLimits& limits = {}) {
  return SolveCnf(f, limits).has_value();
}

struct Gadget {
  Instance instance;
  // Window (temporal) or cost bound (static) at which the decision is asked.
  Time t1 = 0;
  Time t2 = kForever;
  std::optional<Cost> deadline;
};

// Locally informed temporal instance with k = 2m + n/2, L = 7n/2 and unit
// lengths; Traveller wins iff the alternating formula is true. Throws
// kInvalidArgument unless f.IsAlternating() (use AlternatingQbf).
Gadget GenLiPspace(const QbfFormula& f);

// Static instance with k = 4, M = 2n+2m+1 and deadline T = 27M+2n+2m;
// Traveller wins iff f is satisfiable.
Gadget GenStaticNp(const CnfFormula& f);

// Locally informed temporal instance with k = 2; Traveller wins iff f is
// satisfiable.
Gadget GenLiNp(const CnfFormula& f);

}  // namespace tctp

#endif  // TCTP_GADGETS_HPP_
