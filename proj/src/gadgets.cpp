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

#include "tctp/gadgets.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

namespace tctp {

void CnfFormula::Validate() const {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative variable count");
  for (const Clause& c : clauses) {
    for (int lit : c) {
      if (lit == 0 || std::abs(lit) > n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "literal " + std::to_string(lit) + " out of range");
      }
    }
  }
}

bool QbfFormula::IsAlternating() const {
  if (n() % 2 != 0 || static_cast<int>(universal.size()) != n()) return false;
  for (int i = 0; i < n(); ++i) {
    if (universal[i] != (i % 2 == 1)) return false;
  }
  return true;
}

QbfFormula AlternatingQbf(const CnfFormula& f) {
  f.Validate();
  QbfFormula q;
  q.matrix = f;
  if (q.matrix.n % 2 != 0) ++q.matrix.n;
  for (int i = 0; i < q.matrix.n; ++i) q.universal.push_back(i % 2 == 1);
  return q;
}

QbfFormula ParseFormula(std::string_view text) {
  QbfFormula q;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  int declared_m = -1;
  bool header = false;
  std::vector<int> pending;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string format;
      if (!(tokens >> format >> q.matrix.n >> declared_m) || format != "cnf") {
        fail("expected 'p cnf <vars> <clauses>'");
      }
      header = true;
      continue;
    }
    if (!header) fail("clause before 'p cnf' header");
    if (first == "q") {
      for (std::string quant; tokens >> quant;) {
        if (quant != "e" && quant != "a") fail("quantifier must be 'e' or 'a'");
        q.universal.push_back(quant == "a");
      }
      continue;
    }
    std::istringstream all(line);
    for (std::string tok; all >> tok;) {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') fail("bad literal '" + tok + "'");
      if (lit == 0) {
        if (pending.size() != 3) fail("clause must have exactly three literals");
        q.matrix.clauses.push_back(Clause{pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!header) throw Error(ErrorCode::kParse, "missing 'p cnf' header");
  if (!pending.empty()) throw Error(ErrorCode::kParse, "unterminated clause");
  if (declared_m != q.matrix.m()) {
    throw Error(ErrorCode::kParse, "clause count does not match header");
  }
  if (q.universal.empty()) q.universal.assign(q.matrix.n, false);
  if (static_cast<int>(q.universal.size()) != q.matrix.n) {
    throw Error(ErrorCode::kParse, "prefix length does not match variable count");
  }
  try {
    q.matrix.Validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return q;
}

std::string FormatFormula(const QbfFormula& f, bool with_prefix) {
  std::ostringstream out;
  out << "p cnf " << f.n() << ' ' << f.matrix.m() << '\n';
  if (with_prefix) {
    out << 'q';
    for (bool a : f.universal) out << ' ' << (a ? 'a' : 'e');
    out << '\n';
  }
  for (const Clause& c : f.matrix.clauses) {
    out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  }
  return out.str();
}

bool Satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
  for (const Clause& c : f.clauses) {
    bool sat = false;
    for (int lit : c) {
      if (assignment.at(std::abs(lit) - 1) == (lit > 0)) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

namespace {

void GuardVariables(int n, const SearchLimits& limits) {
  if (!limits.override && n > 20) {
    throw Error(ErrorCode::kSizeLimit, "formula has more than 20 variables");
  }
}

bool EvalFrom(const QbfFormula& f, std::vector<bool>& assignment, int i) {
  if (i == f.n()) return Satisfies(f.matrix, assignment);
  bool results[2];
  for (int value = 0; value < 2; ++value) {
    assignment[i] = value == 1;
    results[value] = EvalFrom(f, assignment, i + 1);
    if (f.universal[i] != results[value]) return results[value];
  }
  return results[1];
}

}  // namespace

bool EvalQbf(const QbfFormula& f, const SearchLimits& limits) {
  GuardVariables(f.n(), limits);
  f.matrix.Validate();
  if (static_cast<int>(f.universal.size()) != f.n()) {
    throw Error(ErrorCode::kInvalidArgument, "prefix length mismatch");
  }
  std::vector<bool> assignment(f.n(), false);
  return EvalFrom(f, assignment, 0);
}

std::optional<std::vector<bool>> SolveCnf(const CnfFormula& f,
                                          const SearchLimits& limits) {
  GuardVariables(f.n, limits);
  f.Validate();
  std::vector<bool> assignment(f.n, false);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.n); ++bits) {
    for (int i = 0; i < f.n; ++i) assignment[i] = (bits >> i & 1u) != 0;
    if (Satisfies(f, assignment)) return assignment;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

// Collects named vertices and edges, then canonicalizes once.
class Builder {
 public:
  VertexId Vertex(const std::string& name) {
    auto [it, inserted] = ids_.emplace(name, static_cast<VertexId>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }

  void Timed(const std::string& a, const std::string& b, Time tau, int copies) {
    if (copies <= 0) return;
    timed_.push_back(TimeEdge{Vertex(a), Vertex(b), tau, 1, copies});
  }

  void Weighted(const std::string& a, const std::string& b, Cost w, int copies) {
    if (copies <= 0) return;
    weighted_.push_back(StaticEdge{Vertex(a), Vertex(b), w, copies});
  }

  Instance Temporal(int k) {
    return MakeTemporalInstance(TemporalGraph(VertexNames(names_), timed_), "s", "t", k);
  }

  Instance Static(int k, Cost deadline) {
    return MakeStaticInstance(StaticGraph(VertexNames(names_), weighted_, false),
                              "s", "t", k, deadline);
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<TimeEdge> timed_;
  std::vector<StaticEdge> weighted_;
};

std::string Index(const std::string& prefix, int i) {
  return prefix + std::to_string(i);
}

std::string Literal(int lit) {
  return lit > 0 ? Index("x", lit) : Index("nx", -lit);
}

std::vector<int> DistinctLiterals(const Clause& c) {
  std::vector<int> lits(c.begin(), c.end());
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

}  // namespace

Gadget GenLiPspace(const QbfFormula& f) {
  f.matrix.Validate();
  if (!f.IsAlternating()) {
    throw Error(ErrorCode::kInvalidArgument,
                "formula must have an alternating exists/forall prefix with n even");
  }
  const int n = f.n();
  const int m = f.matrix.m();
  const int k = 2 * m + n / 2;
  const int forced = k + 1;
  const Time L = 7 * n / 2;

  Builder b;
  for (const char* name : {"s", "t", "w"}) b.Vertex(name);
  for (int i = 1; i <= n; ++i) {
    for (const char* p : {"v", "x", "nx", "a", "z"}) b.Vertex(Index(p, i));
    if (i % 2 == 0) b.Vertex(Index("b", i));
  }
  b.Vertex(Index("v", n + 1));
  b.Vertex(Index("a", n + 1));
  for (int j = 1; j <= m; ++j) b.Vertex(Index("c", j));

  b.Timed("s", "v1", 0, forced);
  for (int i = 1; i <= n; ++i) {
    const std::string v = Index("v", i), x = Index("x", i), nx = Index("nx", i);
    const std::string a = Index("a", i), next = Index("v", i + 1);
    if (i % 2 == 1) {
      const Time base = 7 * (i / 2);
      b.Timed(v, x, base + 1, forced);
      b.Timed(v, nx, base + 1, forced);
      b.Timed(x, next, base + 2, forced);
      b.Timed(nx, next, base + 2, forced);
      b.Timed(v, a, base + 1, forced);
    } else {
      const Time base = 7 * ((i - 1) / 2);
      const std::string bi = Index("b", i);
      b.Timed(v, x, base + 3, 1);
      b.Timed(v, nx, base + 6, 1);
      b.Timed(x, next, 7 * (i / 2), forced);
      b.Timed(nx, next, 7 * (i / 2), forced);
      b.Timed(x, bi, base + 4, forced);
      b.Timed(bi, v, base + 5, forced);
      b.Timed(bi, "t", base + 5, 2);
      b.Timed(v, a, base + 3, forced);
    }
    b.Timed(a, "t", L + 5, k - i / 2);
    b.Timed(x, Index("z", i), L + 4, 1);
    b.Timed(nx, Index("z", i), L + 4, 1);
    b.Timed(Index("z", i), "t", L + 5, 2 * m);
  }
  const std::string last = Index("v", n + 1);
  b.Timed(last, Index("a", n + 1), L + 1, forced);
  b.Timed(Index("a", n + 1), "t", L + 5, k - n / 2);
  b.Timed(last, "w", L + 1, forced);
  b.Timed("w", "t", L + 2, 1);
  for (int j = 1; j <= m; ++j) {
    const std::string c = Index("c", j);
    b.Timed("w", c, L + 2, 2);
    for (int lit : DistinctLiterals(f.matrix.clauses[j - 1])) {
      b.Timed(c, Literal(lit), L + 3, forced);
    }
  }
  return Gadget{b.Temporal(k), 0, kForever, std::nullopt};
}

Gadget GenStaticNp(const CnfFormula& f) {
  f.Validate();
  const int n = f.n;
  const int m = f.m();
  const int k = 4;
  const int forced = k + 1;
  const Cost M = 2 * n + 2 * m + 1;
  const Cost T = 27 * M + 2 * n + 2 * m;

  auto v = [](int i) { return i == 0 ? std::string("s") : Index("v", i); };
  Builder b;
  b.Vertex("s");
  for (int i = 1; i <= n; ++i) {
    for (const char* p : {"v", "x", "nx", "z", "nz"}) b.Vertex(Index(p, i));
  }
  b.Vertex("w");
  b.Vertex("t");
  for (int j = 1; j <= m + 1; ++j) b.Vertex(Index("c", j));
  for (int j = 1; j <= m; ++j) {
    for (int s = 1; s <= 3; ++s) {
      b.Vertex("alpha" + std::to_string(j) + "_" + std::to_string(s));
      b.Vertex("beta" + std::to_string(j) + "_" + std::to_string(s));
    }
  }

  for (int i = 1; i <= n; ++i) {
    b.Weighted(v(i - 1), Index("x", i), 1, forced);
    b.Weighted(v(i - 1), Index("nx", i), 1, forced);
    b.Weighted(Index("x", i), v(i), 1, forced);
    b.Weighted(Index("nx", i), v(i), 1, forced);
    b.Weighted(Index("x", i), Index("z", i), 10 * M, 1);
    b.Weighted(Index("nx", i), Index("nz", i), 10 * M, 1);
    b.Weighted(Index("z", i), "t", 0, 2);
    b.Weighted(Index("nz", i), "t", 0, 2);
  }
  b.Weighted(v(n), "w", 2 * m + 27 * M, forced);
  b.Weighted("w", "t", 0, 4);
  b.Weighted(v(n), "c1", 9 * M, 1);
  for (int j = 1; j <= m; ++j) {
    const Clause& clause = f.clauses[j - 1];
    for (int s = 1; s <= 3; ++s) {
      const std::string alpha = "alpha" + std::to_string(j) + "_" + std::to_string(s);
      const std::string beta = "beta" + std::to_string(j) + "_" + std::to_string(s);
      b.Weighted(Index("c", j), alpha, 1, forced);
      b.Weighted(alpha, Index("c", j + 1), 1, 3);
      b.Weighted(alpha, beta, 2 * m - 2 * j + 1, 2);
      b.Weighted(beta, Literal(clause[s - 1]), 8 * M, forced);
    }
  }
  b.Weighted(Index("c", m + 1), "t", 18 * M, forced);
  Gadget g{b.Static(k, T), 0, kForever, T};
  return g;
}

Gadget GenLiNp(const CnfFormula& f) {
  f.Validate();
  const int n = f.n;
  const int m = f.m();
  const int k = 2;
  const int forced = k + 1;
  const Time L = 2 * n + 2 * m + 2;

  auto v = [](int i) { return i == 0 ? std::string("s") : Index("v", i); };
  Builder b;
  b.Vertex("s");
  for (int i = 1; i <= n; ++i) {
    for (const char* p : {"v", "x", "nx", "z", "nz"}) b.Vertex(Index(p, i));
  }
  b.Vertex("w");
  b.Vertex("t");
  for (int j = 1; j <= m + 1; ++j) b.Vertex(Index("c", j));
  for (int j = 1; j <= m; ++j) {
    for (int s = 1; s <= 3; ++s) {
      b.Vertex("alpha" + std::to_string(j) + "_" + std::to_string(s));
      b.Vertex("beta" + std::to_string(j) + "_" + std::to_string(s));
    }
  }

  for (int i = 0; i < n; ++i) {
    b.Timed(v(i), Index("x", i + 1), 2 * i + 1, forced);
    b.Timed(v(i), Index("nx", i + 1), 2 * i + 1, forced);
    b.Timed(Index("x", i + 1), v(i + 1), 2 * i + 2, forced);
    b.Timed(Index("nx", i + 1), v(i + 1), 2 * i + 2, forced);
  }
  b.Timed(v(n), "w", 2 * n + 1, forced);
  b.Timed("w", "t", 2 * n + 2, 2);
  b.Timed(v(n), "c1", 2 * n + 1, 1);
  for (int j = 1; j <= m; ++j) {
    const Clause& clause = f.clauses[j - 1];
    for (int s = 1; s <= 3; ++s) {
      const std::string alpha = "alpha" + std::to_string(j) + "_" + std::to_string(s);
      const std::string beta = "beta" + std::to_string(j) + "_" + std::to_string(s);
      b.Timed(Index("c", j), alpha, 2 * n + 2 * j, forced);
      b.Timed(alpha, Index("c", j + 1), 2 * n + 2 * j + 1, 1);
      b.Timed(alpha, beta, L, forced);
      b.Timed(beta, Literal(clause[s - 1]), L + 1, forced);
    }
  }
  b.Timed(Index("c", m + 1), "t", L, forced);
  for (int i = 1; i <= n; ++i) {
    b.Timed(Index("x", i), Index("z", i), L + 2, 1);
    b.Timed(Index("nx", i), Index("nz", i), L + 2, 1);
    b.Timed(Index("z", i), "t", L + 3, 2);
    b.Timed(Index("nz", i), "t", L + 3, 2);
  }
  return Gadget{b.Temporal(k), 0, kForever, std::nullopt};
}

}  // namespace tctp
