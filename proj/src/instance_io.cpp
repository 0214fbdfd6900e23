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

#include "tctp/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace tctp {
namespace {

using nlohmann::json;

[[noreturn]] void ParseFail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

std::int64_t ToInt(std::size_t line, const std::string& field,
                   const std::string& token) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    ParseFail(line, "field '" + field + "' expects an integer, got '" + token + "'");
  }
  return value;
}

// A model-agnostic edge record before vertex resolution.
struct RawEdge {
  std::size_t line = 0;
  std::string u;
  std::string v;
  std::vector<std::int64_t> numbers;
};

struct RawInstance {
  std::optional<Model> model;
  std::optional<std::vector<std::string>> vertices;
  std::optional<std::string> source;
  std::optional<std::string> target;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> deadline;
  std::vector<RawEdge> edges;
};

Instance Build(const RawInstance& raw) {
  if (!raw.model) ParseFail(0, "missing 'model'");
  if (!raw.vertices) ParseFail(0, "missing 'vertices'");
  if (!raw.source) ParseFail(0, "missing 'source'");
  if (!raw.target) ParseFail(0, "missing 'target'");
  if (!raw.k) ParseFail(0, "missing 'k'");
  if (*raw.k < 0) ParseFail(0, "k must be >= 0");
  VertexNames names(*raw.vertices);
  auto resolve = [&](std::size_t line, const std::string& name) {
    auto v = names.find(name);
    if (!v) ParseFail(line, "unknown vertex '" + name + "'");
    return *v;
  };
  std::optional<Time> deadline;
  if (raw.deadline) deadline = *raw.deadline;
  const int k = static_cast<int>(*raw.k);
  try {
    if (*raw.model == Model::kTemporal) {
      std::vector<TimeEdge> edges;
      for (const RawEdge& r : raw.edges) {
        if (r.numbers.size() != 3) {
          ParseFail(r.line, "temporal edge expects 'u v tau d copies'");
        }
        edges.push_back(TimeEdge{resolve(r.line, r.u), resolve(r.line, r.v),
                                 r.numbers[0], r.numbers[1],
                                 static_cast<int>(r.numbers[2])});
      }
      return MakeTemporalInstance(TemporalGraph(names, std::move(edges)),
                                  *raw.source, *raw.target, k, deadline);
    }
    std::vector<StaticEdge> edges;
    for (const RawEdge& r : raw.edges) {
      if (r.numbers.size() != 2) {
        ParseFail(r.line, "static edge expects 'u v weight copies'");
      }
      edges.push_back(StaticEdge{resolve(r.line, r.u), resolve(r.line, r.v),
                                 r.numbers[0], static_cast<int>(r.numbers[1])});
    }
    return MakeStaticInstance(
        StaticGraph(names, std::move(edges), *raw.model == Model::kDag),
        *raw.source, *raw.target, k, deadline);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument) {
      throw Error(ErrorCode::kParse, e.what());
    }
    throw;
  }
}

Instance ParseLines(std::string_view text) {
  RawInstance raw;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    auto expect = [&](std::size_t n) {
      if (tok.size() != n) {
        ParseFail(lineno, "'" + key + "' expects " + std::to_string(n - 1) +
                              " field(s)");
      }
    };
    if (key == "model") {
      expect(2);
      raw.model = ParseModel(tok[1]);
      if (!raw.model) ParseFail(lineno, "unknown model '" + tok[1] + "'");
    } else if (key == "vertices") {
      raw.vertices.emplace(tok.begin() + 1, tok.end());
    } else if (key == "source") {
      expect(2);
      raw.source = tok[1];
    } else if (key == "target") {
      expect(2);
      raw.target = tok[1];
    } else if (key == "k") {
      expect(2);
      raw.k = ToInt(lineno, "k", tok[1]);
    } else if (key == "deadline") {
      expect(2);
      raw.deadline = ToInt(lineno, "deadline", tok[1]);
    } else if (key == "edge") {
      if (tok.size() < 3) ParseFail(lineno, "'edge' needs endpoints");
      RawEdge e{lineno, tok[1], tok[2], {}};
      for (std::size_t i = 3; i < tok.size(); ++i) {
        e.numbers.push_back(ToInt(lineno, "edge", tok[i]));
      }
      raw.edges.push_back(std::move(e));
    } else {
      ParseFail(lineno, "unknown directive '" + key + "'");
    }
  }
  return Build(raw);
}

Instance ParseJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("json: ") + e.what());
  }
  RawInstance raw;
  try {
    raw.model = ParseModel(doc.at("model").get<std::string>());
    if (!raw.model) ParseFail(0, "unknown model");
    raw.vertices = doc.at("vertices").get<std::vector<std::string>>();
    raw.source = doc.at("source").get<std::string>();
    raw.target = doc.at("target").get<std::string>();
    raw.k = doc.at("k").get<std::int64_t>();
    if (doc.contains("deadline") && !doc["deadline"].is_null()) {
      raw.deadline = doc["deadline"].get<std::int64_t>();
    }
    std::size_t index = 0;
    for (const json& e : doc.value("edges", json::array())) {
      RawEdge r{++index, e.at("u").get<std::string>(), e.at("v").get<std::string>(), {}};
      if (*raw.model == Model::kTemporal) {
        r.numbers = {e.at("tau").get<std::int64_t>(), e.at("d").get<std::int64_t>(),
                     e.value("copies", std::int64_t{1})};
      } else {
        r.numbers = {e.at("weight").get<std::int64_t>(),
                     e.value("copies", std::int64_t{1})};
      }
      raw.edges.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("json: ") + e.what());
  }
  return Build(raw);
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return ParseJson(text);
  return ParseLines(text);
}

std::string SerializeInstance(const Instance& inst, std::string_view comment) {
  const VertexNames& names = inst.names();
  std::ostringstream out;
  out << "model " << ToString(inst.model) << '\n';
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
  }
  out << "vertices";
  for (const std::string& name : names.names()) out << ' ' << name;
  out << '\n';
  out << "source " << names.name(inst.source) << '\n';
  out << "target " << names.name(inst.target) << '\n';
  out << "k " << inst.k << '\n';
  if (inst.deadline) out << "deadline " << *inst.deadline << '\n';
  if (inst.model == Model::kTemporal) {
    for (const TimeEdge& e : inst.temporal().edges()) {
      out << "edge " << names.name(e.u) << ' ' << names.name(e.v) << ' ' << e.tau
          << ' ' << e.d << ' ' << e.copies << '\n';
    }
  } else {
    for (const StaticEdge& e : inst.static_graph().edges()) {
      out << "edge " << names.name(e.u) << ' ' << names.name(e.v) << ' '
          << e.weight << ' ' << e.copies << '\n';
    }
  }
  return out.str();
}

std::string SerializeInstanceJson(const Instance& inst) {
  const VertexNames& names = inst.names();
  json doc;
  doc["model"] = ToString(inst.model);
  doc["vertices"] = names.names();
  doc["source"] = names.name(inst.source);
  doc["target"] = names.name(inst.target);
  doc["k"] = inst.k;
  doc["deadline"] = inst.deadline ? json(*inst.deadline) : json(nullptr);
  json edges = json::array();
  if (inst.model == Model::kTemporal) {
    for (const TimeEdge& e : inst.temporal().edges()) {
      edges.push_back({{"u", names.name(e.u)},
                       {"v", names.name(e.v)},
                       {"tau", e.tau},
                       {"d", e.d},
                       {"copies", e.copies}});
    }
  } else {
    for (const StaticEdge& e : inst.static_graph().edges()) {
      edges.push_back({{"u", names.name(e.u)},
                       {"v", names.name(e.v)},
                       {"weight", e.weight},
                       {"copies", e.copies}});
    }
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

}  // namespace tctp
