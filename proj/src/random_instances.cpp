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

#include "tctp/random_instances.hpp"

#include <string>
#include <vector>

namespace tctp {
namespace {

template <typename T>
T Uniform(Rng& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

VertexNames StandardNames(int n) {
  std::vector<std::string> names;
  names.push_back("s");
  for (int i = 1; i + 1 < n; ++i) names.push_back("v" + std::to_string(i));
  names.push_back("t");
  return VertexNames(std::move(names));
}

}  // namespace

Instance RandomDag(Rng& rng, const RandomDagOptions& options) {
  const int n = Uniform(rng, 2, options.max_vertices);
  const int arcs = Uniform(rng, 1, options.max_arcs);
  std::vector<StaticEdge> edges;
  for (int i = 0; i < arcs; ++i) {
    const int u = Uniform(rng, 0, n - 2);
    const int v = Uniform(rng, u + 1, n - 1);
    edges.push_back(StaticEdge{u, v, Uniform<Cost>(rng, 1, options.max_weight),
                               Uniform(rng, 1, options.max_copies)});
  }
  Instance inst = MakeStaticInstance(StaticGraph(StandardNames(n), edges, true),
                                     "s", "t", Uniform(rng, 0, options.max_k));
  return inst;
}

Instance RandomTemporal(Rng& rng, const RandomTemporalOptions& options) {
  const int n = Uniform(rng, 2, options.max_vertices);
  const int count = Uniform(rng, 1, options.max_edges);
  std::vector<TimeEdge> edges;
  for (int i = 0; i < count; ++i) {
    const int u = Uniform(rng, 0, n - 1);
    int v = Uniform(rng, 0, n - 2);
    if (v >= u) ++v;
    edges.push_back(TimeEdge{u, v, Uniform<Time>(rng, 0, options.lifespan),
                             Uniform<Time>(rng, 1, options.max_length),
                             Uniform(rng, 1, options.max_copies)});
  }
  // Merging equal keys can push copies above the maximum; clamp afterwards.
  std::vector<TimeEdge> merged = Canonicalize(std::move(edges));
  for (TimeEdge& e : merged) e.copies = std::min(e.copies, options.max_copies);
  return MakeTemporalInstance(TemporalGraph(StandardNames(n), std::move(merged)),
                              "s", "t", Uniform(rng, options.min_k, options.max_k));
}

Instance RandomStatic(Rng& rng, const RandomStaticOptions& options) {
  const int n = Uniform(rng, 2, options.max_vertices);
  const int count = Uniform(rng, 1, options.max_edges);
  std::vector<StaticEdge> edges;
  for (int i = 0; i < count; ++i) {
    const int u = Uniform(rng, 0, n - 1);
    int v = Uniform(rng, 0, n - 2);
    if (v >= u) ++v;
    edges.push_back(StaticEdge{u, v, Uniform<Cost>(rng, 0, options.max_weight),
                               Uniform(rng, 1, options.max_copies)});
  }
  return MakeStaticInstance(StaticGraph(StandardNames(n), edges, false), "s", "t",
                            Uniform(rng, 0, options.max_k));
}

Instance LayeredDag(Rng& rng, int layers, int width, int k) {
  // s, then layers * width inner vertices, then t.
  const int n = layers * width + 2;
  auto inner = [width](int layer, int i) { return 1 + layer * width + i; };
  std::vector<StaticEdge> edges;
  for (int i = 0; i < width; ++i) {
    edges.push_back(StaticEdge{0, inner(0, i), Uniform<Cost>(rng, 1, 9), 1});
    edges.push_back(StaticEdge{inner(layers - 1, i), n - 1, Uniform<Cost>(rng, 1, 9), 1});
  }
  for (int l = 0; l + 1 < layers; ++l) {
    for (int i = 0; i < width; ++i) {
      for (int j = 0; j < width; ++j) {
        edges.push_back(StaticEdge{inner(l, i), inner(l + 1, j), Uniform<Cost>(rng, 1, 9), 1});
      }
    }
  }
  return MakeStaticInstance(StaticGraph(StandardNames(n), edges, true), "s", "t", k);
}

}  // namespace tctp
