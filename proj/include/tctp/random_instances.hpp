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

// Seeded random instance families used by the equivalence suites and the CLI.
// Vertex 0 is "s" and the last vertex is "t".

#ifndef TCTP_RANDOM_INSTANCES_HPP_
#define TCTP_RANDOM_INSTANCES_HPP_

#include <cstdint>
#include <random>

#include "tctp/core.hpp"

namespace tctp {

using Rng = std::mt19937_64;

struct RandomDagOptions {
  int max_vertices = 8;
  int max_arcs = 14;
  Cost max_weight = 9;
  int max_copies = 3;
  int max_k = 3;
};

// Dag-model instance; arcs go from lower to higher vertex index.
Instance RandomDag(Rng& rng, const RandomDagOptions& options = {});

struct RandomTemporalOptions {
  int max_vertices = 6;
  int max_edges = 12;
  Time lifespan = 5;
  Time max_length = 2;
  int max_copies = 2;
  int min_k = 0;
  int max_k = 2;
};

Instance RandomTemporal(Rng& rng, const RandomTemporalOptions& options = {});

struct RandomStaticOptions {
  int max_vertices = 6;
  int max_edges = 9;
  Cost max_weight = 5;
  int max_copies = 2;
  int max_k = 2;
};

Instance RandomStatic(Rng& rng, const RandomStaticOptions& options = {});

// Layered DAG with `layers` layers of `width` vertices, every arc between
// consecutive layers, unit copies and weights in 1..9.
Instance LayeredDag(Rng& rng, int layers, int width, int k);

}  // namespace tctp

#endif  // TCTP_RANDOM_INSTANCES_HPP_
