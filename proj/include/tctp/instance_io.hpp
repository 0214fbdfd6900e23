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

// Instance files.
//
// Line format (one directive per line, '#' starts a comment):
//
//   model temporal|static|dag
//   vertices s a b t
//   source s
//   target t
//   k 2
//   deadline 9            (optional)
//   edge s a 0 1 3        (temporal: u v tau d copies)
//   edge s a 4 2          (static/dag: u v weight copies)
//
// The JSON form carries the same fields; see docs/instance.schema.json.
// Records with an equal key are merged by summing copies.

#ifndef TCTP_INSTANCE_IO_HPP_
#define TCTP_INSTANCE_IO_HPP_

#include <string>
#include <string_view>

#include "tctp/core.hpp"

namespace tctp {

// Accepts either format; JSON is detected by a leading '{'. Throws
// Error(kParse) with a "line N: ..." location, or kUnknownVertex.
Instance ParseInstance(std::string_view text);

// Byte-stable: edges in canonical (u,v,tau,d) order. `comment` lines are
// emitted verbatim (each prefixed with "# ") after the header.
std::string SerializeInstance(const Instance& inst,
                              std::string_view comment = {});
std::string SerializeInstanceJson(const Instance& inst);

Instance ReadInstanceFile(const std::string& path);

}  // namespace tctp

#endif  // TCTP_INSTANCE_IO_HPP_
