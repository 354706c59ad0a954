// Copyright 2026 The rbgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON instance and report documents.
//
// Instance ("rbg-instance/1"):
//   {
//     "version": "rbg-instance/1",
//     "resources": [{"id": "e", "cost": {"table": [0, 3, "7/2"]}}, ...],
//     "graph": {"nodes": ["s", "t"],
//               "arcs": [{"from": "s", "to": "t", "resource": "e"}]},
//     "players": [{"id": "1", "demand": 1, "strategy": {...}}, ...]
//   }
// Numbers are JSON integers or "p/q" strings. A cost is {"table": [...]},
// {"linear": k} (c(t) = k t) or {"fixed": k} (c(t) = k for t >= 1); the
// named families are tabulated up to the total demand (or "max_load").
// Strategy kinds, with resources named by id:
//   {"kind": "uniform", "rank": r, "ground": [...]}
//   {"kind": "partition", "blocks": [{"elements": [...], "capacity": k}]}
//   {"kind": "graphic", "nodes": [...],
//    "edges": [{"tail": u, "head": v, "resource": e}]}
//   {"kind": "free", "ground": [...]}
//   {"kind": "bases", "sets": [[...], ...]}        (must be a matroid)
//   {"kind": "antichain", "sets": [[...], ...]}
//   {"kind": "path", "source": s, "target": t}     (needs "graph")
// Emission always writes cost tables, so emit(load(emit(g))) is stable.

#ifndef RBG_INSTANCE_IO_H_
#define RBG_INSTANCE_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rbg/game.h"

namespace rbg {

inline constexpr std::string_view kInstanceVersion = "rbg-instance/1";
inline constexpr std::string_view kReportVersion = "rbg-report/1";

// Throws SchemaError on malformed documents and InputError on semantically
// invalid instances.
GameInstance InstanceFromJson(const nlohmann::json& doc);
nlohmann::json InstanceToJson(const GameInstance& game);

// FNV-1a 64-bit hash of the canonical instance document, as 16 hex digits.
std::string InstanceDigest(const GameInstance& game);

nlohmann::json RationalToJson(const Rational& r);
Rational RationalFromJson(const nlohmann::json& j);

// "profile": [{"player": id, "configuration": [...],
//              "payments": {resource: amount}}, ...]
// Players may appear in any order but each exactly once. Payments are
// optional and default to zero.
nlohmann::json ProfileToJson(const GameInstance& game,
                             const StrategyProfile& sp);
StrategyProfile ProfileFromJson(const GameInstance& game,
                                const nlohmann::json& profile);

nlohmann::json ResourceListToJson(const GameInstance& game,
                                  const ElementSet& s);

// Reads a JSON file; throws InputError when unreadable and SchemaError when
// not JSON.
nlohmann::json ReadJsonFile(const std::string& path);

// A list of lists of labels (strings or integers), e.g. [[1, 2], [3]].
std::vector<std::vector<std::string>> FamilyFromJson(
    const nlohmann::json& doc);

}  // namespace rbg

#endif  // RBG_INSTANCE_IO_H_
