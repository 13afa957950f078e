// Copyright 2026-present the greedy-cs project
//
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

#pragma once

#include <string>

#include "greedycs/coherence.hpp"
#include "greedycs/guarantees.hpp"
#include "greedycs/pursuit.hpp"

// JSON wire forms of the report types. Indices are 1-based on this boundary.

namespace greedycs::report_json {

std::string to_json(const coherence::ChainReport& r);
std::string to_json(const guarantees::GuaranteeReport& r);
std::string to_json(const guarantees::Lemma2Bounds& r);
std::string to_json(const guarantees::BoundComparison& r, std::size_t k);
std::string to_json(const pursuit::RecoveryResult& r);

}  // namespace greedycs::report_json
