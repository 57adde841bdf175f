// Copyright 2026 The tsqent Authors
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
#include <string_view>

#include <json.hpp>

#include "tsq/gq.hpp"
#include "tsq/monogamy.hpp"
#include "tsq/roof.hpp"
#include "tsq/tsallis_ent.hpp"

namespace tsq::io {

using nlohmann::json;

/// {"n_qubits": n, "amplitudes": [[re, im], ...]} or
/// {"n_qubits": n, "matrix": [[[re, im], ...], ...]}. Throws ParseError on
/// malformed documents and DomainError on invalid states.
State state_from_json(const json& doc);
State parse_state(std::string_view text);

json to_json(const PureState& psi);
json to_json(const DensityMatrix& rho);
json to_json(const State& state);

/// 17 significant digits (round-trip exact), C-locale decimal point.
std::string format_double(double v);

/// Header `x,q,value`, rows in grid order (q outer).
std::string region_csv(const RegionReport& report);
json region_summary(const RegionReport& report);

/// Header `q,value`.
std::string bq_csv(const BqScan& scan);
json bq_summary(const BqScan& scan);

/// Header `inequality,q,n_qubits,state_seed,lhs,rhs,residual,pass`.
std::string sweep_csv(const SweepResult& result);
json sweep_summary(const SweepResult& result);

json to_json(const InequalityReport& report);
json to_json(const MeasureValue& value);
json to_json(const RoofResult& result, const PureMeasure& measure, Direction direction);

}  // namespace tsq::io
