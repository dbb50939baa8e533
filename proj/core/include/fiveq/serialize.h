// Copyright 2026 The fiveq Authors
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

#ifndef FIVEQ_SERIALIZE_H
#define FIVEQ_SERIALIZE_H

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fiveq/channel.h"
#include "fiveq/dynamics.h"
#include "fiveq/metrics.h"
#include "fiveq/sweep.h"

namespace fiveq {

void to_json(nlohmann::json& j, const NoiseParams& p);
void from_json(const nlohmann::json& j, NoiseParams& p);
void to_json(nlohmann::json& j, const ReducedChannel& c);
void from_json(const nlohmann::json& j, ReducedChannel& c);
/// Keys N_XX ... N_ZZ.
void to_json(nlohmann::json& j, const UnitalBlock& b);
void from_json(const nlohmann::json& j, UnitalBlock& b);
/// {"labels": ["I","X","Y","Z"], "entries": [[...], ...]} with rows in label order.
void to_json(nlohmann::json& j, const TransferMatrix& t);
void from_json(const nlohmann::json& j, TransferMatrix& t);
void to_json(nlohmann::json& j, const MetricReport& r);
void to_json(nlohmann::json& j, const BasinEstimate& b);
void to_json(nlohmann::json& j, const SweepRecord& r);
void to_json(nlohmann::json& j, const IterationTrace& t);
void to_json(nlohmann::json& j, const CircleSample& s);

/// Shortest text that parses back to the same double.
std::string format_double(double value);

/// Writes one comma-separated line terminated by LF.
void write_csv_row(std::ostream& out, std::span<const std::string> fields);

namespace csv {

// Column sets shared by every CSV emitter.
const std::vector<std::string>& block_columns();
const std::vector<std::string>& sweep_columns();
const std::vector<std::string>& basin_columns();
const std::vector<std::string>& circle_columns();
const std::vector<std::string>& threshold_columns();
const std::vector<std::string>& trace_columns();

void write_block(std::ostream& out, const UnitalBlock& block);
void write_sweep(std::ostream& out, std::span<const SweepRecord> rows);
void write_basin(std::ostream& out, std::span<const BasinEstimate> rows);
void write_circle(std::ostream& out, double radius, std::span<const CircleSample> rows);
void write_threshold(std::ostream& out, const ThresholdSurface& surface);
void write_trace(std::ostream& out, const IterationTrace& trace);

}  // namespace csv

}  // namespace fiveq

#endif
