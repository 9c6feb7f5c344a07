// Copyright 2026 The slidecam Authors
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

#ifndef SLIDECAM_REPORT_HPP_
#define SLIDECAM_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slidecam/geometry.hpp"
#include "slidecam/pipeline.hpp"

namespace slidecam {

struct OracleOptima {
  std::optional<int> msc;
  std::optional<int> mgsc;
  std::optional<int> mmgg;
  std::optional<int> critical;
};

struct RunReport {
  std::string instance;
  RunStats stats;
  std::size_t cameras = 0;       // |S u S_C|
  std::size_t mgsc_cameras = 0;  // guarded variant, 0 if not run
  OracleOptima optima;
  // Present only when the corresponding oracle ran.
  std::optional<double> msc_ratio;
  std::optional<double> mgsc_ratio;
  std::optional<double> critical_ratio;
};

RunReport MakeReport(std::string instance, const GuardSet& solution);

nlohmann::ordered_json ToJson(const RunReport& report);

// One named bound with its outcome.
struct BoundCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct VerifyOptions {
  std::size_t segment_cap = 22;
  std::size_t graph_cap = 18;
};

struct Verification {
  RunReport report;
  std::vector<BoundCheck> checks;
  // Oracles skipped because an instance exceeded a cap.
  std::vector<std::string> skipped;

  bool ok() const;
};

// Runs both pipelines and every oracle within the caps, then checks
// feasibility, the 7/2, 5/2 and 3/2 bounds and the chain
// opt_mmgg <= opt_mgsc <= 2 * opt_msc.
Verification VerifyInstance(const OrthoPolygon& polygon, std::string instance,
                            const VerifyOptions& options = {});

}  // namespace slidecam

#endif  // SLIDECAM_REPORT_HPP_
