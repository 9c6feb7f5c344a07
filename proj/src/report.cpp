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

#include "slidecam/report.hpp"

#include <algorithm>
#include <sstream>

#include "slidecam/error.hpp"
#include "slidecam/grid.hpp"
#include "slidecam/oracle.hpp"
#include "slidecam/visibility.hpp"

namespace slidecam {
namespace {

template <typename T>
nlohmann::ordered_json Optional(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

BoundCheck Check(std::string name, bool holds, std::size_t lhs, const char* op,
                 std::string rhs) {
  std::ostringstream detail;
  detail << lhs << ' ' << op << ' ' << rhs;
  return {std::move(name), holds, detail.str()};
}

}  // namespace

RunReport MakeReport(std::string instance, const GuardSet& solution) {
  RunReport report;
  report.instance = std::move(instance);
  report.stats = solution.stats;
  report.cameras = solution.size();
  return report;
}

nlohmann::ordered_json ToJson(const RunReport& report) {
  const RunStats& s = report.stats;
  nlohmann::ordered_json j;
  j["instance"] = report.instance;
  j["n"] = s.vertices;
  j["reflex"] = s.reflex;
  j["chords"] = s.chords;
  j["grid_segments"] = s.grid_segments;
  j["grid_guards"] = s.grid_guards;
  j["critical_regions"] = s.critical_regions;
  j["critical_guards"] = s.critical_guards;
  j["mmgg_skipped"] = s.mmgg_skipped;
  j["cameras"] = report.cameras;
  if (report.mgsc_cameras > 0) j["mgsc_cameras"] = report.mgsc_cameras;
  const bool any_oracle = report.optima.msc || report.optima.mgsc ||
                          report.optima.mmgg || report.optima.critical;
  if (any_oracle) {
    j["optima"] = {{"msc", Optional(report.optima.msc)},
                   {"mgsc", Optional(report.optima.mgsc)},
                   {"mmgg", Optional(report.optima.mmgg)},
                   {"critical", Optional(report.optima.critical)}};
    j["ratios"] = {{"msc", Optional(report.msc_ratio)},
                   {"mgsc", Optional(report.mgsc_ratio)},
                   {"critical", Optional(report.critical_ratio)}};
  }
  j["timings_ms"] = {{"chords", s.timings.chords_ms},
                     {"prune", s.timings.prune_ms},
                     {"mmgg", s.timings.mmgg_ms},
                     {"critical", s.timings.critical_ms},
                     {"cover", s.timings.cover_ms},
                     {"total", s.timings.total_ms()}};
  return j;
}

bool Verification::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.holds; });
}

Verification VerifyInstance(const OrthoPolygon& polygon, std::string instance,
                            const VerifyOptions& options) {
  const GuardSet msc = SolveMsc(polygon);
  const GuardSet mgsc = SolveMgsc(polygon);
  Verification v;
  v.report = MakeReport(std::move(instance), msc);
  v.report.mgsc_cameras = mgsc.size();
  RunReport& r = v.report;

  v.checks.push_back({"feasible", CoversPolygon(polygon, msc.cameras),
                      std::to_string(msc.size()) + " cameras"});

  auto run = [&](const char* name, auto&& oracle) {
    try {
      oracle();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooLarge) throw;
      v.skipped.push_back(std::string(name) + ": " + e.what());
    }
  };
  run("msc", [&] { r.optima.msc = OptMsc(polygon, options.segment_cap).value; });
  run("mgsc", [&] { r.optima.mgsc = OptMgsc(polygon, options.segment_cap).value; });
  run("mmgg", [&] {
    r.optima.mmgg = OptMmgg(IntersectionGraph(msc.trace.grid), options.graph_cap).value;
  });
  if (!msc.trace.critical.empty()) {
    run("critical", [&] {
      r.optima.critical =
          OptCritical(polygon, msc.trace.critical, options.segment_cap).value;
    });
  }

  const auto& opt = r.optima;
  if (opt.msc) {
    r.msc_ratio = static_cast<double>(msc.size()) / *opt.msc;
    v.checks.push_back(Check("msc <= 7/2 opt", 2 * msc.size() <= 7u * *opt.msc,
                             msc.size(), "<=", "floor(3.5 * " + std::to_string(*opt.msc) + ")"));
  }
  if (opt.mgsc) {
    r.mgsc_ratio = static_cast<double>(mgsc.size()) / *opt.mgsc;
    v.checks.push_back(Check("mgsc <= 5/2 opt", 2 * mgsc.size() <= 5u * *opt.mgsc,
                             mgsc.size(), "<=", "floor(2.5 * " + std::to_string(*opt.mgsc) + ")"));
  }
  if (opt.critical) {
    const std::size_t sc = msc.trace.critical_guards.size();
    r.critical_ratio = static_cast<double>(sc) / *opt.critical;
    v.checks.push_back(Check("critical <= 3/2 opt", 2 * sc <= 3u * *opt.critical, sc,
                             "<=", "floor(1.5 * " + std::to_string(*opt.critical) + ")"));
  }
  if (opt.mmgg && opt.mgsc) {
    v.checks.push_back(Check("opt_mmgg <= opt_mgsc", *opt.mmgg <= *opt.mgsc,
                             static_cast<std::size_t>(*opt.mmgg), "<=",
                             std::to_string(*opt.mgsc)));
  }
  if (opt.mgsc && opt.msc) {
    v.checks.push_back(Check("opt_mgsc <= 2 opt_msc", *opt.mgsc <= 2 * *opt.msc,
                             static_cast<std::size_t>(*opt.mgsc), "<=",
                             "2 * " + std::to_string(*opt.msc)));
  }
  return v;
}

}  // namespace slidecam
