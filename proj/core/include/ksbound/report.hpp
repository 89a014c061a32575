#ifndef KSBOUND_REPORT_HPP
#define KSBOUND_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ksbound/bounds.hpp"
#include "ksbound/scenario.hpp"

namespace ksb {

enum class SliceLimit { operational_value, polytope_max };

struct PipelineOptions {
  SliceLimit slice_limit = SliceLimit::operational_value;
  std::uint64_t seed = 2016;
  int random_state_trials = 20;
};

/// End-to-end result: step outputs, embedded bound report, and verdicts
/// against the scenario's golden values. Serialization is byte-stable.
class Report {
 public:
  Report() = default;
  explicit Report(std::string json_text, bool pass) : json_(std::move(json_text)), pass_(pass) {}

  const std::string& json() const { return json_; }
  bool pass() const { return pass_; }

 private:
  std::string json_;
  bool pass_ = true;
};

/// Runs every step the scenario is complete for: clique check, polytope
/// build, vertex enumeration, constraint maximum, envelope + measure bound,
/// KS / polytope / A' bounds, quantum values. Step failures are rethrown
/// with the step tag attached.
Report run_pipeline(const Scenario& s, const PipelineOptions& opts = {});

/// Measure-bound inputs assembled from a scenario: F maximum over the given
/// vertex set, default sample thresholds, slice cap, notes.
OnciSpec make_onci_spec(const Scenario& s, const HRepPolytope& polytope,
                        const std::vector<RfVertex>& vertices,
                        SliceLimit slice_limit = SliceLimit::operational_value);

/// %.12g float rendering used across all JSON output.
std::string format_double(double x);

}  // namespace ksb

#endif  // KSBOUND_REPORT_HPP
