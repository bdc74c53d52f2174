#ifndef BRAIDFORGE_TRACE_HPP
#define BRAIDFORGE_TRACE_HPP

#include <optional>
#include <string>
#include <vector>

namespace braidforge {

struct TraceStep {
  std::string rule;     // e.g. "isotopy1", "torus_absorb", "destabilize_tail"
  std::string params;   // e.g. "p=5 q=2 r=3"
  std::string summary;  // resulting presentation in brief
};

struct ConversionTrace {
  std::vector<TraceStep> steps;
  std::optional<int> i_bar;  // partial-sum scan index when the scan ran

  void add(std::string rule, std::string params, std::string summary) {
    steps.push_back({std::move(rule), std::move(params), std::move(summary)});
  }
};

}  // namespace braidforge

#endif
