#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symvar/bounds.hpp"

namespace symvar {

enum class Certification {
  exact_empty,           // exact vertex test found no zero in the box
  sample_certified,      // constant root count on sampled lines; evidence, not proof
  resolution_converged,  // two consecutive resolutions agree
  upper_structure_only,  // structural data only (system tests, budget hit, varying samples)
};

std::string_view to_string(Certification c);
Certification certification_from_string(std::string_view s);

struct SampleSummary {
  unsigned total = 0;
  unsigned degenerate = 0;
  std::map<unsigned, unsigned> root_counts;  // roots per line -> number of lines
};

struct ComponentReport {
  long count = 0;
  Certification certified = Certification::upper_structure_only;
  std::vector<std::pair<unsigned, long>> trail;  // (resolution, count), resolutions increasing
  std::optional<ComponentBounds> bound_context;
  std::optional<std::uint64_t> seed;
  std::optional<SampleSummary> samples;
  std::vector<std::string> notes;
};

/// {"count", "certified", "trail": [[res, count], ...], "bounds": {...}, "seed"} plus
/// "samples" and "notes" when present.
nlohmann::json to_json(const ComponentReport& r);
ComponentReport report_from_json(const nlohmann::json& j);

/// A hard mathematical guarantee failed (e.g. a component bound was exceeded).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symvar
