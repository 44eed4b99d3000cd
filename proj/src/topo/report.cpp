#include "symvar/report.hpp"

namespace symvar {

std::string_view to_string(Certification c) {
  switch (c) {
    case Certification::exact_empty: return "exact-empty";
    case Certification::sample_certified: return "sample-certified";
    case Certification::resolution_converged: return "resolution-converged";
    case Certification::upper_structure_only: return "upper-structure-only";
  }
  return "upper-structure-only";
}

Certification certification_from_string(std::string_view s) {
  for (auto c : {Certification::exact_empty, Certification::sample_certified, Certification::resolution_converged,
                 Certification::upper_structure_only})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown certification '" + std::string(s) + "'");
}

nlohmann::json to_json(const ComponentReport& r) {
  nlohmann::json trail = nlohmann::json::array();
  for (const auto& [res, count] : r.trail) trail.push_back({res, count});
  nlohmann::json j = {{"count", r.count}, {"certified", to_string(r.certified)}, {"trail", trail}};
  if (r.bound_context) {
    auto b = to_json(*r.bound_context);
    b["degree"] = r.bound_context->degree;
    b["n"] = r.bound_context->n;
    j["bounds"] = b;
  } else {
    j["bounds"] = nullptr;
  }
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  if (r.samples) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [roots, lines] : r.samples->root_counts) hist[std::to_string(roots)] = lines;
    j["samples"] = {{"total", r.samples->total}, {"degenerate", r.samples->degenerate}, {"root_counts", hist}};
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

ComponentReport report_from_json(const nlohmann::json& j) {
  ComponentReport r;
  r.count = j.at("count").get<long>();
  r.certified = certification_from_string(j.at("certified").get<std::string>());
  for (const auto& step : j.at("trail")) r.trail.emplace_back(step.at(0).get<unsigned>(), step.at(1).get<long>());
  if (j.contains("bounds") && !j.at("bounds").is_null()) {
    const auto& b = j.at("bounds");
    r.bound_context = bounds(b.at("degree").get<unsigned>(), b.at("n").get<unsigned>());
  }
  if (j.contains("seed") && !j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("samples")) {
    SampleSummary s;
    s.total = j.at("samples").at("total").get<unsigned>();
    s.degenerate = j.at("samples").at("degenerate").get<unsigned>();
    for (const auto& [k, v] : j.at("samples").at("root_counts").items())
      s.root_counts[static_cast<unsigned>(std::stoul(k))] = v.get<unsigned>();
    r.samples = s;
  }
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace symvar
