#include <stdexcept>
#include <string>

#include "symvar/symfun.hpp"

namespace symvar {

SigmaCombination parse_sigma_coeffs(std::string_view text) {
  SigmaCombination f;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    f.coeffs.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return f;
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("family spec must look like name:args");
  const std::string_view name = text.substr(0, colon);
  const std::string_view args = text.substr(colon + 1);
  FamilySpec spec;
  auto parse_count = [&](std::string_view what) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(std::string(args), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != args.size() || v == 0 || v > MultiAffinePoly::kMaxVars)
      throw std::invalid_argument(std::string(what) + " parameter must be an integer in 1..64");
    return static_cast<unsigned>(v);
  };
  if (name == "sharpness") {
    spec.kind = FamilySpec::Kind::sharpness;
    spec.parameter = parse_count("sharpness");
  } else if (name == "example3") {
    spec.kind = FamilySpec::Kind::example3;
    spec.parameter = parse_count("example3");
  } else if (name == "sigma") {
    spec.kind = FamilySpec::Kind::sigma;
    spec.sigma = parse_sigma_coeffs(args);
  } else {
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  }
  return spec;
}

}  // namespace symvar
