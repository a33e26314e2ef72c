#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "powerlaw/process.hpp"

namespace powerlaw::cli {

// Sectioned key=value config:
//
//   [process]
//   variant = iid
//   law = zipf 0.5 100000
//   beta = 0.5
//   seed = 7
//
//   [markov]
//   transition = 0.9,0.1; 0.1,0.9
//   emissions = zipf 0.5 1000 | zipf 0.5 1000 1000
//
//   [santa_fe]
//   knowledge_entropy = 1.0
//   base_seed = 0
//
// variant may be markov; beta + kmax may replace law for a Zipf law. Only
// whole-line comments are recognized.
struct LabConfig {
  std::string text;
  ProcessSpec narration = ProcessSpec::iid(DiscreteLaw::point_mass());
  std::optional<double> beta;
  std::optional<std::uint64_t> seed;
  bool santa_fe = false;
  double knowledge_entropy = 1.0;
  std::uint64_t knowledge_seed = 0;

  [[nodiscard]] SantaFeConfig santa_fe_config() const {
    return {narration, knowledge_entropy, knowledge_seed};
  }
};

// Law descriptors: "zipf <beta> <kmax> [shift]", "geometric <ratio> <kmax>
// [shift]", "uniform <n> [shift]", "point [k]", "masses a,b,..." where each
// mass may be a fraction such as 1/3.
DiscreteLaw parse_law(const std::string& descriptor);

LabConfig parse_config(const std::string& text);
LabConfig load_config(const std::string& path);

}  // namespace powerlaw::cli
