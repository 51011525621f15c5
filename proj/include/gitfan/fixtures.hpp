#pragma once

// Reference checks for the worked instance. Each fixture recomputes one
// published list, matrix or table and compares it exactly.

#include <functional>
#include <string>
#include <vector>

namespace gitfan::fixtures {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Fixture {
  std::string name;
  std::string what;
  std::function<Outcome()> run;
};

const std::vector<Fixture>& all();

}  // namespace gitfan::fixtures
