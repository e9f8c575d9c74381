#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "boolift/limits.hpp"

namespace boolift::acceptance {

enum class Level { Fast, Full };

struct Options {
  Level level = Level::Full;
  std::uint64_t seed = 0;
  Limits limits;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double target_seconds = 0;
};

struct Criterion {
  int id;
  std::string name;
  double target_seconds;
  std::function<CriterionResult(const Options&)> run;
};

/// The twelve checks, ordered by id.
const std::vector<Criterion>& criteria();

/// Runs one check, timing it and turning library errors into failures.
CriterionResult run_criterion(const Criterion& c, const Options& options);
std::vector<CriterionResult> run_all(const Options& options);

/// "PASS  [ 1] name (1.23 s / 60 s) detail"
std::string format_line(const CriterionResult& r);

}  // namespace boolift::acceptance
