#include <cstdlib>
#include <cstring>
#include <iostream>

#include "boolift/acceptance.hpp"

int main(int argc, char** argv) {
  boolift::acceptance::Options options;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--fast")) options.level = boolift::acceptance::Level::Fast;
    else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) options.seed = std::strtoull(argv[++i], nullptr, 10);
    else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: acceptance [--fast] [--seed N] [--only ID]\n";
      return 2;
    }
  }
  int failed = 0;
  for (const auto& c : boolift::acceptance::criteria()) {
    if (only && c.id != only) continue;
    const auto r = boolift::acceptance::run_criterion(c, options);
    std::cout << boolift::acceptance::format_line(r) << std::endl;
    failed += !r.passed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " failing" << std::endl;
  return failed ? 1 : 0;
}
