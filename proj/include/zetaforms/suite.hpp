#pragma once

#include <string>
#include <vector>

namespace zetaforms {

struct SuiteLine {
  int criterion = 0;
  std::string description;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs the pinned verification grid (all nine criteria) and returns one line per criterion.
std::vector<SuiteLine> run_suite();

}  // namespace zetaforms
