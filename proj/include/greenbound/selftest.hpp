#pragma once

#include <string>
#include <vector>

namespace greenbound {

struct SelftestCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Golden checks of the worked-example constants (no grid certification).
std::vector<SelftestCheck> run_selftest();

}  // namespace greenbound
