#include <cstdio>

#include "cuspcount/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : cuspcount::run_acceptance()) {
    std::printf("[%s] %2d %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.empty() ? "" : " -- ",
                r.detail.c_str());
    if (!r.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
