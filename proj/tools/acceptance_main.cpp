#include <cstdio>

#include "chf/acceptance.hpp"

int main() {
  int failed = 0;
  chf::acceptance::run_all([&](const chf::acceptance::CriterionResult& r) {
    std::printf("%s\n", chf::acceptance::format_line(r).c_str());
    std::fflush(stdout);
    failed += !r.passed;
  });
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
