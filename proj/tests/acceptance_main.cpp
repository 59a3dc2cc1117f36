#include <cstdio>

#include "teich/acceptance/acceptance.hpp"

int main() {
  teich::acceptance::AcceptanceOptions options;
  options.quick = true;
  int failed = 0;
  for (int id = 1; id <= teich::acceptance::kCriteria; ++id) {
    const auto r = teich::acceptance::run_criterion(id, options);
    std::printf("%s\n", teich::acceptance::format_line(r).c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d/%d criteria passed\n", teich::acceptance::kCriteria - failed, teich::acceptance::kCriteria);
  return failed == 0 ? 0 : 1;
}
