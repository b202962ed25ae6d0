#include <cstdio>

#include "srl/paper_suite.hpp"

// One pass/fail line per criterion, printed as each finishes.
int main() {
  using srl::CriterionResult;
  using Fn = CriterionResult (*)();
  const Fn fns[] = {srl::suite::c1, srl::suite::c2, srl::suite::c3,
                    srl::suite::c4, srl::suite::c5, srl::suite::c6,
                    srl::suite::c7, srl::suite::c8};
  int passed = 0;
  for (int i = 0; i < 8; ++i) {
    CriterionResult r;
    try {
      r = fns[i]();
    } catch (const std::exception& e) {
      r = {i + 1, "criterion threw", false, e.what()};
    }
    passed += r.pass;
    std::printf("criterion %d: %s  %s (%s)\n", r.index,
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/8 criteria passed\n", passed);
  return passed == 8 ? 0 : 1;
}
