// Acceptance suite: runs every reference criterion at its stated tolerance
// and prints one pass/fail line per criterion, then a per-row breakdown.
#include <cstdio>
#include <iostream>

#include "qlift/paper_checks.hpp"

int main(int argc, char** argv) {
  qlift::RunConfig config;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--skip-properties") config.run_properties = false;
    if (arg == "--quick") config.max_m = qlift::make_rational(5, 3);
    if (arg == "--no-parallel") config.parallel = false;
  }

  std::vector<qlift::CheckGroup> groups = qlift::run_paper_checks(config);

  bool all_ok = true;
  for (const auto& g : groups) {
    bool ok = true;
    for (const auto& r : g.rows) ok = ok && r.pass;
    all_ok = all_ok && ok;
    std::printf("[%s] %-34s %7.2f s  %s\n", ok ? "PASS" : "FAIL", g.title.c_str(), g.seconds,
                ok ? "" : "<--");
  }
  std::printf("\n");
  for (const auto& g : groups) {
    for (const auto& r : g.rows) {
      if (!r.pass)
        std::printf("FAIL %s\n  expected %s\n  got      %s\n", r.name.c_str(),
                    r.expected.c_str(), r.got.c_str());
    }
  }
  long rows = 0;
  for (const auto& g : groups) rows += static_cast<long>(g.rows.size());
  std::printf("%ld checks, %s\n", rows, all_ok ? "all passed" : "FAILURES PRESENT");
  return all_ok ? 0 : 1;
}
