#ifndef QLIFT_PAPER_CHECKS_HPP
#define QLIFT_PAPER_CHECKS_HPP

#include <ostream>
#include <string>
#include <vector>

#include "qlift/rational.hpp"

namespace qlift {

// Knobs shared by the CLI and the verification suite.
struct RunConfig {
  long terms = 60;
  long float_bits = 256;
  int divisor_exponent = 2;
  Rational max_m = make_rational(14, 3);
  bool parallel = true;
  bool run_properties = true;
};

struct CheckRow {
  std::string name;
  std::string expected;
  std::string got;
  bool pass;
};

struct CheckGroup {
  std::string title;
  std::vector<CheckRow> rows;
  double seconds = 0.0;
};

// Runs the full reference verification: every printed value the construction
// must reproduce, plus the property batteries.  The divisor exponent is
// always 2 here regardless of the config.
std::vector<CheckGroup> run_paper_checks(const RunConfig& config);

bool all_pass(const std::vector<CheckGroup>& groups);

// One "name<TAB>expected<TAB>got<TAB>PASS|FAIL" line per row.
void print_checks(std::ostream& os, const std::vector<CheckGroup>& groups);

}  // namespace qlift

#endif  // QLIFT_PAPER_CHECKS_HPP
