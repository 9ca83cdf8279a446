#ifndef QLIFT_DUMP_HPP
#define QLIFT_DUMP_HPP

#include <ostream>
#include <sstream>
#include <string>

#include "qlift/lift.hpp"
#include "qlift/series.hpp"
#include "qlift/vvform.hpp"

namespace qlift {

template <class C>
std::string series_to_text(const PuiseuxSeries<C>& s) {
  std::ostringstream os;
  s.dump(os);
  return os.str();
}

template <class C>
void dump_vector_form(std::ostream& os, const VectorValuedSeries<C>& f) {
  os << "modulus\t" << f.modulus() << "\n";
  os << "kappa\t" << (f.kappa_odd() ? "odd" : "even") << "\n";
  os << "weight\t" << to_string(f.weight()) << "\n";
  for (long mu = 0; mu < f.modulus(); ++mu) {
    os << "component\t" << mu << "\n";
    f.component(mu).dump(os);
  }
}

void dump_mock_table(std::ostream& os, const MockCoefficientTable& table);
void dump_pole_data(std::ostream& os, const std::vector<PoleDatum>& poles);
void dump_heegner(std::ostream& os, const HeegnerClass& cls);
void dump_lift_run(std::ostream& os, const LiftRun& run);
void dump_bor_report(std::ostream& os, const std::vector<BorRow>& rows);

}  // namespace qlift

#endif  // QLIFT_DUMP_HPP
