#include "qlift/dump.hpp"

namespace qlift {

void dump_mock_table(std::ostream& os, const MockCoefficientTable& table) {
  for (const auto& [m, r] : table.entries) os << to_string(m) << '\t' << to_string(r) << '\n';
}

void dump_pole_data(std::ostream& os, const std::vector<PoleDatum>& poles) {
  for (const auto& p : poles)
    os << "pole\tD=" << p.D << "\tr=+-" << p.r << "\torder=" << p.order << '\n';
}

void dump_heegner(std::ostream& os, const HeegnerClass& cls) {
  os << "D\t" << cls.D << "\nr\t" << cls.r << "\nclasses\t" << cls.forms.size() << '\n';
  for (std::size_t i = 0; i < cls.forms.size(); ++i) {
    const auto& f = cls.forms[i];
    os << "form\t[" << f[0] << "," << f[1] << "," << f[2] << "]\tpoint\t(" << -f[1] << "+sqrt("
       << cls.D << "))/" << 2 * f[0] << '\n';
  }
}

void dump_lift_run(std::ostream& os, const LiftRun& run) {
  os << "m\t" << to_string(run.m) << '\n';
  os << "P_{m+1/3}\t" << run.basis_poly.to_coeff_list() << '\n';
  dump_pole_data(os, run.poles);
  os << "lift\n";
  run.lift.dump(os);
  os << "A\t" << run.ident.a.to_coeff_list() << '\n';
  os << "B\t" << run.ident.b.to_coeff_list() << '\n';
  os << "A(-27)/B(-27)\t" << to_string(run.value_at_cm) << '\n';
}

void dump_bor_report(std::ostream& os, const std::vector<BorRow>& rows) {
  for (const auto& row : rows) {
    os << "bor-q^" << row.exponent << '\t' << to_string(row.expected) << '\t'
       << to_string(row.got) << '\t' << (row.pass ? "PASS" : "FAIL") << '\n';
  }
}

}  // namespace qlift
