#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "qlift/dump.hpp"
#include "qlift/eta.hpp"
#include "qlift/lift.hpp"
#include "qlift/numerics.hpp"
#include "qlift/paper_checks.hpp"
#include "qlift/theta.hpp"
#include "qlift/vvform.hpp"

namespace qlift::cli {

namespace {

using nlohmann::json;

struct Options {
  long terms = 60;
  long float_bits = 256;
  int divisor_exponent = 2;
  std::string format = "text";
  bool no_parallel = false;

  bool json_output() const { return format == "json"; }
};

template <class C>
json series_json(const PuiseuxSeries<C>& s) {
  PuiseuxSeries<C> r = s.reduced_den();
  json terms = json::array();
  for (const auto& [n, c] : r.terms()) {
    std::string exp = r.den() == 1 ? std::to_string(n)
                                   : std::to_string(n) + "/" + std::to_string(r.den());
    terms.push_back({exp, coeff_text(c)});
  }
  json out{{"terms", terms}};
  if (!r.is_exact()) out["trunc"] = to_string(r.trunc_exponent());
  return out;
}

template <class C>
json vector_json(const VectorValuedSeries<C>& f) {
  json comps = json::object();
  for (long mu = 0; mu < f.modulus(); ++mu)
    comps[std::to_string(mu)] = series_json(f.component(mu));
  return json{{"modulus", f.modulus()},
              {"kappa", f.kappa_odd() ? "odd" : "even"},
              {"weight", to_string(f.weight())},
              {"components", comps}};
}

json poly_json(const Polynomial& p) {
  json out = json::array();
  for (long i = 0; i <= p.degree(); ++i) out.push_back(to_string(p.coeff(i)));
  return out;
}

json poles_json(const std::vector<PoleDatum>& poles) {
  json out = json::array();
  for (const auto& p : poles) out.push_back({{"D", p.D}, {"r", p.r}, {"order", p.order}});
  return out;
}

Rational parse_m(const std::string& text) { return parse_rational(text); }

std::array<long, 3> parse_form(const std::string& text) {
  std::array<long, 3> f{};
  if (std::sscanf(text.c_str(), "[%ld,%ld,%ld]", &f[0], &f[1], &f[2]) != 3)
    throw domain_error("cannot parse quadratic form '" + text + "'; expected \"[a,b,c]\"");
  return f;
}

void emit_series(const Options& opt, std::ostream& out, const RationalSeries& s) {
  if (opt.json_output())
    out << series_json(s).dump(2) << "\n";
  else
    s.dump(out);
}

int cmd_eta_expand(const Options& opt, const std::string& spec_text, std::ostream& out) {
  EtaQuotientSpec spec = parse_eta_spec(spec_text);
  emit_series(opt, out, eta_quotient(spec, opt.terms));
  return 0;
}

int cmd_named(const Options& opt, const std::string& name, std::ostream& out) {
  emit_series(opt, out, named_form(named_form_from_string(name), opt.terms));
  return 0;
}

int cmd_theta(const Options& opt, long d_param, long coset, long k, std::ostream& out) {
  BinaryLatticeSpec spec = maximal_order_lattice(d_param);
  auto [c1, c2] = maximal_order_coset(d_param, coset);
  QuadSeries s = binary_theta(spec, c1, c2, k, opt.terms);
  if (opt.json_output())
    out << series_json(s).dump(2) << "\n";
  else
    s.dump(out);
  return 0;
}

int cmd_basis(const Options& opt, const std::string& m_text, std::ostream& out) {
  BasisForm f = basis_fm(parse_m(m_text), opt.terms);
  if (opt.json_output()) {
    json j{{"m", to_string(f.m)}, {"P", poly_json(f.p)}, {"form", vector_json(f.form)}};
    out << j.dump(2) << "\n";
  } else {
    out << "P_{m+1/3}\t" << f.p.to_coeff_list() << "\n";
    dump_vector_form(out, f.form);
  }
  return 0;
}

int cmd_tensor(const Options& opt, const std::string& m_text, std::ostream& out) {
  BasisForm f = basis_fm(parse_m(m_text), opt.terms);
  VectorValuedSeries<Rational> kf = kohnen_split(4 * opt.terms + 8);
  VectorValuedSeries<Rational> t = tensor(f.form, kf);
  if (opt.json_output())
    out << vector_json(t).dump(2) << "\n";
  else
    dump_vector_form(out, t);
  return 0;
}

int cmd_lift(const Options& opt, const std::string& m_text, std::ostream& out) {
  LiftOptions lopt;
  lopt.float_bits = opt.float_bits;
  lopt.divisor_exponent = opt.divisor_exponent;
  lopt.lift_terms = opt.terms;
  lopt.parallel = !opt.no_parallel;
  Rational m = parse_m(m_text);
  if (opt.divisor_exponent != 2) {
    // Alternative divisor exponents do not linearize as Delta3 * A/B; print
    // the expansion and pole data without attempting an identification.
    BasisForm f = basis_fm(m, opt.terms + 4);
    VectorValuedSeries<Rational> kf = kohnen_split(4 * (opt.terms + 6) + 8);
    VectorValuedSeries<Rational> tens = tensor(f.form, kf);
    long t_lift = std::max(opt.terms, 8L);
    while (t_lift * t_lift > 12 * (opt.terms + 2)) --t_lift;  // stay inside the tensor depth
    RationalSeries lift = lift_expansion(tens, std::max(t_lift, 2L), opt.divisor_exponent);
    std::vector<PoleDatum> poles = pole_data(tens);
    if (opt.json_output()) {
      json j{{"m", to_string(m)},
             {"P", poly_json(f.p)},
             {"divisor_exponent", opt.divisor_exponent},
             {"poles", poles_json(poles)},
             {"lift", series_json(lift)}};
      out << j.dump(2) << "\n";
    } else {
      out << "m\t" << to_string(m) << "\n";
      out << "divisor-exponent\t" << opt.divisor_exponent << "\t(no identification)\n";
      dump_pole_data(out, poles);
      out << "lift\n";
      lift.dump(out);
    }
    return 0;
  }
  LiftRun run = run_lift_pipeline(m, lopt);
  if (opt.json_output()) {
    json j{{"m", to_string(run.m)},
           {"P", poly_json(run.basis_poly)},
           {"poles", poles_json(run.poles)},
           {"lift", series_json(run.lift)},
           {"A", poly_json(run.ident.a)},
           {"B", poly_json(run.ident.b)},
           {"value_at_cm", to_string(run.value_at_cm)}};
    out << j.dump(2) << "\n";
  } else {
    dump_lift_run(out, run);
  }
  return 0;
}

int cmd_mock(const Options& opt, const std::string& max_m_text, std::ostream& out) {
  LiftOptions lopt;
  lopt.float_bits = opt.float_bits;
  lopt.parallel = !opt.no_parallel;
  MockCoefficientTable table = mock_coefficients(parse_m(max_m_text), lopt);
  ScalarPreimage pre = scalar_preimage(table);
  if (opt.json_output()) {
    json entries = json::object();
    for (const auto& [m, r] : table.entries) entries[to_string(m)] = to_string(r);
    json rows = json::array();
    for (const auto& row : pre.report)
      rows.push_back({{"exponent", row.exponent},
                      {"expected", to_string(row.expected)},
                      {"got", to_string(row.got)},
                      {"pass", row.pass}});
    json j{{"entries", entries}, {"preimage", series_json(pre.series)}, {"reference", rows}};
    out << j.dump(2) << "\n";
  } else {
    dump_mock_table(out, table);
    out << "preimage\n";
    pre.series.dump(out);
    dump_bor_report(out, pre.report);
  }
  return 0;
}

int cmd_cm_eval(const Options& opt, const std::string& form_text, std::ostream& out) {
  auto f = parse_form(form_text);
  CMPoint pt = CMPoint::from_form(f[0], f[1], f[2]);
  BigComplex value = eval_j3(pt, opt.float_bits);
  Polynomial p = recognize_algebraic(value);
  // residual of the recognized polynomial at the float value
  long prec = value.re.prec();
  BigComplex acc(BigFloat::of(0, prec), BigFloat::of(0, prec));
  for (long i = p.degree(); i >= 0; --i)
    acc = acc * value + BigComplex(BigFloat::of(p.coeff(i), prec), BigFloat::of(0, prec));
  std::string residual = acc.abs().to_string(8);
  if (opt.json_output()) {
    json j{{"form", {f[0], f[1], f[2]}},
           {"D", pt.D},
           {"j3", {{"re", value.re.to_string(40)}, {"im", value.im.to_string(40)}}},
           {"polynomial", poly_json(p)},
           {"residual", residual}};
    out << j.dump(2) << "\n";
  } else {
    out << "form\t[" << f[0] << "," << f[1] << "," << f[2] << "]\tD\t" << pt.D << "\n";
    out << "j3\t" << value.to_string(40) << "\n";
    out << "polynomial\t" << p.to_coeff_list() << "\t(" << p.to_pretty_string() << ")\n";
    out << "residual\t" << residual << "\n";
  }
  return 0;
}

int cmd_verify(const Options& opt, const std::string& max_m_text, bool skip_properties,
               std::ostream& out) {
  RunConfig cfg;
  cfg.terms = opt.terms;
  cfg.float_bits = opt.float_bits;
  cfg.max_m = parse_m(max_m_text);
  cfg.parallel = !opt.no_parallel;
  cfg.run_properties = !skip_properties;
  std::vector<CheckGroup> groups = run_paper_checks(cfg);
  if (opt.json_output()) {
    json jgroups = json::array();
    for (const auto& g : groups) {
      json rows = json::array();
      for (const auto& r : g.rows)
        rows.push_back(
            {{"name", r.name}, {"expected", r.expected}, {"got", r.got}, {"pass", r.pass}});
      jgroups.push_back({{"title", g.title}, {"seconds", g.seconds}, {"rows", rows}});
    }
    json j{{"groups", jgroups}, {"pass", all_pass(groups)}};
    out << j.dump(2) << "\n";
  } else {
    print_checks(out, groups);
    out << (all_pass(groups) ? "ALL CHECKS PASSED\n" : "CHECKS FAILED\n");
  }
  return all_pass(groups) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"exact q-series arithmetic and theta lifts for eta(3z)^8"};
  app.name("qlift");

  app.add_option("--terms", opt.terms,
                 "working truncation (integer q-steps past the valuation, min 8)")
      ->envname("QLIFT_TERMS")
      ->check(CLI::Range(1L, 2000000L));
  app.add_option("--float-bits", opt.float_bits, "mantissa bits for CM evaluation (min 64)")
      ->envname("QLIFT_FLOAT_BITS")
      ->check(CLI::Range(64L, 100000L));
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-parallel", opt.no_parallel, "disable the per-index fan-out");
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::string spec_text = "3^8", name = "F", m_text = "2/3", max_m_text = "14/3",
              form_text = "[3,1,1]";
  long theta_d = 3, theta_coset = 1, theta_k = 4;
  bool skip_properties = false;

  CLI::App* eta_cmd = app.add_subcommand("eta-expand", "expand an eta quotient");
  eta_cmd->add_option("--spec", spec_text, "factors, e.g. \"1^10*2^-5*4^-6\"")->required();

  CLI::App* named_cmd = app.add_subcommand("named", "expand a named form");
  named_cmd->add_option("--form", name, "one of F, j, j3, Delta3, w, eta8")->required();

  CLI::App* theta_cmd = app.add_subcommand("theta", "binary theta series over Q(sqrt(-D))");
  theta_cmd->add_option("--D", theta_d, "field parameter (squarefree, positive)")->required();
  theta_cmd->add_option("--coset", theta_coset, "coset index");
  theta_cmd->add_option("--k", theta_k, "weight parameter, lambda^(k-1)");

  CLI::App* basis_cmd = app.add_subcommand("basis", "weakly holomorphic basis form f_m");
  basis_cmd->add_option("--m", m_text, "index, 2/3 mod 1 or -1/3")->required();

  CLI::App* tensor_cmd = app.add_subcommand("tensor", "f_m tensor the split F on Z/6");
  tensor_cmd->add_option("--m", m_text)->required();

  CLI::App* lift_cmd = app.add_subcommand("lift", "lift, poles and A/B identification");
  lift_cmd->add_option("--m", m_text)->required();
  lift_cmd->add_option("--divisor-exponent", opt.divisor_exponent,
                       "exponent in the lift coefficient formula (default 2)");

  CLI::App* mock_cmd = app.add_subcommand("mock", "holomorphic-part coefficient table");
  mock_cmd->add_option("--max-m", max_m_text, "largest index (default 14/3)");

  CLI::App* cm_cmd = app.add_subcommand("cm-eval", "evaluate j3 at a CM point");
  cm_cmd->add_option("--form", form_text, "binary quadratic form \"[a,b,c]\"")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify-paper", "run the reference checks");
  verify_cmd->add_option("--max-m", max_m_text, "depth of the coefficient table");
  verify_cmd->add_flag("--skip-properties", skip_properties, "skip the property batteries");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qlift: " << e.what() << "\n";
    return 2;
  }

  opt.terms = std::max(opt.terms, 8L);  // the configuration floor

  std::string stage = app.get_subcommands().front()->get_name();
  try {
    if (eta_cmd->parsed()) return cmd_eta_expand(opt, spec_text, out);
    if (named_cmd->parsed()) return cmd_named(opt, name, out);
    if (theta_cmd->parsed()) return cmd_theta(opt, theta_d, theta_coset, theta_k, out);
    if (basis_cmd->parsed()) return cmd_basis(opt, m_text, out);
    if (tensor_cmd->parsed()) return cmd_tensor(opt, m_text, out);
    if (lift_cmd->parsed()) return cmd_lift(opt, m_text, out);
    if (mock_cmd->parsed()) return cmd_mock(opt, max_m_text, out);
    if (cm_cmd->parsed()) return cmd_cm_eval(opt, form_text, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, max_m_text, skip_properties, out);
  } catch (const std::exception& e) {
    err << "qlift: " << stage << ": " << e.what() << "\n";
    return 1;
  }
  err << "qlift: unknown subcommand\n";
  return 2;
}

}  // namespace qlift::cli
