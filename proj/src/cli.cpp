#include "hermite/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <exception>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "hermite/combinatorics.hpp"
#include "hermite/factorize.hpp"
#include "hermite/report.hpp"
#include "hermite/schemefile.hpp"

namespace hermite {

namespace {

constexpr unsigned kDisplayDigits = 17;

ParamBinding parse_bindings(const std::vector<std::string>& defs) {
  ParamBinding binding;
  for (const auto& def : defs) {
    size_t eq = def.find('=');
    if (eq == std::string::npos)
      throw SchemeError("malformed --param '" + def + "', expected name=value");
    std::string name = def.substr(0, eq);
    auto value = parse_rational(def.substr(eq + 1));
    if (name.empty() || !value)
      throw SchemeError("malformed --param '" + def + "', expected name=value");
    binding[name] = *value;
  }
  return binding;
}

std::string binding_summary(const ParamBinding& binding) {
  std::string s;
  for (const auto& [k, v] : binding) {
    if (!s.empty()) s += ", ";
    s += k + "=" + to_string(v);
  }
  return s.empty() ? "none" : s;
}

void describe_spectral_failure(Report& r, const SpectralFailure& fail) {
  r.put("spectral.failed_order", fail.order);
  r.put("spectral.witness_index", static_cast<long long>(fail.output_index));
  r.put("spectral.witness_component", static_cast<long long>(fail.component));
  r.put("spectral.witness_residual", fail.residual);
  r.note(
      "spectral condition of order {spectral.failed_order} fails: output index "
      "{spectral.witness_index}, component {spectral.witness_component}, residual "
      "{spectral.witness_residual}");
}

void describe_division_failure(Report& r, const DivisionFailure& fail) {
  r.put("factorize.failed_entry", fail.entry);
  r.put("factorize.divisor", fail.divisor.to_string());
  r.put("factorize.remainder", fail.remainder.to_string());
  r.note(
      "factorization fails at entry {factorize.failed_entry}: remainder "
      "{factorize.remainder} after division by {factorize.divisor}");
}

std::string certify_summary(const CertifyResult& res) {
  std::ostringstream s;
  unsigned d = res.order;
  switch (res.stage) {
    case CertifyStage::spectral:
      s << "spectral condition of order " << res.spectral.failure->order << " fails";
      break;
    case CertifyStage::factorize:
      s << "factorization fails at entry " << res.division_failure->entry;
      break;
    case CertifyStage::contractivity:
      s << "no contractivity certificate up to N=" << res.certificate->iterations
        << " (final norm " << to_string(res.certificate->norm) << ")";
      break;
    case CertifyStage::done:
      s << "C" << d << " certified with N=" << res.certificate->iterations
        << " (norm " << to_string(res.certificate->norm) << ")";
      break;
  }
  return s.str();
}

Report certify_report(const CertifyResult& res, const std::string& scheme_name,
                      const ParamBinding& binding) {
  Report r;
  r.put("scheme", scheme_name);
  r.put("parameters", binding_summary(binding));
  r.put("order", res.order);
  r.note("scheme: {scheme}");
  r.note("parameters: {parameters}");
  r.note("order: {order}");

  if (res.stage == CertifyStage::spectral) {
    r.put("certified", false);
    describe_spectral_failure(r, *res.spectral.failure);
    r.note("certified: {certified}");
    return r;
  }
  r.put("spectral.order", res.order);
  r.note("spectral condition of order {spectral.order} holds");

  if (res.stage == CertifyStage::factorize) {
    r.put("certified", false);
    describe_division_failure(r, *res.division_failure);
    r.note("certified: {certified}");
    return r;
  }
  const GregoryFactorization& fact = *res.factorization;
  r.put("factor.support_min", static_cast<long long>(fact.quotient().support_min()));
  r.put("factor.support_max", static_cast<long long>(fact.quotient().support_max()));
  r.note("factor support: [{factor.support_min}, {factor.support_max}]");

  const ContractivityCertificate& cert = *res.certificate;
  r.put("certificate.iterations", cert.iterations);
  r.put("certificate.norm", cert.norm);
  if (res.stage == CertifyStage::contractivity) {
    r.put("certified", false);
    r.note(
        "no contractivity certificate up to N={certificate.iterations}, final norm "
        "{certificate.norm}");
    r.note("certified: {certified}");
    return r;
  }

  r.put("certified", true);
  r.put("summary", certify_summary(res));
  r.note("contractivity: norm {certificate.norm} < 1 at N={certificate.iterations}");
  r.note("{summary}");
  return r;
}

void print_report(const Report& r, bool kv, std::ostream& out) {
  out << (kv ? r.keyvalues() : r.text());
}

struct SweepSpec {
  std::string name;
  Rational from, to, step;
};

SweepSpec parse_sweep(const std::string& text) {
  size_t eq = text.find('=');
  if (eq == std::string::npos)
    throw SchemeError("malformed --sweep '" + text + "', expected name=from:to:step");
  SweepSpec spec;
  spec.name = text.substr(0, eq);
  std::string rest = text.substr(eq + 1);
  size_t c1 = rest.find(':');
  size_t c2 = c1 == std::string::npos ? std::string::npos : rest.find(':', c1 + 1);
  if (spec.name.empty() || c2 == std::string::npos)
    throw SchemeError("malformed --sweep '" + text + "', expected name=from:to:step");
  auto from = parse_rational(rest.substr(0, c1));
  auto to = parse_rational(rest.substr(c1 + 1, c2 - c1 - 1));
  auto step = parse_rational(rest.substr(c2 + 1));
  if (!from || !to || !step || *step == 0)
    throw SchemeError("malformed --sweep '" + text + "', expected name=from:to:step");
  if ((*step > 0 && *from > *to) || (*step < 0 && *from < *to))
    throw SchemeError("empty --sweep range '" + text + "'");
  spec.from = *from;
  spec.to = *to;
  spec.step = *step;
  return spec;
}

std::vector<Rational> sweep_values(const SweepSpec& spec) {
  std::vector<Rational> values;
  Rational v = spec.from;
  while (spec.step > 0 ? v <= spec.to : v >= spec.to) {
    values.push_back(v);
    if (values.size() > 10000) throw SchemeError("--sweep generates more than 10000 points");
    v += spec.step;
  }
  if (spec.step < 0) std::reverse(values.begin(), values.end());
  return values;
}

int do_certify(const SchemeFile& scheme, const ParamBinding& binding, unsigned order,
               unsigned max_iter, const std::optional<SweepSpec>& sweep, bool kv,
               std::ostream& out) {
  if (!sweep) {
    MatrixMask mask = evaluate_scheme(scheme, binding);
    CertifyResult res = certify_cd(mask, order, max_iter);
    print_report(certify_report(res, scheme.name, binding), kv, out);
    return res.certified ? 0 : 1;
  }

  std::vector<Rational> values = sweep_values(*sweep);
  // lookup tables are grown up front so the workers only read them
  warm_up_combinatorics(order + 2);

  std::vector<std::optional<CertifyResult>> results(values.size());
  std::vector<std::exception_ptr> errors(values.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= values.size()) return;
      try {
        ParamBinding local = binding;
        local[sweep->name] = values[i];
        MatrixMask mask = evaluate_scheme(scheme, local);
        results[i] = certify_cd(mask, order, max_iter);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  size_t nthreads = std::min<size_t>(hw, values.size());
  std::vector<std::thread> threads;
  for (size_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  for (size_t i = 0; i < values.size(); ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);

  bool all_ok = true;
  for (size_t i = 0; i < values.size(); ++i) {
    const CertifyResult& res = *results[i];
    out << sweep->name << "=" << to_string(values[i]) << ": " << certify_summary(res)
        << "\n";
    all_ok = all_ok && res.certified;
  }
  return all_ok ? 0 : 1;
}

int do_spectral(const SchemeFile& scheme, const ParamBinding& binding, unsigned order,
                bool kv, std::ostream& out) {
  MatrixMask mask = evaluate_scheme(scheme, binding);
  SpectralResult res = solve_spectral(mask, order);
  Report r;
  r.put("scheme", scheme.name);
  r.put("parameters", binding_summary(binding));
  r.put("order", order);
  r.note("scheme: {scheme}");
  r.note("parameters: {parameters}");
  if (res.success()) {
    r.put("satisfied", true);
    r.note("spectral condition of order {order} holds");
    for (size_t k = 0; k < res.polynomials.size(); ++k) {
      std::string key = "P" + std::to_string(k);
      r.put(key, res.polynomials[k].to_string());
      r.note("P_" + std::to_string(k) + " = {" + key + "}");
    }
    r.note("satisfied: {satisfied}");
    print_report(r, kv, out);
    return 0;
  }
  r.put("satisfied", false);
  describe_spectral_failure(r, *res.failure);
  r.note("satisfied: {satisfied}");
  print_report(r, kv, out);
  return 1;
}

int do_factorize(const SchemeFile& scheme, const ParamBinding& binding, unsigned order,
                 bool taylor, const std::string& out_path, bool kv, std::ostream& out) {
  MatrixMask mask = evaluate_scheme(scheme, binding);
  MatrixMask factor;
  std::string suffix;
  std::optional<DivisionFailure> failure;
  if (taylor) {
    TaylorFactorization res = factorize_taylor(mask);
    if (res.success())
      factor = *res.mask;
    else
      failure = res.failure;
    suffix = "_taylor";
  } else {
    FactorizeOutcome res = factorize_gregory(mask, order);
    if (res.success())
      factor = res.factorization->quotient();
    else
      failure = res.failure;
    suffix = "_q" + std::to_string(order);
  }
  if (failure) {
    Report r;
    r.put("scheme", scheme.name);
    r.put("parameters", binding_summary(binding));
    r.note("scheme: {scheme}");
    r.note("parameters: {parameters}");
    describe_division_failure(r, *failure);
    print_report(r, kv, out);
    return 1;
  }
  std::string rendered = render_scheme(factor, scheme.name + suffix);
  if (out_path.empty()) {
    out << rendered;
  } else {
    std::ofstream f(out_path);
    if (!f) throw SchemeError("cannot write '" + out_path + "'");
    f << rendered;
    out << "wrote " << out_path << "\n";
  }
  return 0;
}

int do_contractivity(const SchemeFile& scheme, const ParamBinding& binding,
                     unsigned max_iter, const Rational& scale, bool kv,
                     std::ostream& out) {
  MatrixMask mask = evaluate_scheme(scheme, binding).scaled(scale);
  ContractivityCertificate cert = contractivity_certificate(mask, max_iter);
  Report r;
  r.put("scheme", scheme.name);
  r.put("parameters", binding_summary(binding));
  r.put("scale", scale);
  r.put("iterations", cert.iterations);
  r.put("norm", cert.norm);
  r.put("contractive", cert.contractive);
  r.note("scheme: {scheme}");
  r.note("parameters: {parameters}");
  r.note("scale: {scale}");
  if (cert.contractive)
    r.note("contractive: norm {norm} < 1 at N={iterations}");
  else
    r.note("not contractive up to N={iterations}, final norm {norm}");
  print_report(r, kv, out);
  return cert.contractive ? 0 : 1;
}

HermiteSequence read_csv_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemeError("cannot open data file '" + path + "'");
  HermiteSequence data;
  std::string line;
  size_t lineno = 0;
  bool saw_row = false;
  std::vector<int> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = line;
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.pop_back();
    if (s.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) fields.push_back(item);
    if (fields.size() != 3)
      throw SchemeError("data file line " + std::to_string(lineno) +
                        ": expected 3 comma separated fields");
    auto strip_ws = [](std::string& f) {
      while (!f.empty() && std::isspace(static_cast<unsigned char>(f.front()))) f.erase(f.begin());
      while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
    };
    for (auto& f : fields) strip_ws(f);
    if (lineno == 1 && fields[0] == "j") continue;  // header
    auto j = parse_rational(fields[0]);
    auto f = parse_rational(fields[1]);
    auto df = parse_rational(fields[2]);
    if (!j || !f || !df || j->get_den() != 1)
      throw SchemeError("data file line " + std::to_string(lineno) +
                        ": expected integer index and two rational values");
    int idx = static_cast<int>(j->get_num().get_si());
    for (int other : seen)
      if (other == idx)
        throw SchemeError("data file line " + std::to_string(lineno) +
                          ": duplicate index " + std::to_string(idx));
    seen.push_back(idx);
    Vec2 v;
    v[0] = *f;
    v[1] = *df;
    data.set(idx, v);
    saw_row = true;
  }
  if (!saw_row) throw SchemeError("data file '" + path + "' contains no rows");
  return data;
}

int do_refine(const SchemeFile& scheme, const ParamBinding& binding, unsigned levels,
              const std::string& data_path, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  MatrixMask mask = evaluate_scheme(scheme, binding);
  HermiteSequence data = read_csv_data(data_path);
  RefinedData refined = hermite_refine(mask, data, levels);

  std::ostringstream csv;
  csv << "x,f,df\n";
  Rational h = rational_pow(Rational(1, 2), levels);
  if (!refined.valid_empty()) {
    for (int j = refined.valid_min; j <= refined.valid_max; ++j) {
      Vec2 v = refined.values.at(j);
      csv << to_decimal_string(Rational(j) * h, kDisplayDigits) << ","
          << to_decimal_string(v[0], kDisplayDigits) << ","
          << to_decimal_string(v[1], kDisplayDigits) << "\n";
    }
  }
  if (out_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw SchemeError("cannot write '" + out_path + "'");
    f << csv.str();
    out << "wrote " << out_path << "\n";
  }
  if (refined.valid_empty())
    err << "warning: the valid window at level " << levels << " is empty\n";
  else
    err << "level " << levels << " valid window [" << refined.valid_min << ", "
        << refined.valid_max << "]\n";
  return 0;
}

int do_reproduce(const SchemeFile& scheme, const ParamBinding& binding, unsigned degree,
                 bool kv, std::ostream& out) {
  MatrixMask mask = evaluate_scheme(scheme, binding);
  Report r;
  r.put("scheme", scheme.name);
  r.put("parameters", binding_summary(binding));
  r.put("degree", degree);
  r.note("scheme: {scheme}");
  r.note("parameters: {parameters}");
  for (unsigned m = 0; m <= degree; ++m) {
    if (check_reproduction(mask, m)) continue;
    bool spectral_holds = solve_spectral(mask, m).success();
    r.put("reproduces", false);
    r.put("failed_degree", m);
    r.put("spectral_holds", spectral_holds);
    r.note(std::string("reproduction fails at degree {failed_degree}; spectral ") +
           "condition of order {failed_degree} " +
           (spectral_holds ? "holds" : "does not hold"));
    print_report(r, kv, out);
    return 1;
  }
  r.put("reproduces", true);
  r.note("reproduces polynomials up to degree {degree}");
  print_report(r, kv, out);
  return 0;
}

int do_coeffs(const std::optional<int>& gregory_to,
              const std::vector<int>& s1, const std::vector<int>& s2,
              std::ostream& out, std::ostream& err) {
  if (!gregory_to && s1.empty() && s2.empty()) {
    err << "coeffs: choose at least one of --gregory, --stirling1, --stirling2\n";
    return 2;
  }
  if (gregory_to) {
    if (*gregory_to < 0) {
      err << "coeffs: --gregory takes a nonnegative order\n";
      return 2;
    }
    for (int n = 0; n <= *gregory_to; ++n)
      out << "G_" << n << " = " << to_string(gregory(static_cast<unsigned>(n))) << "\n";
  }
  auto print_pair = [&](const std::vector<int>& nm, bool first_kind) -> bool {
    if (nm.empty()) return true;
    if (nm.size() != 2 || nm[0] < 0 || nm[1] < 0) {
      err << "coeffs: --stirling" << (first_kind ? "1" : "2") << " takes N M\n";
      return false;
    }
    unsigned n = static_cast<unsigned>(nm[0]), m = static_cast<unsigned>(nm[1]);
    Integer v = first_kind ? stirling_first(n, m) : stirling_second(n, m);
    out << (first_kind ? "[" : "{") << n << " " << m << (first_kind ? "]" : "}")
        << " = " << v.get_str() << "\n";
    return true;
  };
  if (!print_pair(s1, true)) return 2;
  if (!print_pair(s2, false)) return 2;
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact analysis of Hermite subdivision schemes"};
  app.name("hermite");
  app.require_subcommand(1);

  std::string scheme_path;
  std::vector<std::string> param_defs;
  unsigned order = 0;
  unsigned max_iter = 12;
  unsigned levels = 1;
  unsigned degree = 0;
  bool kv = false;
  bool taylor = false;
  std::string data_path, out_path, sweep_text, scale_text = "1";
  std::optional<int> gregory_to;
  std::vector<int> stirling1_args, stirling2_args;

  auto add_scheme_options = [&](CLI::App* cmd) {
    cmd->add_option("--scheme", scheme_path, "scheme file")->required();
    cmd->add_option("--param", param_defs, "parameter binding name=value");
    cmd->add_flag("--kv", kv, "print the key=value report");
  };

  CLI::App* cmd_spectral = app.add_subcommand("spectral", "solve the spectral condition");
  add_scheme_options(cmd_spectral);
  cmd_spectral->add_option("--order", order, "spectral order")->required();

  CLI::App* cmd_factorize = app.add_subcommand("factorize", "compute an exact factor");
  add_scheme_options(cmd_factorize);
  cmd_factorize->add_option("--order", order, "factorization order");
  cmd_factorize->add_flag("--taylor", taylor, "Taylor factor instead of the Gregory factor");
  cmd_factorize->add_option("--out", out_path, "write the factor scheme here");

  CLI::App* cmd_certify = app.add_subcommand("certify", "certify C^d convergence");
  add_scheme_options(cmd_certify);
  cmd_certify->add_option("--order", order, "smoothness order d")->required();
  cmd_certify->add_option("--max-iter", max_iter, "iteration budget for contractivity");
  cmd_certify->add_option("--sweep", sweep_text, "parameter sweep name=from:to:step");

  CLI::App* cmd_contract = app.add_subcommand("contractivity", "iterated operator norms");
  add_scheme_options(cmd_contract);
  cmd_contract->add_option("--max-iter", max_iter, "iteration budget");
  cmd_contract->add_option("--scale", scale_text, "scalar applied to the mask first");

  CLI::App* cmd_refine = app.add_subcommand("refine", "run the refinement on data");
  add_scheme_options(cmd_refine);
  cmd_refine->add_option("--levels", levels, "number of refinement steps")->required();
  cmd_refine->add_option("--data", data_path, "input csv with rows j,f,df")->required();
  cmd_refine->add_option("--out", out_path, "output csv path");

  CLI::App* cmd_reproduce = app.add_subcommand("reproduce", "polynomial reproduction check");
  add_scheme_options(cmd_reproduce);
  cmd_reproduce->add_option("--degree", degree, "maximal degree")->required();

  CLI::App* cmd_coeffs = app.add_subcommand("coeffs", "print coefficient tables");
  cmd_coeffs->add_option("--gregory", gregory_to, "print G_0 .. G_N");
  cmd_coeffs->add_option("--stirling1", stirling1_args, "print [N M]")->expected(2);
  cmd_coeffs->add_option("--stirling2", stirling2_args, "print {N M}")->expected(2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_coeffs))
      return do_coeffs(gregory_to, stirling1_args, stirling2_args, out, err);

    ParamBinding binding = parse_bindings(param_defs);
    SchemeFile scheme = load_scheme_file(scheme_path);

    if (app.got_subcommand(cmd_spectral)) return do_spectral(scheme, binding, order, kv, out);
    if (app.got_subcommand(cmd_factorize)) {
      if (!taylor && order == 0)
        throw SchemeError("factorize: --order is required without --taylor");
      return do_factorize(scheme, binding, order, taylor, out_path, kv, out);
    }
    if (app.got_subcommand(cmd_certify)) {
      std::optional<SweepSpec> sweep;
      if (!sweep_text.empty()) sweep = parse_sweep(sweep_text);
      return do_certify(scheme, binding, order, max_iter, sweep, kv, out);
    }
    if (app.got_subcommand(cmd_contract)) {
      auto scale = parse_rational(scale_text);
      if (!scale) throw SchemeError("malformed --scale '" + scale_text + "'");
      return do_contractivity(scheme, binding, max_iter, *scale, kv, out);
    }
    if (app.got_subcommand(cmd_refine))
      return do_refine(scheme, binding, levels, data_path, out_path, out, err);
    if (app.got_subcommand(cmd_reproduce))
      return do_reproduce(scheme, binding, degree, kv, out);

    err << "no subcommand selected\n";
    return 2;
  } catch (const SchemeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hermite
