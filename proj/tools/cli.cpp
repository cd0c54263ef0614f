#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "affvir/classify.hpp"
#include "affvir/parse.hpp"
#include "affvir/structure.hpp"

namespace affvir::cli {

std::string to_string(Report::Status s) {
  switch (s) {
    case Report::Status::Pass: return "pass";
    case Report::Status::Fail: return "fail";
    case Report::Status::Error: return "error";
  }
  return "error";
}

int exit_code(Report::Status s) {
  switch (s) {
    case Report::Status::Pass: return 0;
    case Report::Status::Fail: return 1;
    case Report::Status::Error: return 2;
  }
  return 2;
}

void write_report(const Report& report, bool json, std::ostream& out, std::ostream& err) {
  if (json) {
    for (const auto& r : report.records) {
      nlohmann::ordered_json j;
      j["record"] = r.check;
      j["inputs"] = r.inputs;
      j["expected"] = r.expected;
      j["got"] = r.got;
      out << j.dump() << '\n';
    }
    nlohmann::ordered_json j;
    j["verb"] = report.verb;
    j["status"] = to_string(report.status);
    j["lines"] = report.lines;
    out << j.dump() << '\n';
    return;
  }
  for (const auto& line : report.lines) out << line << '\n';
  // Error records repeat the message line.
  if (report.status != Report::Status::Fail) return;
  const std::size_t shown = std::min<std::size_t>(report.records.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& r = report.records[i];
    err << "  " << r.check << " [" << r.inputs << "]: expected " << r.expected << ", got " << r.got << '\n';
  }
  if (report.records.size() > shown) err << "  ... " << report.records.size() - shown << " more\n";
}

namespace {

using Status = Report::Status;
using Bindings = std::map<Param, Rat>;

struct Options {
  std::string family;
  std::string lambda = "L";
  std::string alpha = "A";
  std::string beta = "B";
  std::string gamma = "G";
  std::vector<std::string> sets;
  int window = -1;
  int degree = -1;
  std::string format;
  std::string x, g, w, a, b, candidate, file, convention = "invariant";
  std::optional<long> i;
  std::optional<int> m;
  bool lie = false;
};

/// A usage problem detected after CLI11 parsing; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto parsed(const std::string& option, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw UsageError("cannot parse " + option + ": " + e.what());
  }
}

Bindings parse_bindings(const std::vector<std::string>& sets) {
  Bindings out;
  for (const auto& item : sets) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--set expects NAME=VALUE, got '" + item + "'");
    std::string name = item.substr(0, eq);
    std::optional<Param> p;
    if (name.size() == 1) p = param_from_symbol(name[0]);
    if (name == "lambda") p = Param::Lambda;
    if (name == "alpha") p = Param::Alpha;
    if (name == "beta") p = Param::Beta;
    if (name == "gamma") p = Param::Gamma;
    if (!p) throw UsageError("--set: unknown parameter '" + name + "' (use L, A, B or G)");
    Scalar v = parsed("--set " + name, [&] { return parse_scalar(item.substr(eq + 1)); });
    auto r = v.as_rational();
    if (!r) throw UsageError("--set " + name + ": value must be rational");
    out[*p] = *r;
  }
  return out;
}

Family require_family(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  auto f = family_from_string(o.family);
  if (!f) throw UsageError("--family must be Omega, Delta or Theta, got '" + o.family + "'");
  return *f;
}

ModuleSpec build_spec(const Options& o, const Bindings& bindings) {
  Family f = require_family(o);
  auto scalar = [](const std::string& name, const std::string& text) {
    return parsed(name, [&] { return parse_scalar(text); });
  };
  Scalar l = scalar("--lambda", o.lambda), a = scalar("--alpha", o.alpha), b = scalar("--beta", o.beta),
         g = scalar("--gamma", o.gamma);
  try {
    return ModuleSpec::make(f, l, a, b, g).substitute(bindings);
  } catch (const InvalidModuleSpec& e) {
    throw UsageError(e.what());
  }
}

ModuleSpec spec_argument(const std::string& option, const std::string& text, const Bindings& bindings) {
  if (text.empty()) throw UsageError(option + " is required");
  try {
    return parsed(option, [&] { return parse_spec(text); }).substitute(bindings);
  } catch (const InvalidModuleSpec& e) {
    throw UsageError(option + ": " + e.what());
  }
}

std::string require_text(const std::string& option, const std::string& text) {
  if (text.empty()) throw UsageError(option + " is required");
  return text;
}

EnvelopingElement substitute(const EnvelopingElement& u, const Bindings& bindings) {
  EnvelopingElement out;
  for (const auto& [word, coef] : u.terms()) out.add(word, coef.substitute(bindings));
  return out;
}

void add_failures(Report& report, const CheckReport& checks) {
  for (const auto& f : checks.failures)
    report.records.push_back({f.check, f.inputs, f.expected, f.note.empty() ? f.got : f.got + "; " + f.note});
}

std::string count_text(const CheckReport& r) {
  if (r.passed()) return "pass (" + std::to_string(r.checked) + " checks)";
  return "fail (" + std::to_string(r.failures.size()) + " of " + std::to_string(r.checked) + " checks)";
}

bool needs_parens(const std::string& s) { return s.find_first_of("+-", 1) != std::string::npos; }

// ---------------------------------------------------------------------------
// verbs

Report act(const Options& o, const Bindings& bindings) {
  ModuleSpec spec = build_spec(o, bindings);
  EnvelopingElement x =
      substitute(parsed("--x", [&] { return parse_algebra(require_text("--x", o.x)); }), bindings);
  SPoly g = parsed("--g", [&] { return parse_spoly(require_text("--g", o.g)); }).substitute(bindings);
  Report r{"act", Status::Pass, {}, {}};
  SPoly result = act_word(spec, x, g);
  const auto& terms = x.terms();
  if (terms.size() == 1 && terms.begin()->first.size() == 1 && terms.begin()->second.is_one()) {
    ActionFormula f = action_formula(spec, terms.begin()->first.front());
    std::string pre = affvir::to_string(f.prefactor);
    if (needs_parens(pre)) pre = "(" + pre + ")";
    SPoly shifted = g.shifted(Rat(f.ds), Rat(f.dt));
    r.lines.push_back(pre + "*(" + affvir::to_string(shifted) + ") = " + affvir::to_string(result));
  } else {
    r.lines.push_back("(" + affvir::to_string(x) + ") . (" + affvir::to_string(g) + ") = " + affvir::to_string(result));
  }
  return r;
}

Report verify_axioms(const Options& o, const Bindings& bindings) {
  Report r{"verify-axioms", Status::Pass, {}, {}};
  if (o.lie) {
    CentralConvention conv = CentralConvention::InvariantForm;
    if (o.convention == "printed")
      conv = CentralConvention::PrintedTable;
    else if (o.convention != "invariant")
      throw UsageError("--convention must be invariant or printed");
    const int window = o.window < 0 ? 3 : o.window;
    CheckReport anti = check_antisymmetry(window, conv);
    CheckReport jacobi = check_jacobi(window, conv);
    r.lines.push_back("antisymmetry, window " + std::to_string(window) + ": " + count_text(anti));
    r.lines.push_back("Jacobi, window " + std::to_string(window) + ": " + count_text(jacobi));
    add_failures(r, anti);
    add_failures(r, jacobi);
    if (!anti.passed() || !jacobi.passed()) r.status = Status::Fail;
    return r;
  }
  ModuleSpec spec = build_spec(o, bindings);
  const int window = o.window < 0 ? 2 : o.window;
  const int degree = o.degree < 0 ? 2 : o.degree;
  CheckReport checks = check_module_axiom(spec, window, degree);
  std::string head = "module axiom for " + affvir::to_string(spec) + ", window " + std::to_string(window) +
                     ", degree " + std::to_string(degree) + ": ";
  if (checks.passed()) {
    r.lines.push_back("pass: " + head + std::to_string(checks.checked) + " checks");
  } else {
    r.status = Status::Fail;
    r.lines.push_back("fail: " + head + std::to_string(checks.failures.size()) + " of " +
                      std::to_string(checks.checked) + " checks failed");
    add_failures(r, checks);
  }
  return r;
}

Report simplicity(const Options& o, const Bindings& bindings) {
  ModuleSpec spec = build_spec(o, bindings);
  Report r{"simplicity", Status::Pass, {}, {}};
  const std::string name = affvir::to_string(spec);
  if (spec.family() != Family::Theta) {
    r.lines.push_back("simple; every " + affvir::to_string(spec.family()) + " module is simple");
    return r;
  }
  const Scalar twice = Scalar(2) * *spec.beta();
  const std::string tb = "2β=" + affvir::to_string(twice);
  if (is_simple(spec)) {
    if (twice.is_rational())
      r.lines.push_back("simple; " + tb + " ∉ Z₊");
    else
      r.lines.push_back("simple; " + tb + " is symbolic, not in Z₊");
    return r;
  }
  auto shape = proper_submodule(spec);
  std::string gen = to_string_content_form(SPoly::from_t(shape->g));
  r.status = Status::Fail;
  r.lines.push_back("not simple; " + tb + " ∈ Z₊; submodule generator " + gen);
  r.records.push_back({"simplicity", name, "simple", "proper submodule C[s,t]*" + gen});
  return r;
}

Report submodule(const Options& o, const Bindings& bindings) {
  ModuleSpec spec = build_spec(o, bindings);
  Report r{"submodule", Status::Pass, {}, {}};
  auto shape = proper_submodule(spec);
  if (!shape) {
    r.lines.push_back("no proper submodule: " + affvir::to_string(spec) + " is simple");
    return r;
  }
  const int window = o.window < 0 ? 3 : o.window;
  const int degree = o.degree < 0 ? 3 : o.degree;
  const std::string gen = to_string_content_form(SPoly::from_t(shape->g));
  r.lines.push_back("submodule C[s,t]*" + gen);
  CheckReport inv = check_invariance(spec, *shape, window, degree);
  r.lines.push_back("invariance, window " + std::to_string(window) + ", degree " + std::to_string(degree) + ": " +
                    count_text(inv));
  add_failures(r, inv);
  const bool has_one = in_shape(*shape, SPoly(1));
  r.lines.push_back(std::string("1 in submodule: ") + (has_one ? "yes" : "no"));
  if (has_one) r.records.push_back({"proper", gen, "1 not in submodule", "1 in submodule"});
  CheckReport tau = tau_check(spec.lambda(), spec.alpha(), *spec.beta(), spec.gamma(), degree);
  ModuleSpec source =
      ModuleSpec::make(Family::Theta, spec.lambda(), spec.alpha(), -*spec.beta() - Scalar(1), spec.gamma());
  r.lines.push_back("tau: " + affvir::to_string(source) + " -> submodule, g |-> g*" + gen + ": " + count_text(tau));
  add_failures(r, tau);
  if (!inv.passed() || has_one || !tau.passed()) r.status = Status::Fail;
  return r;
}

Report generate(const Options& o, const Bindings& bindings) {
  ModuleSpec spec = build_spec(o, bindings);
  SPoly w = parsed("--w", [&] { return parse_spoly(require_text("--w", o.w)); }).substitute(bindings);
  Report r{"generate-one", Status::Pass, {}, {}};
  try {
    GenWitness wit = generate_one(spec, w);
    r.lines.push_back("u = " + affvir::to_string(wit.u()));
    r.lines.push_back("shift k = " + std::to_string(wit.shift()));
    r.lines.push_back("check: u . (" + affvir::to_string(w) + ") = 1");
  } catch (const StructureError& e) {
    r.status = Status::Fail;
    r.lines.push_back(affvir::to_string(e.code()) + ": " + e.what());
    r.records.push_back({"generate-one", affvir::to_string(w), "u with u.w = 1", affvir::to_string(e.code())});
  }
  return r;
}

Report iso(const Options& o, const Bindings& bindings) {
  ModuleSpec a = spec_argument("--a", o.a, bindings);
  ModuleSpec b = spec_argument("--b", o.b, bindings);
  IsoResult res = iso_check(a, b);
  Report r{"iso", Status::Pass, {}, {}};
  const std::string pair = affvir::to_string(a) + " vs " + affvir::to_string(b);
  if (res.isomorphic) {
    r.lines.push_back("isomorphic: " + pair + "; " + res.reason);
  } else {
    r.status = Status::Fail;
    r.lines.push_back("not isomorphic: " + pair + "; " + res.reason);
    r.records.push_back({"iso", pair, "isomorphic", res.reason});
  }
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Report classify(const Options& o, const Bindings& bindings) {
  if (o.candidate.empty() == o.file.empty()) throw UsageError("give exactly one of --candidate and --file");
  const std::string text = o.file.empty() ? o.candidate : read_file(o.file);
  EFCandidate c = parsed(o.file.empty() ? "--candidate" : o.file, [&] { return parse_candidate(text); });
  c.e0 = c.e0.substitute(bindings);
  c.f0 = c.f0.substitute(bindings);
  c.base.lambda = c.base.lambda.substitute(bindings);
  c.base.gamma = c.base.gamma.substitute(bindings);
  if (c.base.p) {
    std::vector<Scalar> coeffs;
    for (const auto& k : c.base.p->coeffs()) coeffs.push_back(k.substitute(bindings));
    c.base.p = UniPoly(coeffs);
  }
  if (c.base.lambda.is_zero()) throw UsageError("lambda must be nonzero");
  Report r{"classify", Status::Pass, {}, {}};
  try {
    ClassResult res = classify_candidate(c);
    std::string betas;
    for (std::size_t i = 0; i < res.betas.size(); ++i) betas += (i ? ", " : "") + affvir::to_string(res.betas[i]);
    std::string beta_text = res.betas.empty() ? "beta^2+beta=" + affvir::to_string(res.kappa) + " (no root in field)"
                            : res.betas.size() == 1 ? "beta=" + betas
                                                    : "beta in {" + betas + "}";
    r.lines.push_back(affvir::to_string(res.spec) + "; " + beta_text);
    for (const auto& step : res.derivation) r.lines.push_back("  " + step);
  } catch (const ClassifyError& e) {
    r.status = Status::Fail;
    r.lines.push_back("rejected: " + affvir::to_string(e.code()) + ": " + e.what());
    r.records.push_back({e.constraint(), "E0=" + to_string(c.e0, kCartanNames) + "; F0=" + to_string(c.f0, kCartanNames),
                         "constraint holds", affvir::to_string(e.code())});
  }
  return r;
}

Report lemma_check(const Options& o, const Bindings& bindings) {
  ModuleSpec spec = build_spec(o, bindings);
  const int degree = o.degree < 0 ? 3 : o.degree;
  const long i_lo = o.i ? *o.i : -3, i_hi = o.i ? *o.i : 3;
  const int m_lo = o.m ? *o.m : 0, m_hi = o.m ? *o.m : 4;
  if (m_lo < 0) throw UsageError("--m must be nonnegative");
  CheckReport total;
  for (long i = i_lo; i <= i_hi; ++i)
    for (int m = m_lo; m <= m_hi; ++m) total.merge(lemma_identity_check(spec, i, m, degree));
  auto range = [](long lo, long hi) { return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi); };
  Report r{"lemma-check", Status::Pass, {}, {}};
  r.lines.push_back("lemma identities for " +
                    affvir::to_string(spec) + ", i=" + range(i_lo, i_hi) + ", m=" + range(m_lo, m_hi) + ", degree " +
                    std::to_string(degree) + ": " + count_text(total));
  add_failures(r, total);
  if (!total.passed()) r.status = Status::Fail;
  return r;
}

void add_spec_options(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "Omega, Delta or Theta");
  sub->add_option("--lambda", o.lambda, "lambda (default L)");
  sub->add_option("--alpha", o.alpha, "alpha (default A)");
  sub->add_option("--beta", o.beta, "beta (default B)");
  sub->add_option("--gamma", o.gamma, "gamma (default G)");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--set", o.sets, "bind a parameter, e.g. --set L=2");
  sub->add_option("--format", o.format, "text or json (default: $AFFVIR_FORMAT or text)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with the affine-Virasoro algebra of type A1 and its modules on C[s,t]", "affvir"};
  app.require_subcommand(1);

  auto* act_cmd = app.add_subcommand("act", "apply an algebra element to a polynomial");
  add_spec_options(act_cmd, o);
  act_cmd->add_option("--x", o.x, "algebra element, e.g. e[1]-1/L*f[-1]");
  act_cmd->add_option("--g", o.g, "polynomial in s, t");

  auto* verify_cmd = app.add_subcommand("verify-axioms", "check the module axiom, or the Lie axioms with --lie");
  add_spec_options(verify_cmd, o);
  verify_cmd->add_flag("--lie", o.lie, "check antisymmetry and Jacobi instead");
  verify_cmd->add_option("--convention", o.convention, "central term of [h_i,h_j]: invariant or printed");
  verify_cmd->add_option("--window", o.window, "max |index| of basis generators");
  verify_cmd->add_option("--degree", o.degree, "max exponent of s and t in test monomials");

  auto* simple_cmd = app.add_subcommand("simplicity", "decide simplicity");
  add_spec_options(simple_cmd, o);

  auto* sub_cmd = app.add_subcommand("submodule", "proper submodule and intertwiner of a non-simple Theta");
  add_spec_options(sub_cmd, o);
  sub_cmd->add_option("--window", o.window, "invariance window (default 3)");
  sub_cmd->add_option("--degree", o.degree, "test degree (default 3)");

  auto* gen_cmd = app.add_subcommand("generate-one", "find u in U(L) with u . w = 1");
  add_spec_options(gen_cmd, o);
  gen_cmd->add_option("--w", o.w, "nonzero polynomial in s, t");

  auto* iso_cmd = app.add_subcommand("iso", "decide isomorphism of two modules");
  iso_cmd->add_option("--a", o.a, "module, e.g. Omega(L,A,B,G)");
  iso_cmd->add_option("--b", o.b, "module");

  auto* cls_cmd = app.add_subcommand("classify", "classify candidate data E0 = e0.1, F0 = f0.1");
  cls_cmd->add_option("--candidate", o.candidate, "E0 = ...; F0 = ...; lambda = ...; gamma = ...");
  cls_cmd->add_option("--file", o.file, "file holding a candidate");

  auto* lemma_cmd = app.add_subcommand("lemma-check", "commutation identities of e_i, f_i with d0^m, h0^m");
  add_spec_options(lemma_cmd, o);
  lemma_cmd->add_option("--i", o.i, "index (default: all |i| <= 3)");
  lemma_cmd->add_option("--m", o.m, "power (default: all m <= 4)");
  lemma_cmd->add_option("--degree", o.degree, "test degree (default 3)");

  for (auto* sub : {act_cmd, verify_cmd, simple_cmd, sub_cmd, gen_cmd, iso_cmd, cls_cmd, lemma_cmd}) add_common(sub, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  std::string format = o.format;
  if (format.empty()) {
    const char* env = std::getenv("AFFVIR_FORMAT");
    format = env ? env : "text";
  }
  if (format != "text" && format != "json") {
    err << "error: format must be text or json, got '" << format << "'\n";
    return 2;
  }
  const bool json = format == "json";

  const std::string verb = app.get_subcommands().front()->get_name();
  Report report;
  try {
    const Bindings bindings = parse_bindings(o.sets);
    if (verb == "act") report = act(o, bindings);
    else if (verb == "verify-axioms") report = verify_axioms(o, bindings);
    else if (verb == "simplicity") report = simplicity(o, bindings);
    else if (verb == "submodule") report = submodule(o, bindings);
    else if (verb == "generate-one") report = generate(o, bindings);
    else if (verb == "iso") report = iso(o, bindings);
    else if (verb == "classify") report = classify(o, bindings);
    else report = lemma_check(o, bindings);
  } catch (const UsageError& e) {
    report = Report{verb, Status::Error, {std::string("error: ") + e.what()}, {{"usage", verb, "valid input", e.what()}}};
  } catch (const DivisionByZero& e) {
    report = Report{verb, Status::Error, {std::string("error: ") + e.what()}, {{"arithmetic", verb, "nonzero divisor", e.what()}}};
  }
  write_report(report, json, out, err);
  return exit_code(report.status);
}

}  // namespace affvir::cli
