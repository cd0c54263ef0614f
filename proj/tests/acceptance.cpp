// Acceptance suite: one pass/fail line per criterion, exit status 0 only if
// every criterion passes.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "affvir/classify.hpp"
#include "affvir/structure.hpp"
#include "support.hpp"

using namespace affvir;
using testkit::Rng;

namespace {

const Scalar L = Scalar::param(Param::Lambda);
const Scalar A = Scalar::param(Param::Alpha);
const Scalar B = Scalar::param(Param::Beta);
const Scalar G = Scalar::param(Param::Gamma);
constexpr Family kFamilies[] = {Family::Omega, Family::Delta, Family::Theta};

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string first_failure(const CheckReport& r) {
  if (r.passed()) return "";
  const CheckFailure* f = r.first_failure();
  return f->check + " [" + f->inputs + "]: expected " + f->expected + ", got " + f->got;
}

std::string fixed(double x) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << x;
  return out.str();
}

Verdict lie_axioms() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  CheckReport anti = check_antisymmetry(3);
  CheckReport jac = check_jacobi(3);
  double secs = seconds_since(t0);
  // 4 kinds x 7 indices + C.
  const std::size_t n = 29;
  v.require(anti.passed(), first_failure(anti));
  v.require(jac.passed(), first_failure(jac));
  v.require(anti.checked == n * n, "antisymmetry count " + std::to_string(anti.checked));
  v.require(jac.checked == n * n * n, "jacobi count " + std::to_string(jac.checked));
  v.require(secs < 10, "took " + fixed(secs) + " s");
  if (v.ok) v.detail = std::to_string(anti.checked + jac.checked) + " checks in " + fixed(secs) + " s";
  return v;
}

Verdict module_axiom() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0;
  for (Family fam : kFamilies) {
    CheckReport r = check_module_axiom(ModuleSpec::symbolic(fam), 3, 3);
    v.require(r.passed(), to_string(fam) + ": " + first_failure(r));
    v.require(r.checked == 29u * 29u * 16u, to_string(fam) + " count " + std::to_string(r.checked));
    total += r.checked;
  }
  double secs = seconds_since(t0);
  v.require(secs < 120, "took " + fixed(secs) + " s");
  if (v.ok) v.detail = std::to_string(total) + " checks in " + fixed(secs) + " s";
  return v;
}

Verdict simplicity_boundary() {
  Verdict v;
  auto theta = [](const Scalar& beta) { return ModuleSpec::make(Family::Theta, L, A, beta, G); };
  for (long twice = 0; twice <= 4; ++twice) {
    const Rat beta = make_rat(twice, 2);
    const std::string tag = "beta=" + to_string(Scalar(beta)) + ": ";
    ModuleSpec spec = theta(Scalar(beta));
    auto shape = proper_submodule(spec);
    v.require(shape.has_value() && !is_simple(spec), tag + "no submodule");
    if (!shape) continue;
    // Oracle: the generator has degree 2beta+1, vanishes at t = 2(n - beta)
    // for n = 0..2beta and has leading coefficient 2^-(2beta+1).
    v.require(shape->g.degree() == twice + 1, tag + "degree " + std::to_string(shape->g.degree()));
    for (long n = 0; n <= twice; ++n)
      v.require(shape->g.evaluate(Scalar(2 * (Rat(n) - beta))).is_zero(), tag + "root " + std::to_string(n));
    Rat lead = 1;
    for (long k = 0; k <= twice; ++k) lead /= 2;
    v.require(shape->g.leading() == Scalar(lead), tag + "leading coefficient");
    CheckReport inv = check_invariance(spec, *shape, 3, 3);
    v.require(inv.passed() && inv.checked > 0, tag + "invariance " + first_failure(inv));
    v.require(!in_shape(*shape, SPoly(1)), tag + "1 in V");
    CheckReport tau = tau_check(L, A, Scalar(beta), G, 3, 2);
    v.require(tau.passed() && tau.checked > 0, tag + "tau " + first_failure(tau));
  }
  for (const Scalar& beta : {Scalar(make_rat(1, 3)), Scalar(-1), B}) {
    ModuleSpec spec = theta(beta);
    v.require(!proper_submodule(spec).has_value() && is_simple(spec),
              "beta=" + to_string(beta) + ": unexpected submodule");
  }
  if (v.ok) v.detail = "beta in {0,1/2,1,3/2,2} non-simple and verified; beta in {1/3,-1,B} simple";
  return v;
}

Verdict constructive_simplicity() {
  Verdict v;
  Rng rng(2024);
  std::vector<ModuleSpec> specs = {ModuleSpec::symbolic(Family::Omega), ModuleSpec::symbolic(Family::Delta),
                                   ModuleSpec::make(Family::Theta, L, A, Scalar(make_rat(1, 3)), G)};
  std::size_t witnesses = 0;
  for (const auto& spec : specs) {
    int done = 0;
    while (done < 100) {
      // Random support: up to 6 monomials of total degree <= 4.
      SPoly w = testkit::random_spoly(rng, 4, static_cast<int>(testkit::uniform(rng, 1, 6)));
      if (w.is_zero()) continue;
      ++done;
      try {
        GenWitness g = generate_one(spec, w);
        v.require(act_word(spec, g.u(), w) == SPoly(1), to_string(spec) + " witness fails on " + to_string(w));
        ++witnesses;
      } catch (const std::exception& e) {
        v.require(false, to_string(spec) + " on " + to_string(w) + ": " + e.what());
      }
    }
  }
  if (v.ok) v.detail = std::to_string(witnesses) + " witnesses validated";
  return v;
}

Verdict isomorphism() {
  Verdict v;
  const Scalar reflected = -B - Scalar(1);
  std::size_t compared = 0;
  for (Family fam : kFamilies) {
    ModuleSpec a = ModuleSpec::symbolic(fam);
    ModuleSpec b = ModuleSpec::make(fam, L, A, reflected, G);
    IsoResult r = iso_check(a, b);
    if (fam == Family::Theta) {
      v.require(!r.isomorphic, "Theta beta vs -beta-1 reported isomorphic");
      continue;
    }
    v.require(r.isomorphic, to_string(fam) + " beta vs -beta-1 not isomorphic: " + r.reason);
    for (const Gen& x : basis_window(3)) {
      for (std::uint32_t j = 0; j <= 4; ++j) {
        for (std::uint32_t k = 0; j + k <= 4; ++k) {
          ++compared;
          v.require(act_gen(a, x, SPoly::monomial(j, k)) == act_gen(b, x, SPoly::monomial(j, k)),
                    to_string(fam) + " action differs on " + to_string(x));
        }
      }
    }
  }
  // Numeric Theta pair too, beta = 1 vs -2.
  v.require(!iso_check(ModuleSpec::make(Family::Theta, Scalar(2), Scalar(3), Scalar(1), Scalar(0)),
                       ModuleSpec::make(Family::Theta, Scalar(2), Scalar(3), Scalar(-2), Scalar(0)))
                 .isomorphic,
            "Theta(2,3,1,0) ~ Theta(2,3,-2,0)");

  std::vector<ModuleSpec> grid;
  for (Family fam : kFamilies)
    for (long beta : {1L, -2L, 0L}) grid.push_back(ModuleSpec::make(fam, Scalar(2), Scalar(3), Scalar(beta), Scalar(0)));
  grid.push_back(ModuleSpec::make(Family::Omega, Scalar(2), Scalar(5), Scalar(1), Scalar(0)));
  grid.push_back(ModuleSpec::from_kappa(Family::Delta, Scalar(2), Scalar(3), Scalar(2), Scalar(0)));
  grid.push_back(ModuleSpec::make(Family::Theta, Scalar(2), Scalar(3), Scalar(1), Scalar(1)));
  std::vector<std::vector<bool>> iso(grid.size(), std::vector<bool>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid.size(); ++j) iso[i][j] = iso_check(grid[i], grid[j]).isomorphic;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    v.require(iso[i][i], "not reflexive at " + to_string(grid[i]));
    for (std::size_t j = 0; j < grid.size(); ++j) {
      v.require(iso[i][j] == iso[j][i], "not symmetric at " + to_string(grid[i]) + ", " + to_string(grid[j]));
      for (std::size_t k = 0; k < grid.size(); ++k)
        if (iso[i][j] && iso[j][k])
          v.require(iso[i][k], "not transitive at " + to_string(grid[i]) + ", " + to_string(grid[k]));
    }
  }
  if (v.ok)
    v.detail = std::to_string(compared) + " action comparisons; equivalence on " + std::to_string(grid.size()) +
               " specs";
  return v;
}

Verdict lemma_identities() {
  Verdict v;
  std::size_t total = 0;
  for (Family fam : kFamilies) {
    for (long i = -3; i <= 3; ++i) {
      for (int m = 0; m <= 4; ++m) {
        CheckReport r = lemma_identity_check(ModuleSpec::symbolic(fam), i, m, 3);
        v.require(r.passed(), to_string(fam) + ": " + first_failure(r));
        v.require(r.checked == 4u * 16u, "count " + std::to_string(r.checked));
        total += r.checked;
      }
    }
  }
  if (v.ok) v.detail = std::to_string(total) + " checks";
  return v;
}

Verdict classification() {
  Verdict v;
  Rng rng(7);
  std::size_t recovered = 0;
  for (Family fam : kFamilies) {
    for (int trial = 0; trial < 50; ++trial) {
      ModuleSpec spec = ModuleSpec::symbolic(fam).substitute(testkit::random_point(rng));
      EFCandidate c = roundtrip_extract(spec);
      c.base.lambda = spec.lambda();
      c.base.gamma = spec.gamma();
      const std::string tag = to_string(spec) + ": ";
      try {
        ClassResult r = classify_candidate(c);
        v.require(r.family == fam, tag + "family " + to_string(r.family));
        v.require(r.lambda == spec.lambda() && r.alpha == spec.alpha() && r.gamma == spec.gamma(),
                  tag + "parameters " + to_string(r.spec));
        const Scalar& beta = *spec.beta();
        bool has_beta = false, all_valid = !r.betas.empty();
        for (const auto& b : r.betas) {
          has_beta = has_beta || b == beta;
          all_valid = all_valid && (b == beta || (fam != Family::Theta && b == -beta - Scalar(1)));
        }
        v.require(has_beta && all_valid, tag + "beta not recovered");
        if (fam == Family::Theta) v.require(r.betas.size() == 1, tag + "Theta beta must be unique");
        CheckReport axiom = check_module_axiom(r.spec, 2, 2);
        v.require(axiom.passed(), tag + "revalidation " + first_failure(axiom));
        ++recovered;
      } catch (const std::exception& e) {
        v.require(false, tag + e.what());
      }
    }
  }

  int rejected = 0, members = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto fam = static_cast<Family>(testkit::uniform(rng, 0, 2));
    ModuleSpec spec = ModuleSpec::symbolic(fam).substitute(testkit::random_point(rng));
    EFCandidate c = roundtrip_extract(spec);
    c.base.lambda = spec.lambda();
    c.base.gamma = spec.gamma();
    auto a = static_cast<std::uint32_t>(testkit::uniform(rng, 0, 2));
    auto b = static_cast<std::uint32_t>(testkit::uniform(rng, 0, 3));
    c.f0 += SPoly::monomial(a, b, Scalar(testkit::random_rat(rng, true)));
    try {
      ClassResult r = classify_candidate(c);
      // Accepted: must be a genuine family member reproducing the data.
      EFCandidate back = roundtrip_extract(r.spec);
      bool genuine = back.e0 == c.e0 && back.f0 == c.f0 && check_module_axiom(r.spec, 2, 2).passed();
      v.require(genuine, "accepted perturbation is not a family member: " + to_string(c.f0, kCartanNames));
      ++members;
    } catch (const ClassifyError& e) {
      v.require(!e.constraint().empty(), std::string("rejection without a constraint: ") + e.what());
      ++rejected;
    }
  }
  v.require(rejected >= 95, "only " + std::to_string(rejected) + "/100 perturbations rejected");
  if (v.ok)
    v.detail = std::to_string(recovered) + " roundtrips; " + std::to_string(rejected) +
               "/100 perturbations rejected, " + std::to_string(members) + " verified members";
  return v;
}

struct Golden {
  std::string args;
  std::string file;
  int exit_code;
};

Verdict cli_goldens() {
  Verdict v;
  const std::vector<Golden> cases = {
      {"act --family=Omega --x='h[0]' --g='s*t'", "act_omega_h0.txt", 0},
      {"simplicity --family=Theta --beta=1/2", "simplicity_theta_half.txt", 1},
      {"verify-axioms --family=Delta --window=2 --degree=2", "verify_delta_w2d2.txt", 0},
  };
  for (const auto& g : cases) {
    std::ifstream in(std::string(AFFVIR_GOLDEN_DIR) + "/" + g.file, std::ios::binary);
    std::stringstream expected;
    expected << in.rdbuf();
    v.require(in.good() || in.eof(), "missing golden " + g.file);
    std::string cmd = "AFFVIR_FORMAT=text " + std::string(AFFVIR_CLI_PATH) + " " + g.args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
      v.require(false, "cannot run " + cmd);
      continue;
    }
    std::string got;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) got.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    v.require(got == expected.str(), g.file + ": output differs: " + got);
    v.require(code == g.exit_code, g.file + ": exit code " + std::to_string(code));
  }
  if (v.ok) v.detail = std::to_string(cases.size()) + " goldens byte-exact";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 Lie axioms, window 3", lie_axioms},
      {"2 module axiom, symbolic, window 3, degree 3", module_axiom},
      {"3 simplicity boundary", simplicity_boundary},
      {"4 generate_one witnesses", constructive_simplicity},
      {"5 isomorphism relations", isomorphism},
      {"6 lemma identities", lemma_identities},
      {"7 classification roundtrip and perturbation", classification},
      {"8 CLI goldens", cli_goldens},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (v.ok ? "PASS " : "FAIL ") << name << ": " << v.detail << std::endl;
    if (!v.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
