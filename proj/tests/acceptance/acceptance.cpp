// Acceptance suite: one PASS/FAIL line per criterion, all checks exact.
// Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "premetric/electrodynamics.hpp"
#include "premetric/form_expr.hpp"
#include "premetric/hodge.hpp"
#include "premetric/random_forms.hpp"
#include "premetric/reciprocity.hpp"
#include "premetric/verify/commands.hpp"
#include "premetric/verify/config.hpp"

namespace {

using namespace premetric;

constexpr Twist kT = Twist::Twisted;
const Chart k4(4);

// Tallies exact checks for one criterion and remembers the first failure.
struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
  void expect_zero(const Form& f, const std::string& what) {
    expect(f.is_zero(), what + ": " + (f.is_zero() ? std::string() : verify::witness_of(f)));
  }
};

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome finish(const Tally& t, const std::string& summary) {
  if (t.failures == 0) return {true, summary + ", " + std::to_string(t.checks) + " exact checks"};
  return {false, std::to_string(t.failures) + "/" + std::to_string(t.checks) + " failed, first: " + t.first_failure};
}

std::string at(int n, int p, int i) {
  return "n=" + std::to_string(n) + " p=" + std::to_string(p) + " #" + std::to_string(i);
}

// The same residual assembled from the independent component-formula oracles.
Form oracle_residual(const VectorField& u, const Form& F, const Form& G) {
  const int p = F.degree();
  const Rational half(1, 2);
  const Scalar sgn(p % 2 == 0 ? 1 : -1);
  const Form uF = oracle::contract(u, F);
  const Form uG = oracle::contract(u, G);
  const Form sigma = form_scale(oracle::wedge(F, uG) - form_scale(oracle::wedge(uF, G), sgn), Scalar(half));
  const Form force = oracle::wedge(oracle::ext_d(F), uG) + oracle::wedge(uF, oracle::ext_d(G));
  const Form phi = form_scale(oracle::wedge(F, oracle::lie(u, G)) - oracle::wedge(oracle::lie(u, F), G),
                              sgn * Scalar(half));
  return oracle::ext_d(sigma) - force - phi;
}

Outcome conservation() {
  const auto start = std::chrono::steady_clock::now();
  FormSampler rng(1001, 2);
  Tally t;
  int instances = 0;
  for (int n = 2; n <= 5; ++n) {
    const Chart c(n);
    for (int p = 1; p <= n - 1; ++p) {
      for (int i = 0; i < 24; ++i) {
        const Form F = rng.form(c, p);
        const Form G = rng.form(c, n - p, kT);
        const VectorField u = rng.vector_field(c);
        const FieldConfig fc(F, G);
        t.expect_zero(conservation_residual(u, fc), at(n, p, i));
        if (i < 4) t.expect_zero(oracle_residual(u, F, G), "oracle " + at(n, p, i));
        ++instances;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s exceeds 60 s");
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.1f s", secs);
  return finish(t, std::to_string(instances) + " instances, n in 2..5, all p" + buf);
}

Outcome identities() {
  FormSampler rng(1002, 2);
  Tally t;
  for (int n = 2; n <= 5; ++n) {
    const Chart c(n);
    for (int p = 1; p <= n - 1; ++p) {
      const int count = (n == 4 && p == 2) ? 100 : 50;
      for (int i = 0; i < count; ++i) {
        const FieldConfig fc(rng.form(c, p), rng.form(c, n - p, kT));
        for (const auto& check : identity_suite(rng.vector_field(c), fc).checks)
          t.expect_zero(check.residual, check.id + " " + at(n, p, i));
      }
    }
  }
  return finish(t, "100 instances at n=4 p=2, 50 at each other (n, p)");
}

Outcome sufficiency() {
  const MetricSpec m = MetricSpec::minkowski(k4);
  FormSampler rng(1003, 2);
  Tally t;
  for (long z0 : {1L, 2L, 377L}) {
    const Pseudo<Scalar> Z0 = pseudo(Scalar(z0));
    for (int i = 0; i < 50; ++i) {
      const Form F = rng.form(k4, 2);
      const Pseudo<Polynomial> alpha{k4.constant(Scalar(rng.rational()))};
      const Form G_ml = apply_constitutive(MaxwellLorentz{m, Z0}, F);
      const Form G_ax = apply_constitutive(Axion{m, Z0, alpha}, F);
      for (int k = 0; k < 4; ++k) {
        const VectorField u = VectorField::coordinate(k4, k);
        const std::string where = "Z0=" + std::to_string(z0) + " u=d" + std::to_string(k) + " #" + std::to_string(i);
        t.expect_zero(obstruction_phi_u(u, FieldConfig(F, G_ml)), "maxwell-lorentz " + where);
        t.expect_zero(obstruction_phi_u(u, FieldConfig(F, G_ax)), "axion " + where);
      }
    }
  }
  return finish(t, "Z0 in {1, 2, 377}, 50 F each, u = d0..d3, Maxwell-Lorentz and constant axion");
}

Outcome axion_witness() {
  const MetricSpec m = MetricSpec::minkowski(k4);
  const Form F = parse_form("dx0^dx2 + dx1^dx3", k4, 2);
  const Form G = apply_constitutive(Axion{m, pseudo(Scalar(1)), Pseudo<Polynomial>{k4.x(1)}}, F);
  const VectorField u = VectorField::coordinate(k4, 1);
  const FieldConfig fc(F, G);
  const Form phi = obstruction_phi_u(u, fc);
  Tally t;
  t.expect(!phi.is_zero(), "phi_u vanished for alpha = x1");
  t.expect(phi == -Form::volume(k4, kT), "phi_u = " + print_form(phi) + ", expected -dx0^dx1^dx2^dx3");
  t.expect_zero(conservation_residual(u, fc), "conservation residual");
  return finish(t, "phi_u = " + print_form(phi) + ", residual 0");
}

Outcome complex_structure() {
  std::vector<Rational> stretched{2, Rational(-1, 2), -1, -1};
  const MetricSpec lorentzian[] = {MetricSpec::minkowski(k4), MetricSpec::diagonal(k4, stretched)};
  const MetricSpec euclidean = MetricSpec::euclidean(k4);
  FormSampler rng(1005, 2);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const Form A = rng.form(k4, 2);
    const Form B = rng.form(k4, 2);
    const std::string where = " #" + std::to_string(i);
    for (const MetricSpec& m : lorentzian) {
      t.expect(hodge(m, hodge(m, A)) == -A, "Lorentzian ** != -1" + where);
      t.expect(wedge(A, hodge(m, B)) == wedge(B, hodge(m, A)), "Lorentzian pairing symmetry" + where);
    }
    t.expect(hodge(euclidean, hodge(euclidean, A)) == A, "Euclidean ** != +1" + where);
    t.expect(wedge(A, hodge(euclidean, B)) == wedge(B, hodge(euclidean, A)), "Euclidean pairing symmetry" + where);
  }
  t.expect(double_hodge_sign(lorentzian[0], 2) == -1 && double_hodge_sign(euclidean, 2) == 1, "double_hodge_sign");
  return finish(t, "50 random 2-forms per metric, Lorentzian -1, Euclidean +1, pairing symmetric");
}

Outcome reciprocity() {
  const MetricSpec m = MetricSpec::minkowski(k4);
  const Chart c4 = k4.complexified();
  FormSampler rng(1006, 2);
  Tally t;
  for (Scalar zs : {Scalar(1), Scalar(2), Scalar(-3), Scalar::fraction(1, 5)}) {
    const Pseudo<Scalar> z = pseudo(zs);
    for (int i = 0; i < 25; ++i) {
      const std::string where = " z=" + zs.to_string() + " #" + std::to_string(i);
      const FieldPairZ p(rng.form(k4, 2), rng.form(k4, 2, kT), z);
      const FieldPairZ img = star_z(p);
      const FieldPairZ twice = star_z(img);
      t.expect(twice.F() == -p.F() && twice.G() == -p.G(), "star_z squared" + where);

      const VectorField u = rng.vector_field(k4);
      const FieldConfig a = p.config();
      const FieldConfig b = img.config();
      t.expect_zero(sigma_u(u, b) - sigma_u(u, a), "sigma invariance" + where);
      t.expect_zero(force_u(u, b) - force_u(u, a), "force invariance" + where);
      t.expect_zero(obstruction_phi_u(u, b) - obstruction_phi_u(u, a), "phi invariance" + where);

      const Scalar k(rng.rational());
      const FieldPairZ rescaled(form_scale(p.F(), k), form_scale(p.G(), k.inverse()), z);
      t.expect(pair_tensor(rescaled) == pair_tensor(p), "pair tensor k-rescaling" + where);
      t.expect(pair_tensor(img) == pair_tensor(p).reciprocal(), "pair tensor reciprocal" + where);

      const FieldPairZ cp(rng.form(c4, 2), rng.form(c4, 2, kT), z);
      for (Eigen sign : {Eigen::Plus, Eigen::Minus}) {
        const Scalar s(static_cast<long>(sign));
        const FieldPairZ sr = self_reciprocal_pair(cp, sign);
        const FieldPairZ si = star_z(sr);
        t.expect(si.F() == form_scale(sr.F(), s * Scalar::i()) && si.G() == form_scale(sr.G(), s * Scalar::i()),
                 "eigenvalue" + where);
        t.expect(sr.F() == form_scale(sr.G(), Pseudo<Scalar>{-s * Scalar::i() * zs}), "eigen relation" + where);
      }

      for (const auto& c : check_factorization(m, z, rng.form(k4, 2)).checks)
        t.expect_zero(c.residual, "factorization " + c.id + where);
    }
  }
  return finish(t, "z in {1, 2, -3, 1/5}, 25 instances each of every relation");
}

Outcome split() {
  FormSampler rng(1007, 2);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const std::string where = " #" + std::to_string(i);
    const Form F = rng.form(k4, 2);
    const Form G = rng.form(k4, 2, kT);
    const Form J = rng.form(k4, 3, kT);
    const SplitFields s = split_3plus1(F, G, J);
    const SpacetimeFields back = recompose(s);
    t.expect(back.F == F && back.G == G && back.J == J, "roundtrip" + where);
    t.expect(s.E.twist() == Twist::Untwisted && s.B.twist() == Twist::Untwisted && s.H.twist() == kT &&
                 s.D.twist() == kT && s.j.twist() == kT && s.rho.twist() == kT,
             "twist flags" + where);
  }
  return finish(t, "50 random (F, G, J), six twist flags each");
}

Outcome general_vs_specialized() {
  FormSampler rng(1008, 2);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const std::string where = " #" + std::to_string(i);
    const FieldConfig fc(rng.form(k4, 2), rng.form(k4, 2, kT));
    const VectorField u = rng.vector_field(k4);
    t.expect_zero(sigma_u(u, fc) - spacetime4::sigma_u(u, fc), "sigma" + where);
    t.expect_zero(force_u(u, fc) - spacetime4::force_u(u, fc), "force" + where);
    t.expect_zero(obstruction_phi_u(u, fc) - spacetime4::obstruction_phi_u(u, fc), "phi" + where);
  }
  return finish(t, "50 random instances, sigma, force and phi");
}

// Reflection x1 -> -x1 spelled out by hand: coefficients see x1 -> -x1,
// every dx1 factor flips sign and twisted forms pick up sign(det) = -1.
Form reflected_by_hand(const Form& a, std::span<const Rational> reflect) {
  const Chart target = a.chart().reoriented(-1);
  Form out(target, a.degree(), a.twist());
  for (const auto& [mask, coeff] : a.components()) {
    long sign = (mask & 2U) != 0 ? -1 : 1;
    if (a.twist() == kT) sign = -sign;
    out.add_component(mask, coeff.substitute_linear(reflect) * Scalar(sign));
  }
  return out;
}

Outcome orientation() {
  const std::vector<Rational> reflect{1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
  FormSampler rng(1009, 2);
  Tally t;
  for (Scalar zs : {Scalar(1), Scalar(2), Scalar(-3), Scalar::fraction(1, 5)}) {
    for (int i = 0; i < 25; ++i) {
      const std::string where = " z=" + zs.to_string() + " #" + std::to_string(i);
      const FieldPairZ p(rng.form(k4, 2), rng.form(k4, 2, kT), pseudo(zs));
      const FieldPairZ pulled = pullback_pair(reflect, p);
      t.expect(pulled.z() == pseudo(-zs), "z -> -z" + where);
      t.expect(pulled.F() == reflected_by_hand(p.F(), reflect), "untwisted rule" + where);
      t.expect(pulled.G() == reflected_by_hand(p.G(), reflect), "twisted rule" + where);
      const FieldPairZ lhs = star_z(pulled);
      const FieldPairZ rhs = pullback_pair(reflect, star_z(p));
      t.expect(lhs.F() == rhs.F() && lhs.G() == rhs.G(), "reciprocity commutes with reflection" + where);
      t.expect(lhs.F().twist() == Twist::Untwisted && lhs.G().twist() == kT, "declared twist types" + where);
    }
  }
  return finish(t, "100 pairs under x1 -> -x1 with z -> -z");
}

Outcome cli() {
  Tally t;
  std::ifstream corpus(PREMETRIC_TEST_DATA_DIR "/roundtrip_corpus.tsv");
  std::string line;
  int cases = 0;
  while (std::getline(corpus, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string n, degree, mode, text;
    std::getline(fields, n, '\t');
    std::getline(fields, degree, '\t');
    std::getline(fields, mode, '\t');
    std::getline(fields, text);
    const Chart chart(std::stoi(n), 1, mode == "complex" ? ScalarMode::Complex : ScalarMode::Real);
    const Form f = parse_form(text, chart, std::stoi(degree));
    const std::string printed = print_form(f);
    const Form again = parse_form(printed, chart, std::stoi(degree));
    t.expect(again == f && print_form(again) == printed, "roundtrip: " + text);
    ++cases;
  }
  t.expect(cases == 30, "corpus has " + std::to_string(cases) + " cases, expected 30");

  for (const auto& [command, file] : std::vector<std::pair<std::string, std::string>>{
           {"check", "conservation"}, {"split", "split"}, {"constitutive", "maxwell-lorentz"},
           {"reciprocity", "reciprocity"}, {"constitutive", "custom-law-phi"}}) {
    const verify::RunConfig cfg = verify::load_config(PREMETRIC_CONFIG_DIR "/" + file + ".json");
    const verify::Report a = verify::run_command(command, cfg);
    const verify::Report b = verify::run_command(command, cfg);
    t.expect(a.to_text() == b.to_text() && a.to_structured() == b.to_structured(), "determinism: " + file);
  }

  const std::string script = std::string("sh '") + PREMETRIC_E2E_SCRIPT + "' '" + PREMETRIC_CLI + "' '" +
                             PREMETRIC_CONFIG_DIR + "' > /dev/null 2>&1";
  t.expect(std::system(script.c_str()) == 0, "end-to-end exit-status script failed");
  return finish(t, "30-case corpus, byte-identical reports, exit-status script");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"conservation identity", conservation},
      {"intermediate identities", identities},
      {"sufficiency under Maxwell-Lorentz and constant axion", sufficiency},
      {"non-constant axion witness", axion_witness},
      {"Hodge complex structure", complex_structure},
      {"reciprocity", reciprocity},
      {"3+1 split", split},
      {"general vs specialized formulas", general_vs_specialized},
      {"twist and orientation law", orientation},
      {"command-line contract", cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::printf("%s  %2zu  %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
