#include "premetric/electrodynamics.hpp"

#include <algorithm>

#include "premetric/error.hpp"

namespace premetric {

namespace {

const Scalar& half() {
  static const Scalar h = Scalar::fraction(1, 2);
  return h;
}

int parity_sign(int p) { return p % 2 == 0 ? 1 : -1; }

Form signed_form(int sign, const Form& a) { return sign > 0 ? a : -a; }

void check_field_chart(const VectorField& u, const FieldConfig& cfg) {
  if (!(u.chart() == cfg.chart())) throw StructuralError("vector field and fields live on different charts");
}

void require_spacetime4(const FieldConfig& cfg) {
  if (cfg.chart().n != 4 || cfg.p() != 2) throw StructuralError("expression is specific to n = 4, p = 2");
}

}  // namespace

FieldConfig::FieldConfig(Form F, Form G) : F_(std::move(F)), G_(std::move(G)) {
  if (!(F_.chart() == G_.chart())) throw StructuralError("F and G live on different charts");
  if (F_.twist() != Twist::Untwisted) throw StructuralError("F must be untwisted");
  if (G_.twist() != Twist::Twisted) throw StructuralError("G must be twisted");
  if (F_.degree() + G_.degree() != F_.chart().n) throw StructuralError("deg F + deg G must equal n");
}

Form sigma_u(const VectorField& u, const FieldConfig& cfg) {
  check_field_chart(u, cfg);
  const int s = parity_sign(cfg.p());
  Form a = wedge(cfg.F(), contract(u, cfg.G()));
  Form b = wedge(contract(u, cfg.F()), cfg.G());
  return form_scale(a - signed_form(s, b), half());
}

Form force_u(const VectorField& u, const FieldConfig& cfg) {
  check_field_chart(u, cfg);
  return wedge(ext_d(cfg.F()), contract(u, cfg.G())) + wedge(contract(u, cfg.F()), ext_d(cfg.G()));
}

Form obstruction_phi_u(const VectorField& u, const FieldConfig& cfg) {
  check_field_chart(u, cfg);
  const int s = parity_sign(cfg.p());
  Form diff = wedge(cfg.F(), lie(u, cfg.G())) - wedge(lie(u, cfg.F()), cfg.G());
  return form_scale(signed_form(s, diff), half());
}

Form conservation_residual(const VectorField& u, const FieldConfig& cfg) {
  return ext_d(sigma_u(u, cfg)) - force_u(u, cfg) - obstruction_phi_u(u, cfg);
}

namespace spacetime4 {

Form sigma_u(const VectorField& u, const FieldConfig& cfg) {
  check_field_chart(u, cfg);
  require_spacetime4(cfg);
  Form diff = wedge(cfg.F(), contract(u, cfg.G())) - wedge(cfg.G(), contract(u, cfg.F()));
  return form_scale(diff, half());
}

Form force_u(const VectorField& u, const FieldConfig& cfg) {
  check_field_chart(u, cfg);
  require_spacetime4(cfg);
  return wedge(contract(u, cfg.F()), ext_d(cfg.G())) - wedge(contract(u, cfg.G()), ext_d(cfg.F()));
}

Form obstruction_phi_u(const VectorField& u, const FieldConfig& cfg) {
  check_field_chart(u, cfg);
  require_spacetime4(cfg);
  Form diff = wedge(cfg.F(), lie(u, cfg.G())) - wedge(cfg.G(), lie(u, cfg.F()));
  return form_scale(diff, half());
}

}  // namespace spacetime4

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed(); });
}

IdentityReport identity_suite(const VectorField& u, const FieldConfig& cfg) {
  check_field_chart(u, cfg);
  const int s = parity_sign(cfg.p());
  const Form& F = cfg.F();
  const Form& G = cfg.G();
  const Form dF = ext_d(F);
  const Form dG = ext_d(G);
  const Form uF = contract(u, F);
  const Form uG = contract(u, G);
  const Form LF = lie(u, F);
  const Form LG = lie(u, G);
  const Form f = force_u(u, cfg);

  IdentityReport report;
  report.checks.push_back(
      {"sym-FdG", "sym", wedge(uF, dG) + signed_form(s, wedge(F, contract(u, dG)))});
  report.checks.push_back(
      {"sym-dFG", "sym", wedge(contract(u, dF), G) - signed_form(s, wedge(dF, uG))});
  report.checks.push_back({"a", "a", ext_d(wedge(F, uG)) - signed_form(s, wedge(F, LG)) - f});
  report.checks.push_back(
      {"b", "b", signed_form(s, ext_d(wedge(uF, G))) - signed_form(s, wedge(LF, G)) + f});
  report.checks.push_back(
      {"sum", "a+b", ext_d(wedge(uF, G) + signed_form(s, wedge(F, uG))) - (wedge(LF, G) + wedge(F, LG))});
  const Form FG = wedge(F, G);
  report.checks.push_back({"sum-trivial", "a+b", lie(u, FG) - ext_d(contract(u, FG))});
  return report;
}

Currents currents(const FieldConfig& cfg) { return {ext_d(cfg.G()), ext_d(cfg.F())}; }

namespace {

void require_form(const Form& f, int n, int degree, Twist twist, const char* name) {
  if (f.chart().n != n || f.degree() != degree || f.twist() != twist)
    throw StructuralError(std::string(name) + " must be a " + to_string(twist) + " " + std::to_string(degree) +
                          "-form on a 4-dimensional chart");
}

void require_spatial(const Form& f, const char* name) {
  for (const auto& [mask, c] : f.components())
    if ((mask & 1U) != 0) throw StructuralError(std::string(name) + " must not contain dx0");
}

// Splits a form into (part without dx0, coefficients of dx0 ^ dx_I as a spatial form).
std::pair<Form, Form> peel_time(const Form& f) {
  Form spatial(f.chart(), f.degree(), f.twist());
  Form temporal(f.chart(), f.degree() - 1, f.twist());
  for (const auto& [mask, c] : f.components()) {
    if ((mask & 1U) != 0) {
      temporal.add_component(mask & ~BasisMask{1}, c);
    } else {
      spatial.add_component(mask, c);
    }
  }
  return {spatial, temporal};
}

}  // namespace

SplitFields split_3plus1(const Form& F, const Form& G, const Form& J) {
  require_form(F, 4, 2, Twist::Untwisted, "F");
  require_form(G, 4, 2, Twist::Twisted, "G");
  require_form(J, 4, 3, Twist::Twisted, "J");
  if (!(F.chart() == G.chart()) || !(F.chart() == J.chart()))
    throw StructuralError("F, G, J live on different charts");

  // X ^ dx0 = (-1)^deg X dx0 ^ X, so with F_t = coefficient form of dx0 ^ (.):
  //   F: E ^ dx0 = -dx0 ^ E        =>  E = -F_t
  //   G: -H ^ dx0 = dx0 ^ H        =>  H = G_t
  //   J: -j ^ dx0 = -dx0 ^ j       =>  j = -J_t
  auto [B, Ft] = peel_time(F);
  auto [D, Gt] = peel_time(G);
  auto [rho, Jt] = peel_time(J);
  return {-Ft, std::move(B), std::move(Gt), std::move(D), -Jt, std::move(rho)};
}

SpacetimeFields recompose(const SplitFields& s) {
  require_form(s.E, 4, 1, Twist::Untwisted, "E");
  require_form(s.B, 4, 2, Twist::Untwisted, "B");
  require_form(s.H, 4, 1, Twist::Twisted, "H");
  require_form(s.D, 4, 2, Twist::Twisted, "D");
  require_form(s.j, 4, 2, Twist::Twisted, "j");
  require_form(s.rho, 4, 3, Twist::Twisted, "rho");
  require_spatial(s.E, "E");
  require_spatial(s.B, "B");
  require_spatial(s.H, "H");
  require_spatial(s.D, "D");
  require_spatial(s.j, "j");
  require_spatial(s.rho, "rho");

  const Chart& chart = s.E.chart();
  const Form dsigma = Form::basis(chart, {0});
  return {s.B + wedge(s.E, dsigma), s.D - wedge(s.H, dsigma), s.rho - wedge(s.j, dsigma)};
}

LinearLocal LinearLocal::extract(const Chart& chart, int p, const std::function<Form(const Form&)>& law) {
  const auto in = basis_masks(chart.n, p);
  const auto out = basis_masks(chart.n, chart.n - p);
  LinearLocal result{p, std::vector<std::vector<Polynomial>>(out.size(), std::vector<Polynomial>(in.size(), chart.zero()))};
  for (std::size_t col = 0; col < in.size(); ++col) {
    Form image = law(Form::basis(chart, indices_of(in[col])));
    for (std::size_t row = 0; row < out.size(); ++row) result.chi[row][col] = image.component(out[row]);
  }
  return result;
}

namespace {

Form apply_law(const MaxwellLorentz& law, const Form& F) {
  if (law.Z0.value.is_zero()) throw DomainError("Maxwell-Lorentz law needs Z0 != 0");
  return form_scale(hodge(law.metric, F), inverse(law.Z0));
}

Form apply_law(const Axion& law, const Form& F) {
  if (law.Z.value.is_zero()) throw DomainError("axion law needs Z != 0");
  return form_scale(hodge(law.metric, F), inverse(law.Z)) + form_scale(F, law.alpha);
}

Form apply_law(const LinearLocal& law, const Form& F) {
  const Chart& chart = F.chart();
  if (F.degree() != law.p) throw StructuralError("linear law expects a form of degree " + std::to_string(law.p));
  const auto in = basis_masks(chart.n, law.p);
  const auto out = basis_masks(chart.n, chart.n - law.p);
  if (law.chi.size() != out.size()) throw StructuralError("linear law matrix has the wrong row count");
  Form G(chart, chart.n - law.p, Twist::Twisted);
  for (std::size_t row = 0; row < out.size(); ++row) {
    if (law.chi[row].size() != in.size()) throw StructuralError("linear law matrix has the wrong column count");
    for (std::size_t col = 0; col < in.size(); ++col) {
      const Polynomial& k = law.chi[row][col];
      if (k.is_zero()) continue;
      G.add_component(out[row], k * F.component(in[col]));
    }
  }
  return G;
}

Form apply_law(const Custom& law, const Form& F) {
  Form G = law.map(F);
  if (!(G.chart() == F.chart()) || G.twist() != Twist::Twisted || G.degree() != F.chart().n - F.degree())
    throw StructuralError("custom law '" + law.name + "' must return a twisted (n-p)-form on the same chart");
  return G;
}

}  // namespace

Form apply_constitutive(const ConstitutiveLaw& law, const Form& F) {
  if (F.twist() != Twist::Untwisted) throw StructuralError("constitutive laws act on untwisted F");
  return std::visit([&](const auto& l) { return apply_law(l, F); }, law);
}

}  // namespace premetric
