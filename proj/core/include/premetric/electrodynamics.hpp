#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "premetric/form.hpp"
#include "premetric/hodge.hpp"

namespace premetric {

/// Field strength F (untwisted p-form) and excitation G (twisted (n-p)-form).
class FieldConfig {
 public:
  FieldConfig(Form F, Form G);

  const Chart& chart() const noexcept { return F_.chart(); }
  int p() const noexcept { return F_.degree(); }
  const Form& F() const noexcept { return F_; }
  const Form& G() const noexcept { return G_; }

 private:
  Form F_;
  Form G_;
};

/// Kinematical energy-momentum (n-1)-form: 1/2 (F ^ uG - (-1)^p uF ^ G).
Form sigma_u(const VectorField& u, const FieldConfig& cfg);
/// Extended Lorentz force n-form: dF ^ uG + uF ^ dG.
Form force_u(const VectorField& u, const FieldConfig& cfg);
/// Obstruction n-form: (-1)^p / 2 (F ^ L_u G - L_u F ^ G).
Form obstruction_phi_u(const VectorField& u, const FieldConfig& cfg);

/// dSigma_u - f_u - phi_u. Identically zero for every input; computed, not assumed.
Form conservation_residual(const VectorField& u, const FieldConfig& cfg);

/// The n = 4, p = 2 expressions written with F and G on equal footing.
namespace spacetime4 {
Form sigma_u(const VectorField& u, const FieldConfig& cfg);  ///< 1/2 (F ^ uG - G ^ uF)
Form force_u(const VectorField& u, const FieldConfig& cfg);  ///< uF ^ dG - uG ^ dF
Form obstruction_phi_u(const VectorField& u, const FieldConfig& cfg);  ///< 1/2 (F ^ L_u G - G ^ L_u F)
}  // namespace spacetime4

struct IdentityCheck {
  std::string id;
  std::string equation;  ///< stable tag such as "sym", "a", "b"
  Form residual;         ///< lhs - rhs; the check passes iff this is zero
  bool passed() const { return residual.is_zero(); }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

/// Intermediate steps of the conservation derivation:
///   sym-FdG:  uF ^ dG + (-1)^p F ^ u(dG)                 = 0
///   sym-dFG:  u(dF) ^ G - (-1)^p dF ^ uG                 = 0
///   a:        d(F ^ uG) - (-1)^p F ^ L_u G - f_u          = 0
///   b:        (-1)^p d(uF ^ G) - (-1)^p L_u F ^ G + f_u   = 0
///   sum:      d(uF ^ G + (-1)^p F ^ uG) - (L_u F ^ G + F ^ L_u G) = 0
///   sum-trivial: L_u(F ^ G) - d(u(F ^ G))                = 0
IdentityReport identity_suite(const VectorField& u, const FieldConfig& cfg);

struct Currents {
  Form J;  ///< electric current dG, twisted
  Form K;  ///< magnetic current dF, untwisted
};
Currents currents(const FieldConfig& cfg);

/// Spatial pieces relative to the time coordinate x0. "Spatial" means no
/// dx0 factor; coefficients may still depend on x0.
struct SplitFields {
  Form E;    ///< untwisted 1-form
  Form B;    ///< untwisted 2-form
  Form H;    ///< twisted 1-form
  Form D;    ///< twisted 2-form
  Form j;    ///< twisted 2-form
  Form rho;  ///< twisted 3-form
};

struct SpacetimeFields {
  Form F;
  Form G;
  Form J;
};

/// F = B + E ^ dx0, G = D - H ^ dx0, J = rho - j ^ dx0 (n = 4, p = 2).
SplitFields split_3plus1(const Form& F, const Form& G, const Form& J);
SpacetimeFields recompose(const SplitFields& s);

/// G = Z0^{-1} *F
struct MaxwellLorentz {
  MetricSpec metric;
  Pseudo<Scalar> Z0;
};

/// G = Z^{-1} *F + alpha F
struct Axion {
  MetricSpec metric;
  Pseudo<Scalar> Z;
  Pseudo<Polynomial> alpha;
};

/// G_J = sum_I chi[J][I] F_I over increasing index sets (lexicographic order).
struct LinearLocal {
  int p = 2;
  std::vector<std::vector<Polynomial>> chi;

  /// Component matrix of an arbitrary law, read off from its action on basis forms.
  static LinearLocal extract(const Chart& chart, int p, const std::function<Form(const Form&)>& law);
};

/// Opaque F -> G map. The result must be a twisted (n-p)-form.
struct Custom {
  std::string name;
  std::function<Form(const Form&)> map;
};

using ConstitutiveLaw = std::variant<MaxwellLorentz, Axion, LinearLocal, Custom>;

Form apply_constitutive(const ConstitutiveLaw& law, const Form& F);

}  // namespace premetric
