#pragma once

#include <array>
#include <string>
#include <vector>

#include "premetric/electrodynamics.hpp"
#include "premetric/form.hpp"
#include "premetric/hodge.hpp"

namespace premetric {

/// A field pair (F, G) on a 4-dimensional chart together with the impedance
/// pseudoscalar z that parametrises the reciprocity operator.
///
/// Reciprocity is only defined on pairs. There is deliberately no function
/// taking a single 2-form H to "its" reciprocal: the image of F is zG, which
/// depends on the partner G. Two pairs (F, G1) and (F, G2) with G1 != G2
/// share their first slot but have different images.
class FieldPairZ {
 public:
  FieldPairZ(Form F, Form G, Pseudo<Scalar> z);

  const Chart& chart() const noexcept { return F_.chart(); }
  const Form& F() const noexcept { return F_; }
  const Form& G() const noexcept { return G_; }
  const Pseudo<Scalar>& z() const noexcept { return z_; }

  FieldConfig config() const { return {F_, G_}; }

  friend bool operator==(const FieldPairZ& a, const FieldPairZ& b) {
    return a.z_ == b.z_ && a.F_ == b.F_ && a.G_ == b.G_;
  }

 private:
  Form F_;
  Form G_;
  Pseudo<Scalar> z_;
};

/// (F, G) -> (zG, -z^{-1} F). Squares to minus the identity.
FieldPairZ star_z(const FieldPairZ& p);

/// Components T[a][b] = F_a G_b over the six increasing index pairs of a
/// 4-chart (lexicographic order 01, 02, 03, 12, 13, 23).
class PairTensor {
 public:
  static constexpr std::size_t kRank = 6;
  using Row = std::array<Polynomial, kRank>;

  explicit PairTensor(const FieldPairZ& p);

  const Polynomial& operator()(std::size_t a, std::size_t b) const { return entries_.at(a).at(b); }
  bool is_zero() const;

  /// Action of the reciprocity operator on a pure tensor F (x) G -> -G (x) F,
  /// extended linearly: minus the transpose. No z appears.
  PairTensor reciprocal() const;

  friend bool operator==(const PairTensor&, const PairTensor&) = default;

 private:
  PairTensor() = default;
  std::vector<Row> entries_;
};

PairTensor pair_tensor(const FieldPairZ& p);

enum class Eigen : int { Plus = +1, Minus = -1 };

/// (F -+ i z G, G +- i z^{-1} F), an eigenvector of star_z with eigenvalue +-i.
/// Requires a complex-mode chart.
FieldPairZ self_reciprocal_pair(const FieldPairZ& p, Eigen sign);

/// Pullback of both slots along x = L y. z is a pseudoscalar and becomes
/// sign(det L) z, so star_z commutes with the pullback.
FieldPairZ pullback_pair(std::span<const Rational> matrix, const FieldPairZ& p);

struct FactorizationCheck {
  std::string id;
  Form residual;
  bool passed() const { return residual.is_zero(); }
};

struct FactorizationReport {
  std::vector<FactorizationCheck> checks;
  bool all_passed() const;
};

/// With G = Z0^{-1} *F and z = Z0, checks star_z(F, G) = (*F, *G) and that the
/// induced self-reciprocal pairs are Hodge self-dual: *F^{+-} = +-i F^{+-}.
/// Throws DomainError unless ** = -1 on 2-forms.
FactorizationReport check_factorization(const MetricSpec& m, const Pseudo<Scalar>& Z0, const Form& F);

}  // namespace premetric
