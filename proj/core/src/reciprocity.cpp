#include "premetric/reciprocity.hpp"

#include <algorithm>

#include "premetric/error.hpp"
#include "premetric/linalg.hpp"

namespace premetric {

FieldPairZ::FieldPairZ(Form F, Form G, Pseudo<Scalar> z) : F_(std::move(F)), G_(std::move(G)), z_(std::move(z)) {
  if (z_.value.is_zero()) throw DomainError("reciprocity needs z != 0");
  if (!(F_.chart() == G_.chart())) throw StructuralError("F and G live on different charts");
  if (F_.chart().n != 4) throw StructuralError("field pairs live on a 4-dimensional chart");
  if (F_.degree() != 2 || G_.degree() != 2) throw StructuralError("field pairs consist of 2-forms");
  if (F_.twist() != Twist::Untwisted) throw StructuralError("F must be untwisted");
  if (G_.twist() != Twist::Twisted) throw StructuralError("G must be twisted");
  if (F_.chart().mode == ScalarMode::Real && !z_.value.is_real())
    throw StructuralError("complex z on a real-mode chart");
}

FieldPairZ star_z(const FieldPairZ& p) {
  const Pseudo<Scalar>& z = p.z();
  return {form_scale(p.G(), z), form_scale(p.F(), -inverse(z)), z};
}

PairTensor::PairTensor(const FieldPairZ& p) {
  const Chart& chart = p.chart();
  const auto masks = basis_masks(4, 2);
  entries_.reserve(kRank);
  for (std::size_t a = 0; a < kRank; ++a) {
    Row row{chart.zero(), chart.zero(), chart.zero(), chart.zero(), chart.zero(), chart.zero()};
    const Polynomial Fa = p.F().component(masks[a]);
    if (!Fa.is_zero())
      for (std::size_t b = 0; b < kRank; ++b) row[b] = Fa * p.G().component(masks[b]);
    entries_.push_back(std::move(row));
  }
}

bool PairTensor::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Row& r) {
    return std::all_of(r.begin(), r.end(), [](const Polynomial& c) { return c.is_zero(); });
  });
}

PairTensor PairTensor::reciprocal() const {
  PairTensor out;
  out.entries_ = entries_;
  for (std::size_t a = 0; a < kRank; ++a)
    for (std::size_t b = 0; b < kRank; ++b) out.entries_[a][b] = -entries_[b][a];
  return out;
}

PairTensor pair_tensor(const FieldPairZ& p) { return PairTensor(p); }

FieldPairZ self_reciprocal_pair(const FieldPairZ& p, Eigen sign) {
  if (p.chart().mode != ScalarMode::Complex)
    throw StructuralError("self-reciprocal pairs need a complex-mode chart");
  const Scalar s(static_cast<long>(sign));
  const Scalar iz = Scalar::i() * p.z().value;
  const Scalar iz_inv = Scalar::i() * p.z().value.inverse();
  return {p.F() - form_scale(p.G(), Pseudo<Scalar>{s * iz}), p.G() + form_scale(p.F(), Pseudo<Scalar>{s * iz_inv}),
          p.z()};
}

FieldPairZ pullback_pair(std::span<const Rational> matrix, const FieldPairZ& p) {
  const int n = p.chart().n;
  const int det_sign = sgn(RationalMatrix(n, std::vector<Rational>(matrix.begin(), matrix.end())).determinant());
  Pseudo<Scalar> z = det_sign < 0 ? -p.z() : p.z();
  return {pullback_linear(matrix, p.F()), pullback_linear(matrix, p.G()), std::move(z)};
}

bool FactorizationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const FactorizationCheck& c) { return c.passed(); });
}

FactorizationReport check_factorization(const MetricSpec& m, const Pseudo<Scalar>& Z0, const Form& F) {
  if (m.chart().n != 4) throw DomainError("factorization is checked on 4-dimensional charts");
  if (double_hodge_sign(m, 2) != -1)
    throw DomainError("metric does not make the Hodge star a complex structure on 2-forms (** != -1)");
  if (Z0.value.is_zero()) throw DomainError("Z0 must be nonzero");

  const Form G = apply_constitutive(MaxwellLorentz{m, Z0}, F);
  const FieldPairZ pair(F, G, Z0);
  const FieldPairZ image = star_z(pair);

  FactorizationReport report;
  report.checks.push_back({"factor-F", image.F() - hodge(m, F)});
  report.checks.push_back({"factor-G", image.G() - hodge(m, G)});

  const Chart complex_chart = m.chart().complexified();
  const MetricSpec mc = m.on_chart(complex_chart);
  const FieldPairZ cpair(F.complexified(), G.complexified(), Z0);
  for (Eigen sign : {Eigen::Plus, Eigen::Minus}) {
    const FieldPairZ sr = self_reciprocal_pair(cpair, sign);
    const Scalar eig = Scalar(static_cast<long>(sign)) * Scalar::i();
    const std::string tag = sign == Eigen::Plus ? "+" : "-";
    report.checks.push_back({"selfdual-F" + tag, hodge(mc, sr.F()) - form_scale(sr.F(), eig)});
    report.checks.push_back({"selfdual-G" + tag, hodge(mc, sr.G()) - form_scale(sr.G(), eig)});
  }
  return report;
}

}  // namespace premetric
