#pragma once

#include "premetric/form.hpp"
#include "premetric/linalg.hpp"

namespace premetric {

/// Constant nondegenerate symmetric metric on a chart. |det g| must be the
/// square of a rational so the volume scale stays exact.
class MetricSpec {
 public:
  MetricSpec(const Chart& chart, RationalMatrix g);

  static MetricSpec diagonal(const Chart& chart, std::span<const Rational> entries);
  /// diag(1, -1, ..., -1)
  static MetricSpec minkowski(const Chart& chart);
  static MetricSpec euclidean(const Chart& chart);

  const Chart& chart() const noexcept { return chart_; }
  const RationalMatrix& metric() const noexcept { return g_; }
  const RationalMatrix& inverse() const noexcept { return g_inv_; }
  const Rational& determinant() const noexcept { return det_; }
  /// sqrt|det g|
  const Rational& volume_scale() const noexcept { return volume_scale_; }
  Signature signature() const { return inertia(g_); }

  /// Same metric on a different chart (e.g. complexified or reoriented).
  MetricSpec on_chart(const Chart& chart) const;

 private:
  Chart chart_;
  RationalMatrix g_;
  RationalMatrix g_inv_;
  Rational det_;
  Rational volume_scale_;
};

/// Hodge dual with the chart orientation fixing the Levi-Civita symbol:
///   (*A)_J = orientation * sqrt|det g| * sum_{I increasing} eps(I, J) A^I,
/// indices raised with g^{-1}. Then A ^ *B = <A, B> vol with
/// vol = orientation * sqrt|det g| dx0 ^ ... ^ dx(n-1).
/// The twist flag is kept: the orientation dependence of eps is what the
/// pseudoscalar factor in a constitutive law compensates.
Form hodge(const MetricSpec& m, const Form& a);

/// (-1)^{p(n-p)} sign(det g): ** on p-forms.
int double_hodge_sign(const MetricSpec& m, int p);

}  // namespace premetric
