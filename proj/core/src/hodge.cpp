#include "premetric/hodge.hpp"

#include "premetric/error.hpp"

namespace premetric {

namespace {

int permutation_sign(BasisMask first, BasisMask second) {
  int inversions = 0;
  for (int j : indices_of(second)) inversions += popcount(first >> (j + 1));
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

MetricSpec::MetricSpec(const Chart& chart, RationalMatrix g) : chart_(chart), g_(std::move(g)) {
  if (g_.size() != chart.n) throw StructuralError("metric size does not match chart dimension");
  if (!g_.is_symmetric()) throw DomainError("metric must be symmetric");
  det_ = g_.determinant();
  if (sgn(det_) == 0) throw DomainError("metric must be nondegenerate");
  g_inv_ = g_.inverse();
  if (!exact_sqrt(abs(det_), volume_scale_))
    throw DomainError("|det g| = " + Rational(abs(det_)).get_str() +
                      " is not the square of a rational; exact volume scale unavailable");
}

MetricSpec MetricSpec::diagonal(const Chart& chart, std::span<const Rational> entries) {
  return {chart, RationalMatrix::diagonal(entries)};
}

MetricSpec MetricSpec::minkowski(const Chart& chart) {
  RationalMatrix g = RationalMatrix::identity(chart.n);
  for (int i = 1; i < chart.n; ++i) g(i, i) = -1;
  return {chart, std::move(g)};
}

MetricSpec MetricSpec::euclidean(const Chart& chart) { return {chart, RationalMatrix::identity(chart.n)}; }

MetricSpec MetricSpec::on_chart(const Chart& chart) const {
  if (chart.n != chart_.n) throw StructuralError("metric cannot move to a chart of different dimension");
  MetricSpec out = *this;
  out.chart_ = chart;
  return out;
}

Form hodge(const MetricSpec& m, const Form& a) {
  const Chart& chart = a.chart();
  if (!(chart == m.chart())) throw StructuralError("hodge: metric and form live on different charts");
  const int n = chart.n;
  const int p = a.degree();
  if (p > n) throw StructuralError("hodge: degree exceeds chart dimension");

  Form out(chart, n - p, a.twist());
  const BasisMask all = (BasisMask{1} << n) - 1;
  const Rational scale = m.volume_scale() * chart.orientation;
  for (BasisMask upper : basis_masks(n, p)) {
    // A^I = sum_K det(g^{-1}[I, K]) A_K
    Polynomial raised = chart.zero();
    std::vector<int> rows = indices_of(upper);
    for (const auto& [mask, c] : a.components()) {
      Rational minor = m.inverse().minor(rows, indices_of(mask));
      if (sgn(minor) != 0) raised += c * Scalar(minor);
    }
    if (raised.is_zero()) continue;
    BasisMask complement = all & ~upper;
    Rational factor = scale * permutation_sign(upper, complement);
    out.add_component(complement, raised * Scalar(factor));
  }
  return out;
}

int double_hodge_sign(const MetricSpec& m, int p) {
  const int n = m.chart().n;
  if (p < 0 || p > n) throw DomainError("degree out of range");
  int s = ((p * (n - p)) % 2 == 0) ? 1 : -1;
  return sgn(m.determinant()) < 0 ? -s : s;
}

}  // namespace premetric
