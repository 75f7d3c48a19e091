#include "premetric/form.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "premetric/error.hpp"
#include "premetric/linalg.hpp"

namespace premetric {

Chart::Chart(int dimension, int orient, ScalarMode scalar_mode)
    : n(dimension), orientation(orient), mode(scalar_mode) {
  if (n < 1 || n > kMaxDimension) throw StructuralError("chart dimension must be in [1, 8]");
  if (orientation != 1 && orientation != -1) throw StructuralError("chart orientation must be +1 or -1");
}

const char* to_string(Twist t) { return t == Twist::Twisted ? "twisted" : "untwisted"; }

BasisMask mask_of(std::span<const int> increasing_indices) {
  BasisMask m = 0;
  int prev = -1;
  for (int i : increasing_indices) {
    if (i <= prev || i >= kMaxDimension) throw StructuralError("basis indices must be strictly increasing");
    m |= BasisMask{1} << i;
    prev = i;
  }
  return m;
}

std::vector<int> indices_of(BasisMask mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1U)
    if ((mask & 1U) != 0) out.push_back(i);
  return out;
}

int popcount(BasisMask mask) { return std::popcount(mask); }

std::vector<BasisMask> basis_masks(int n, int degree) {
  std::vector<BasisMask> out;
  if (degree < 0 || degree > n) return out;
  for (BasisMask m = 0; m < (BasisMask{1} << n); ++m)
    if (popcount(m) == degree) out.push_back(m);
  std::sort(out.begin(), out.end(), [](BasisMask a, BasisMask b) { return indices_of(a) < indices_of(b); });
  return out;
}

namespace {

// Sign of dx_A ^ dx_B relative to dx_{A u B}: (-1)^{#(i in A, j in B, i > j)}.
int merge_sign(BasisMask a, BasisMask b) {
  int inversions = 0;
  for (int j : indices_of(b)) inversions += std::popcount(a >> (j + 1));
  return (inversions % 2 == 0) ? 1 : -1;
}

void check_chart(const Chart& c, const Polynomial& p) {
  if (p.dimension() != c.n || p.mode() != c.mode)
    throw StructuralError("coefficient polynomial does not match the chart");
}

Form scaled(const Form& a, const Polynomial& f, Twist twist) {
  check_chart(a.chart(), f);
  Form out(a.chart(), a.degree(), twist);
  if (f.is_zero()) return out;
  for (const auto& [mask, c] : a.components()) out.add_component(mask, c * f);
  return out;
}

}  // namespace

Form::Form(const Chart& chart, int degree, Twist twist) : chart_(chart), degree_(degree), twist_(twist) {
  if (degree < 0) throw StructuralError("negative form degree");
}

Form Form::basis(const Chart& chart, std::span<const int> indices, Twist twist) {
  Form out(chart, static_cast<int>(indices.size()), twist);
  BasisMask m = 0;
  int inversions = 0;
  for (int idx : indices) {
    if (idx < 0 || idx >= chart.n) throw DomainError("basis index out of range for chart");
    BasisMask bit = BasisMask{1} << idx;
    if ((m & bit) != 0) return out;
    inversions += std::popcount(m >> (idx + 1));
    m |= bit;
  }
  Polynomial c = chart.constant(Scalar(inversions % 2 == 0 ? 1 : -1));
  out.components_.emplace(m, std::move(c));
  return out;
}

Form Form::basis(const Chart& chart, std::initializer_list<int> indices, Twist twist) {
  return basis(chart, std::span<const int>(indices.begin(), indices.size()), twist);
}

Form Form::scalar(const Chart& chart, Polynomial f, Twist twist) {
  check_chart(chart, f);
  Form out(chart, 0, twist);
  if (!f.is_zero()) out.components_.emplace(0, std::move(f));
  return out;
}

Form Form::volume(const Chart& chart, Twist twist) {
  Form out(chart, chart.n, twist);
  out.components_.emplace((BasisMask{1} << chart.n) - 1, chart.constant(Scalar(chart.orientation)));
  return out;
}

Polynomial Form::component(BasisMask mask) const {
  auto it = components_.find(mask);
  return it == components_.end() ? chart_.zero() : it->second;
}

void Form::add_component(BasisMask mask, const Polynomial& c) {
  check_chart(chart_, c);
  if (popcount(mask) != degree_) throw StructuralError("component index set has the wrong degree");
  if (mask >> chart_.n != 0) throw DomainError("component index out of range for chart");
  if (c.is_zero()) return;
  auto [it, inserted] = components_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) components_.erase(it);
  }
}

Form Form::with_twist(Twist t) const {
  Form out = *this;
  out.twist_ = t;
  return out;
}

Form Form::complexified() const {
  Form out(chart_.complexified(), degree_, twist_);
  for (const auto& [mask, c] : components_) out.components_.emplace(mask, c.complexified());
  return out;
}

void Form::check_same_class(const Form& o, const char* op) const {
  if (!(chart_ == o.chart_)) throw StructuralError(std::string(op) + ": chart mismatch");
  if (degree_ != o.degree_) throw StructuralError(std::string(op) + ": degree mismatch");
  if (twist_ != o.twist_) throw StructuralError(std::string(op) + ": twist mismatch");
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& [mask, c] : out.components_) c = -c;
  return out;
}

Form& Form::operator+=(const Form& o) {
  check_same_class(o, "form addition");
  for (const auto& [mask, c] : o.components_) add_component(mask, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  check_same_class(o, "form subtraction");
  for (const auto& [mask, c] : o.components_) add_component(mask, -c);
  return *this;
}

std::string Form::to_string() const {
  if (components_.empty()) return "0";
  std::vector<std::pair<std::vector<int>, const Polynomial*>> order;
  for (const auto& [mask, c] : components_) order.emplace_back(indices_of(mask), &c);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::string out;
  bool first = true;
  for (const auto& [idx, c] : order) {
    std::string basis;
    for (int i : idx) basis += (basis.empty() ? "dx" : "^dx") + std::to_string(i);
    const auto& terms = c->terms();
    bool negative = false;
    std::string body;
    if (idx.empty()) {
      body = "(" + c->to_string() + ")";
    } else if (terms.size() == 1 && terms.begin()->second.is_real()) {
      // Single real monomial: sign goes to the joining operator.
      negative = sgn(terms.begin()->second.re()) < 0;
      Polynomial mag = negative ? -*c : *c;
      body = (mag == chart_.constant(Scalar(1))) ? basis : mag.to_string() + " * " + basis;
    } else {
      body = "(" + c->to_string() + ") * " + basis;
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
    first = false;
  }
  return out;
}

bool form_equal(const Form& a, const Form& b) {
  if (!(a.chart() == b.chart())) throw StructuralError("form comparison: chart mismatch");
  if (a.degree() != b.degree()) throw StructuralError("form comparison: degree mismatch");
  if (a.twist() != b.twist()) throw StructuralError("form comparison: twist mismatch");
  return a.components() == b.components();
}

std::ostream& operator<<(std::ostream& os, const Form& f) {
  return os << "[" << to_string(f.twist()) << " " << f.degree() << "-form] " << f.to_string();
}

Form form_add(const Form& a, const Form& b) { return a + b; }

Form form_scale(const Form& a, const Scalar& c) { return scaled(a, a.chart().constant(c), a.twist()); }

Form form_scale(const Form& a, const Polynomial& f) { return scaled(a, f, a.twist()); }

Form form_scale(const Form& a, const Pseudo<Scalar>& c) {
  return scaled(a, a.chart().constant(c.value), flipped(a.twist()));
}

Form form_scale(const Form& a, const Pseudo<Polynomial>& f) { return scaled(a, f.value, flipped(a.twist())); }

VectorField::VectorField(const Chart& chart, std::vector<Polynomial> components)
    : chart_(chart), components_(std::move(components)) {
  if (components_.size() != static_cast<std::size_t>(chart.n))
    throw StructuralError("vector field component count must equal the chart dimension");
  for (const auto& c : components_) check_chart(chart, c);
}

VectorField VectorField::zero(const Chart& chart) {
  return {chart, std::vector<Polynomial>(static_cast<std::size_t>(chart.n), chart.zero())};
}

VectorField VectorField::coordinate(const Chart& chart, int index) {
  if (index < 0 || index >= chart.n) throw DomainError("coordinate field index out of range");
  VectorField u = zero(chart);
  u.components_[static_cast<std::size_t>(index)] = chart.constant(Scalar(1));
  return u;
}

bool VectorField::has_constant_components() const {
  return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_constant(); });
}

std::string VectorField::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k != 0) out += ", ";
    out += components_[k].to_string();
  }
  return out + ")";
}

Form wedge(const Form& a, const Form& b) {
  if (!(a.chart() == b.chart())) throw StructuralError("wedge: chart mismatch");
  Form out(a.chart(), a.degree() + b.degree(), a.twist() ^ b.twist());
  if (out.degree() > a.chart().n) return out;
  for (const auto& [ma, ca] : a.components()) {
    for (const auto& [mb, cb] : b.components()) {
      if ((ma & mb) != 0) continue;
      Polynomial c = ca * cb;
      if (merge_sign(ma, mb) < 0) c = -c;
      out.add_component(ma | mb, c);
    }
  }
  return out;
}

Form ext_d(const Form& a) {
  const int n = a.chart().n;
  Form out(a.chart(), a.degree() + 1, a.twist());
  if (out.degree() > n) return out;
  for (const auto& [mask, c] : a.components()) {
    for (int k = 0; k < n; ++k) {
      BasisMask bit = BasisMask{1} << k;
      if ((mask & bit) != 0) continue;
      Polynomial dc = c.partial(k);
      if (dc.is_zero()) continue;
      // dx_k ^ dx_I: move dx_k past the indices of I below k.
      if (std::popcount(mask & (bit - 1)) % 2 != 0) dc = -dc;
      out.add_component(mask | bit, dc);
    }
  }
  return out;
}

Form contract(const VectorField& u, const Form& a) {
  if (!(u.chart() == a.chart())) throw StructuralError("contract: chart mismatch");
  if (a.degree() == 0) return Form(a.chart(), 0, a.twist());
  Form out(a.chart(), a.degree() - 1, a.twist());
  for (const auto& [mask, c] : a.components()) {
    int position = 0;
    for (int i : indices_of(mask)) {
      const Polynomial& ui = u[i];
      if (!ui.is_zero()) {
        Polynomial term = ui * c;
        if (position % 2 != 0) term = -term;
        out.add_component(mask & ~(BasisMask{1} << i), term);
      }
      ++position;
    }
  }
  return out;
}

Form lie(const VectorField& u, const Form& a) {
  if (!(u.chart() == a.chart())) throw StructuralError("lie: chart mismatch");
  if (a.degree() == 0) return contract(u, ext_d(a));
  return ext_d(contract(u, a)) + contract(u, ext_d(a));
}

Form pullback_linear(std::span<const Rational> matrix, const Form& a) {
  const Chart& chart = a.chart();
  const int n = chart.n;
  RationalMatrix l(n, std::vector<Rational>(matrix.begin(), matrix.end()));
  const int det_sign = sgn(l.determinant());
  if (det_sign == 0) throw DomainError("pullback along a singular matrix");

  Chart target = chart.reoriented(det_sign);
  Form out(target, a.degree(), a.twist());
  for (const auto& [mask, c] : a.components()) {
    Polynomial coeff = c.substitute_linear(matrix);
    if (a.twist() == Twist::Twisted && det_sign < 0) coeff = -coeff;
    // dx_I = sum_J det(L[I, J]) dy_J
    std::vector<int> rows = indices_of(mask);
    for (BasisMask target_mask : basis_masks(n, a.degree())) {
      Rational m = l.minor(rows, indices_of(target_mask));
      if (sgn(m) == 0) continue;
      out.add_component(target_mask, coeff * Scalar(m));
    }
  }
  return out;
}

}  // namespace premetric
