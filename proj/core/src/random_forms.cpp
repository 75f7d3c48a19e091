#include "premetric/random_forms.hpp"

#include <algorithm>

#include "premetric/error.hpp"

namespace premetric {

namespace {

// All exponent vectors in n variables with total degree <= bound, in graded-lex order.
std::vector<Monomial> monomials_up_to(int n, int bound) {
  std::vector<Monomial> out;
  Monomial m{};
  auto recurse = [&](auto&& self, int var, int remaining) -> void {
    if (var == n) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      m[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e);
      self(self, var + 1, remaining - e);
    }
    m[static_cast<std::size_t>(var)] = 0;
  };
  recurse(recurse, 0, bound);
  std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    int da = total_degree(a);
    int db = total_degree(b);
    return da != db ? da < db : a > b;
  });
  return out;
}

}  // namespace

FormSampler::FormSampler(std::uint64_t seed, int degree_bound) : engine_(seed), degree_bound_(degree_bound) {
  if (degree_bound < 0 || degree_bound > 8) throw DomainError("degree bound must be in [0, 8]");
}

std::uint64_t FormSampler::below(std::uint64_t bound) { return engine_() % bound; }

Rational FormSampler::rational() {
  auto num = static_cast<long>(below(18));  // 0..17 -> -9..-1, 1..9
  num = num < 9 ? num - 9 : num - 8;
  auto den = static_cast<long>(below(9)) + 1;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Polynomial FormSampler::polynomial(const Chart& chart) {
  Polynomial p = chart.zero();
  for (const Monomial& m : monomials_up_to(chart.n, degree_bound_))
    if (coin()) p += Polynomial::monomial(chart.n, m, Scalar(rational()), chart.mode);
  return p;
}

Form FormSampler::form(const Chart& chart, int degree, Twist twist) {
  Form f(chart, degree, twist);
  for (BasisMask mask : basis_masks(chart.n, degree))
    if (coin()) f.add_component(mask, polynomial(chart));
  return f;
}

Form FormSampler::nonzero_form(const Chart& chart, int degree, Twist twist) {
  if (degree < 0 || degree > chart.n) throw DomainError("no nonzero forms of this degree");
  while (true) {
    Form f = form(chart, degree, twist);
    if (!f.is_zero()) return f;
  }
}

VectorField FormSampler::vector_field(const Chart& chart) {
  std::vector<Polynomial> comps;
  for (int k = 0; k < chart.n; ++k) comps.push_back(polynomial(chart));
  return {chart, std::move(comps)};
}

Form FormSampler::constant_form(const Chart& chart, int degree, Twist twist) {
  Form f(chart, degree, twist);
  for (BasisMask mask : basis_masks(chart.n, degree)) f.add_component(mask, chart.constant(Scalar(rational())));
  return f;
}

}  // namespace premetric
