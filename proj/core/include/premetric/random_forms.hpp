#pragma once

#include <cstdint>
#include <random>

#include "premetric/form.hpp"

namespace premetric {

/// Deterministic generator of random polynomials, forms and vector fields.
///
/// Draws come from std::mt19937_64 (whose output sequence is fixed by the
/// standard) reduced by modulo, so a seed reproduces the same objects on every
/// platform. Polynomials: each monomial of total degree <= degree_bound
/// (graded-lex order) is included with probability 1/2 and gets the
/// coefficient num/den with num uniform in [-9, 9] \ {0}, den uniform in
/// [1, 9]. Forms: each increasing index set is included with probability 1/2.
class FormSampler {
 public:
  FormSampler(std::uint64_t seed, int degree_bound);

  int degree_bound() const noexcept { return degree_bound_; }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return below(2) == 1; }
  /// Nonzero coefficient num/den as described above.
  Rational rational();

  Polynomial polynomial(const Chart& chart);
  Form form(const Chart& chart, int degree, Twist twist = Twist::Untwisted);
  /// Redraws until the form is nonzero (degree must be <= n).
  Form nonzero_form(const Chart& chart, int degree, Twist twist = Twist::Untwisted);
  VectorField vector_field(const Chart& chart);
  /// Every component present, each a nonzero rational constant.
  Form constant_form(const Chart& chart, int degree, Twist twist = Twist::Untwisted);

 private:
  std::mt19937_64 engine_;
  int degree_bound_;
};

}  // namespace premetric
