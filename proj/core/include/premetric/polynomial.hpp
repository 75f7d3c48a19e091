#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "premetric/scalar.hpp"

namespace premetric {

inline constexpr int kMaxDimension = 8;

enum class ScalarMode : std::uint8_t { Real, Complex };

/// Exponent tuple of a monomial; entries past the polynomial's dimension stay 0.
using Monomial = std::array<std::uint8_t, kMaxDimension>;

int total_degree(const Monomial& m);

/// Sparse multivariate polynomial over exact (Gaussian) rationals in
/// variables x0..x(n-1). Canonical: no stored zero coefficient, so
/// structural equality is mathematical equality.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Polynomial(int dimension, ScalarMode mode = ScalarMode::Real);

  static Polynomial constant(int dimension, Scalar c, ScalarMode mode = ScalarMode::Real);
  static Polynomial variable(int dimension, int index, ScalarMode mode = ScalarMode::Real);
  static Polynomial monomial(int dimension, const Monomial& exps, Scalar c,
                             ScalarMode mode = ScalarMode::Real);

  int dimension() const noexcept { return n_; }
  ScalarMode mode() const noexcept { return mode_; }
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the given monomial (zero if absent).
  Scalar coefficient(const Monomial& m) const;
  /// -1 for the zero polynomial.
  int degree() const;

  /// Same terms, complex mode.
  Polynomial complexified() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.mode_ == b.mode_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned e) const;
  /// Exact d/dx_index.
  Polynomial partial(int index) const;
  /// p(L y): substitute x_i = sum_j L[i][j] y_j. L is n x n, row-major.
  Polynomial substitute_linear(std::span<const Rational> matrix) const;

  /// Terms in descending graded-lex order, e.g. "x0^2*x1 - 1/3".
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;
  void add_term(const Monomial& m, const Scalar& c);

  int n_;
  ScalarMode mode_;
  Terms terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_partial(const Polynomial& p, int index);

}  // namespace premetric
