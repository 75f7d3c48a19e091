#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "premetric/polynomial.hpp"
#include "premetric/scalar.hpp"

namespace premetric {

/// A single coordinate chart x0..x(n-1) with an orientation sign and the
/// scalar mode shared by every object built over it.
struct Chart {
  int n = 4;
  int orientation = +1;
  ScalarMode mode = ScalarMode::Real;

  Chart() = default;
  Chart(int dimension, int orient = +1, ScalarMode scalar_mode = ScalarMode::Real);

  Chart complexified() const { return {n, orientation, ScalarMode::Complex}; }
  Chart reoriented(int sign) const { return {n, orientation * sign, mode}; }

  Polynomial zero() const { return Polynomial(n, mode); }
  Polynomial constant(Scalar c) const { return Polynomial::constant(n, std::move(c), mode); }
  Polynomial x(int index) const { return Polynomial::variable(n, index, mode); }

  friend bool operator==(const Chart&, const Chart&) = default;
};

enum class Twist : std::uint8_t { Untwisted, Twisted };

inline Twist operator^(Twist a, Twist b) {
  return a == b ? Twist::Untwisted : Twist::Twisted;
}
inline Twist flipped(Twist t) { return t ^ Twist::Twisted; }
const char* to_string(Twist t);

/// Strictly increasing index tuple, stored as a bit set (bit i <=> dx_i).
using BasisMask = std::uint32_t;

BasisMask mask_of(std::span<const int> increasing_indices);
std::vector<int> indices_of(BasisMask mask);
int popcount(BasisMask mask);
/// All masks of the given degree over n coordinates, in lexicographic order of index tuples.
std::vector<BasisMask> basis_masks(int n, int degree);

/// Degree-p form with polynomial coefficients and a twist flag.
/// Canonical: no zero coefficient is stored.
class Form {
 public:
  using Components = std::map<BasisMask, Polynomial>;

  Form(const Chart& chart, int degree, Twist twist = Twist::Untwisted);

  /// c * dx_{i1} ^ ... ^ dx_{ik}, indices in any order (sign of the sort is
  /// applied; a repeated index gives the zero form).
  static Form basis(const Chart& chart, std::span<const int> indices, Twist twist = Twist::Untwisted);
  static Form basis(const Chart& chart, std::initializer_list<int> indices,
                    Twist twist = Twist::Untwisted);
  static Form scalar(const Chart& chart, Polynomial f, Twist twist = Twist::Untwisted);
  /// Top-degree form orientation * dx0 ^ ... ^ dx(n-1).
  static Form volume(const Chart& chart, Twist twist = Twist::Untwisted);

  const Chart& chart() const noexcept { return chart_; }
  int degree() const noexcept { return degree_; }
  Twist twist() const noexcept { return twist_; }
  const Components& components() const noexcept { return components_; }
  bool is_zero() const noexcept { return components_.empty(); }

  Polynomial component(BasisMask mask) const;
  /// Adds c to the component of the given strictly increasing index set.
  void add_component(BasisMask mask, const Polynomial& c);

  Form with_twist(Twist t) const;
  Form complexified() const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }

  /// Printed in the form-expression grammar, e.g. "(x0^2 - 1/3) * dx1^dx2 + dx0^dx3".
  std::string to_string() const;

 private:
  void check_same_class(const Form& o, const char* op) const;

  Chart chart_;
  int degree_;
  Twist twist_;
  Components components_;
};

/// Structural equality. Throws StructuralError across chart, degree or twist classes.
bool form_equal(const Form& a, const Form& b);
inline bool operator==(const Form& a, const Form& b) { return form_equal(a, b); }
std::ostream& operator<<(std::ostream& os, const Form& f);

Form form_add(const Form& a, const Form& b);
Form form_scale(const Form& a, const Scalar& c);
Form form_scale(const Form& a, const Polynomial& f);
/// Pseudoscalar factors flip the twist.
Form form_scale(const Form& a, const Pseudo<Scalar>& c);
Form form_scale(const Form& a, const Pseudo<Polynomial>& f);

inline Form operator*(const Scalar& c, const Form& a) { return form_scale(a, c); }
inline Form operator*(const Polynomial& f, const Form& a) { return form_scale(a, f); }
inline Form operator*(const Pseudo<Scalar>& c, const Form& a) { return form_scale(a, c); }
inline Form operator*(const Pseudo<Polynomial>& f, const Form& a) { return form_scale(a, f); }

class VectorField {
 public:
  VectorField(const Chart& chart, std::vector<Polynomial> components);

  static VectorField zero(const Chart& chart);
  /// The coordinate field d/dx_index.
  static VectorField coordinate(const Chart& chart, int index);

  const Chart& chart() const noexcept { return chart_; }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  const Polynomial& operator[](int k) const { return components_.at(static_cast<std::size_t>(k)); }
  bool has_constant_components() const;

  std::string to_string() const;

 private:
  Chart chart_;
  std::vector<Polynomial> components_;
};

/// A ^ B. Beyond the top degree the result is the zero form of degree deg A + deg B.
Form wedge(const Form& a, const Form& b);
Form ext_d(const Form& a);
/// Interior product u _| A (zero form for 0-forms).
Form contract(const VectorField& u, const Form& a);
/// Lie derivative by Cartan's formula d(u _| A) + u _| dA.
Form lie(const VectorField& u, const Form& a);

/// Pullback along x = L y (L row-major, n x n, invertible). The result lives
/// on the chart with orientation multiplied by sign(det L); twisted forms
/// pick up an extra factor sign(det L).
Form pullback_linear(std::span<const Rational> matrix, const Form& a);

}  // namespace premetric
