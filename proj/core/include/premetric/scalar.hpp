#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace premetric {

using Rational = mpq_class;

/// Exact Gaussian rational re + i*im. Real-mode values simply keep im == 0;
/// whether an imaginary part is admissible is decided by the owning context.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return {Rational(0), Rational(1)}; }
  static Scalar fraction(long num, long den);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return {re_, -im_}; }
  /// Throws DomainError on zero.
  Scalar inverse() const;

  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// "3/4", "-2", "i", "1/2 + 3*i", "-i".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// A scalar of odd type: flips sign under orientation reversal, and
/// multiplying a form by it flips the form's twist parity.
template <class T>
struct Pseudo {
  T value;

  Pseudo operator-() const { return {-value}; }
  friend bool operator==(const Pseudo& a, const Pseudo& b) { return a.value == b.value; }
};

template <class T>
Pseudo(T) -> Pseudo<T>;

inline Pseudo<Scalar> pseudo(Scalar s) { return {std::move(s)}; }

/// Inverse of a nonzero pseudoscalar is again a pseudoscalar.
inline Pseudo<Scalar> inverse(const Pseudo<Scalar>& z) { return {z.value.inverse()}; }

}  // namespace premetric
