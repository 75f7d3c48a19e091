#pragma once

#include <span>
#include <vector>

#include "premetric/scalar.hpp"

namespace premetric {

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n);
  RationalMatrix(int n, std::vector<Rational> entries);

  static RationalMatrix identity(int n);
  static RationalMatrix diagonal(std::span<const Rational> diag);

  int size() const noexcept { return n_; }
  const Rational& operator()(int i, int j) const { return data_[index(i, j)]; }
  Rational& operator()(int i, int j) { return data_[index(i, j)]; }
  std::span<const Rational> data() const noexcept { return data_; }

  bool is_symmetric() const;
  Rational determinant() const;
  /// Throws DomainError if singular.
  RationalMatrix inverse() const;
  /// Determinant of the submatrix with the given rows and columns.
  Rational minor(std::span<const int> rows, std::span<const int> cols) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<Rational> data_;
};

/// Counts of positive and negative eigenvalues of a symmetric matrix.
struct Signature {
  int positive = 0;
  int negative = 0;
};

/// Exact inertia by symmetric elimination (Sylvester's law). Requires a
/// nonsingular symmetric matrix.
Signature inertia(const RationalMatrix& symmetric);

/// Exact square root of a nonnegative rational, if it is a perfect square.
bool exact_sqrt(const Rational& q, Rational& root);

}  // namespace premetric
