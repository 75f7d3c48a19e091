#include "premetric/linalg.hpp"

#include <utility>

#include "premetric/error.hpp"

namespace premetric {

namespace {

// Gaussian elimination with row pivoting on a copy; returns det.
Rational eliminate_det(std::vector<Rational> a, int n) {
  auto at = [&](int i, int j) -> Rational& {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  };
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && sgn(at(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(at(pivot, j), at(col, j));
      det = -det;
    }
    det *= at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (sgn(at(r, col)) == 0) continue;
      Rational f = at(r, col) / at(col, col);
      for (int j = col; j < n; ++j) at(r, j) -= f * at(col, j);
    }
  }
  return det;
}

}  // namespace

RationalMatrix::RationalMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n * n), Rational(0)) {}

RationalMatrix::RationalMatrix(int n, std::vector<Rational> entries) : n_(n), data_(std::move(entries)) {
  if (data_.size() != static_cast<std::size_t>(n * n)) throw StructuralError("matrix entry count is not n*n");
  for (auto& q : data_) q.canonicalize();
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> diag) {
  RationalMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.n_; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return m;
}

bool RationalMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Rational RationalMatrix::determinant() const { return eliminate_det(data_, n_); }

RationalMatrix RationalMatrix::inverse() const {
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = col;
    while (pivot < n_ && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n_) throw DomainError("singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    Rational p = a(col, col);
    for (int j = 0; j < n_; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col);
      for (int j = 0; j < n_; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational RationalMatrix::minor(std::span<const int> rows, std::span<const int> cols) const {
  if (rows.size() != cols.size()) throw StructuralError("minor needs equally many rows and columns");
  int k = static_cast<int>(rows.size());
  if (k == 0) return 1;
  std::vector<Rational> sub;
  sub.reserve(static_cast<std::size_t>(k * k));
  for (int r : rows)
    for (int c : cols) sub.push_back((*this)(r, c));
  return eliminate_det(std::move(sub), k);
}

Signature inertia(const RationalMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw DomainError("inertia of a non-symmetric matrix");
  RationalMatrix a = symmetric;
  int n = a.size();
  Signature sig;
  // Congruence transformations only: each step keeps a symmetric matrix and
  // peels off one (or two) pivots.
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (sgn(a(i, i)) != 0) {
        pivot = i;
        break;
      }
    if (pivot == -1) {
      // Zero diagonal: find a_kj != 0 and add row/col j to row/col k, which
      // makes a(k,k) = 2 a(k,j) + a(j,j) = 2 a(k,j) != 0.
      int j = -1;
      for (int c = k + 1; c < n; ++c)
        if (sgn(a(k, c)) != 0) {
          j = c;
          break;
        }
      if (j == -1) {
        bool found = false;
        for (int r = k + 1; r < n && !found; ++r)
          for (int c = r + 1; c < n && !found; ++c)
            if (sgn(a(r, c)) != 0) {
              for (int t = 0; t < n; ++t) std::swap(a(k, t), a(r, t));
              for (int t = 0; t < n; ++t) std::swap(a(t, k), a(t, r));
              j = c;
              found = true;
            }
        if (!found) throw DomainError("inertia of a singular matrix");
      }
      for (int t = 0; t < n; ++t) a(k, t) += a(j, t);
      for (int t = 0; t < n; ++t) a(t, k) += a(t, j);
      pivot = k;
    }
    if (pivot != k) {
      for (int t = 0; t < n; ++t) std::swap(a(k, t), a(pivot, t));
      for (int t = 0; t < n; ++t) std::swap(a(t, k), a(t, pivot));
    }
    const Rational d = a(k, k);
    if (sgn(d) > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
    // Schur complement: A' = A - a_k a_k^T / d on the trailing block.
    std::vector<Rational> row(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) row[static_cast<std::size_t>(c)] = a(k, c);
    for (int r = k + 1; r < n; ++r) {
      const Rational& ark = row[static_cast<std::size_t>(r)];
      if (sgn(ark) == 0) continue;
      for (int c = k + 1; c < n; ++c) a(r, c) -= ark * row[static_cast<std::size_t>(c)] / d;
    }
    for (int r = k + 1; r < n; ++r) {
      a(k, r) = 0;
      a(r, k) = 0;
    }
  }
  return sig;
}

bool exact_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return false;
  root = Rational(sqrt(num), sqrt(den));
  root.canonicalize();
  return true;
}

}  // namespace premetric
