#include "premetric/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "premetric/error.hpp"

namespace premetric {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension)
    throw StructuralError("polynomial dimension must be in [1, " + std::to_string(kMaxDimension) + "]");
}

void check_mode(const Scalar& c, ScalarMode mode) {
  if (mode == ScalarMode::Real && !c.is_real())
    throw StructuralError("imaginary coefficient in a real-mode polynomial");
}

// Descending graded-lex: higher total degree first, then lexicographically larger exponents.
bool print_before(const Monomial& a, const Monomial& b) {
  int da = total_degree(a);
  int db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

Polynomial::Polynomial(int dimension, ScalarMode mode) : n_(dimension), mode_(mode) {
  check_dimension(dimension);
}

Polynomial Polynomial::constant(int dimension, Scalar c, ScalarMode mode) {
  return monomial(dimension, Monomial{}, std::move(c), mode);
}

Polynomial Polynomial::variable(int dimension, int index, ScalarMode mode) {
  if (index < 0 || index >= dimension) throw DomainError("variable index out of range");
  Monomial m{};
  m[static_cast<std::size_t>(index)] = 1;
  return monomial(dimension, m, Scalar(1), mode);
}

Polynomial Polynomial::monomial(int dimension, const Monomial& exps, Scalar c, ScalarMode mode) {
  Polynomial p(dimension, mode);
  for (std::size_t k = static_cast<std::size_t>(dimension); k < exps.size(); ++k)
    if (exps[k] != 0) throw StructuralError("monomial uses a variable beyond the dimension");
  check_mode(c, mode);
  if (!c.is_zero()) p.terms_.emplace(exps, std::move(c));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

Polynomial Polynomial::complexified() const {
  Polynomial p = *this;
  p.mode_ = ScalarMode::Complex;
  return p;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (n_ != o.n_) throw StructuralError("polynomial dimension mismatch");
  if (mode_ != o.mode_) throw StructuralError("polynomial scalar-mode mismatch");
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  check_mode(c, mode_);
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.n_, a.mode_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m{};
      for (std::size_t k = 0; k < m.size(); ++k) {
        unsigned e = unsigned{ma[k]} + unsigned{mb[k]};
        if (e > 255) throw DomainError("monomial exponent overflow");
        m[k] = static_cast<std::uint8_t>(e);
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(n_, Scalar(1), mode_);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::partial(int index) const {
  if (index < 0 || index >= n_) throw DomainError("partial derivative index out of range");
  auto k = static_cast<std::size_t>(index);
  Polynomial out(n_, mode_);
  for (const auto& [m, c] : terms_) {
    if (m[k] == 0) continue;
    Monomial d = m;
    d[k] = static_cast<std::uint8_t>(m[k] - 1);
    out.terms_.emplace(d, c * Scalar(static_cast<long>(m[k])));
  }
  return out;
}

Polynomial Polynomial::substitute_linear(std::span<const Rational> matrix) const {
  auto n = static_cast<std::size_t>(n_);
  if (matrix.size() != n * n) throw StructuralError("substitution matrix must be n x n");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial row(n_, mode_);
    for (std::size_t j = 0; j < n; ++j)
      row += variable(n_, static_cast<int>(j), mode_) * Scalar(matrix[i * n + j]);
    images.push_back(std::move(row));
  }
  Polynomial out(n_, mode_);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(n_, c, mode_);
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] != 0) term = term * images[i].pow(m[i]);
    out += term;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return print_before(a->first, b->first); });

  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    std::string vars;
    for (int k = 0; k < n_; ++k) {
      auto e = m[static_cast<std::size_t>(k)];
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(k);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    // A real coefficient's sign is pulled into the joining operator; a
    // complex one is parenthesized whole.
    bool negative = c.is_real() && sgn(c.re()) < 0;
    Scalar mag = negative ? -c : c;
    std::string coef;
    if (!mag.is_real()) {
      coef = "(" + mag.to_string() + ")";
    } else if (!(mag.is_one() && !vars.empty())) {
      coef = mag.to_string();
    }
    std::string body = coef.empty() ? vars : (vars.empty() ? coef : coef + "*" + vars);
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
    first = false;
  }
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial poly_partial(const Polynomial& p, int index) { return p.partial(index); }

}  // namespace premetric
