#include "pbt/qpoly.hpp"

#include <stdexcept>

namespace pbt {

QPolynomial::QPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::constant(Int c) { return QPolynomial({std::move(c)}); }

QPolynomial QPolynomial::monomial(int k, Int c) {
  std::vector<Int> v(static_cast<size_t>(k) + 1, 0);
  v.back() = std::move(c);
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::q_integer(int n) {
  return QPolynomial(std::vector<Int>(static_cast<size_t>(n), 1));
}

QPolynomial QPolynomial::q_factorial(int n) {
  QPolynomial r = constant(1);
  for (int i = 1; i <= n; ++i) r = r * q_integer(i);
  return r;
}

QPolynomial QPolynomial::q_binomial(int m, int k) {
  if (k < 0 || k > m) return QPolynomial();
  // Pascal recurrence qbin(m,k) = qbin(m-1,k-1) + q^k qbin(m-1,k); stays
  // subtraction-free, so no division is needed.
  std::vector<QPolynomial> row(static_cast<size_t>(m) + 1);
  row[0] = constant(1);
  for (int i = 1; i <= m; ++i)
    for (int j = std::min(i, k); j >= 1; --j)
      row[static_cast<size_t>(j)] =
          row[static_cast<size_t>(j - 1)] + monomial(j) * row[static_cast<size_t>(j)];
  return row[static_cast<size_t>(k)];
}

Int QPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(k)];
}

Int QPolynomial::at_one() const {
  Int s = 0;
  for (const Int& x : c_) s += x;
  return s;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return QPolynomial();
  std::vector<Int> v(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Int> rem = c_;
  const Int lead = d.c_.back();
  int dd = d.degree();
  std::vector<Int> quo(rem.size() > d.c_.size() - 1 ? rem.size() - d.c_.size() + 1 : 1, 0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    Int r = rem[static_cast<size_t>(k)];
    if (r == 0) continue;
    if (r % lead != 0) throw std::domain_error("polynomial division is not exact");
    Int f = r / lead;
    quo[static_cast<size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k - dd + j)] -= f * d.c_[static_cast<size_t>(j)];
  }
  for (const Int& r : rem)
    if (r != 0) throw std::domain_error("polynomial division is not exact");
  return QPolynomial(std::move(quo));
}

std::string QPolynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const Int& c = c_[static_cast<size_t>(k)];
    if (c == 0) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += a.str();
    } else {
      if (a != 1) out += a.str();
      out += (k == 1) ? "q" : "q^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace pbt
