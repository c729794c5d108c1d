#pragma once

#include <string>
#include <vector>

#include "pbt/ints.hpp"

namespace pbt {

// Polynomials in one indeterminate q with exact integer coefficients,
// trailing zeros trimmed.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Int> coeffs);
  static QPolynomial constant(Int c);
  static QPolynomial monomial(int k, Int c = 1);  // c*q^k
  static QPolynomial q_integer(int n);            // [n]_q = 1+q+...+q^{n-1}
  static QPolynomial q_factorial(int n);          // [n]!_q
  static QPolynomial q_binomial(int m, int k);    // Gaussian binomial

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  Int coeff(int k) const;
  const std::vector<Int>& coeffs() const { return c_; }
  Int at_one() const;  // sum of coefficients

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  // Exact division; throws std::domain_error if the remainder is nonzero.
  QPolynomial divide_exact(const QPolynomial& d) const;

  bool operator==(const QPolynomial& o) const = default;
  std::string str() const;

 private:
  std::vector<Int> c_;  // c_[k] = coefficient of q^k
  void trim();
};

}  // namespace pbt
