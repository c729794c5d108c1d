#include "pbt/matrix.hpp"

#include <stdexcept>

#include "json.hpp"

namespace pbt {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.c_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
  return out;
}

namespace {
// Gauss-Jordan over exact rationals on [M | B]; returns det(M) and leaves
// M^{-1} B in B. Throws when singular.
Rat eliminate(std::vector<std::vector<Rat>>& a, int n, int wide) {
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("matrix is singular");
    if (piv != col) {
      std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(col)]);
      det = -det;
    }
    Rat p = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
    det *= p;
    for (int j = 0; j < wide; ++j) a[static_cast<size_t>(col)][static_cast<size_t>(j)] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Rat f = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < wide; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            f * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
    }
  }
  return det;
}
}  // namespace

Int IntMatrix::determinant() const {
  if (r_ != c_) throw std::invalid_argument("determinant: not square");
  if (r_ == 0) return 1;
  std::vector<std::vector<Rat>> a(static_cast<size_t>(r_), std::vector<Rat>(static_cast<size_t>(c_)));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(at(i, j));
  try {
    Rat d = eliminate(a, r_, c_);
    if (boost::multiprecision::denominator(d) != 1)
      throw std::logic_error("integer determinant came out fractional");
    return Int(boost::multiprecision::numerator(d));
  } catch (const std::domain_error&) {
    return 0;
  }
}

IntMatrix IntMatrix::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse: not square");
  int n = r_;
  std::vector<std::vector<Rat>> a(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(2 * n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(at(i, j));
    a[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
  }
  eliminate(a, n, 2 * n);
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& v = a[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
      if (boost::multiprecision::denominator(v) != 1)
        throw std::domain_error("matrix has no integer inverse");
      out.at(i, j) = Int(boost::multiprecision::numerator(v));
    }
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("apply: shape mismatch");
  std::vector<Int> out(static_cast<size_t>(r_), 0);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (v[static_cast<size_t>(j)] != 0) out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
  return out;
}

std::string render_matrix_text(const IntMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m.at(i, j) == 0 ? "." : m.at(i, j).str();
    }
    out += '\n';
  }
  return out;
}

std::string TransitionMatrix::render_text() const { return render_matrix_text(m); }

std::string TransitionMatrix::render_csv() const {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m.at(i, j).str();
    }
    out += '\n';
  }
  return out;
}

std::string TransitionMatrix::render_json() const {
  nlohmann::json j;
  j["from"] = from;
  j["to"] = to;
  j["degree"] = degree;
  j["index"] = nlohmann::json::array();
  for (const BinaryTree& t : index) j["index"].push_back(t.canonical_word().str());
  j["entries"] = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    j["entries"].push_back(row);
  }
  return j.dump(2) + "\n";
}

}  // namespace pbt
