#pragma once

#include <string>
#include <vector>

#include "pbt/ints.hpp"
#include "pbt/trees.hpp"

namespace pbt {

// Dense exact integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : r_(rows), c_(cols), m_(static_cast<size_t>(rows) * cols, 0) {}
  static IntMatrix identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Int& at(int i, int j) { return m_[static_cast<size_t>(i) * c_ + j]; }
  const Int& at(int i, int j) const { return m_[static_cast<size_t>(i) * c_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  Int determinant() const;
  // Exact inverse (via rational elimination); throws if the matrix is not
  // invertible over the integers.
  IntMatrix inverse() const;

  std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column

  bool operator==(const IntMatrix& o) const = default;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Int> m_;
};

// A change-of-basis table: column j expresses element j of the from-basis in
// the to-basis, rows and columns indexed by the given tree order.
struct TransitionMatrix {
  std::string from, to;
  int degree = 0;
  std::vector<BinaryTree> index;
  IntMatrix m;

  // Plain text, one row per line, entries space-separated, zeros as dots.
  std::string render_text() const;
  // Entries only, comma-separated, zeros as 0.
  std::string render_csv() const;
  // JSON with basis tags, degree and the ordered canonical-word index.
  std::string render_json() const;
};

std::string render_matrix_text(const IntMatrix& m);

}  // namespace pbt
