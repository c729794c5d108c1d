#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pbt {

// A word over the totally ordered alphabet {1,2,3,...}. The empty word is the
// unit and is everywhere permitted.
//
// Serialization: a comma-free digit string when every letter fits in one
// digit (e.g. "52134"), comma-separated integers otherwise (e.g. "12,10,8").
// Both forms are accepted on input.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);
  static Word parse(const std::string& s);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int at(int i) const { return letters_[static_cast<size_t>(i)]; }  // 0-based
  const std::vector<int>& letters() const { return letters_; }
  std::string str() const;

  bool operator==(const Word& o) const = default;
  std::strong_ordering operator<=>(const Word& o) const;

 private:
  std::vector<int> letters_;
};

// A permutation of {1..n} in one-line notation.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> values);
  static Perm identity(int n);
  static Perm parse(const std::string& s);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  int at(int i) const { return values_[static_cast<size_t>(i)]; }  // 0-based
  int operator()(int i) const { return values_[static_cast<size_t>(i - 1)]; }  // 1-based
  const std::vector<int>& values() const { return values_; }
  Word word() const { return Word(values_); }
  std::string str() const;

  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm& o) const = default;
  std::strong_ordering operator<=>(const Perm& o) const;

 private:
  std::vector<int> values_;
};

// Standardization: the unique permutation with the same positional inversions
// as w; equal letters are numbered left to right.
Perm standardize(const Word& w);

// w[k]: add k to every letter.
Word shift_letters(const Word& w, int k);

// u * v[|u|].
Word shifted_concat(const Word& u, const Word& v);

// All interleavings of u and v, as a multiset (repeated letters give genuine
// multiplicities). |result| = C(|u|+|v|, |u|).
std::vector<Word> shuffle(const Word& u, const Word& v);

// shuffle(u, v[|u|]) on permutations; the results are distinct permutations
// of size |u|+|v|, returned sorted.
std::vector<Perm> shifted_shuffle(const Perm& u, const Perm& v);

// Positional inversions {(i,j) : i<j, w_i > w_j}, 0-based.
std::vector<std::pair<int, int>> inversions(const Word& w);

// Right weak order: p <= q iff the inverted value pairs of p are contained in
// those of q. Throws on size mismatch.
bool weak_order_leq(const Perm& p, const Perm& q);

// Values of p that are greater than everything to their right, in decreasing
// order; and their positions (1-based), also in decreasing order.
std::vector<int> saillance_values(const Perm& p);
std::vector<int> saillance_positions(const Perm& p);

// True iff no subsequence of p standardizes to the pattern.
bool avoids_pattern(const Perm& p, const Perm& pattern);

// Subword of the letters lying in [lo, hi], order preserved.
Word restrict_to_interval(const Word& w, int lo, int hi);

// p is connected iff it is not a shifted concatenation of two nonempty
// permutations; anticonnected iff its mirror image is connected. The empty
// permutation counts as neither.
bool is_connected(const Perm& p);
bool is_anticonnected(const Perm& p);

// Sum of the descent positions (1-based) of p.
int major_index(const Perm& p);

// All n! permutations of {1..n} in lexicographic order.
std::vector<Perm> all_permutations(int n);

}  // namespace pbt
