#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbt/ints.hpp"
#include "pbt/qpoly.hpp"
#include "pbt/words.hpp"

namespace pbt {

// An unlabeled planar binary tree: either empty or a pair of subtrees on a
// node. Trees of size n biject with 132-avoiding permutations of {1..n}
// through the canonical word (right-to-left postfix reading of the standard
// binary search tree of that shape); all ordering, hashing and serialization
// go through that word, which is cached at construction.
class BinaryTree {
 public:
  BinaryTree() = default;  // the empty tree
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);
  static BinaryTree leaf() { return node({}, {}); }

  bool empty() const { return !n_; }
  int size() const;
  BinaryTree left() const;
  BinaryTree right() const;

  const std::vector<int>& canon() const;
  Perm canonical_word() const { return Perm(canon()); }

  // Shape of the binary search tree of w.
  static BinaryTree from_word(const Word& w);
  // Inverse of canonical_word(); throws if p is not 132-avoiding.
  static BinaryTree from_canonical(const Perm& p);

  // Secondary serialization "(L)(R)", empty string for the empty tree.
  std::string parens() const;
  // Accepts the parenthesized form as well as a (canonical) word.
  static BinaryTree parse(const std::string& s);

  bool operator==(const BinaryTree& o) const;
  std::strong_ordering operator<=>(const BinaryTree& o) const;

 private:
  struct Node;
  std::shared_ptr<const Node> n_;
};

struct BinaryTree::Node {
  BinaryTree left, right;
  int size;
  std::vector<int> canon;
};

inline int BinaryTree::size() const { return n_ ? n_->size : 0; }
inline BinaryTree BinaryTree::left() const { return n_ ? n_->left : BinaryTree(); }
inline BinaryTree BinaryTree::right() const { return n_ ? n_->right : BinaryTree(); }

// A binary tree with one integer label per node.
class LabeledTree {
 public:
  LabeledTree() = default;
  static LabeledTree node(const LabeledTree& left, int label, const LabeledTree& right);

  bool empty() const { return !n_; }
  int size() const;
  int label() const;
  LabeledTree left() const;
  LabeledTree right() const;

  Word infix() const;               // left, root, right
  Word postfix_right_left() const;  // right, left, root (canonical reading)
  Word postfix_left_right() const;  // left, right, root
  BinaryTree shape() const;

  bool is_right_strict_bst() const;
  bool is_standard_decreasing() const;

  std::string str() const;  // (L)label(R), empty string for the empty tree

  bool operator==(const LabeledTree& o) const;

 private:
  struct Node;
  std::shared_ptr<const Node> n_;
};

struct LabeledTree::Node {
  LabeledTree left, right;
  int label, size;
};

inline int LabeledTree::size() const { return n_ ? n_->size : 0; }
inline LabeledTree LabeledTree::left() const { return n_ ? n_->left : LabeledTree(); }
inline LabeledTree LabeledTree::right() const { return n_ ? n_->right : LabeledTree(); }

// Binary search tree insertion, reading w right to left (right-strict: ties
// go to the left subtree).
LabeledTree bst_insert(const Word& w);

// Decreasing tree: the root carries the greatest letter. Throws on repeated
// letters.
LabeledTree decreasing_tree(const Word& w);

// Lexicographically smallest member of the sylvester class of T (the
// left-to-right postfix reading); the greatest is the canonical word.
Perm min_word(const BinaryTree& t);

// The sylvester class of T: all permutations whose binary search tree has
// shape T, generated as the linear extensions of the tree poset (children
// before parents). Sorted ascending.
std::vector<Perm> enumerate_class(const BinaryTree& t);

// Class size n!/prod(h) and its q-analog q^{sum delta}[n]!_q/prod[h]_q, where
// h runs over subtree sizes and delta over right-subtree sizes.
Int hook_count(const BinaryTree& t);
QPolynomial hook_q(const BinaryTree& t);

// The Schensted-style correspondence: ssa(w) = (bst_insert(w),
// decreasing_tree(standardize(w)^{-1})); ssb is its inverse on pairs of a
// binary search tree and a standard decreasing tree of the same shape.
std::pair<LabeledTree, LabeledTree> ssa(const Word& w);
Word ssb(const LabeledTree& p, const LabeledTree& q);

// Terminal fixed-point count of the canonical word (minus one on the
// identity) and the saillance count of what remains.
struct Skeleton {
  int k = 0;
  int l = 0;
  bool operator==(const Skeleton&) const = default;
  std::strong_ordering operator<=>(const Skeleton&) const = default;
};
Skeleton skeleton(const BinaryTree& t);

// The lexicographically greatest canonical word of size n and skeleton (k,l):
// (n-k)...(n-k-l+2)(n-k-l)...1.(n-k-l+1).(n-k+1)...n.
Perm max_skeleton_word(int k, int l, int n);

// graft_over(a, b): b grafted as the right child of the rightmost node of a;
// the canonical word of the result is w_b[|a|].w_a. graft_under(a, b): a
// grafted as the left child of the leftmost node of b.
BinaryTree graft_over(const BinaryTree& a, const BinaryTree& b);
BinaryTree graft_under(const BinaryTree& a, const BinaryTree& b);

// All C_n trees of size n, sorted by lexicographic order of their canonical
// words. Cached; the reference stays valid for the program lifetime.
const std::vector<BinaryTree>& enumerate_trees(int n);

// Left/right chains (all-left-edge and all-right-edge trees); their canonical
// words are the identity and n...21 respectively.
BinaryTree left_chain(int n);
BinaryTree right_chain(int n);
BinaryTree mirror(const BinaryTree& t);

// Words are sylvester-congruent iff their binary search trees coincide as
// labeled trees.
bool sylvester_congruent(const Word& u, const Word& v);

// The sylvester class of an arbitrary word: all words with the same binary
// search tree, sorted. For a permutation this is enumerate_class of its shape.
std::vector<Word> word_class(const Word& w);

}  // namespace pbt
