#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pbt/ints.hpp"
#include "pbt/matrix.hpp"
#include "pbt/trees.hpp"

namespace pbt {

// Gram matrix entry c_{T,U} = #{sigma : shape(bst(sigma)) = T and
// shape(bst(sigma^{-1})) = U}, computed by direct enumeration of S_n.
Int gram_entry(const BinaryTree& t, const BinaryTree& u);

// M^{(n)}: the full Gram matrix, rows and columns in lexicographic order of
// canonical words.
TransitionMatrix gram_matrix(int n);

// The involution nu(T) = tree of w_T^{-1}; it preserves skeletons.
BinaryTree nu(const BinaryTree& t);

// Tree order used by the reordered matrix: skeletons sorted by (k descending,
// l ascending), lexicographic canonical words within a block.
std::vector<BinaryTree> skeleton_order(int n);

// C^{(n)}(T,U) = c_{T, nu(U)} over the skeleton order; block lower
// unitriangular.
TransitionMatrix c_matrix(int n);

struct Triangle {
  std::vector<std::vector<Int>> rows;  // row lengths 1, 2, 3, ...
  std::string render_text() const;
  bool operator==(const Triangle&) const = default;
};

// Rows of the Catalan triangle (n-k)/(n+k) C(n+k,k) and of the unsigned
// Stirling triangle prod_{k<n} (1+k u).
Triangle catalan_triangle(int rows);
Triangle stirling1_triangle(int rows);

// Per-block row count m and entry sum d of C^{(n)}, keyed by skeleton.
std::map<Skeleton, std::pair<Int, Int>> block_stats(int n);
std::string block_report(int n);

// u and v are co-sylvester equivalent iff their inverses are sylvester
// congruent.
bool cosylvester_equivalent(const Perm& u, const Perm& v);

}  // namespace pbt
