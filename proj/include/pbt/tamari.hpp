#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbt/ints.hpp"
#include "pbt/trees.hpp"
#include "pbt/words.hpp"

namespace pbt {

// Bracket vector of a canonical word: a_i = 1 + #{values smaller than i to
// the right of i}. Valid vectors satisfy 1 <= a_i <= i and a_j >= a_i for
// every j with a_i <= j < i; the identity maps to (1,...,1) and n...21 to
// (1,2,...,n). The coordinatewise order on these vectors is the Tamari order
// and coincides with the weak order restricted to canonical words.
class TamariVector {
 public:
  explicit TamariVector(std::vector<int> a);
  int size() const { return static_cast<int>(a_.size()); }
  int at(int i) const { return a_[static_cast<size_t>(i)]; }  // 0-based
  const std::vector<int>& entries() const { return a_; }
  std::string str() const;
  bool operator==(const TamariVector&) const = default;

 private:
  std::vector<int> a_;
};

TamariVector to_tamari_vector(const Perm& canonical);
Perm from_tamari_vector(const TamariVector& a);

// Componentwise comparison of bracket vectors. Throws on size mismatch.
bool tamari_leq(const BinaryTree& a, const BinaryTree& b);

// Covering move at a rise w(i) < w(i+1) (1-based i): w(i+1) travels left past
// every element <= w(i). The result is again canonical.
Perm cover_move(const Perm& canonical, int rise);

// Upper covers of t in the Tamari order, sorted.
std::vector<BinaryTree> tamari_covers(const BinaryTree& t);

// Moebius function of the Tamari order; throws on incomparable arguments.
// Each call memoizes internally, so it is safe to use from one thread per
// computation.
Int tamari_mobius(const BinaryTree& a, const BinaryTree& b);

// If S is exactly a Tamari interval [min, max], returns those bounds.
std::optional<std::pair<BinaryTree, BinaryTree>> is_interval(
    const std::vector<BinaryTree>& s);

// Hasse diagram of the Tamari order on size-n trees, nodes labeled by
// canonical words, as GraphViz DOT text.
std::string tamari_dot(int n);

}  // namespace pbt
