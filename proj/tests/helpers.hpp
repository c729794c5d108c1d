#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pbt/trees.hpp"
#include "pbt/words.hpp"

namespace pbt::testing {

inline Perm P(const std::string& s) { return Perm::parse(s); }
inline Word W(const std::string& s) { return Word::parse(s); }
inline BinaryTree T(const std::string& s) { return BinaryTree::parse(s); }

inline std::vector<Perm> perms(const std::vector<std::string>& v) {
  std::vector<Perm> out;
  for (const std::string& s : v) out.push_back(P(s));
  std::sort(out.begin(), out.end());
  return out;
}

// The unique permutation with the same positional inversion set as w,
// found by brute force; the independent oracle for standardization.
inline Perm std_oracle(const Word& w) {
  auto target = inversions(w);
  std::vector<Perm> found;
  for (const Perm& p : all_permutations(w.size()))
    if (inversions(p.word()) == target) found.push_back(p);
  if (found.size() != 1) throw std::logic_error("std_oracle: not unique");
  return found.front();
}

}  // namespace pbt::testing
