#include "pbt/tamari.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace pbt {

TamariVector::TamariVector(std::vector<int> a) : a_(std::move(a)) {
  int n = static_cast<int>(a_.size());
  for (int i = 1; i <= n; ++i) {
    int ai = a_[static_cast<size_t>(i - 1)];
    if (ai < 1 || ai > i) throw std::invalid_argument("tamari vector: entry out of range");
    for (int j = ai; j < i; ++j)
      if (a_[static_cast<size_t>(j - 1)] < ai)
        throw std::invalid_argument("tamari vector: interval condition violated");
  }
}

std::string TamariVector::str() const {
  bool digits = true;
  for (int x : a_)
    if (x > 9) digits = false;
  std::string out;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (!digits && i) out += ',';
    out += std::to_string(a_[i]);
  }
  return out;
}

TamariVector to_tamari_vector(const Perm& p) {
  static const Perm k132 = Perm({1, 3, 2});
  if (!avoids_pattern(p, k132))
    throw std::invalid_argument("to_tamari_vector: not a canonical word: " + p.str());
  int n = p.size();
  std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(p.at(i))] = i;
  std::vector<int> a(static_cast<size_t>(n), 0);
  for (int v = 1; v <= n; ++v) {
    int c = 0;
    for (int j = pos[static_cast<size_t>(v)] + 1; j < n; ++j)
      if (p.at(j) < v) ++c;
    a[static_cast<size_t>(v - 1)] = c + 1;
  }
  return TamariVector(std::move(a));
}

Perm from_tamari_vector(const TamariVector& a) {
  // Insert the values in increasing order; value i goes to the slot leaving
  // a_i - 1 smaller values on its right.
  int n = a.size();
  std::vector<int> w;
  for (int i = 1; i <= n; ++i) {
    int c = a.at(i - 1) - 1;
    w.insert(w.begin() + (i - 1 - c), i);
  }
  Perm out{std::move(w)};
  if (!(to_tamari_vector(out) == a))
    throw std::invalid_argument("from_tamari_vector: invalid vector");
  return out;
}

bool tamari_leq(const BinaryTree& a, const BinaryTree& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tamari_leq: size mismatch");
  TamariVector va = to_tamari_vector(a.canonical_word());
  TamariVector vb = to_tamari_vector(b.canonical_word());
  for (int i = 0; i < va.size(); ++i)
    if (va.at(i) > vb.at(i)) return false;
  return true;
}

Perm cover_move(const Perm& p, int rise) {
  int n = p.size();
  if (rise < 1 || rise >= n || p(rise) >= p(rise + 1))
    throw std::invalid_argument("cover_move: no rise at position " + std::to_string(rise));
  std::vector<int> v = p.values();
  int bound = v[static_cast<size_t>(rise - 1)];
  int j = rise;  // 0-based index of the moving element
  while (j > 0 && v[static_cast<size_t>(j - 1)] <= bound) {
    std::swap(v[static_cast<size_t>(j - 1)], v[static_cast<size_t>(j)]);
    --j;
  }
  return Perm(std::move(v));
}

std::vector<BinaryTree> tamari_covers(const BinaryTree& t) {
  const Perm w = t.canonical_word();
  std::set<BinaryTree> out;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) < w(i + 1)) out.insert(BinaryTree::from_canonical(cover_move(w, i)));
  return std::vector<BinaryTree>(out.begin(), out.end());
}

Int tamari_mobius(const BinaryTree& a, const BinaryTree& b) {
  if (!tamari_leq(a, b)) throw std::domain_error("tamari_mobius: incomparable pair");
  // Interval elements in lexicographic order of canonical words; lex order
  // extends the Tamari order, so a single sweep fills the memo bottom-up.
  std::vector<BinaryTree> interval;
  for (const BinaryTree& u : enumerate_trees(a.size()))
    if (tamari_leq(a, u) && tamari_leq(u, b)) interval.push_back(u);
  std::map<BinaryTree, Int> mu;
  for (const BinaryTree& u : interval) {
    Int s = 0;
    for (const BinaryTree& v : interval)
      if (!(v == u) && tamari_leq(v, u)) s += mu[v];
    mu[u] = (u == a) ? Int(1) : Int(-s);
  }
  return mu[b];
}

std::optional<std::pair<BinaryTree, BinaryTree>> is_interval(
    const std::vector<BinaryTree>& s) {
  if (s.empty()) return std::nullopt;
  std::set<BinaryTree> members(s.begin(), s.end());
  int n = s.front().size();
  for (const BinaryTree& t : s)
    if (t.size() != n) return std::nullopt;
  std::optional<BinaryTree> lo, hi;
  for (const BinaryTree& t : members) {
    bool below = true, above = true;
    for (const BinaryTree& u : members) {
      if (!tamari_leq(t, u)) below = false;
      if (!tamari_leq(u, t)) above = false;
    }
    if (below) lo = t;
    if (above) hi = t;
  }
  if (!lo || !hi) return std::nullopt;
  for (const BinaryTree& u : enumerate_trees(n))
    if (tamari_leq(*lo, u) && tamari_leq(u, *hi) && !members.count(u))
      return std::nullopt;
  return std::make_pair(*lo, *hi);
}

std::string tamari_dot(int n) {
  std::string out = "digraph tamari" + std::to_string(n) + " {\n";
  for (const BinaryTree& t : enumerate_trees(n))
    out += "  \"" + t.canonical_word().str() + "\";\n";
  for (const BinaryTree& t : enumerate_trees(n))
    for (const BinaryTree& c : tamari_covers(t))
      out += "  \"" + t.canonical_word().str() + "\" -> \"" +
             c.canonical_word().str() + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace pbt
