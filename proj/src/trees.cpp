#include "pbt/trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace pbt {

namespace {
const std::vector<int> kEmptyWord;
}

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
  auto n = std::make_shared<Node>();
  n->left = left;
  n->right = right;
  n->size = left.size() + right.size() + 1;
  // w_T = w_R[|L|+1] . w_L . (|L|+1): the right subtree reads first with its
  // letters shifted above the root label |L|+1.
  n->canon.reserve(static_cast<size_t>(n->size));
  int root = left.size() + 1;
  for (int x : right.canon()) n->canon.push_back(x + root);
  for (int x : left.canon()) n->canon.push_back(x);
  n->canon.push_back(root);
  BinaryTree t;
  t.n_ = std::move(n);
  return t;
}

const std::vector<int>& BinaryTree::canon() const {
  return n_ ? n_->canon : kEmptyWord;
}

BinaryTree BinaryTree::from_word(const Word& w) { return bst_insert(w).shape(); }

BinaryTree BinaryTree::from_canonical(const Perm& p) {
  BinaryTree t = from_word(p.word());
  if (t.canon() != p.values())
    throw std::invalid_argument("not a canonical (132-avoiding) word: " + p.str());
  return t;
}

std::string BinaryTree::parens() const {
  if (empty()) return "";
  return "(" + left().parens() + ")(" + right().parens() + ")";
}

namespace {
// Parses "(L)(R)" starting at s[i]; empty content means the empty tree.
BinaryTree parse_parens(const std::string& s, size_t& i, size_t end) {
  if (i == end) return BinaryTree();
  auto sub = [&](const char* what) -> BinaryTree {
    if (i >= end || s[i] != '(') throw std::invalid_argument(std::string("expected '(' for ") + what);
    size_t depth = 1, start = ++i;
    while (i < end && depth) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      ++i;
    }
    if (depth) throw std::invalid_argument("unbalanced parentheses in tree");
    size_t stop = i - 1, j = start;
    BinaryTree t = parse_parens(s, j, stop);
    if (j != stop) throw std::invalid_argument("trailing garbage in tree");
    return t;
  };
  BinaryTree l = sub("left subtree");
  BinaryTree r = sub("right subtree");
  return BinaryTree::node(l, r);
}
}  // namespace

BinaryTree BinaryTree::parse(const std::string& s) {
  if (!s.empty() && s[0] == '(') {
    size_t i = 0;
    BinaryTree t = parse_parens(s, i, s.size());
    if (i != s.size()) throw std::invalid_argument("trailing garbage in tree: " + s);
    return t;
  }
  return from_canonical(Perm::parse(s));
}

bool BinaryTree::operator==(const BinaryTree& o) const {
  return size() == o.size() && canon() == o.canon();
}

std::strong_ordering BinaryTree::operator<=>(const BinaryTree& o) const {
  if (size() != o.size()) return size() <=> o.size();
  const auto& a = canon();
  const auto& b = o.canon();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

LabeledTree LabeledTree::node(const LabeledTree& left, int label, const LabeledTree& right) {
  auto n = std::make_shared<Node>();
  n->left = left;
  n->right = right;
  n->label = label;
  n->size = left.size() + right.size() + 1;
  LabeledTree t;
  t.n_ = std::move(n);
  return t;
}

int LabeledTree::label() const {
  if (!n_) throw std::logic_error("label() on the empty tree");
  return n_->label;
}

namespace {
void infix_rec(const LabeledTree& t, std::vector<int>& out) {
  if (t.empty()) return;
  infix_rec(t.left(), out);
  out.push_back(t.label());
  infix_rec(t.right(), out);
}
void postfix_rl_rec(const LabeledTree& t, std::vector<int>& out) {
  if (t.empty()) return;
  postfix_rl_rec(t.right(), out);
  postfix_rl_rec(t.left(), out);
  out.push_back(t.label());
}
void postfix_lr_rec(const LabeledTree& t, std::vector<int>& out) {
  if (t.empty()) return;
  postfix_lr_rec(t.left(), out);
  postfix_lr_rec(t.right(), out);
  out.push_back(t.label());
}
}  // namespace

Word LabeledTree::infix() const {
  std::vector<int> v;
  infix_rec(*this, v);
  return Word(std::move(v));
}

Word LabeledTree::postfix_right_left() const {
  std::vector<int> v;
  postfix_rl_rec(*this, v);
  return Word(std::move(v));
}

Word LabeledTree::postfix_left_right() const {
  std::vector<int> v;
  postfix_lr_rec(*this, v);
  return Word(std::move(v));
}

BinaryTree LabeledTree::shape() const {
  if (empty()) return BinaryTree();
  return BinaryTree::node(left().shape(), right().shape());
}

namespace {
bool bst_bounds(const LabeledTree& t, int lo, int hi) {
  // labels in the left subtree <= root < labels in the right subtree
  if (t.empty()) return true;
  int x = t.label();
  if (x < lo || x > hi) return false;
  return bst_bounds(t.left(), lo, x) && bst_bounds(t.right(), x + 1, hi);
}
bool decreasing_rec(const LabeledTree& t) {
  if (t.empty()) return true;
  if (!t.left().empty() && t.left().label() >= t.label()) return false;
  if (!t.right().empty() && t.right().label() >= t.label()) return false;
  return decreasing_rec(t.left()) && decreasing_rec(t.right());
}
}  // namespace

bool LabeledTree::is_right_strict_bst() const {
  return bst_bounds(*this, INT32_MIN, INT32_MAX);
}

bool LabeledTree::is_standard_decreasing() const {
  if (!decreasing_rec(*this)) return false;
  std::vector<int> v = infix().letters();
  std::sort(v.begin(), v.end());
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[static_cast<size_t>(i)] != i + 1) return false;
  return true;
}

std::string LabeledTree::str() const {
  if (empty()) return "";
  return "(" + left().str() + ")" + std::to_string(label()) + "(" + right().str() + ")";
}

bool LabeledTree::operator==(const LabeledTree& o) const {
  if (empty() || o.empty()) return empty() == o.empty();
  return label() == o.label() && left() == o.left() && right() == o.right();
}

namespace {
LabeledTree insert_one(const LabeledTree& t, int x) {
  if (t.empty()) return LabeledTree::node({}, x, {});
  if (x <= t.label()) return LabeledTree::node(insert_one(t.left(), x), t.label(), t.right());
  return LabeledTree::node(t.left(), t.label(), insert_one(t.right(), x));
}
}  // namespace

LabeledTree bst_insert(const Word& w) {
  LabeledTree t;
  for (int i = w.size() - 1; i >= 0; --i) t = insert_one(t, w.at(i));
  return t;
}

namespace {
LabeledTree decreasing_rec_build(const std::vector<int>& v, int lo, int hi) {
  if (lo > hi) return LabeledTree();
  int m = lo;
  for (int i = lo + 1; i <= hi; ++i)
    if (v[static_cast<size_t>(i)] > v[static_cast<size_t>(m)]) m = i;
  return LabeledTree::node(decreasing_rec_build(v, lo, m - 1), v[static_cast<size_t>(m)],
                           decreasing_rec_build(v, m + 1, hi));
}
}  // namespace

LabeledTree decreasing_tree(const Word& w) {
  std::set<int> seen;
  for (int x : w.letters())
    if (!seen.insert(x).second)
      throw std::invalid_argument("decreasing_tree: repeated letter in " + w.str());
  return decreasing_rec_build(w.letters(), 0, w.size() - 1);
}

namespace {
// Standard labels are infix positions; children[v] lists the labels of the
// children of the node labeled v, parent[v] its parent (0 for the root).
struct TreePoset {
  int n = 0;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
};

int poset_rec(const BinaryTree& t, int offset, TreePoset& p, int parent_label) {
  // Returns the root label of t; offset = labels already used to the left.
  if (t.empty()) return 0;
  int root = offset + t.left().size() + 1;
  p.parent[static_cast<size_t>(root)] = parent_label;
  if (parent_label) p.children[static_cast<size_t>(parent_label)].push_back(root);
  poset_rec(t.left(), offset, p, root);
  poset_rec(t.right(), root, p, root);
  return root;
}

TreePoset tree_poset(const BinaryTree& t) {
  TreePoset p;
  p.n = t.size();
  p.parent.assign(static_cast<size_t>(p.n) + 1, 0);
  p.children.assign(static_cast<size_t>(p.n) + 1, {});
  poset_rec(t, 0, p, 0);
  return p;
}

void extensions_rec(const TreePoset& p, std::vector<int>& avail,
                    std::vector<int>& pending, std::vector<int>& cur,
                    std::vector<Perm>& out) {
  if (static_cast<int>(cur.size()) == p.n) {
    out.push_back(Perm(cur));
    return;
  }
  for (size_t i = 0; i < avail.size(); ++i) {
    int v = avail[i];
    std::vector<int> next = avail;
    next.erase(next.begin() + static_cast<long>(i));
    int par = p.parent[static_cast<size_t>(v)];
    if (par && --pending[static_cast<size_t>(par)] == 0) next.push_back(par);
    cur.push_back(v);
    extensions_rec(p, next, pending, cur, out);
    cur.pop_back();
    if (par) ++pending[static_cast<size_t>(par)];
  }
}
}  // namespace

std::vector<Perm> enumerate_class(const BinaryTree& t) {
  if (t.empty()) return {Perm()};
  TreePoset p = tree_poset(t);
  std::vector<int> pending(static_cast<size_t>(p.n) + 1, 0);
  std::vector<int> avail;
  for (int v = 1; v <= p.n; ++v) {
    pending[static_cast<size_t>(v)] = static_cast<int>(p.children[static_cast<size_t>(v)].size());
    if (pending[static_cast<size_t>(v)] == 0) avail.push_back(v);
  }
  std::vector<Perm> out;
  std::vector<int> cur;
  extensions_rec(p, avail, pending, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Perm min_word(const BinaryTree& t) {
  // Left-to-right postfix reading of the standard binary search tree.
  std::vector<int> out;
  struct Rec {
    static void go(const BinaryTree& t, int offset, std::vector<int>& out) {
      if (t.empty()) return;
      int root = offset + t.left().size() + 1;
      go(t.left(), offset, out);
      go(t.right(), root, out);
      out.push_back(root);
    }
  };
  Rec::go(t, 0, out);
  return Perm(std::move(out));
}

Int hook_count(const BinaryTree& t) {
  if (t.empty()) return 1;
  return binomial(t.size() - 1, t.left().size()) * hook_count(t.left()) *
         hook_count(t.right());
}

QPolynomial hook_q(const BinaryTree& t) {
  if (t.empty()) return QPolynomial::constant(1);
  // hook_q(T) = q^{|R|} qbin(n-1, |L|) hook_q(L) hook_q(R)
  return QPolynomial::monomial(t.right().size()) *
         QPolynomial::q_binomial(t.size() - 1, t.left().size()) *
         hook_q(t.left()) * hook_q(t.right());
}

std::pair<LabeledTree, LabeledTree> ssa(const Word& w) {
  return {bst_insert(w), decreasing_tree(standardize(w).inverse().word())};
}

Word ssb(const LabeledTree& p, const LabeledTree& q) {
  if (!(p.shape() == q.shape())) throw std::invalid_argument("ssb: shape mismatch");
  if (!q.is_standard_decreasing())
    throw std::invalid_argument("ssb: second tree is not a standard decreasing tree");
  if (!p.is_right_strict_bst())
    throw std::invalid_argument("ssb: first tree is not a binary search tree");
  std::vector<int> out(static_cast<size_t>(p.size()), 0);
  struct Rec {
    static void go(const LabeledTree& p, const LabeledTree& q, std::vector<int>& out) {
      if (p.empty()) return;
      out[static_cast<size_t>(q.label() - 1)] = p.label();
      go(p.left(), q.left(), out);
      go(p.right(), q.right(), out);
    }
  };
  Rec::go(p, q, out);
  return Word(std::move(out));
}

Skeleton skeleton(const BinaryTree& t) {
  if (t.empty()) throw std::invalid_argument("skeleton of the empty tree");
  const std::vector<int>& w = t.canon();
  int n = static_cast<int>(w.size());
  int k = 0;
  while (k < n && w[static_cast<size_t>(n - 1 - k)] == n - k) ++k;
  if (k == n) --k;  // identity word
  Perm rest(std::vector<int>(w.begin(), w.end() - k));
  Skeleton s{k, static_cast<int>(saillance_values(rest).size())};
  return s;
}

Perm max_skeleton_word(int k, int l, int n) {
  if (k < 0 || l < 1 || k + l > n)
    throw std::invalid_argument("max_skeleton_word: need k >= 0, l >= 1, k+l <= n");
  std::vector<int> v;
  for (int x = n - k; x >= n - k - l + 2; --x) v.push_back(x);
  for (int x = n - k - l; x >= 1; --x) v.push_back(x);
  v.push_back(n - k - l + 1);
  for (int x = n - k + 1; x <= n; ++x) v.push_back(x);
  return Perm(std::move(v));
}

BinaryTree graft_over(const BinaryTree& a, const BinaryTree& b) {
  if (a.empty()) return b;
  if (a.right().empty()) return BinaryTree::node(a.left(), b);
  return BinaryTree::node(a.left(), graft_over(a.right(), b));
}

BinaryTree graft_under(const BinaryTree& a, const BinaryTree& b) {
  if (b.empty()) return a;
  if (b.left().empty()) return BinaryTree::node(a, b.right());
  return BinaryTree::node(graft_under(a, b.left()), b.right());
}

namespace {
std::mutex g_trees_mutex;
std::vector<std::vector<BinaryTree>> g_trees_by_size = {{BinaryTree()}};
}  // namespace

const std::vector<BinaryTree>& enumerate_trees(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_trees: negative size");
  std::lock_guard<std::mutex> lock(g_trees_mutex);
  while (static_cast<int>(g_trees_by_size.size()) <= n) {
    int m = static_cast<int>(g_trees_by_size.size());
    std::vector<BinaryTree> ts;
    for (int i = 0; i < m; ++i)
      for (const BinaryTree& l : g_trees_by_size[static_cast<size_t>(i)])
        for (const BinaryTree& r : g_trees_by_size[static_cast<size_t>(m - 1 - i)])
          ts.push_back(BinaryTree::node(l, r));
    std::sort(ts.begin(), ts.end());
    g_trees_by_size.push_back(std::move(ts));
  }
  return g_trees_by_size[static_cast<size_t>(n)];
}

BinaryTree left_chain(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = BinaryTree::node(t, {});
  return t;
}

BinaryTree right_chain(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = BinaryTree::node({}, t);
  return t;
}

BinaryTree mirror(const BinaryTree& t) {
  if (t.empty()) return t;
  return BinaryTree::node(mirror(t.right()), mirror(t.left()));
}

bool sylvester_congruent(const Word& u, const Word& v) {
  return bst_insert(u) == bst_insert(v);
}

std::vector<Word> word_class(const Word& w) {
  std::vector<int> sorted = w.letters();
  std::sort(sorted.begin(), sorted.end());
  std::set<Word> out;
  for (const Perm& p : enumerate_class(BinaryTree::from_word(w))) {
    std::vector<int> m(static_cast<size_t>(w.size()));
    for (int i = 0; i < w.size(); ++i) m[static_cast<size_t>(i)] = sorted[static_cast<size_t>(p.at(i) - 1)];
    Word cand{std::move(m)};
    if (sylvester_congruent(cand, w)) out.insert(cand);
  }
  return std::vector<Word>(out.begin(), out.end());
}

}  // namespace pbt
