#include "pbt/cartan.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace pbt {

namespace {

struct GramData {
  std::vector<BinaryTree> trees;  // lexicographic
  std::map<BinaryTree, int> index;
  IntMatrix m;
};

std::mutex g_gram_mutex;
std::map<int, GramData> g_gram_cache;

const GramData& gram_data(int n) {
  std::lock_guard<std::mutex> lock(g_gram_mutex);
  auto it = g_gram_cache.find(n);
  if (it != g_gram_cache.end()) return it->second;
  GramData d;
  d.trees = enumerate_trees(n);
  int c = static_cast<int>(d.trees.size());
  for (int i = 0; i < c; ++i) d.index[d.trees[static_cast<size_t>(i)]] = i;
  d.m = IntMatrix(c, c);
  for (const Perm& s : all_permutations(n)) {
    int i = d.index.at(BinaryTree::from_word(s.word()));
    int j = d.index.at(BinaryTree::from_word(s.inverse().word()));
    d.m.at(i, j) += 1;
  }
  return g_gram_cache.emplace(n, std::move(d)).first->second;
}

}  // namespace

Int gram_entry(const BinaryTree& t, const BinaryTree& u) {
  if (t.size() != u.size()) throw std::invalid_argument("gram_entry: size mismatch");
  const GramData& d = gram_data(t.size());
  return d.m.at(d.index.at(t), d.index.at(u));
}

TransitionMatrix gram_matrix(int n) {
  const GramData& d = gram_data(n);
  return {"Gram", "Gram", n, d.trees, d.m};
}

BinaryTree nu(const BinaryTree& t) {
  return BinaryTree::from_canonical(t.canonical_word().inverse());
}

std::vector<BinaryTree> skeleton_order(int n) {
  std::vector<BinaryTree> out = enumerate_trees(n);
  std::stable_sort(out.begin(), out.end(), [](const BinaryTree& a, const BinaryTree& b) {
    Skeleton sa = skeleton(a), sb = skeleton(b);
    if (sa.k != sb.k) return sa.k > sb.k;
    return sa.l < sb.l;  // within a block the lexicographic order is kept
  });
  return out;
}

TransitionMatrix c_matrix(int n) {
  const GramData& d = gram_data(n);
  std::vector<BinaryTree> order = skeleton_order(n);
  int c = static_cast<int>(order.size());
  TransitionMatrix tm{"C", "C", n, order, IntMatrix(c, c)};
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      tm.m.at(i, j) = d.m.at(d.index.at(order[static_cast<size_t>(i)]),
                             d.index.at(nu(order[static_cast<size_t>(j)])));
  return tm;
}

std::string Triangle::render_text() const {
  std::string out;
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += row[i].str();
    }
    out += '\n';
  }
  return out;
}

Triangle catalan_triangle(int n_rows) {
  if (n_rows < 1) throw std::invalid_argument("catalan_triangle: rows >= 1");
  Triangle t;
  for (int n = 1; n <= n_rows; ++n) {
    std::vector<Int> row;
    for (int k = 0; k < n; ++k) row.push_back(Int(n - k) * binomial(n + k, k) / (n + k));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Triangle stirling1_triangle(int n_rows) {
  if (n_rows < 1) throw std::invalid_argument("stirling1_triangle: rows >= 1");
  Triangle t;
  for (int n = 1; n <= n_rows; ++n) {
    std::vector<Int> row(static_cast<size_t>(n), 0);
    row[0] = 1;
    for (int k = 1; k < n; ++k)
      for (int j = k; j >= 1; --j) row[static_cast<size_t>(j)] += Int(k) * row[static_cast<size_t>(j - 1)];
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::map<Skeleton, std::pair<Int, Int>> block_stats(int n) {
  TransitionMatrix cm = c_matrix(n);
  std::map<Skeleton, std::pair<Int, Int>> out;
  std::vector<Skeleton> sk;
  for (const BinaryTree& t : cm.index) sk.push_back(skeleton(t));
  int c = static_cast<int>(cm.index.size());
  for (int i = 0; i < c; ++i) {
    auto& [m, d] = out[sk[static_cast<size_t>(i)]];
    m += 1;
    for (int j = 0; j < c; ++j)
      if (sk[static_cast<size_t>(j)] == sk[static_cast<size_t>(i)]) d += cm.m.at(i, j);
  }
  return out;
}

std::string block_report(int n) {
  std::map<Skeleton, std::pair<Int, Int>> stats = block_stats(n);
  std::string out;
  Skeleton last{-1, -1};
  for (const BinaryTree& t : skeleton_order(n)) {  // blocks in matrix order
    Skeleton s = skeleton(t);
    if (s == last) continue;
    last = s;
    const auto& [m, d] = stats.at(s);
    out += "block k=" + std::to_string(s.k) + " l=" + std::to_string(s.l) +
           " rows=" + m.str() + " sum=" + d.str() + "\n";
  }
  return out;
}

bool cosylvester_equivalent(const Perm& u, const Perm& v) {
  if (u.size() != v.size()) throw std::invalid_argument("cosylvester_equivalent: size mismatch");
  return sylvester_congruent(u.inverse().word(), v.inverse().word());
}

}  // namespace pbt
