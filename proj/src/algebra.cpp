#include "pbt/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include "json.hpp"
#include "pbt/tamari.hpp"

namespace pbt {

std::string pbasis_name(PBasis b) {
  switch (b) {
    case PBasis::P: return "P";
    case PBasis::Q: return "Q";
    case PBasis::Qprime: return "Qprime";
    case PBasis::H: return "H";
    case PBasis::E: return "E";
    case PBasis::Prima: return "Prima";
    case PBasis::Primb: return "Primb";
  }
  return "?";
}

std::optional<PBasis> pbasis_parse(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "p") return PBasis::P;
  if (t == "q") return PBasis::Q;
  if (t == "qprime" || t == "q'") return PBasis::Qprime;
  if (t == "h") return PBasis::H;
  if (t == "e") return PBasis::E;
  if (t == "prima") return PBasis::Prima;
  if (t == "primb") return PBasis::Primb;
  return std::nullopt;
}

PbtElem pbt_of(PBasis b, const BinaryTree& t) { return {b, LinComb<BinaryTree>::unit(t)}; }
PbtElem pbt_unit(PBasis b) { return pbt_of(b, BinaryTree()); }

namespace {
bool primal_side(PBasis b) { return b == PBasis::P || b == PBasis::H || b == PBasis::E; }
}  // namespace

// ---------------------------------------------------------------------------
// Per-degree transition data.

namespace {

struct DegreeData {
  std::vector<BinaryTree> trees;  // lexicographic order of canonical words
  std::map<BinaryTree, int> index;
  IntMatrix h_to_p, e_to_p, qprime_to_q, prima_to_q, primb_to_q;
  IntMatrix p_to_h, p_to_e, q_to_qprime, q_to_prima, q_to_primb;
};

IntMatrix matrix_from_json(const nlohmann::json& j) {
  int r = static_cast<int>(j.size());
  IntMatrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      m.at(i, k) = Int(j.at(static_cast<size_t>(i)).at(static_cast<size_t>(k)).get<std::string>());
  return m;
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    j.push_back(row);
  }
  return j;
}

// The H/E/Qprime columns are defined combinatorially right here; the rest is
// exact linear algebra. Kept free of the public wrappers so that those can be
// verified against this data in tests.
DegreeData compute_degree_data(int n) {
  DegreeData d;
  d.trees = enumerate_trees(n);
  int c = static_cast<int>(d.trees.size());
  for (int i = 0; i < c; ++i) d.index[d.trees[static_cast<size_t>(i)]] = i;
  d.h_to_p = IntMatrix(c, c);
  d.e_to_p = IntMatrix(c, c);
  d.qprime_to_q = IntMatrix(c, c);
  for (int j = 0; j < c; ++j) {
    const BinaryTree& t = d.trees[static_cast<size_t>(j)];
    for (int i = 0; i < c; ++i) {
      const BinaryTree& u = d.trees[static_cast<size_t>(i)];
      if (tamari_leq(u, t)) d.h_to_p.at(i, j) = 1;
      if (tamari_leq(t, u)) d.e_to_p.at(i, j) = 1;
    }
    for (const Perm& s : enumerate_class(t)) {
      BinaryTree u = BinaryTree::from_word(s.inverse().word());
      d.qprime_to_q.at(d.index.at(u), j) += 1;
    }
  }
  d.p_to_h = d.h_to_p.inverse();
  d.p_to_e = d.e_to_p.inverse();
  d.q_to_qprime = d.qprime_to_q.inverse();
  d.prima_to_q = d.p_to_h.transpose();
  d.primb_to_q = d.p_to_e.transpose();
  d.q_to_prima = d.h_to_p.transpose();
  d.q_to_primb = d.e_to_p.transpose();
  return d;
}

// Optional on-disk cache of the per-degree matrices, keyed by PBT_CACHE_DIR.
std::optional<DegreeData> load_degree_data(int n) {
  const char* dir = std::getenv("PBT_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  std::ifstream in(std::string(dir) + "/pbt_degree_" + std::to_string(n) + ".json");
  if (!in) return std::nullopt;
  try {
    nlohmann::json j;
    in >> j;
    DegreeData d;
    d.trees = enumerate_trees(n);
    int c = static_cast<int>(d.trees.size());
    for (int i = 0; i < c; ++i) d.index[d.trees[static_cast<size_t>(i)]] = i;
    if (j.at("degree").get<int>() != n || j.at("trees").get<int>() != c) return std::nullopt;
    d.h_to_p = matrix_from_json(j.at("h_to_p"));
    d.e_to_p = matrix_from_json(j.at("e_to_p"));
    d.qprime_to_q = matrix_from_json(j.at("qprime_to_q"));
    if (d.h_to_p.rows() != c || d.e_to_p.rows() != c || d.qprime_to_q.rows() != c)
      return std::nullopt;
    d.p_to_h = d.h_to_p.inverse();
    d.p_to_e = d.e_to_p.inverse();
    d.q_to_qprime = d.qprime_to_q.inverse();
    d.prima_to_q = d.p_to_h.transpose();
    d.primb_to_q = d.p_to_e.transpose();
    d.q_to_prima = d.h_to_p.transpose();
    d.q_to_primb = d.e_to_p.transpose();
    return d;
  } catch (...) {
    return std::nullopt;
  }
}

void store_degree_data(int n, const DegreeData& d) {
  const char* dir = std::getenv("PBT_CACHE_DIR");
  if (!dir || !*dir) return;
  nlohmann::json j;
  j["degree"] = n;
  j["trees"] = static_cast<int>(d.trees.size());
  j["h_to_p"] = matrix_to_json(d.h_to_p);
  j["e_to_p"] = matrix_to_json(d.e_to_p);
  j["qprime_to_q"] = matrix_to_json(d.qprime_to_q);
  std::ofstream out(std::string(dir) + "/pbt_degree_" + std::to_string(n) + ".json");
  if (out) out << j.dump() << "\n";
}

std::mutex g_degree_mutex;
std::map<int, DegreeData> g_degree_cache;

const DegreeData& degree_data(int n) {
  std::lock_guard<std::mutex> lock(g_degree_mutex);
  auto it = g_degree_cache.find(n);
  if (it != g_degree_cache.end()) return it->second;
  std::optional<DegreeData> d = load_degree_data(n);
  if (!d) {
    d = compute_degree_data(n);
    store_degree_data(n, *d);
  }
  return g_degree_cache.emplace(n, std::move(*d)).first->second;
}

// Splits a graded element into homogeneous coefficient vectors per degree.
std::map<int, std::vector<Int>> coords_by_degree(const PbtElem& x) {
  std::map<int, std::vector<Int>> out;
  for (const auto& [t, c] : x.terms.terms()) {
    const DegreeData& d = degree_data(t.size());
    auto [it, fresh] = out.emplace(t.size(), std::vector<Int>(d.trees.size(), 0));
    it->second[static_cast<size_t>(d.index.at(t))] = c;
  }
  return out;
}

PbtElem from_coords(PBasis b, int degree, const std::vector<Int>& v) {
  const DegreeData& d = degree_data(degree);
  PbtElem out{b, {}};
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.terms.add(d.trees[i], v[i]);
  return out;
}

// Conversion to the side's reference coordinates (P or Q).
std::vector<Int> to_ref(PBasis b, int n, const std::vector<Int>& v) {
  const DegreeData& d = degree_data(n);
  switch (b) {
    case PBasis::P:
    case PBasis::Q: return v;
    case PBasis::H: return d.h_to_p.apply(v);
    case PBasis::E: return d.e_to_p.apply(v);
    case PBasis::Qprime: return d.qprime_to_q.apply(v);
    case PBasis::Prima: return d.prima_to_q.apply(v);
    case PBasis::Primb: return d.primb_to_q.apply(v);
  }
  throw std::logic_error("unreachable");
}

std::vector<Int> from_ref(PBasis b, int n, const std::vector<Int>& v) {
  const DegreeData& d = degree_data(n);
  switch (b) {
    case PBasis::P:
    case PBasis::Q: return v;
    case PBasis::H: return d.p_to_h.apply(v);
    case PBasis::E: return d.p_to_e.apply(v);
    case PBasis::Qprime: return d.q_to_qprime.apply(v);
    case PBasis::Prima: return d.q_to_prima.apply(v);
    case PBasis::Primb: return d.q_to_primb.apply(v);
  }
  throw std::logic_error("unreachable");
}

// Reference coordinates across the phi identification: P coordinates equal
// Qprime coordinates, so crossing sides composes with qprime_to_q or its
// inverse.
std::vector<Int> cross_side(bool to_dual, int n, const std::vector<Int>& ref) {
  const DegreeData& d = degree_data(n);
  return to_dual ? d.qprime_to_q.apply(ref) : d.q_to_qprime.apply(ref);
}

}  // namespace

PbtElem change_of_basis(const PbtElem& x, PBasis target) {
  PbtElem out{target, {}};
  for (const auto& [n, v] : coords_by_degree(x)) {
    std::vector<Int> ref = to_ref(x.basis, n, v);
    if (primal_side(x.basis) != primal_side(target))
      ref = cross_side(primal_side(x.basis), n, ref);
    PbtElem part = from_coords(target, n, from_ref(target, n, ref));
    out.terms += part.terms;
  }
  return out;
}

TransitionMatrix transition_matrix(PBasis from, PBasis to, int degree) {
  const DegreeData& d = degree_data(degree);
  int c = static_cast<int>(d.trees.size());
  TransitionMatrix tm;
  tm.from = pbasis_name(from);
  tm.to = pbasis_name(to);
  tm.degree = degree;
  tm.index = d.trees;
  tm.m = IntMatrix(c, c);
  for (int j = 0; j < c; ++j) {
    std::vector<Int> e(static_cast<size_t>(c), 0);
    e[static_cast<size_t>(j)] = 1;
    std::vector<Int> ref = to_ref(from, degree, e);
    if (primal_side(from) != primal_side(to)) ref = cross_side(primal_side(from), degree, ref);
    std::vector<Int> col = from_ref(to, degree, ref);
    for (int i = 0; i < c; ++i) tm.m.at(i, j) = col[static_cast<size_t>(i)];
  }
  return tm;
}

// ---------------------------------------------------------------------------
// P side: the F-coordinate route.

FqElem p_to_f(const PbtElem& x) {
  if (x.basis != PBasis::P) return p_to_f(change_of_basis(x, PBasis::P));
  FqElem out{FBasis::F, {}};
  for (const auto& [t, c] : x.terms.terms())
    for (const Perm& s : enumerate_class(t)) out.terms.add(s, c);
  return out;
}

std::optional<PbtElem> f_to_p(const FqElem& xx, std::string* diag) {
  FqElem x = to_f(xx);
  PbtElem out{PBasis::P, {}};
  std::map<BinaryTree, Int> by_tree;
  for (const auto& [s, c] : x.terms.terms()) {
    BinaryTree t = BinaryTree::from_word(s.word());
    if (s.values() == t.canon()) by_tree[t] = c;
  }
  LinComb<Perm> rest = x.terms;
  for (const auto& [t, c] : by_tree)
    for (const Perm& s : enumerate_class(t)) rest.add(s, -c);
  if (!rest.is_zero()) {
    if (diag) {
      *diag = "support is not saturated by sylvester classes; residue:";
      for (const auto& [s, c] : rest.terms())
        *diag += " " + c.str() + "*F_" + s.str();
    }
    return std::nullopt;
  }
  for (const auto& [t, c] : by_tree) out.terms.add(t, c);
  return out;
}

std::optional<PbtTensor> f_tensor_to_p(const FqTensor& x, std::string* diag) {
  if (x.left != FBasis::F || x.right != FBasis::F)
    throw std::invalid_argument("f_tensor_to_p expects an F (x) F tensor");
  PbtTensor out{PBasis::P, PBasis::P, {}};
  LinComb<std::pair<Perm, Perm>> rest = x.terms;
  for (const auto& [k, c] : x.terms.terms()) {
    BinaryTree a = BinaryTree::from_word(k.first.word());
    BinaryTree b = BinaryTree::from_word(k.second.word());
    if (k.first.values() != a.canon() || k.second.values() != b.canon()) continue;
    out.terms.add({a, b}, c);
    for (const Perm& s : enumerate_class(a))
      for (const Perm& u : enumerate_class(b)) rest.add({s, u}, -c);
  }
  if (!rest.is_zero()) {
    if (diag) *diag = "tensor support is not saturated by sylvester class pairs";
    return std::nullopt;
  }
  return out;
}

PbtElem p_product(const PbtElem& x, const PbtElem& y) {
  FqElem f = f_product(p_to_f(x), p_to_f(y));
  std::string diag;
  std::optional<PbtElem> r = f_to_p(f, &diag);
  if (!r) throw std::logic_error("p_product failed to regroup: " + diag);
  return *r;
}

PbtTensor p_coproduct(const PbtElem& x) {
  FqTensor f = f_coproduct(p_to_f(x));
  std::string diag;
  std::optional<PbtTensor> r = f_tensor_to_p(f, &diag);
  if (!r) throw std::logic_error("p_coproduct failed to regroup: " + diag);
  return *r;
}

// ---------------------------------------------------------------------------
// Q side.

namespace {
LinComb<BinaryTree> q_basis_product(const BinaryTree& a, const BinaryTree& b) {
  LinComb<BinaryTree> out;
  for (const Perm& g : convolution(a.canonical_word(), b.canonical_word()))
    out.add(BinaryTree::from_word(g.word()), 1);
  return out;
}
}  // namespace

PbtElem q_product(const PbtElem& xx, const PbtElem& yy) {
  PbtElem x = change_of_basis(xx, PBasis::Q), y = change_of_basis(yy, PBasis::Q);
  PbtElem out{PBasis::Q, {}};
  for (const auto& [a, ca] : x.terms.terms())
    for (const auto& [b, cb] : y.terms.terms())
      out.terms += q_basis_product(a, b) * (ca * cb);
  return out;
}

PbtTensor q_coproduct(const PbtElem& xx) {
  PbtElem x = change_of_basis(xx, PBasis::Q);
  PbtTensor out{PBasis::Q, PBasis::Q, {}};
  for (const auto& [t, c] : x.terms.terms()) {
    Word w = t.canonical_word().word();
    for (int i = 0; i <= t.size(); ++i) {
      BinaryTree lo =
          i == 0 ? BinaryTree()
                 : BinaryTree::from_word(standardize(restrict_to_interval(w, 1, i)).word());
      BinaryTree hi =
          i == t.size()
              ? BinaryTree()
              : BinaryTree::from_word(standardize(restrict_to_interval(w, i + 1, t.size())).word());
      out.terms.add({lo, hi}, c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Derived bases.

PbtElem h_of(const BinaryTree& t) {
  PbtElem out{PBasis::P, {}};
  for (const BinaryTree& u : enumerate_trees(t.size()))
    if (tamari_leq(u, t)) out.terms.add(u, 1);
  return out;
}

PbtElem e_of(const BinaryTree& t) {
  PbtElem out{PBasis::P, {}};
  for (const BinaryTree& u : enumerate_trees(t.size()))
    if (tamari_leq(t, u)) out.terms.add(u, 1);
  return out;
}

BinaryTree h_product(const BinaryTree& a, const BinaryTree& b) { return graft_over(a, b); }
BinaryTree e_product(const BinaryTree& a, const BinaryTree& b) { return graft_under(a, b); }

PbtElem qprime_of(const BinaryTree& t) {
  PbtElem out{PBasis::Q, {}};
  for (const Perm& s : enumerate_class(t))
    out.terms.add(BinaryTree::from_word(s.inverse().word()), 1);
  return out;
}

PbtElem phi(const PbtElem& x) {
  if (!primal_side(x.basis)) throw std::invalid_argument("phi expects a primal-side element");
  PbtElem p = change_of_basis(x, PBasis::P);
  return {PBasis::Qprime, p.terms};
}

PbtElem prima_of(const BinaryTree& t) {
  return change_of_basis({PBasis::Prima, LinComb<BinaryTree>::unit(t)}, PBasis::Q);
}

PbtElem primb_of(const BinaryTree& t) {
  return change_of_basis({PBasis::Primb, LinComb<BinaryTree>::unit(t)}, PBasis::Q);
}

// ---------------------------------------------------------------------------
// Antipodes.

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  for (int first = 1; first <= n; ++first)
    for (std::vector<int> rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

PbtElem antipode_q(const PbtElem& xx) {
  PbtElem x = change_of_basis(xx, PBasis::Q);
  PbtElem out{PBasis::Q, {}};
  for (const auto& [t, c] : x.terms.terms()) {
    int n = t.size();
    if (n == 0) {
      out.terms.add(t, c);
      continue;
    }
    Word w = t.canonical_word().word();
    for (const std::vector<int>& comp : compositions(n)) {
      PbtElem prod = pbt_unit(PBasis::Q);
      int lo = 1;
      for (int part : comp) {
        Perm piece = standardize(restrict_to_interval(w, lo, lo + part - 1));
        prod = q_product(prod, pbt_of(PBasis::Q, BinaryTree::from_word(piece.word())));
        lo += part;
      }
      Int sign = comp.size() % 2 ? -1 : 1;
      out.terms += prod.terms * (c * sign);
    }
  }
  return out;
}

namespace {
// Generic antipode of a connected graded bialgebra:
// S(x) = -x - sum S(x') x'' over the reduced coproduct.
template <typename Coproduct, typename Product>
LinComb<BinaryTree> antipode_rec(const BinaryTree& t, Coproduct&& cop, Product&& mul,
                                 std::map<BinaryTree, LinComb<BinaryTree>>& memo) {
  if (t.empty()) return LinComb<BinaryTree>::unit(t);
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  LinComb<BinaryTree> acc = -LinComb<BinaryTree>::unit(t);
  const LinComb<std::pair<BinaryTree, BinaryTree>> delta = cop(t);
  for (const auto& [pair, c] : delta.terms()) {
    if (pair.first.size() == 0 || pair.second.size() == 0) continue;
    LinComb<BinaryTree> s = antipode_rec(pair.first, cop, mul, memo);
    for (const auto& [u, cu] : s.terms()) acc -= mul(u, pair.second) * (c * cu);
  }
  return memo.emplace(t, std::move(acc)).first->second;
}
}  // namespace

PbtElem antipode_q_generic(const PbtElem& xx) {
  PbtElem x = change_of_basis(xx, PBasis::Q);
  static std::mutex mtx;
  static std::map<BinaryTree, LinComb<BinaryTree>> memo;
  std::lock_guard<std::mutex> lock(mtx);
  auto cop = [](const BinaryTree& t) { return q_coproduct(pbt_of(PBasis::Q, t)).terms; };
  auto mul = [](const BinaryTree& a, const BinaryTree& b) {
    return q_product(pbt_of(PBasis::Q, a), pbt_of(PBasis::Q, b)).terms;
  };
  PbtElem out{PBasis::Q, {}};
  for (const auto& [t, c] : x.terms.terms()) out.terms += antipode_rec(t, cop, mul, memo) * c;
  return out;
}

PbtElem antipode_p(const PbtElem& xx) {
  PbtElem x = change_of_basis(xx, PBasis::P);
  static std::mutex mtx;
  static std::map<BinaryTree, LinComb<BinaryTree>> memo;
  std::lock_guard<std::mutex> lock(mtx);
  auto cop = [](const BinaryTree& t) { return p_coproduct(pbt_of(PBasis::P, t)).terms; };
  auto mul = [](const BinaryTree& a, const BinaryTree& b) {
    return p_product(pbt_of(PBasis::P, a), pbt_of(PBasis::P, b)).terms;
  };
  PbtElem out{PBasis::P, {}};
  for (const auto& [t, c] : x.terms.terms()) out.terms += antipode_rec(t, cop, mul, memo) * c;
  return out;
}

// ---------------------------------------------------------------------------
// Generators, primitives, pairing.

std::vector<BinaryTree> free_generators(int n) {
  std::vector<BinaryTree> out;
  for (const BinaryTree& t : enumerate_trees(n))
    if (!t.empty() && t.right().empty()) out.push_back(t);
  return out;
}

bool primitive_check(const PbtElem& x) {
  PbtElem q = change_of_basis(x, PBasis::Q);
  PbtTensor delta = q_coproduct(q);
  for (const auto& [t, c] : q.terms.terms()) {
    delta.terms.add({t, BinaryTree()}, -c);
    delta.terms.add({BinaryTree(), t}, -c);
  }
  // The degree-0 part of x would contribute x0 (x) x0 twice; primitive
  // elements have none, so any residue means not primitive.
  return delta.terms.is_zero();
}

Int pbt_scalar(const PbtElem& x, const PbtElem& y) {
  if (!primal_side(x.basis) || primal_side(y.basis))
    throw std::invalid_argument("pbt_scalar expects (primal, dual) arguments");
  PbtElem xp = change_of_basis(x, PBasis::P);
  PbtElem yq = change_of_basis(y, PBasis::Q);
  Int s = 0;
  for (const auto& [t, c] : xp.terms.terms()) s += c * yq.terms.coeff(t);
  return s;
}

// ---------------------------------------------------------------------------
// Graded graph pair.

Int GradedGraph::path_count(const BinaryTree& t) const {
  std::map<BinaryTree, Int> cnt;
  cnt[BinaryTree()] = 1;
  for (size_t k = 0; k + 1 < layers.size(); ++k)
    for (const BinaryTree& a : layers[k]) {
      auto it = cnt.find(a);
      if (it == cnt.end() || it->second == 0) continue;
      for (const BinaryTree& b : layers[k + 1]) {
        auto e = edges.find({a, b});
        if (e != edges.end()) cnt[b] += it->second * e->second;
      }
    }
  auto it = cnt.find(t);
  return it == cnt.end() ? Int(0) : it->second;
}

std::string GradedGraph::render_text() const {
  std::string out;
  for (size_t k = 0; k + 1 < layers.size(); ++k)
    for (const BinaryTree& a : layers[k]) {
      std::string w = a.empty() ? "e" : a.canonical_word().str();
      out += w + " ->";
      for (const BinaryTree& b : layers[k + 1]) {
        auto e = edges.find({a, b});
        if (e == edges.end()) continue;
        for (Int i = 0; i < e->second; ++i) out += " " + b.canonical_word().str();
      }
      out += "\n";
    }
  return out;
}

std::pair<GradedGraph, GradedGraph> fomin_graphs(int max_n) {
  GradedGraph gamma, gamma_star;
  BinaryTree dot = BinaryTree::leaf();
  for (int k = 0; k <= max_n; ++k) {
    gamma.layers.push_back(enumerate_trees(k));
    gamma_star.layers.push_back(enumerate_trees(k));
  }
  for (int k = 0; k < max_n; ++k)
    for (const BinaryTree& t : enumerate_trees(k)) {
      PbtElem up_p = p_product(pbt_of(PBasis::P, t), pbt_of(PBasis::P, dot));
      for (const auto& [u, c] : up_p.terms.terms()) gamma.edges[{t, u}] = c;
      PbtElem up_q = q_product(pbt_of(PBasis::Q, t), pbt_of(PBasis::Q, dot));
      for (const auto& [u, c] : up_q.terms.terms()) gamma_star.edges[{t, u}] = c;
    }
  return {std::move(gamma), std::move(gamma_star)};
}

// ---------------------------------------------------------------------------
// Comb subalgebras.

BinaryTree h_comb_tree(const std::vector<int>& composition) {
  BinaryTree t;
  for (int part : composition) t = h_product(t, left_chain(part));
  return t;
}

BinaryTree e_comb_tree(const std::vector<int>& composition) {
  BinaryTree t;
  for (int part : composition) t = e_product(t, right_chain(part));
  return t;
}

bool ncsf_comb_check(int n) {
  // Closure of both families under the product, checked against the full
  // P-expansion, not just the graft formula.
  for (int total = 2; total <= n; ++total)
    for (int na = 1; na < total; ++na)
      for (const std::vector<int>& ia : compositions(na))
        for (const std::vector<int>& ib : compositions(total - na)) {
          std::vector<int> iab = ia;
          iab.insert(iab.end(), ib.begin(), ib.end());
          BinaryTree ta = h_comb_tree(ia), tb = h_comb_tree(ib);
          if (!(h_product(ta, tb) == h_comb_tree(iab))) return false;
          if (!(p_product(h_of(ta), h_of(tb)) == h_of(h_comb_tree(iab)))) return false;
          BinaryTree ea = e_comb_tree(ia), eb = e_comb_tree(ib);
          if (!(e_product(ea, eb) == e_comb_tree(iab))) return false;
          if (!(p_product(e_of(ea), e_of(eb)) == e_of(e_comb_tree(iab)))) return false;
        }
  // The degree-3 complete function is the sum of all nondecreasing words.
  if (n >= 3) {
    std::map<Word, Int> words = expand_on_alphabet(p_to_f(pbt_of(PBasis::P, left_chain(3))), 3);
    for (const auto& [w, c] : words) {
      if (c != 1) return false;
      for (int i = 0; i + 1 < w.size(); ++i)
        if (w.at(i) > w.at(i + 1)) return false;
    }
    if (static_cast<int>(words.size()) != 10) return false;
  }
  // Antipode of each comb H is the mirrored comb on E, with sign (-1)^deg.
  for (int total = 1; total <= std::min(n, 5); ++total)
    for (const std::vector<int>& comp : compositions(total)) {
      BinaryTree t = h_comb_tree(comp);
      PbtElem lhs = change_of_basis(antipode_p(h_of(t)), PBasis::E);
      Int sign = total % 2 ? -1 : 1;
      PbtElem rhs{PBasis::E, LinComb<BinaryTree>::unit(mirror(t), sign)};
      if (!(lhs == rhs)) return false;
    }
  return true;
}

std::string pbt_str(const PbtElem& x) {
  if (x.terms.is_zero()) return "0";
  std::string tag = pbasis_name(x.basis);
  if (tag == "Qprime") tag = "Q'";
  std::string out;
  for (const auto& [t, c] : x.terms.terms()) {
    Int a = c < 0 ? Int(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) out += a.str() + " ";
    out += tag + "_{" + (t.empty() ? "" : t.canonical_word().str()) + "}";
  }
  return out;
}

}  // namespace pbt
