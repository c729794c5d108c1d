#include "pbt/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pbt/algebra.hpp"
#include "pbt/cartan.hpp"
#include "pbt/fixtures.hpp"
#include "pbt/fqsym.hpp"
#include "pbt/matrix.hpp"
#include "pbt/qpoly.hpp"
#include "pbt/tamari.hpp"
#include "pbt/trees.hpp"
#include "pbt/words.hpp"

namespace pbt {

namespace {

struct Runner {
  int degree;
  std::vector<CheckResult> out;

  void check(const std::string& suite, const std::string& name, bool pass,
             const std::string& detail = "") {
    out.push_back({suite, name, pass, detail});
  }

  // --- tables ---------------------------------------------------------------

  void tables() {
    struct Entry {
      const char* name;
      PBasis from, to;
      int n;
    };
    const Entry entries[] = {
        {"mat_H_P_2", PBasis::H, PBasis::P, 2},       {"mat_H_P_3", PBasis::H, PBasis::P, 3},
        {"mat_H_P_4", PBasis::H, PBasis::P, 4},       {"mat_E_P_2", PBasis::E, PBasis::P, 2},
        {"mat_E_P_3", PBasis::E, PBasis::P, 3},       {"mat_E_P_4", PBasis::E, PBasis::P, 4},
        {"mat_E_H_2", PBasis::E, PBasis::H, 2},       {"mat_E_H_3", PBasis::E, PBasis::H, 3},
        {"mat_E_H_4", PBasis::E, PBasis::H, 4},       {"mat_Qprime_Q_2", PBasis::Qprime, PBasis::Q, 2},
        {"mat_Qprime_Q_3", PBasis::Qprime, PBasis::Q, 3},
        {"mat_Qprime_Q_4", PBasis::Qprime, PBasis::Q, 4},
        {"mat_Prima_Q_2", PBasis::Prima, PBasis::Q, 2},
        {"mat_Prima_Q_3", PBasis::Prima, PBasis::Q, 3},
        {"mat_Prima_Q_4", PBasis::Prima, PBasis::Q, 4},
        {"mat_Primb_Q_2", PBasis::Primb, PBasis::Q, 2},
        {"mat_Primb_Q_3", PBasis::Primb, PBasis::Q, 3},
        {"mat_Primb_Q_4", PBasis::Primb, PBasis::Q, 4},
    };
    for (const Entry& e : entries) {
      if (e.n > degree) continue;
      std::string got = transition_matrix(e.from, e.to, e.n).render_text();
      check("tables", e.name, got == fixture(e.name));
    }
    if (degree >= 3) check("tables", "gram_3", gram_matrix(3).render_text() == fixture("gram_3"));
    for (int n = 2; n <= std::min(degree, 4); ++n) {
      std::string name = "cartan_" + std::to_string(n);
      check("tables", name, c_matrix(n).render_text() == fixture(name));
    }
    check("tables", "catalan_triangle",
          catalan_triangle(7).render_text() == fixture("catalan_triangle"));
    check("tables", "stirling_triangle",
          stirling1_triangle(7).render_text() == fixture("stirling_triangle"));
    for (int n = 3; n <= std::min(degree, 4); ++n) {
      std::string got;
      for (const BinaryTree& t : enumerate_trees(n)) {
        got += t.canonical_word().str() + " ->";
        for (const BinaryTree& c : tamari_covers(t)) got += " " + c.canonical_word().str();
        got += "\n";
      }
      std::string name = "tamari_covers_" + std::to_string(n);
      check("tables", name, got == fixture(name));
    }
    if (degree >= 4) {
      auto [gamma, gamma_star] = fomin_graphs(4);
      check("tables", "fomin_gamma", gamma.render_text() == fixture("fomin_gamma"));
      check("tables", "fomin_gamma_star",
            gamma_star.render_text() == fixture("fomin_gamma_star"));
    }
  }

  // --- base: word and tree properties ---------------------------------------

  void base() {
    // Standardization fixes permutations and preserves positional inversions.
    {
      bool ok = true;
      for (int n = 0; n <= std::min(degree, 6) && ok; ++n)
        for (const Perm& p : all_permutations(n))
          if (!(standardize(p.word()) == p)) {
            ok = false;
            break;
          }
      check("base", "standardize_fixes_permutations", ok);
    }
    {
      bool ok = true;
      uint64_t seed = 12345;
      auto rnd = [&seed]() {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        return seed >> 33;
      };
      for (int it = 0; it < 200 && ok; ++it) {
        int n = static_cast<int>(rnd() % 9);
        std::vector<int> v;
        for (int i = 0; i < n; ++i) v.push_back(static_cast<int>(rnd() % 5) + 1);
        Word w{v};
        ok = inversions(w) == inversions(standardize(w).word());
      }
      check("base", "standardize_keeps_inversions", ok);
    }
    // Shuffle counts; shifted shuffles are duplicate-free.
    {
      bool ok = true;
      Word u = Word::parse("121"), v = Word::parse("21");
      ok = static_cast<int>(shuffle(u, v).size()) == 10;
      std::vector<Perm> ss = shifted_shuffle(Perm::parse("21"), Perm::parse("312"));
      ok = ok && static_cast<int>(ss.size()) == 10 &&
           std::adjacent_find(ss.begin(), ss.end()) == ss.end();
      check("base", "shuffle_counts", ok);
    }
    // 132-avoiding permutations are counted by the Catalan numbers.
    {
      bool ok = true;
      Perm pat = Perm::parse("132");
      for (int n = 0; n <= std::min(degree, 8); ++n) {
        Int cnt = 0;
        for (const Perm& p : all_permutations(n))
          if (avoids_pattern(p, pat)) ++cnt;
        if (cnt != catalan_number(n)) ok = false;
      }
      check("base", "catalan_132_count", ok);
    }
    // Canonical words: 132-avoiding, round-trip, inverse-closed.
    {
      bool ok = true;
      Perm pat = Perm::parse("132");
      for (int n = 0; n <= std::min(degree, 7) && ok; ++n)
        for (const BinaryTree& t : enumerate_trees(n)) {
          Perm w = t.canonical_word();
          if (!avoids_pattern(w, pat) || !(BinaryTree::from_word(w.word()) == t) ||
              !avoids_pattern(w.inverse(), pat)) {
            ok = false;
            break;
          }
        }
      check("base", "canonical_words", ok);
    }
    // Classes: linear extensions agree with the S_n filter, are weak-order
    // intervals [min_word, canonical], and sum to n!.
    {
      bool ok = true;
      for (int n = 0; n <= std::min(degree, 6) && ok; ++n) {
        std::map<BinaryTree, std::vector<Perm>> filt;
        for (const Perm& p : all_permutations(n))
          filt[BinaryTree::from_word(p.word())].push_back(p);
        Int total = 0;
        for (const BinaryTree& t : enumerate_trees(n)) {
          std::vector<Perm> cls = enumerate_class(t);
          total += static_cast<int>(cls.size());
          if (cls != filt[t] || Int(static_cast<int>(cls.size())) != hook_count(t)) {
            ok = false;
            break;
          }
          Perm lo = min_word(t), hi = t.canonical_word();
          for (const Perm& p : all_permutations(n)) {
            bool inside = weak_order_leq(lo, p) && weak_order_leq(p, hi);
            bool member = std::binary_search(cls.begin(), cls.end(), p);
            if (inside != member) {
              ok = false;
              break;
            }
          }
        }
        if (total != factorial(n)) ok = false;
      }
      check("base", "sylvester_classes", ok);
    }
    // Hook q-polynomial equals the maj generating function of the class.
    {
      bool ok = true;
      for (int n = 0; n <= std::min(degree, 6) && ok; ++n)
        for (const BinaryTree& t : enumerate_trees(n)) {
          QPolynomial gen;
          for (const Perm& p : enumerate_class(t))
            gen = gen + QPolynomial::monomial(major_index(p));
          if (!(gen == hook_q(t))) {
            ok = false;
            break;
          }
        }
      check("base", "hook_q_maj", ok);
    }
    {
      bool ok = true;
      for (int n = 0; n <= std::min(degree, 7); ++n) {
        Int s = 0;
        for (const BinaryTree& t : enumerate_trees(n)) s += hook_count(t);
        if (s != factorial(n)) ok = false;
      }
      check("base", "hook_sum_factorial", ok);
    }
    // SSA/SSB are mutually inverse on all short words over small alphabets.
    {
      bool ok = true;
      for (int m = 1; m <= 4 && ok; ++m)
        for (int len = 0; len <= 5 && ok; ++len) {
          std::vector<int> w(static_cast<size_t>(len), 1);
          while (true) {
            Word word{w};
            auto [p, q] = ssa(word);
            if (!(p.shape() == q.shape()) || !q.is_standard_decreasing() ||
                !p.is_right_strict_bst() || !(ssb(p, q) == word)) {
              ok = false;
              break;
            }
            int i = len - 1;
            while (i >= 0 && w[static_cast<size_t>(i)] == m) --i;
            if (i < 0) break;
            ++w[static_cast<size_t>(i)];
            for (int j = i + 1; j < len; ++j) w[static_cast<size_t>(j)] = 1;
          }
        }
      check("base", "ssa_ssb_roundtrip", ok);
    }
    // Sylvester congruence agrees with the rewriting closure on short words.
    {
      bool ok = true;
      std::function<std::set<Word>(const Word&)> closure = [](const Word& w0) {
        std::set<Word> seen{w0};
        std::vector<Word> todo{w0};
        while (!todo.empty()) {
          Word w = todo.back();
          todo.pop_back();
          const std::vector<int>& v = w.letters();
          int n = w.size();
          for (int i = 0; i + 1 < n; ++i)
            for (int j = i + 2; j < n; ++j) {
              // u ac v b w  <->  u ca v b w  with a <= b < c
              int x = v[static_cast<size_t>(i)], y = v[static_cast<size_t>(i + 1)];
              int a = std::min(x, y), c = std::max(x, y);
              int b = v[static_cast<size_t>(j)];
              if (a <= b && b < c) {
                std::vector<int> u = v;
                std::swap(u[static_cast<size_t>(i)], u[static_cast<size_t>(i + 1)]);
                Word next{u};
                if (seen.insert(next).second) todo.push_back(next);
              }
            }
        }
        return seen;
      };
      for (int len = 0; len <= 5 && ok; ++len) {
        std::vector<int> w(static_cast<size_t>(len), 1);
        while (true) {
          Word word{w};
          std::set<Word> cls = closure(word);
          std::vector<Word> mine = word_class(word);
          if (std::vector<Word>(cls.begin(), cls.end()) != mine) {
            ok = false;
            break;
          }
          int i = len - 1;
          while (i >= 0 && w[static_cast<size_t>(i)] == 3) --i;
          if (i < 0) break;
          ++w[static_cast<size_t>(i)];
          for (int j = i + 1; j < len; ++j) w[static_cast<size_t>(j)] = 1;
        }
      }
      check("base", "sylvester_rewriting_oracle", ok);
    }
    // Congruence is stable under restriction to letter intervals.
    {
      bool ok = true;
      uint64_t seed = 99;
      auto rnd = [&seed]() {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        return seed >> 33;
      };
      for (int it = 0; it < 100 && ok; ++it) {
        int n = 1 + static_cast<int>(rnd() % std::max(1, std::min(degree, 7)));
        const auto& trees = enumerate_trees(n);
        const BinaryTree& t = trees[rnd() % trees.size()];
        std::vector<Perm> cls = enumerate_class(t);
        const Perm& u = cls[rnd() % cls.size()];
        const Perm& v = cls[rnd() % cls.size()];
        int lo = 1 + static_cast<int>(rnd() % static_cast<uint64_t>(n));
        int hi = lo + static_cast<int>(rnd() % static_cast<uint64_t>(n - lo + 1));
        ok = sylvester_congruent(restrict_to_interval(u.word(), lo, hi),
                                 restrict_to_interval(v.word(), lo, hi));
      }
      check("base", "restriction_compatibility", ok);
    }
    // Shapes: bst of a word, of its standardization, and the decreasing tree
    // of the inverse all agree.
    {
      bool ok = true;
      for (int n = 0; n <= std::min(degree, 6) && ok; ++n)
        for (const Perm& p : all_permutations(n)) {
          BinaryTree a = BinaryTree::from_word(p.word());
          BinaryTree b = decreasing_tree(p.inverse().word()).shape();
          if (!(a == b)) {
            ok = false;
            break;
          }
        }
      check("base", "bst_vs_decreasing_shapes", ok);
    }
    // Left subtrees along the right spine of the decreasing tree are the
    // gaps of the saillance positions.
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 6) && ok; ++n)
        for (const Perm& p : all_permutations(n)) {
          LabeledTree t = decreasing_tree(p.word());
          std::vector<int> sizes;  // left-subtree sizes from the root down
          for (LabeledTree u = t; !u.empty(); u = u.right())
            sizes.push_back(u.left().size());
          std::vector<int> pos = saillance_positions(p);  // decreasing
          std::vector<int> expect;
          for (int i = static_cast<int>(pos.size()) - 1; i >= 0; --i) {
            int prev = i + 1 < static_cast<int>(pos.size()) ? pos[static_cast<size_t>(i + 1)] : 0;
            expect.push_back(pos[static_cast<size_t>(i)] - prev - 1);
          }
          if (sizes != expect) {
            ok = false;
            break;
          }
        }
      check("base", "decreasing_tree_saillances", ok);
    }
    // Skeleton block of the maximal word.
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 7) && ok; ++n) {
        std::map<Skeleton, Perm> best;
        for (const BinaryTree& t : enumerate_trees(n)) {
          Skeleton s = skeleton(t);
          Perm w = t.canonical_word();
          auto it = best.find(s);
          if (it == best.end() || it->second < w) best[s] = w;
        }
        for (const auto& [s, w] : best)
          if (!(max_skeleton_word(s.k, s.l, n) == w)) ok = false;
      }
      check("base", "max_skeleton_word", ok);
    }
  }

  // --- orders ---------------------------------------------------------------

  void orders() {
    // Weak order from inversion sets equals the closure of the s_i covers.
    {
      bool ok = true;
      for (int n = 0; n <= std::min(degree, 5) && ok; ++n) {
        std::vector<Perm> all = all_permutations(n);
        std::map<Perm, int> idx;
        for (int i = 0; i < static_cast<int>(all.size()); ++i) idx[all[static_cast<size_t>(i)]] = i;
        // reach[i] = set of j with i <= j via covers
        std::vector<std::set<int>> up(all.size());
        for (int i = 0; i < static_cast<int>(all.size()); ++i) {
          const Perm& p = all[static_cast<size_t>(i)];
          for (int k = 0; k + 1 < n; ++k)
            if (p.at(k) < p.at(k + 1)) {
              std::vector<int> v = p.values();
              std::swap(v[static_cast<size_t>(k)], v[static_cast<size_t>(k + 1)]);
              up[static_cast<size_t>(i)].insert(idx.at(Perm(v)));
            }
        }
        for (int i = 0; i < static_cast<int>(all.size()) && ok; ++i) {
          std::set<int> reach{i};
          std::vector<int> todo{i};
          while (!todo.empty()) {
            int x = todo.back();
            todo.pop_back();
            for (int y : up[static_cast<size_t>(x)])
              if (reach.insert(y).second) todo.push_back(y);
          }
          for (int j = 0; j < static_cast<int>(all.size()); ++j)
            if (weak_order_leq(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)]) !=
                (reach.count(j) > 0)) {
              ok = false;
              break;
            }
        }
      }
      check("orders", "weak_order_cover_closure", ok);
    }
    // Tamari via vectors == weak order on canonical words == existence of
    // comparable class members; and == the closure of the cover moves.
    {
      bool ok = true;
      std::string why;
      for (int n = 1; n <= std::min(degree, 6) && ok; ++n) {
        const std::vector<BinaryTree>& trees = enumerate_trees(n);
        std::map<BinaryTree, std::vector<Perm>> cls;
        for (const BinaryTree& t : trees) cls[t] = enumerate_class(t);
        // cover closure
        std::map<BinaryTree, std::set<BinaryTree>> up;
        for (const BinaryTree& t : trees) {
          std::set<BinaryTree> reach{t};
          std::vector<BinaryTree> todo{t};
          while (!todo.empty()) {
            BinaryTree x = todo.back();
            todo.pop_back();
            for (const BinaryTree& y : tamari_covers(x))
              if (reach.insert(y).second) todo.push_back(y);
          }
          up[t] = std::move(reach);
        }
        for (const BinaryTree& a : trees) {
          for (const BinaryTree& b : trees) {
            bool vec = tamari_leq(a, b);
            bool weak = weak_order_leq(a.canonical_word(), b.canonical_word());
            bool closure = up[a].count(b) > 0;
            bool exist = false;
            for (const Perm& s : cls[a]) {
              for (const Perm& u : cls[b])
                if (weak_order_leq(s, u)) {
                  exist = true;
                  break;
                }
              if (exist) break;
            }
            if (vec != weak || vec != closure || vec != exist) {
              ok = false;
              why = "n=" + std::to_string(n) + " a=" + a.canonical_word().str() +
                    " b=" + b.canonical_word().str();
              break;
            }
          }
          if (!ok) break;
        }
      }
      check("orders", "tamari_three_way_equivalence", ok, why);
    }
    // Weak comparability descends to canonical words.
    {
      bool ok = true;
      for (int n = 0; n <= std::min(degree, 5) && ok; ++n)
        for (const Perm& p : all_permutations(n)) {
          BinaryTree tp = BinaryTree::from_word(p.word());
          for (int k = 0; k + 1 < n; ++k)
            if (p.at(k) < p.at(k + 1)) {
              std::vector<int> v = p.values();
              std::swap(v[static_cast<size_t>(k)], v[static_cast<size_t>(k + 1)]);
              Perm q{v};
              BinaryTree tq = BinaryTree::from_word(q.word());
              if (!weak_order_leq(tp.canonical_word(), tq.canonical_word())) {
                ok = false;
                break;
              }
            }
        }
      check("orders", "canonical_words_monotone", ok);
    }
    // Initial weak-order intervals ending at canonical words are unions of
    // classes.
    {
      bool ok = true;
      for (int n = 0; n <= std::min(degree, 6) && ok; ++n) {
        std::vector<Perm> all = all_permutations(n);
        for (const BinaryTree& t : enumerate_trees(n)) {
          Perm hi = t.canonical_word();
          std::set<Perm> interval;
          for (const Perm& p : all)
            if (weak_order_leq(p, hi)) interval.insert(p);
          for (const Perm& p : interval)
            for (const Perm& s : enumerate_class(BinaryTree::from_word(p.word())))
              if (!interval.count(s)) {
                ok = false;
                break;
              }
          if (!ok) break;
        }
      }
      check("orders", "initial_intervals_class_unions", ok);
    }
    // Tamari vector bijection: round trips and Catalan counts.
    {
      bool ok = true;
      for (int n = 0; n <= std::min(degree, 7) && ok; ++n) {
        Int cnt = 0;
        for (const BinaryTree& t : enumerate_trees(n)) {
          Perm w = t.canonical_word();
          if (!(from_tamari_vector(to_tamari_vector(w)) == w)) {
            ok = false;
            break;
          }
          ++cnt;
        }
        if (cnt != catalan_number(n)) ok = false;
      }
      check("orders", "tamari_vector_roundtrip", ok);
    }
    // P-product supports are Tamari intervals.
    {
      bool ok = true;
      for (int na = 1; na + 1 <= std::min(degree, 6) && ok; ++na)
        for (int nb = 1; na + nb <= std::min(degree, 6) && ok; ++nb)
          for (const BinaryTree& a : enumerate_trees(na)) {
            for (const BinaryTree& b : enumerate_trees(nb)) {
              PbtElem prod = p_product(pbt_of(PBasis::P, a), pbt_of(PBasis::P, b));
              std::vector<BinaryTree> support;
              for (const auto& [t, c] : prod.terms.terms()) support.push_back(t);
              if (!is_interval(support)) {
                ok = false;
                break;
              }
            }
            if (!ok) break;
          }
      check("orders", "product_supports_are_intervals", ok);
    }
    // Moebius: diagonal 1, interval sums 0, and the Prima matrix pattern.
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 5) && ok; ++n) {
        const std::vector<BinaryTree>& trees = enumerate_trees(n);
        IntMatrix prima = transition_matrix(PBasis::Prima, PBasis::Q, n).m;
        for (size_t i = 0; i < trees.size() && ok; ++i)
          for (size_t j = 0; j < trees.size(); ++j) {
            const BinaryTree& a = trees[j];  // column tree of M_{Prima,Q}
            const BinaryTree& b = trees[i];
            Int expect = 0;
            if (tamari_leq(a, b)) {
              expect = tamari_mobius(a, b);
              Int s = 0;
              for (const BinaryTree& u : trees)
                if (tamari_leq(a, u) && tamari_leq(u, b)) s += tamari_mobius(a, u);
              if (s != (a == b ? 1 : 0)) {
                ok = false;
                break;
              }
            }
            if (prima.at(static_cast<int>(i), static_cast<int>(j)) != expect) {
              ok = false;
              break;
            }
          }
      }
      check("orders", "mobius_matches_prima", ok);
    }
  }

  // --- hopf -----------------------------------------------------------------

  void hopf() {
    int d5 = std::min(degree, 5);
    std::vector<std::vector<BinaryTree>> by_size;
    for (int n = 0; n <= std::max(d5, 0); ++n) by_size.push_back(enumerate_trees(n));

    auto p_unit = [](const BinaryTree& t) { return pbt_of(PBasis::P, t); };
    auto q_unit = [](const BinaryTree& t) { return pbt_of(PBasis::Q, t); };

    // Associativity on basis triples.
    {
      bool okp = true, okq = true;
      for (int a = 1; a <= d5; ++a)
        for (int b = 1; a + b <= d5; ++b)
          for (int c = 1; a + b + c <= d5; ++c)
            for (const BinaryTree& ta : by_size[static_cast<size_t>(a)])
              for (const BinaryTree& tb : by_size[static_cast<size_t>(b)])
                for (const BinaryTree& tc : by_size[static_cast<size_t>(c)]) {
                  if (!(p_product(p_product(p_unit(ta), p_unit(tb)), p_unit(tc)) ==
                        p_product(p_unit(ta), p_product(p_unit(tb), p_unit(tc)))))
                    okp = false;
                  if (!(q_product(q_product(q_unit(ta), q_unit(tb)), q_unit(tc)) ==
                        q_product(q_unit(ta), q_product(q_unit(tb), q_unit(tc)))))
                    okq = false;
                }
      check("hopf", "p_associative", okp);
      check("hopf", "q_associative", okq);
    }
    // Coassociativity, counit, and the bialgebra law, on both sides.
    {
      bool okp = true, okq = true;
      auto coassoc = [&](auto cop, auto unit_of, const BinaryTree& t) {
        PbtTensor d1 = cop(unit_of(t));
        // (Delta x id) Delta vs (id x Delta) Delta as rank-3 maps
        LinComb<std::tuple<BinaryTree, BinaryTree, BinaryTree>> lhs, rhs;
        for (const auto& [k, c] : d1.terms.terms()) {
          PbtTensor dl = cop(unit_of(k.first)), dr = cop(unit_of(k.second));
          for (const auto& [k2, c2] : dl.terms.terms())
            lhs.add({k2.first, k2.second, k.second}, c * c2);
          for (const auto& [k2, c2] : dr.terms.terms())
            rhs.add({k.first, k2.first, k2.second}, c * c2);
        }
        return lhs == rhs;
      };
      auto counit = [&](auto cop, auto unit_of, const BinaryTree& t) {
        PbtTensor d1 = cop(unit_of(t));
        LinComb<BinaryTree> left, right;
        for (const auto& [k, c] : d1.terms.terms()) {
          if (k.first.empty()) left.add(k.second, c);
          if (k.second.empty()) right.add(k.first, c);
        }
        return left == LinComb<BinaryTree>::unit(t) && right == LinComb<BinaryTree>::unit(t);
      };
      for (int n = 0; n <= d5; ++n)
        for (const BinaryTree& t : by_size[static_cast<size_t>(n)]) {
          auto pcop = [](const PbtElem& x) { return p_coproduct(x); };
          auto qcop = [](const PbtElem& x) { return q_coproduct(x); };
          if (!coassoc(pcop, p_unit, t) || !counit(pcop, p_unit, t)) okp = false;
          if (!coassoc(qcop, q_unit, t) || !counit(qcop, q_unit, t)) okq = false;
        }
      check("hopf", "p_coassociative_counit", okp);
      check("hopf", "q_coassociative_counit", okq);
    }
    {
      bool okp = true, okq = true;
      auto tensor_mul = [](const PbtTensor& x, const PbtTensor& y, bool pside) {
        PbtTensor out{x.left, x.right, {}};
        for (const auto& [kx, cx] : x.terms.terms())
          for (const auto& [ky, cy] : y.terms.terms()) {
            PbtElem l, r;
            if (pside) {
              l = p_product(pbt_of(PBasis::P, kx.first), pbt_of(PBasis::P, ky.first));
              r = p_product(pbt_of(PBasis::P, kx.second), pbt_of(PBasis::P, ky.second));
            } else {
              l = q_product(pbt_of(PBasis::Q, kx.first), pbt_of(PBasis::Q, ky.first));
              r = q_product(pbt_of(PBasis::Q, kx.second), pbt_of(PBasis::Q, ky.second));
            }
            for (const auto& [kl, cl] : l.terms.terms())
              for (const auto& [kr, cr] : r.terms.terms())
                out.terms.add({kl, kr}, cx * cy * cl * cr);
          }
        return out;
      };
      for (int a = 1; a <= d5; ++a)
        for (int b = 1; a + b <= d5; ++b)
          for (const BinaryTree& ta : by_size[static_cast<size_t>(a)])
            for (const BinaryTree& tb : by_size[static_cast<size_t>(b)]) {
              if (!(p_coproduct(p_product(p_unit(ta), p_unit(tb))) ==
                    tensor_mul(p_coproduct(p_unit(ta)), p_coproduct(p_unit(tb)), true)))
                okp = false;
              if (!(q_coproduct(q_product(q_unit(ta), q_unit(tb))) ==
                    tensor_mul(q_coproduct(q_unit(ta)), q_coproduct(q_unit(tb)), false)))
                okq = false;
            }
      check("hopf", "p_bialgebra_law", okp);
      check("hopf", "q_bialgebra_law", okq);
    }
    // Antipode: axiom on both sides, and the composition formula agrees with
    // the generic recursion.
    {
      bool ok_axiom = true, ok_formula = true, ok_p = true;
      for (int n = 1; n <= d5; ++n)
        for (const BinaryTree& t : by_size[static_cast<size_t>(n)]) {
          PbtElem sq = antipode_q(q_unit(t));
          if (!(sq == antipode_q_generic(q_unit(t)))) ok_formula = false;
          PbtElem acc{PBasis::Q, {}};
          PbtTensor dq = q_coproduct(q_unit(t));
          for (const auto& [k, c] : dq.terms.terms())
            acc.terms += q_product(antipode_q(q_unit(k.first)), q_unit(k.second)).terms * c;
          if (!acc.terms.is_zero()) ok_axiom = false;
          PbtElem accp{PBasis::P, {}};
          PbtTensor dp = p_coproduct(p_unit(t));
          for (const auto& [k, c] : dp.terms.terms())
            accp.terms += p_product(antipode_p(p_unit(k.first)), p_unit(k.second)).terms * c;
          if (!accp.terms.is_zero()) ok_p = false;
        }
      check("hopf", "antipode_axiom_q", ok_axiom);
      check("hopf", "antipode_formula_matches_generic", ok_formula);
      check("hopf", "antipode_axiom_p", ok_p);
    }
    // Graded duality and both adjunctions.
    {
      bool ok = true;
      for (int n = 0; n <= d5 && ok; ++n)
        for (const BinaryTree& t : by_size[static_cast<size_t>(n)])
          for (const BinaryTree& u : by_size[static_cast<size_t>(n)])
            if (pbt_scalar(p_unit(t), q_unit(u)) != (t == u ? 1 : 0)) {
              ok = false;
              break;
            }
      check("hopf", "duality_pairing", ok);
    }
    {
      bool ok1 = true, ok2 = true;
      for (int a = 1; a <= d5; ++a)
        for (int b = 1; a + b <= d5; ++b)
          for (const BinaryTree& ta : by_size[static_cast<size_t>(a)])
            for (const BinaryTree& tb : by_size[static_cast<size_t>(b)])
              for (const BinaryTree& tu : by_size[static_cast<size_t>(a + b)]) {
                // <P_a P_b, Q_u> = coefficient of (a,b) in Delta Q_u
                Int lhs = p_product(p_unit(ta), p_unit(tb)).terms.coeff(tu);
                Int rhs = q_coproduct(q_unit(tu)).terms.coeff({ta, tb});
                if (lhs != rhs) ok1 = false;
                // mult of Q_u in Q_a Q_b = coefficient of (a,b) in Delta P_u
                Int lhs2 = q_product(q_unit(ta), q_unit(tb)).terms.coeff(tu);
                Int rhs2 = p_coproduct(p_unit(tu)).terms.coeff({ta, tb});
                if (lhs2 != rhs2) ok2 = false;
              }
      check("hopf", "product_coproduct_adjunction", ok1);
      check("hopf", "coproduct_product_adjunction", ok2);
    }
    // phi is a Hopf morphism.
    {
      bool okp = true, okc = true;
      for (int a = 1; a <= d5; ++a)
        for (int b = 1; a + b <= d5; ++b)
          for (const BinaryTree& ta : by_size[static_cast<size_t>(a)])
            for (const BinaryTree& tb : by_size[static_cast<size_t>(b)]) {
              PbtElem lhs = change_of_basis(phi(p_product(p_unit(ta), p_unit(tb))), PBasis::Q);
              PbtElem rhs = q_product(change_of_basis(phi(p_unit(ta)), PBasis::Q),
                                      change_of_basis(phi(p_unit(tb)), PBasis::Q));
              if (!(lhs == rhs)) okp = false;
            }
      for (int n = 1; n <= d5; ++n)
        for (const BinaryTree& t : by_size[static_cast<size_t>(n)]) {
          PbtTensor dp = p_coproduct(p_unit(t));
          PbtTensor lhs{PBasis::Q, PBasis::Q, {}};
          for (const auto& [k, c] : dp.terms.terms()) {
            PbtElem l = change_of_basis(phi(pbt_of(PBasis::P, k.first)), PBasis::Q);
            PbtElem r = change_of_basis(phi(pbt_of(PBasis::P, k.second)), PBasis::Q);
            for (const auto& [kl, cl] : l.terms.terms())
              for (const auto& [kr, cr] : r.terms.terms())
                lhs.terms.add({kl, kr}, c * cl * cr);
          }
          PbtTensor rhs = q_coproduct(change_of_basis(phi(p_unit(t)), PBasis::Q));
          if (!(lhs == rhs)) okc = false;
        }
      check("hopf", "phi_product_morphism", okp);
      check("hopf", "phi_coproduct_morphism", okc);
    }
    // Multiplicative bases agree with the expanded products.
    {
      bool okh = true, oke = true;
      for (int a = 1; a + 1 <= std::min(degree, 6); ++a)
        for (int b = 1; a + b <= std::min(degree, 6); ++b)
          for (const BinaryTree& ta : enumerate_trees(a))
            for (const BinaryTree& tb : enumerate_trees(b)) {
              if (!(p_product(h_of(ta), h_of(tb)) == h_of(h_product(ta, tb)))) okh = false;
              if (!(p_product(e_of(ta), e_of(tb)) == e_of(e_product(ta, tb)))) oke = false;
            }
      check("hopf", "h_multiplicative", okh);
      check("hopf", "e_multiplicative", oke);
    }
    // Qprime triangularity: leading term Q at the inverse word, the rest
    // lexicographically greater.
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 6) && ok; ++n)
        for (const BinaryTree& t : enumerate_trees(n)) {
          PbtElem qp = qprime_of(t);
          BinaryTree lead = BinaryTree::from_canonical(t.canonical_word().inverse());
          if (qp.terms.coeff(lead) != 1) {
            ok = false;
            break;
          }
          for (const auto& [u, c] : qp.terms.terms())
            if (u < lead) {
              ok = false;
              break;
            }
        }
      check("hopf", "qprime_triangular", ok);
    }
    // Primitive elements.
    {
      bool ok = true;
      for (int n = 1; n <= d5 && ok; ++n)
        for (const BinaryTree& t : enumerate_trees(n)) {
          if (t.right().empty() && !primitive_check(prima_of(t))) ok = false;
          if (t.left().empty() && !primitive_check(primb_of(t))) ok = false;
        }
      check("hopf", "prima_primb_primitive", ok);
    }
    // Freeness: generating series of the generators.
    {
      // sum C_n t^n = 1 / (1 - sum g_n t^n) through degree 8
      int top = std::min(std::max(degree, 0), 8);
      std::vector<Int> g(static_cast<size_t>(top) + 1, 0);
      for (int n = 1; n <= top; ++n) g[static_cast<size_t>(n)] = static_cast<int>(free_generators(n).size());
      std::vector<Int> series(static_cast<size_t>(top) + 1, 0);  // coefficients of 1/(1-G)
      series[0] = 1;
      for (int n = 1; n <= top; ++n)
        for (int k = 1; k <= n; ++k) series[static_cast<size_t>(n)] += g[static_cast<size_t>(k)] * series[static_cast<size_t>(n - k)];
      bool ok = true;
      for (int n = 0; n <= top; ++n)
        if (series[static_cast<size_t>(n)] != catalan_number(n)) ok = false;
      check("hopf", "freeness_generating_series", ok);
    }
    // E on H support sizes: 2^k with balanced signs.
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 6) && ok; ++n) {
        IntMatrix eh = transition_matrix(PBasis::E, PBasis::H, n).m;
        const std::vector<BinaryTree>& trees = enumerate_trees(n);
        for (size_t j = 0; j < trees.size(); ++j) {
          int spine = 0;
          for (BinaryTree u = trees[j]; !u.empty(); u = u.left()) ++spine;
          int k = n - spine;
          Int plus = 0, minus = 0;
          for (size_t i = 0; i < trees.size(); ++i) {
            const Int& v = eh.at(static_cast<int>(i), static_cast<int>(j));
            if (v == 1) ++plus;
            else if (v == -1) ++minus;
            else if (v != 0) { ok = false; }
          }
          Int want = 1;
          for (int e = 0; e < k; ++e) want *= 2;
          if (plus + minus != want || plus - minus != (k == 0 ? 1 : 0)) ok = false;
        }
      }
      check("hopf", "e_to_h_support", ok);
    }
    // Unimodularity of the cached transition matrices.
    {
      bool ok = true;
      for (int n = 0; n <= std::min(degree, 6); ++n)
        for (PBasis b : {PBasis::H, PBasis::E, PBasis::Qprime, PBasis::Prima, PBasis::Primb}) {
          Int det = transition_matrix(b, b == PBasis::H || b == PBasis::E ? PBasis::P : PBasis::Q, n)
                        .m.determinant();
          if (det != 1 && det != -1) ok = false;
        }
      check("hopf", "unimodular_transitions", ok);
    }
    // Fomin path counts and the commutator probe.
    {
      int top = std::min(degree, 7);
      auto [gamma, gamma_star] = fomin_graphs(top);
      bool ok = true;
      for (int n = 0; n <= top; ++n) {
        Int s = 0;
        for (const BinaryTree& t : enumerate_trees(n))
          s += gamma.path_count(t) * gamma_star.path_count(t);
        if (s != factorial(n)) ok = false;
      }
      check("hopf", "fomin_path_counts", ok);

      std::string note = "DU-UD on layers:";
      bool identity = true;
      for (int n = 1; n + 1 <= std::min(top, 4); ++n) {
        const std::vector<BinaryTree>& layer = enumerate_trees(n);
        for (const BinaryTree& t : layer) {
          LinComb<BinaryTree> du, ud;
          for (const BinaryTree& u : enumerate_trees(n + 1)) {
            auto e = gamma.edges.find({t, u});
            if (e == gamma.edges.end()) continue;
            for (const BinaryTree& v : layer) {
              auto f = gamma_star.edges.find({v, u});
              if (f != gamma_star.edges.end()) du.add(v, e->second * f->second);
            }
          }
          for (const BinaryTree& v : enumerate_trees(n - 1)) {
            auto f = gamma_star.edges.find({v, t});
            if (f == gamma_star.edges.end()) continue;
            for (const BinaryTree& u : layer) {
              auto e = gamma.edges.find({v, u});
              if (e != gamma.edges.end()) ud.add(u, e->second * f->second);
            }
          }
          LinComb<BinaryTree> diff = du - ud;
          if (!(diff == LinComb<BinaryTree>::unit(t))) identity = false;
        }
        note += " n=" + std::to_string(n) + (identity ? " I" : " not-I");
      }
      check("hopf", "fomin_commutator_probe", true,
            identity ? "DU-UD = identity on layers 1..3" : note);
    }
    // The comb subalgebras.
    check("hopf", "ncsf_combs", ncsf_comb_check(std::min(degree, 5)));
  }

  // --- cartan ---------------------------------------------------------------

  void cartan() {
    // Total mass of the Gram matrix is n!.
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 7); ++n) {
        Int s = 0;
        IntMatrix m = gram_matrix(n).m;
        for (int i = 0; i < m.rows(); ++i)
          for (int j = 0; j < m.cols(); ++j) s += m.at(i, j);
        if (s != factorial(n)) ok = false;
      }
      check("cartan", "gram_mass_factorial", ok);
    }
    // Counting route equals the scalar-product route.
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 5) && ok; ++n)
        for (const BinaryTree& t : enumerate_trees(n)) {
          for (const BinaryTree& u : enumerate_trees(n)) {
            FqElem pt = p_to_f(pbt_of(PBasis::P, t));
            FqElem pu = p_to_f(pbt_of(PBasis::P, u));
            if (gram_entry(t, u) != fq_scalar(pt, pu)) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
      check("cartan", "gram_two_routes", ok);
    }
    // Gram matrix symmetric and equal to M_{Qprime,Q}.
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 5); ++n) {
        IntMatrix g = gram_matrix(n).m;
        if (!(g == g.transpose())) ok = false;
        if (!(g == transition_matrix(PBasis::Qprime, PBasis::Q, n).m)) ok = false;
      }
      check("cartan", "gram_equals_qprime_matrix", ok);
    }
    // nu is an involution preserving skeletons.
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 7) && ok; ++n)
        for (const BinaryTree& t : enumerate_trees(n))
          if (!(nu(nu(t)) == t) || !(skeleton(nu(t)) == skeleton(t))) {
            ok = false;
            break;
          }
      check("cartan", "nu_involution", ok);
    }
    // Blocks of the Gram matrix = skeleton classes (closure of nonzero
    // entries).
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 6); ++n) {
        const std::vector<BinaryTree>& trees = enumerate_trees(n);
        int c = static_cast<int>(trees.size());
        std::vector<int> comp(static_cast<size_t>(c));
        for (int i = 0; i < c; ++i) comp[static_cast<size_t>(i)] = i;
        std::function<int(int)> find = [&](int x) {
          while (comp[static_cast<size_t>(x)] != x) x = comp[static_cast<size_t>(x)] = comp[static_cast<size_t>(comp[static_cast<size_t>(x)])];
          return x;
        };
        IntMatrix g = gram_matrix(n).m;
        for (int i = 0; i < c; ++i)
          for (int j = 0; j < c; ++j)
            if (g.at(i, j) != 0) comp[static_cast<size_t>(find(i))] = find(j);
        std::map<int, std::set<Skeleton>> blocks;
        std::map<Skeleton, std::set<int>> by_skel;
        for (int i = 0; i < c; ++i) {
          blocks[find(i)].insert(skeleton(trees[static_cast<size_t>(i)]));
          by_skel[skeleton(trees[static_cast<size_t>(i)])].insert(find(i));
        }
        for (const auto& [root, sk] : blocks)
          if (sk.size() != 1) ok = false;
        for (const auto& [sk, roots] : by_skel)
          if (roots.size() != 1) ok = false;
      }
      check("cartan", "blocks_are_skeleton_classes", ok);
    }
    // C^{(n)} block lower unitriangular.
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 6); ++n) {
        TransitionMatrix cm = c_matrix(n);
        int c = static_cast<int>(cm.index.size());
        std::vector<Skeleton> sk;
        for (const BinaryTree& t : cm.index) sk.push_back(skeleton(t));
        for (int i = 0; i < c; ++i) {
          if (cm.m.at(i, i) != 1) ok = false;
          for (int j = i + 1; j < c; ++j)
            if (cm.m.at(i, j) != 0) ok = false;
          for (int j = 0; j < i; ++j)
            if (cm.m.at(i, j) != 0 && !(sk[static_cast<size_t>(i)] == sk[static_cast<size_t>(j)])) ok = false;
        }
      }
      check("cartan", "c_matrix_block_unitriangular", ok);
    }
    // C equals the Gram matrix with nu-permuted columns in the skeleton order.
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 5); ++n) {
        TransitionMatrix cm = c_matrix(n);
        for (size_t i = 0; i < cm.index.size(); ++i)
          for (size_t j = 0; j < cm.index.size(); ++j)
            if (cm.m.at(static_cast<int>(i), static_cast<int>(j)) !=
                gram_entry(cm.index[i], nu(cm.index[j])))
              ok = false;
      }
      check("cartan", "c_matrix_definition", ok);
    }
    // Block stats match the two triangles at the fitted indices.
    {
      bool ok = true;
      std::string why;
      Triangle cat = catalan_triangle(7), st = stirling1_triangle(7);
      for (int n = 4; n <= std::min(degree, 6); ++n) {
        for (const auto& [s, md] : block_stats(n)) {
          int row = n - s.k, idx = n - s.k - s.l + 1;  // 1-based
          if (row < 1 || idx < 1 || idx > row) {
            ok = false;
            continue;
          }
          if (md.first != cat.rows[static_cast<size_t>(row - 1)][static_cast<size_t>(idx - 1)] ||
              md.second != st.rows[static_cast<size_t>(row - 1)][static_cast<size_t>(idx - 1)]) {
            ok = false;
            why = "n=" + std::to_string(n) + " k=" + std::to_string(s.k) + " l=" + std::to_string(s.l);
          }
        }
        // Totals: block row counts sum to C_n, masses to n!.
        Int ms = 0, ds = 0;
        for (const auto& [s, md] : block_stats(n)) {
          ms += md.first;
          ds += md.second;
        }
        if (ms != catalan_number(n) || ds != factorial(n)) ok = false;
      }
      check("cartan", "block_stats_triangles", ok, why);
    }
    // Triangle row sums.
    {
      bool ok = true;
      Triangle cat = catalan_triangle(7), st = stirling1_triangle(7);
      for (int n = 1; n <= 7; ++n) {
        Int cs = 0, ss = 0;
        for (const Int& x : cat.rows[static_cast<size_t>(n - 1)]) cs += x;
        for (const Int& x : st.rows[static_cast<size_t>(n - 1)]) ss += x;
        if (cs != catalan_number(n) || ss != factorial(n)) ok = false;
      }
      check("cartan", "triangle_row_sums", ok);
    }
    // Co-sylvester classes count C_n; alternating moves connect each skeleton
    // block.
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 6); ++n) {
        std::set<BinaryTree> classes;
        for (const Perm& p : all_permutations(n))
          classes.insert(BinaryTree::from_word(p.inverse().word()));
        if (Int(static_cast<int>(classes.size())) != catalan_number(n)) ok = false;
      }
      check("cartan", "cosylvester_class_count", ok);
    }
    {
      bool ok = true;
      for (int n = 1; n <= std::min(degree, 5); ++n) {
        std::vector<Perm> all = all_permutations(n);
        std::map<Perm, int> idx;
        for (int i = 0; i < static_cast<int>(all.size()); ++i) idx[all[static_cast<size_t>(i)]] = i;
        std::vector<int> comp(all.size());
        for (size_t i = 0; i < all.size(); ++i) comp[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
          while (comp[static_cast<size_t>(x)] != x) x = comp[static_cast<size_t>(x)] = comp[static_cast<size_t>(comp[static_cast<size_t>(x)])];
          return x;
        };
        // Union within sylvester classes and within co-sylvester classes.
        std::map<BinaryTree, int> first_s, first_c;
        for (const Perm& p : all) {
          BinaryTree ts = BinaryTree::from_word(p.word());
          BinaryTree tc = BinaryTree::from_word(p.inverse().word());
          int i = idx.at(p);
          if (auto [it, fresh] = first_s.emplace(ts, i); !fresh)
            comp[static_cast<size_t>(find(i))] = find(it->second);
          if (auto [it, fresh] = first_c.emplace(tc, i); !fresh)
            comp[static_cast<size_t>(find(i))] = find(it->second);
        }
        std::map<Skeleton, std::set<int>> by_skel;
        for (const Perm& p : all)
          by_skel[skeleton(BinaryTree::from_word(p.word()))].insert(find(idx.at(p)));
        for (const auto& [s, roots] : by_skel)
          if (roots.size() != 1) ok = false;
      }
      check("cartan", "skeleton_blocks_connected", ok);
    }
  }
};

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, int degree) {
  Runner r{degree, {}};
  if (degree >= 0) {
    bool all = suite == "all";
    if (all || suite == "tables") r.tables();
    if (all || suite == "base") r.base();
    if (all || suite == "orders") r.orders();
    if (all || suite == "hopf") r.hopf();
    if (all || suite == "cartan") r.cartan();
  }
  return r.out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& c : results)
    if (!c.pass) return false;
  return true;
}

std::string render_report(const std::vector<CheckResult>& results) {
  std::string out;
  int pass = 0;
  for (const CheckResult& c : results) {
    out += c.suite + "/" + c.name + ": " + (c.pass ? "ok" : "FAIL");
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    out += "\n";
    if (c.pass) ++pass;
  }
  out += std::to_string(pass) + "/" + std::to_string(results.size()) + " checks passed\n";
  return out;
}

std::string render_report_json(const std::vector<CheckResult>& results, int degree,
                               const std::string& suite) {
  nlohmann::json j;
  j["degree"] = degree;
  j["suite"] = suite;
  j["pass"] = all_pass(results);
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : results)
    j["checks"].push_back({{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return j.dump(2) + "\n";
}

}  // namespace pbt
