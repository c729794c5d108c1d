// Command-line front end: regenerate the transition tables, inspect sylvester
// classes, export the Tamari order, print Gram matrices and run the
// verification suites.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pbt/algebra.hpp"
#include "pbt/cartan.hpp"
#include "pbt/fqsym.hpp"
#include "pbt/matrix.hpp"
#include "pbt/tamari.hpp"
#include "pbt/trees.hpp"
#include "pbt/verify.hpp"
#include "pbt/words.hpp"

namespace {

constexpr int kDefaultCap = 8;

bool check_degree(int degree, int cap, bool force) {
  if (degree < 0) {
    std::cerr << "error: degree must be nonnegative\n";
    return false;
  }
  if (degree <= cap) return true;
  if (!force) {
    std::cerr << "error: degree " << degree << " exceeds the cap " << cap
              << " (use --force to override)\n";
    return false;
  }
  std::cerr << "warning: degree " << degree << " exceeds the cap " << cap
            << "; this may take a while\n";
  return true;
}

std::string render(const pbt::TransitionMatrix& m, const std::string& format) {
  if (format == "csv") return m.render_csv();
  if (format == "json") return m.render_json();
  return m.render_text();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of binary search trees: sylvester classes, "
               "the Hopf algebra of planar binary trees, the Tamari order and "
               "the associated Gram matrices"};
  app.require_subcommand(1);

  int cap = kDefaultCap;
  bool force = false;
  app.add_option("--max-degree", cap, "degree cap for all commands")->capture_default_str();
  app.add_flag("--force", force, "allow degrees above the cap (slow)");

  // matrix
  std::string from_s = "H", to_s = "P", format = "text";
  int m_degree = 3;
  CLI::App* matrix = app.add_subcommand("matrix", "print a transition matrix M_{from,to}");
  matrix->add_option("--from", from_s, "source basis (P,Q,Qprime,H,E,Prima,Primb)")->required();
  matrix->add_option("--to", to_s, "target basis")->required();
  matrix->add_option("--degree", m_degree, "homogeneous degree")->required();
  matrix->add_option("--format", format, "text, csv or json")->capture_default_str();

  // class
  std::string class_word;
  CLI::App* cls = app.add_subcommand("class", "inspect the sylvester class of a word");
  cls->add_option("word", class_word, "word, e.g. 21354 or 12,10,8")->required();

  // tamari
  int t_degree = 3;
  bool dot = false;
  CLI::App* tam = app.add_subcommand("tamari", "Tamari order on trees of one degree");
  tam->add_option("--degree", t_degree, "tree size")->required();
  tam->add_flag("--dot", dot, "emit the Hasse diagram as DOT");

  // gram
  int g_degree = 3;
  bool reordered = false, blocks = false;
  std::string g_format = "text";
  CLI::App* gram = app.add_subcommand("gram", "Gram matrix of the P basis");
  gram->add_option("--degree", g_degree, "degree")->required();
  gram->add_flag("--reordered", reordered, "skeleton-ordered matrix C instead of M");
  gram->add_flag("--blocks", blocks, "append the per-block (k,l,rows,sum) report");
  gram->add_option("--format", g_format, "text, csv or json")->capture_default_str();

  // verify
  int v_degree = kDefaultCap;
  std::string suite = "all";
  bool json_report = false;
  CLI::App* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--degree", v_degree, "degree bound")->capture_default_str();
  verify->add_option("--suite", suite, "hopf, orders, tables, cartan or all")
      ->check(CLI::IsMember({"hopf", "orders", "tables", "cartan", "base", "all"}))
      ->capture_default_str();
  verify->add_flag("--json", json_report, "machine-readable report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*matrix) {
      if (!check_degree(m_degree, cap, force)) return 2;
      auto from = pbt::pbasis_parse(from_s);
      auto to = pbt::pbasis_parse(to_s);
      if (!from || !to) {
        std::cerr << "error: unknown basis (want P,Q,Qprime,H,E,Prima,Primb)\n";
        return 2;
      }
      std::cout << render(pbt::transition_matrix(*from, *to, m_degree), format);
      return 0;
    }

    if (*cls) {
      pbt::Word w = pbt::Word::parse(class_word);
      if (!check_degree(w.size(), cap, force)) return 2;
      pbt::LabeledTree bst = pbt::bst_insert(w);
      pbt::BinaryTree shape = bst.shape();
      std::cout << "word: " << w.str() << "\n";
      std::cout << "canonical: " << bst.postfix_right_left().str() << "\n";
      std::cout << "tree: " << shape.canonical_word().str() << "\n";
      std::cout << "parens: " << shape.parens() << "\n";
      std::vector<pbt::Word> members = pbt::word_class(w);
      std::cout << "class (" << members.size() << "):";
      for (const pbt::Word& m : members) std::cout << " " << m.str();
      std::cout << "\n";
      std::cout << "hook_count: " << pbt::hook_count(shape).str() << "\n";
      std::cout << "hook_q: " << pbt::hook_q(shape).str() << "\n";
      auto [p, q] = pbt::ssa(w);
      std::cout << "ssa.p: " << p.str() << "\n";
      std::cout << "ssa.q: " << q.str() << "\n";
      return 0;
    }

    if (*tam) {
      if (!check_degree(t_degree, cap, force)) return 2;
      if (dot) {
        std::cout << pbt::tamari_dot(t_degree);
      } else {
        for (const pbt::BinaryTree& t : pbt::enumerate_trees(t_degree)) {
          std::cout << t.canonical_word().str() << " ->";
          for (const pbt::BinaryTree& c : pbt::tamari_covers(t))
            std::cout << " " << c.canonical_word().str();
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*gram) {
      if (!check_degree(g_degree, cap, force)) return 2;
      pbt::TransitionMatrix m = reordered ? pbt::c_matrix(g_degree) : pbt::gram_matrix(g_degree);
      std::cout << render(m, g_format);
      if (blocks && reordered) std::cout << "\n" << pbt::block_report(g_degree);
      return 0;
    }

    if (*verify) {
      if (!check_degree(v_degree, cap, force)) return 2;
      std::vector<pbt::CheckResult> results = pbt::run_suite(suite, v_degree);
      std::cout << (json_report ? pbt::render_report_json(results, v_degree, suite)
                                : pbt::render_report(results));
      return pbt::all_pass(results) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
