#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbt/fqsym.hpp"
#include "pbt/lincomb.hpp"
#include "pbt/matrix.hpp"
#include "pbt/trees.hpp"

namespace pbt {

// The Hopf algebra of planar binary trees and its graded dual, with the seven
// working bases. P, H, E live on the primal side; Q, Qprime, Prima, Primb on
// the dual side. The two sides are identified through the Hopf isomorphism
// phi sending P_T to Qprime_T, which makes every pair of bases interconvert.
enum class PBasis { P, Q, Qprime, H, E, Prima, Primb };

std::string pbasis_name(PBasis b);
std::optional<PBasis> pbasis_parse(const std::string& s);

struct PbtElem {
  PBasis basis = PBasis::P;
  LinComb<BinaryTree> terms;

  bool operator==(const PbtElem& o) const = default;
};

struct PbtTensor {
  PBasis left = PBasis::P, right = PBasis::P;
  LinComb<std::pair<BinaryTree, BinaryTree>> terms;

  bool operator==(const PbtTensor& o) const = default;
};

PbtElem pbt_of(PBasis b, const BinaryTree& t);
PbtElem pbt_unit(PBasis b = PBasis::P);

// P_T = sum of F_sigma over the sylvester class of T. f_to_p succeeds only
// when the F support is a union of whole classes with one coefficient per
// class; otherwise it returns nullopt and fills *diag when given.
FqElem p_to_f(const PbtElem& x);
std::optional<PbtElem> f_to_p(const FqElem& x, std::string* diag = nullptr);
std::optional<PbtTensor> f_tensor_to_p(const FqTensor& x, std::string* diag = nullptr);

// Product and coproduct of the P basis, computed through F coordinates and
// regrouped.
PbtElem p_product(const PbtElem& x, const PbtElem& y);
PbtTensor p_coproduct(const PbtElem& x);

// Product and coproduct of the dual basis Q: convolution of canonical words
// and standardized value-interval restrictions.
PbtElem q_product(const PbtElem& x, const PbtElem& y);
PbtTensor q_coproduct(const PbtElem& x);

// H_T = sum of P over the lower Tamari interval, E_T over the upper one.
PbtElem h_of(const BinaryTree& t);
PbtElem e_of(const BinaryTree& t);

// Multiplicative rules: H_a H_b = H of graft_over(a, b) (canonical word
// w_b[|a|].w_a), E_a E_b = E of graft_under(a, b).
BinaryTree h_product(const BinaryTree& a, const BinaryTree& b);
BinaryTree e_product(const BinaryTree& a, const BinaryTree& b);

// Qprime_T = sum over the class of T of Q at the tree of sigma^{-1};
// multiplicities are retained.
PbtElem qprime_of(const BinaryTree& t);

// The Hopf isomorphism onto the dual: P_T -> Qprime_T coefficientwise. The
// argument must be on the primal side; the result is Qprime-tagged.
PbtElem phi(const PbtElem& x);

// Prima/Primb: dual bases of H/E, i.e. the columns of the inverse transpose
// of M_{H,P} (resp. M_{E,P}), expressed in the Q basis.
PbtElem prima_of(const BinaryTree& t);
PbtElem primb_of(const BinaryTree& t);

// Antipode on the dual side by the signed composition formula: for each
// composition of n, restrict the canonical word to the consecutive alphabet
// blocks, standardize, and Q-multiply with sign (-1)^{number of blocks}.
PbtElem antipode_q(const PbtElem& x);
// Generic antipode of a graded connected bialgebra, on either side.
PbtElem antipode_q_generic(const PbtElem& x);
PbtElem antipode_p(const PbtElem& x);

// Exact basis conversion; degrees are handled independently, matrices are
// cached per degree (set PBT_CACHE_DIR to persist them).
PbtElem change_of_basis(const PbtElem& x, PBasis target);

// Column convention: column j expresses element j of `from` in `to`, trees
// in lexicographic order of canonical words.
TransitionMatrix transition_matrix(PBasis from, PBasis to, int degree);

// Trees of size n whose root has no right son; the free generators of the
// algebra (their canonical words are the anticonnected ones).
std::vector<BinaryTree> free_generators(int n);

// True iff the coproduct of x (converted to Q coordinates) is primitive.
bool primitive_check(const PbtElem& x);

// Pairing <P_T, Q_U> = delta, extended bilinearly: x on the primal side in
// any basis, y on the dual side.
Int pbt_scalar(const PbtElem& x, const PbtElem& y);

// The pair of graded graphs: an edge (T, T') in gamma when P_{T'} appears in
// P_T P_dot, in gamma_star when Q_{T'} appears in Q_T Q_dot. Layer k holds
// the trees of size k; edge multiplicities are the product coefficients.
struct GradedGraph {
  std::vector<std::vector<BinaryTree>> layers;
  std::map<std::pair<BinaryTree, BinaryTree>, Int> edges;

  Int path_count(const BinaryTree& t) const;  // paths from the empty tree
  std::string render_text() const;
};
std::pair<GradedGraph, GradedGraph> fomin_graphs(int max_n);

// Checks that the H images of the complete functions and the E images of the
// elementary ones close under multiplication as they should, that the
// degree-3 complete function expands into the nondecreasing words, and that
// the antipode sends each comb H to the mirrored E up to the sign (-1)^n.
bool ncsf_comb_check(int n);

// Compositions of n and the comb trees realizing products of complete
// (H over left chains, grafted along the right spine) and elementary
// (E over right chains) functions.
std::vector<std::vector<int>> compositions(int n);
BinaryTree h_comb_tree(const std::vector<int>& composition);
BinaryTree e_comb_tree(const std::vector<int>& composition);

std::string pbt_str(const PbtElem& x);

}  // namespace pbt
