#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pbt/lincomb.hpp"
#include "pbt/words.hpp"

namespace pbt {

// Formal integer combinations of permutations in the F (quasi-ribbon) or G
// basis, modeled per degree; graded sums of homogeneous parts are allowed.
// G_sigma = F_{sigma^{-1}}.
enum class FBasis { F, G };

struct FqElem {
  FBasis basis = FBasis::F;
  LinComb<Perm> terms;

  bool operator==(const FqElem& o) const = default;
};

struct FqTensor {
  FBasis left = FBasis::F, right = FBasis::F;
  LinComb<std::pair<Perm, Perm>> terms;

  bool operator==(const FqTensor& o) const = default;
};

FqElem f_of(const Perm& p);
FqElem g_of(const Perm& p);
FqElem fq_unit(FBasis b = FBasis::F);  // the degree-0 element F_{} = 1

FqElem to_f(const FqElem& x);
FqElem to_g(const FqElem& x);

// F_alpha F_beta = sum over the shifted shuffle, extended bilinearly.
FqElem f_product(const FqElem& x, const FqElem& y);

// Delta F_sigma = sum over deconcatenations sigma = u.v of F_std(u) x F_std(v).
FqTensor f_coproduct(const FqElem& x);

// Delta G_sigma = sum over value splits [1..i]/[i+1..n] of the standardized
// restrictions; this is the coproduct adjoint to the F product.
FqTensor g_coproduct(const FqElem& x);

// The duality pairing <F_sigma, G_tau> = delta_{sigma,tau}, extended to any
// basis combination via G_sigma = F_{sigma^{-1}}.
Int fq_scalar(const FqElem& x, const FqElem& y);
Int fq_scalar_tensor(const FqTensor& x, const FqTensor& y);

// Convolution of permutations: invert, shifted-shuffle, invert back. The
// result has C(|u|+|v|, |u|) distinct elements.
std::vector<Perm> convolution(const Perm& u, const Perm& v);

// All words on {1..m} in the expansion of x, with coefficients. F_sigma
// expands as the words whose standardization is sigma^{-1}.
std::map<Word, Int> expand_on_alphabet(const FqElem& x, int m);

// Componentwise product of tensors, for bialgebra checks.
FqTensor fq_tensor_product(const FqTensor& x, const FqTensor& y);

// Rendering in the "F_{sigma} + 2 F_{tau}" style.
std::string fq_str(const FqElem& x);

}  // namespace pbt
