#include "pbt/fqsym.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbt {

FqElem f_of(const Perm& p) { return {FBasis::F, LinComb<Perm>::unit(p)}; }
FqElem g_of(const Perm& p) { return {FBasis::G, LinComb<Perm>::unit(p)}; }
FqElem fq_unit(FBasis b) { return {b, LinComb<Perm>::unit(Perm())}; }

namespace {
FqElem convert(const FqElem& x, FBasis target) {
  if (x.basis == target) return x;
  LinComb<Perm> out;
  for (const auto& [p, c] : x.terms.terms()) out.add(p.inverse(), c);
  return {target, out};
}
}  // namespace

FqElem to_f(const FqElem& x) { return convert(x, FBasis::F); }
FqElem to_g(const FqElem& x) { return convert(x, FBasis::G); }

FqElem f_product(const FqElem& xx, const FqElem& yy) {
  FqElem x = to_f(xx), y = to_f(yy);
  FqElem out{FBasis::F, {}};
  for (const auto& [a, ca] : x.terms.terms())
    for (const auto& [b, cb] : y.terms.terms())
      for (const Perm& s : shifted_shuffle(a, b)) out.terms.add(s, ca * cb);
  return out;
}

FqTensor f_coproduct(const FqElem& xx) {
  FqElem x = to_f(xx);
  FqTensor out;
  for (const auto& [p, c] : x.terms.terms()) {
    const std::vector<int>& v = p.values();
    for (int i = 0; i <= p.size(); ++i) {
      Word u(std::vector<int>(v.begin(), v.begin() + i));
      Word w(std::vector<int>(v.begin() + i, v.end()));
      out.terms.add({standardize(u), standardize(w)}, c);
    }
  }
  return out;
}

FqTensor g_coproduct(const FqElem& xx) {
  FqElem x = convert(xx, FBasis::G);
  FqTensor out{FBasis::G, FBasis::G, {}};
  for (const auto& [p, c] : x.terms.terms()) {
    Word w = p.word();
    for (int i = 0; i <= p.size(); ++i) {
      Perm lo = i == 0 ? Perm() : standardize(restrict_to_interval(w, 1, i));
      Perm hi = i == p.size() ? Perm() : standardize(restrict_to_interval(w, i + 1, p.size()));
      out.terms.add({lo, hi}, c);
    }
  }
  return out;
}

Int fq_scalar(const FqElem& x, const FqElem& y) {
  FqElem xf = to_f(x), yg = to_g(y);
  Int s = 0;
  for (const auto& [p, c] : xf.terms.terms()) s += c * yg.terms.coeff(p);
  return s;
}

Int fq_scalar_tensor(const FqTensor& x, const FqTensor& y) {
  // Componentwise <F,G> pairing; both tensors must already be in the
  // respective bases (F x F against G x G).
  auto flip = [](const FqTensor& t, FBasis want_l, FBasis want_r) {
    if (t.left == want_l && t.right == want_r) return t;
    FqTensor out{want_l, want_r, {}};
    for (const auto& [k, c] : t.terms.terms()) {
      Perm l = t.left == want_l ? k.first : k.first.inverse();
      Perm r = t.right == want_r ? k.second : k.second.inverse();
      out.terms.add({l, r}, c);
    }
    return out;
  };
  FqTensor xf = flip(x, FBasis::F, FBasis::F), yg = flip(y, FBasis::G, FBasis::G);
  Int s = 0;
  for (const auto& [k, c] : xf.terms.terms()) s += c * yg.terms.coeff(k);
  return s;
}

std::vector<Perm> convolution(const Perm& u, const Perm& v) {
  std::vector<Perm> out;
  for (const Perm& s : shifted_shuffle(u.inverse(), v.inverse()))
    out.push_back(s.inverse());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
// Words w on {1..m} with std(w) = tau are exactly w_p = c_{tau(p)} for
// nondecreasing c with a strict rise at every descent of tau^{-1}.
void expand_perm(const Perm& tau, int m, const Int& coeff, std::map<Word, Int>& out) {
  int n = tau.size();
  if (n == 0) {
    out[Word()] += coeff;
    return;
  }
  Perm tinv = tau.inverse();
  std::vector<bool> strict(static_cast<size_t>(n), false);
  for (int i = 1; i < n; ++i)
    strict[static_cast<size_t>(i)] = tinv.at(i - 1) > tinv.at(i);
  std::vector<int> c(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      std::vector<int> w(static_cast<size_t>(n));
      for (int p = 0; p < n; ++p) w[static_cast<size_t>(p)] = c[static_cast<size_t>(tau.at(p) - 1)];
      out[Word(std::move(w))] += coeff;
      return;
    }
    int lo = i == 0 ? 1 : c[static_cast<size_t>(i - 1)] + (strict[static_cast<size_t>(i)] ? 1 : 0);
    for (int v = lo; v <= m; ++v) {
      c[static_cast<size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}
}  // namespace

std::map<Word, Int> expand_on_alphabet(const FqElem& x, int m) {
  if (m < 1) throw std::invalid_argument("expand_on_alphabet: alphabet size must be >= 1");
  FqElem xf = to_f(x);
  std::map<Word, Int> out;
  for (const auto& [p, c] : xf.terms.terms()) expand_perm(p.inverse(), m, c, out);
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

FqTensor fq_tensor_product(const FqTensor& x, const FqTensor& y) {
  if (x.left != y.left || x.right != y.right)
    throw std::invalid_argument("fq_tensor_product: basis mismatch");
  auto slot_product = [&](const Perm& a, const Perm& b, FBasis basis) {
    if (basis == FBasis::F) return to_f(f_product(f_of(a), f_of(b)));
    // G product is the convolution.
    FqElem out{FBasis::G, {}};
    for (const Perm& s : convolution(a, b)) out.terms.add(s, 1);
    return out;
  };
  FqTensor out{x.left, x.right, {}};
  for (const auto& [kx, cx] : x.terms.terms())
    for (const auto& [ky, cy] : y.terms.terms()) {
      FqElem l = slot_product(kx.first, ky.first, x.left);
      FqElem r = slot_product(kx.second, ky.second, x.right);
      for (const auto& [pl, cl] : l.terms.terms())
        for (const auto& [pr, cr] : r.terms.terms())
          out.terms.add({pl, pr}, cx * cy * cl * cr);
    }
  return out;
}

std::string fq_str(const FqElem& x) {
  if (x.terms.is_zero()) return "0";
  const char* tag = x.basis == FBasis::F ? "F" : "G";
  std::string out;
  for (const auto& [p, c] : x.terms.terms()) {
    Int a = c < 0 ? Int(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) out += a.str() + " ";
    out += std::string(tag) + "_{" + p.str() + "}";
  }
  return out;
}

}  // namespace pbt
