#include "pbt/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pbt {

namespace {

std::vector<int> parse_letters(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("empty token in word: " + s);
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("bad token in word: " + tok);
      out.push_back(v);
    }
    return out;
  }
  for (char c : s) {
    if (c < '1' || c > '9') throw std::invalid_argument("bad digit in word: " + s);
    out.push_back(c - '0');
  }
  return out;
}

std::string render_letters(const std::vector<int>& v) {
  bool digits = true;
  for (int x : v)
    if (x > 9) digits = false;
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!digits && i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::strong_ordering size_then_lex(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// Bitmask of inverted value pairs {a<b : b appears before a}. Used for the
// weak order; n is capped well below the 128-pair budget of two words here.
std::vector<uint64_t> value_inversion_mask(const Perm& p) {
  int n = p.size();
  std::vector<uint64_t> mask((static_cast<size_t>(n) * n + 63) / 64 + 1, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.at(i) > p.at(j)) {
        int a = p.at(j), b = p.at(i);  // a < b, b before a
        int bit = (b - 1) * n + (a - 1);
        mask[static_cast<size_t>(bit) / 64] |= uint64_t{1} << (bit % 64);
      }
  return mask;
}

}  // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int x : letters_)
    if (x < 1) throw std::invalid_argument("word letters must be >= 1");
}

Word Word::parse(const std::string& s) { return Word(parse_letters(s)); }

std::string Word::str() const { return render_letters(letters_); }

std::strong_ordering Word::operator<=>(const Word& o) const {
  return size_then_lex(letters_, o.letters_);
}

Perm::Perm(std::vector<int> values) : values_(std::move(values)) {
  int n = static_cast<int>(values_.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::parse(const std::string& s) { return Perm(parse_letters(s)); }

std::string Perm::str() const { return render_letters(values_); }

Perm Perm::inverse() const {
  std::vector<int> inv(values_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<size_t>(values_[static_cast<size_t>(i)] - 1)] = i + 1;
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (at(i) != i + 1) return false;
  return true;
}

std::strong_ordering Perm::operator<=>(const Perm& o) const {
  return size_then_lex(values_, o.values_);
}

Perm standardize(const Word& w) {
  int n = w.size();
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return w.at(a) < w.at(b); });
  std::vector<int> out(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) out[static_cast<size_t>(idx[static_cast<size_t>(r)])] = r + 1;
  return Perm(std::move(out));
}

Word shift_letters(const Word& w, int k) {
  std::vector<int> v = w.letters();
  for (int& x : v) x += k;
  return Word(std::move(v));
}

Word shifted_concat(const Word& u, const Word& v) {
  std::vector<int> out = u.letters();
  for (int x : v.letters()) out.push_back(x + u.size());
  return Word(std::move(out));
}

namespace {
void shuffle_rec(const std::vector<int>& u, size_t i, const std::vector<int>& v,
                 size_t j, std::vector<int>& cur, std::vector<Word>& out) {
  if (i == u.size() && j == v.size()) {
    out.push_back(Word(cur));
    return;
  }
  if (i < u.size()) {
    cur.push_back(u[i]);
    shuffle_rec(u, i + 1, v, j, cur, out);
    cur.pop_back();
  }
  if (j < v.size()) {
    cur.push_back(v[j]);
    shuffle_rec(u, i, v, j + 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Word> shuffle(const Word& u, const Word& v) {
  std::vector<Word> out;
  std::vector<int> cur;
  cur.reserve(static_cast<size_t>(u.size() + v.size()));
  shuffle_rec(u.letters(), 0, v.letters(), 0, cur, out);
  return out;
}

std::vector<Perm> shifted_shuffle(const Perm& u, const Perm& v) {
  std::vector<Perm> out;
  for (const Word& w : shuffle(u.word(), shift_letters(v.word(), u.size())))
    out.push_back(Perm(w.letters()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> inversions(const Word& w) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j)
      if (w.at(i) > w.at(j)) out.emplace_back(i, j);
  return out;
}

bool weak_order_leq(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw std::invalid_argument("weak_order_leq: size mismatch");
  auto mp = value_inversion_mask(p), mq = value_inversion_mask(q);
  for (size_t i = 0; i < mp.size(); ++i)
    if (mp[i] & ~mq[i]) return false;
  return true;
}

std::vector<int> saillance_values(const Perm& p) {
  std::vector<int> out;
  int best = 0;
  for (int i = p.size() - 1; i >= 0; --i)
    if (p.at(i) > best) {
      best = p.at(i);
      out.push_back(best);
    }
  std::reverse(out.begin(), out.end());  // decreasing values
  return out;
}

std::vector<int> saillance_positions(const Perm& p) {
  std::vector<int> out;
  int best = 0;
  for (int i = p.size() - 1; i >= 0; --i)
    if (p.at(i) > best) {
      best = p.at(i);
      out.push_back(i + 1);
    }
  return out;  // already decreasing: scanned right to left
}

namespace {
bool contains_rec(const Perm& p, const Perm& pat, int d, int start,
                  std::vector<int>& chosen) {
  if (d == pat.size()) return true;
  for (int i = start; i < p.size(); ++i) {
    bool ok = true;
    for (int e = 0; e < d && ok; ++e) {
      bool need = pat.at(e) < pat.at(d);
      bool have = chosen[static_cast<size_t>(e)] < p.at(i);
      if (need != have) ok = false;
    }
    if (!ok) continue;
    chosen.push_back(p.at(i));
    if (contains_rec(p, pat, d + 1, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}
}  // namespace

bool avoids_pattern(const Perm& p, const Perm& pattern) {
  if (pattern.empty()) return false;
  if (pattern.size() > p.size()) return true;
  std::vector<int> chosen;
  return !contains_rec(p, pattern, 0, 0, chosen);
}

Word restrict_to_interval(const Word& w, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("restrict_to_interval: lo > hi");
  std::vector<int> out;
  for (int x : w.letters())
    if (lo <= x && x <= hi) out.push_back(x);
  return Word(std::move(out));
}

bool is_connected(const Perm& p) {
  if (p.empty()) return false;
  int mx = 0;
  for (int i = 0; i < p.size() - 1; ++i) {
    mx = std::max(mx, p.at(i));
    if (mx == i + 1) return false;  // proper prefix on an initial interval
  }
  return true;
}

bool is_anticonnected(const Perm& p) {
  std::vector<int> rev(p.values().rbegin(), p.values().rend());
  return is_connected(Perm(std::move(rev)));
}

int major_index(const Perm& p) {
  int m = 0;
  for (int i = 0; i + 1 < p.size(); ++i)
    if (p.at(i) > p.at(i + 1)) m += i + 1;
  return m;
}

std::vector<Perm> all_permutations(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace pbt
