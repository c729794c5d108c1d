#pragma once

#include <map>

#include "pbt/ints.hpp"

namespace pbt {

// A finite formal integer combination of keys; zero coefficients are never
// stored. Immutable in spirit: operations return new values.
template <typename Key>
class LinComb {
 public:
  using Map = std::map<Key, Int>;

  LinComb() = default;
  static LinComb unit(const Key& k, Int c = 1) {
    LinComb x;
    x.add(k, std::move(c));
    return x;
  }

  bool is_zero() const { return m_.empty(); }
  int term_count() const { return static_cast<int>(m_.size()); }
  const Map& terms() const { return m_; }

  Int coeff(const Key& k) const {
    auto it = m_.find(k);
    return it == m_.end() ? Int(0) : it->second;
  }

  void add(const Key& k, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = m_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) m_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.m_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.m_) add(k, -c);
    return *this;
  }
  LinComb operator+(const LinComb& o) const {
    LinComb r = *this;
    r += o;
    return r;
  }
  LinComb operator-(const LinComb& o) const {
    LinComb r = *this;
    r -= o;
    return r;
  }
  LinComb operator*(const Int& s) const {
    LinComb r;
    if (s == 0) return r;
    for (const auto& [k, c] : m_) r.m_.emplace(k, c * s);
    return r;
  }
  LinComb operator-() const { return *this * Int(-1); }

  Int total_mass() const {
    Int s = 0;
    for (const auto& [k, c] : m_) s += c;
    return s;
  }

  bool operator==(const LinComb& o) const = default;

 private:
  Map m_;
};

}  // namespace pbt
