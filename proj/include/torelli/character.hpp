#pragma once

// Sparse Laurent polynomials in the torus coordinates t_1..t_g with
// big-integer coefficients.  Characters of sp_g modules are invariant
// under the hyperoctahedral Weyl group (coordinate permutations and
// sign flips).

#include <map>
#include <vector>

#include "torelli/arith.hpp"

namespace torelli {

using ExpVec = std::vector<int>;  // exponent vector, length g

class Character {
 public:
  explicit Character(int g) : g_(g) {
    if (g < 1) throw std::invalid_argument("Character: rank must be positive");
  }

  static Character one(int g) {
    Character c(g);
    c.add(ExpVec(g, 0), 1);
    return c;
  }

  int rank() const { return g_; }
  const std::map<ExpVec, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const ExpVec& e, const Int& c) {
    if (static_cast<int>(e.size()) != g_)
      throw std::invalid_argument("Character::add: exponent length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Int coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  Character& operator+=(const Character& o) {
    check_rank(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  Character& operator-=(const Character& o) {
    check_rank(o);
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }

  friend Character operator*(const Character& a, const Character& b) {
    a.check_rank(b);
    Character r(a.g_);
    ExpVec e(a.g_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.g_; ++i) e[i] = ea[i] + eb[i];
        r.add(e, ca * cb);
      }
    return r;
  }

  Character& operator*=(const Int& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }
  friend Character operator*(Character a, const Int& k) { return a *= k; }

  // Divide every coefficient by k; throws on inexact division.
  Character& exact_divide(const Int& k) {
    for (auto& [e, c] : terms_) c = exact_div(c, k);
    return *this;
  }

  // Adams operation: t_i -> t_i^d.
  Character adams(int d) const {
    if (d < 1) throw std::invalid_argument("adams: d must be positive");
    Character r(g_);
    ExpVec e(g_);
    for (const auto& [e0, c] : terms_) {
      for (int i = 0; i < g_; ++i) e[i] = e0[i] * d;
      r.add(e, c);
    }
    return r;
  }

  // Evaluation at t = (1,...,1): the virtual dimension.
  Int dimension() const {
    Int d = 0;
    for (const auto& [e, c] : terms_) d += c;
    return d;
  }

  // Invariance under the type-C Weyl group (permutations + sign flips).
  // Checked on the generators: adjacent transpositions and flipping the
  // last coordinate, which generate the hyperoctahedral group.
  bool is_weyl_invariant() const {
    ExpVec e;
    for (const auto& [e0, c] : terms_) {
      for (int i = 0; i + 1 < g_; ++i) {
        e = e0;
        std::swap(e[i], e[i + 1]);
        if (coeff(e) != c) return false;
      }
      e = e0;
      e[g_ - 1] = -e[g_ - 1];
      if (coeff(e) != c) return false;
    }
    return true;
  }

 private:
  void check_rank(const Character& o) const {
    if (g_ != o.g_) throw std::invalid_argument("Character: rank mismatch");
  }

  int g_;
  std::map<ExpVec, Int> terms_;
};

}  // namespace torelli
