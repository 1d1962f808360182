#pragma once

// Formal Z-linear combinations of irreducible sp_g representations.
// The currency of every decomposition table in the library.

#include <map>
#include <string>

#include "torelli/weight.hpp"
#include "torelli/arith.hpp"

namespace torelli {

class VirtualRep {
 public:
  explicit VirtualRep(int g) : g_(g) {
    if (g < 1) throw std::invalid_argument("VirtualRep: rank must be positive");
  }

  static VirtualRep irreducible(const Weight& w, Int mult = 1) {
    VirtualRep r(w.rank());
    r.add(w, mult);
    return r;
  }
  static VirtualRep trivial(int g) { return irreducible(Weight::zero(g)); }

  int rank() const { return g_; }
  const std::map<Weight, Int, WeightPartitionLexGreater>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const Weight& w, const Int& m) {
    if (w.rank() != g_) throw std::invalid_argument("VirtualRep::add: rank mismatch");
    if (m == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, m);
    } else {
      it->second += m;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Int mult(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
  }

  bool is_genuine() const {
    for (const auto& [w, m] : terms_)
      if (m < 0) return false;
    return true;
  }

  int depth() const {
    int d = 0;
    for (const auto& [w, m] : terms_) d = std::max(d, w.depth());
    return d;
  }

  VirtualRep& operator+=(const VirtualRep& o) {
    check_rank(o);
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
  }
  VirtualRep& operator-=(const VirtualRep& o) {
    check_rank(o);
    for (const auto& [w, m] : o.terms_) add(w, -m);
    return *this;
  }
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }

  bool operator==(const VirtualRep& o) const { return g_ == o.g_ && terms_ == o.terms_; }

  // Multiset of partitions with multiplicities, used for rank-independent
  // comparisons under the stabilization map.
  std::map<std::vector<int>, Int> partition_multiset() const {
    std::map<std::vector<int>, Int> ms;
    for (const auto& [w, m] : terms_) {
      std::vector<int> p = w.partition();
      while (!p.empty() && p.back() == 0) p.pop_back();
      ms[p] += m;
    }
    return ms;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, m] : terms_) {
      if (!s.empty()) s += " + ";
      if (m != 1) s += m.str() + "*";
      s += "V(" + w.str() + ")";
    }
    return s;
  }

 private:
  void check_rank(const VirtualRep& o) const {
    if (g_ != o.g_) throw std::invalid_argument("VirtualRep: rank mismatch");
  }

  int g_;
  std::map<Weight, Int, WeightPartitionLexGreater> terms_;
};

}  // namespace torelli
