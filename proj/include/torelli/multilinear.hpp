#pragma once

// Concrete ambient spaces for the derivation calculus: tensor products of
// exterior powers of the fundamental representation, plus the outer
// square of Lambda^3 V.  Keys are canonically normalized (slots sorted,
// signs tracked); all coefficients are exact rationals.

#include <map>
#include <string>
#include <vector>

#include "torelli/freelie.hpp"

namespace torelli::multilinear {

using freelie::Alphabet;
using freelie::SpOp;

// Shape of a multilinear space over the symbol alphabet.
//  - TensorOfWedges: slot i is Lambda^{arities[i]} V (arity 1 = V).
//  - Wedge2OfLambda3: Lambda^2(Lambda^3 V); keys are ordered pairs of
//    sorted triples.
struct Shape {
  enum class Kind { TensorOfWedges, Wedge2OfLambda3 };
  Kind kind = Kind::TensorOfWedges;
  std::vector<int> arities;

  static Shape wedge(int k) { return {Kind::TensorOfWedges, {k}}; }
  static Shape tensor(std::vector<int> arities) {
    return {Kind::TensorOfWedges, std::move(arities)};
  }
  static Shape wedge2_lambda3() { return {Kind::Wedge2OfLambda3, {}}; }

  bool operator==(const Shape& o) const { return kind == o.kind && arities == o.arities; }
  int total_symbols() const {
    if (kind == Kind::Wedge2OfLambda3) return 6;
    int t = 0;
    for (int a : arities) t += a;
    return t;
  }
  std::string str() const;
};

// Key layout: concatenated symbol ids, slot by slot (for Wedge2OfLambda3:
// two sorted triples, pair ordered lexicographically).
using Key = std::vector<int>;

class Element {
 public:
  Element(Shape shape, const Alphabet* alph) : shape_(std::move(shape)), alph_(alph) {}

  const Shape& shape() const { return shape_; }
  const Alphabet& alphabet() const { return *alph_; }
  const std::map<Key, Rat>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  // Add a (possibly unnormalized) key with coefficient; slots are sorted
  // with sign bookkeeping, repeated entries in a wedge slot give zero.
  void add_raw(Key k, Rat c);
  void add_normalized(const Key& k, const Rat& c);

  Rat coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rat& k);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rat& k) { return a *= k; }
  bool operator==(const Element& o) const {
    return shape_ == o.shape_ && terms_ == o.terms_;
  }

  ExpVec weight_of_key(const Key& k) const;

  std::string str() const;

 private:
  Shape shape_;
  const Alphabet* alph_;
  std::map<Key, Rat> terms_;
};

// Derivation action of an sp generator.
Element apply_op(const SpOp& op, const Element& x);

// Basic builders over a symplectic alphabet (single strand unless noted).
Element wedge_element(const Alphabet& alph, const std::vector<int>& symbols);  // Lambda^k V
Element omega(const Alphabet& alph, int strand = 1);                           // Lambda^2 V

// v wedge omega in Lambda^3 V.
Element wedge_omega(const Element& v);

// p : Lambda^3 V -> V,  x^y^z -> q(x,y) z + q(y,z) x + q(z,x) y.
Element proj_p(const Element& x);

// theta_k : Lambda^k V -> Lambda^{k-2} V, the alternating pairing
// contraction; k >= 2.
Element theta(const Element& x);

// Outer wedge of two Lambda^3 V elements into Lambda^2(Lambda^3 V).
Element outer_wedge(const Element& x, const Element& y);

// Multiplication Lambda^2(Lambda^3 V) -> Lambda^6 V.
Element multiply_to_lambda6(const Element& x);

// Jacobi map j : V (x) Lambda^3 V -> V (x) V (x) Lambda^2 V,
// u (x) v1^v2^v3 -> u (x) [v1 (x) v2^v3 + v2 (x) v3^v1 + v3 (x) v1^v2].
Element jacobi_map(const Element& x);

// The four lambda_2 projections and the two invariant projections of
// V (x) V (x) Lambda^2 V (paper's p_1..p_4, q_1, q_2).
Element proj_p1(const Element& x);
Element proj_p2(const Element& x);
Element proj_p3(const Element& x);
Element proj_p4(const Element& x);
Rat proj_q1(const Element& x);
Rat proj_q2(const Element& x);

// Invariant pairing on Lambda^3 V: <x1^x2^x3, y1^y2^y3> = det[q(x_i,y_j)].
Rat lambda3_pairing(const Element& x, const Element& y);

}  // namespace torelli::multilinear
