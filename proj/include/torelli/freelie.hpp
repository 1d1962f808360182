#pragma once

// Free Lie algebras over Q on an ordered, graded alphabet, in the Lyndon
// basis (canonical standard bracketing of Lyndon words).  Alphabets may
// carry a symplectic structure: letters a_1..a_g, b_1..b_g per strand,
// with the intersection pairing and the sp_g generator action.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torelli/arith.hpp"
#include "torelli/character.hpp"  // ExpVec

namespace torelli::freelie {

using Word = std::vector<int>;  // letter indices into an Alphabet

struct Alphabet {
  std::vector<std::string> names;
  std::vector<int> degrees;  // per-letter degree; default all 1

  // Optional symplectic structure.  When set, letters are laid out
  // strand-major: for strand s (0-based), a_1..a_g then b_1..b_g.
  bool symplectic = false;
  int g = 0;
  int strands = 1;

  int size() const { return static_cast<int>(names.size()); }
  int degree_of(const Word& w) const {
    int d = 0;
    for (int x : w) d += degrees[x];
    return d;
  }

  static Alphabet plain(std::vector<std::string> names);
  static Alphabet graded(std::vector<std::string> names, std::vector<int> degrees);
  // Symplectic basis a_1..a_g, b_1..b_g on each of `strands` strands.
  static Alphabet symplectic_basis(int g, int strands = 1);

  // Letter index helpers for symplectic alphabets (1-based k and strand).
  int a(int k, int strand = 1) const;
  int b(int k, int strand = 1) const;
  bool is_a(int letter) const;
  int k_index(int letter) const;   // 1-based symplectic index
  int strand_of(int letter) const; // 1-based strand

  // Intersection pairing q(x, y): q(a_k, b_k) = 1 within a strand.
  Rat pairing(int x, int y) const;

  // Torus weight of a letter, in e-coordinates of sp_g.
  ExpVec weight_of(int letter) const;
};

// One sp_g Chevalley-style generator acting on symbols.  Raising
// operators S, T, F follow the paper's positive nilpotents; LS, LT, LF
// are their pairing-transposes; H is the torus.
struct SpOp {
  enum Kind { S, T, F, LS, LT, LF, H } kind;
  int i = 0, j = 0;  // 1-based indices; T/LT/H use i only

  std::string str() const;
  // Image of one letter as a sparse list of (letter, coeff).
  std::vector<std::pair<int, Rat>> apply_letter(const Alphabet& alph, int letter) const;
  bool is_raising() const { return kind == S || kind == T || kind == F; }
};

std::vector<SpOp> raising_ops(int g);
std::vector<SpOp> lowering_ops(int g);
std::vector<SpOp> torus_ops(int g);
std::vector<SpOp> all_ops(int g);  // raising + lowering + torus

// An element of fixed homogeneous degree, in the Lyndon basis.
struct Element {
  std::map<Word, Rat> terms;

  bool zero() const { return terms.empty(); }
  void add(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end())
      terms.emplace(w, c);
    else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  Element& operator+=(const Element& o) {
    for (auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (auto& [w, c] : o.terms) add(w, -c);
    return *this;
  }
  Element& operator*=(const Rat& k) {
    if (k == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [w, c] : terms) c *= k;
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rat& k) { return a *= k; }
};

// A degree-l derivation of the free Lie algebra, given by its images on
// the degree-1 generators (all homogeneous of equal degree l+1).
struct Derivation {
  std::map<int, Element> images;  // letter -> image element
};

// Shared context: fixed alphabet plus memo tables for Lyndon bases and
// bracket normal forms.
class Context {
 public:
  explicit Context(Alphabet alph);

  const Alphabet& alphabet() const { return alph_; }

  // All Lyndon monomials of the given total degree, in lexicographic
  // order of the underlying words.
  const std::vector<Word>& lyndon_basis(int degree);

  Element single(const Word& w) const {
    Element e;
    e.add(w, 1);
    return e;
  }
  Element letter(int x) const { return single(Word{x}); }

  // Normal form of the bracket of two elements.
  Element bracket(const Element& x, const Element& y);

  // Action of an sp generator, extended as a derivation.
  Element apply_op(const SpOp& op, const Element& x);

  // Apply a derivation (Leibniz rule over the standard bracketing).
  Element apply_derivation(const Derivation& d, const Element& x);

  Derivation derivation_from_map(std::map<int, Element> images);
  Derivation derivation_bracket(const Derivation& d1, const Derivation& d2);

  // Torus weight of a homogeneous element; nullopt if mixed or zero.
  std::optional<ExpVec> weight_of(const Element& x) const;

  int degree_of(const Word& w) const { return alph_.degree_of(w); }
  std::optional<int> degree_of(const Element& x) const;

  // Standard factorization of a Lyndon word (|w| >= 2).
  std::pair<Word, Word> std_factor(const Word& w) const;

  std::string str(const Element& x) const;

 private:
  Element bracket_words(const Word& u, const Word& v);
  Element nf_lyndon_pair(const Word& u, const Word& v);  // u < v, both Lyndon
  Element apply_op_word(const SpOp& op, const Word& w);
  Element apply_derivation_word(const Derivation& d, const Word& w);

  Alphabet alph_;
  std::map<int, std::vector<Word>> lyndon_cache_;
  std::map<std::pair<Word, Word>, Element> bracket_cache_;
};

bool is_lyndon(const Word& w);

}  // namespace torelli::freelie
