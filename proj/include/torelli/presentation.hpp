#pragma once

// Homogeneous graded presentations of Lie algebras and the graded
// nilpotent-quotient solver: dim(L_n / I_n) per degree, where
// I_n = span(relations of degree n) + [generators, I_{n-1}], by exact
// sparse elimination.
//
// Relation expressions use a small bracket grammar, e.g.
//   "[A1_1, B1_1] - 2*[A2_1, B2_1]"
// which round-trips through parse_expression / print_element.

#include <optional>
#include <string>
#include <vector>

#include "torelli/freelie.hpp"
#include "torelli/virtual_rep.hpp"

namespace torelli::presentation {

using freelie::Alphabet;
using freelie::Context;
using freelie::Element;

struct GradedPresentation {
  Alphabet generators;
  std::vector<Element> relations;  // each homogeneous (degree checked on use)

  // Optional metadata carried by the builders.
  std::string name;
  int g = 0, n = 0, r = 0;
  bool has_central_gamma = false;
  int gamma_tate_twist = 0;  // bookkeeping only
  std::vector<std::string> notes;
};

struct GradedQuotientReport {
  int cutoff = 0;
  std::vector<Int> dims;                 // dims[l-1] = dim of degree-l piece
  std::vector<Int> ideal_dims;           // dim I_l
  std::string presentation_fingerprint;  // stable hash of the input
};

// Engine.  Throws presentation-format errors on inhomogeneous relations.
GradedQuotientReport graded_nilpotent_quotient(Context& ctx,
                                               const GradedPresentation& p,
                                               int cutoff);

// Bracket-expression grammar.
Element parse_expression(const Context& ctx, const std::string& text);
std::string print_element(const Context& ctx, const Element& e);

// Stable fingerprint of a presentation (FNV-1a over a canonical print).
std::string fingerprint(const Context& ctx, const GradedPresentation& p);

}  // namespace torelli::presentation
