#pragma once

// The derivation calculus: the Lambda^3 V action on the free Lie
// algebra, the contraction projections, the bracket of trivector
// derivations with its exact rational constants, the sigma map, and the
// representation-ring formulas for the derivation algebra quotients.

#include <optional>
#include <string>

#include "torelli/freelie.hpp"
#include "torelli/multilinear.hpp"
#include "torelli/spmodule.hpp"
#include "torelli/virtual_rep.hpp"

namespace torelli::johnson {

using freelie::Context;
using freelie::Derivation;
using multilinear::Element;

// Degree-1 derivation of L(V) attached to a trivector:
//   e1^e2^e3 |-> -(v |-> (e1.v)[e2,e3] + (e2.v)[e3,e1] + (e3.v)[e1,e2]).
// With this sign x^omega acts as ad(x) - (x . _) omega, i.e. as ad(x) on
// the surface quotient.
Derivation lambda3_derivation(Context& ctx, const Element& xi);

// Bracket of two trivector derivations as the canonical representative
// in V (x) V (x) Lambda^2 V given by the cyclic closed form.
Element compn_bracket(const Element& xi, const Element& eta);

// Canonical representative in V (x) V (x) Lambda^2 V of a degree-2
// derivation delta: V -> L(V)(3), via
//   delta |-> sum_i a_i (x) delta(b_i) - b_i (x) delta(a_i)
// and the monomial-wise section L(V)(3) -> V (x) Lambda^2 V.
Element hom_representative(Context& ctx, const Derivation& delta);

// r : Lambda^2 V(l3) -> Lambda^2 V, the composite through Lambda^6 V and
// theta_4 theta_6 followed by the displayed projection
// u^v - (u.v) omega/(g-1).  Factors must lie in ker p.
Element proj_r(const Element& u, const Element& v);

// Invariant bilinear form on ker p, normalized by
// <a1^a2^a3, b1^b2^b3> = 1.  Throws if an input is outside ker p.
Rat bilinear_form(const Element& u, const Element& v);

// (g-1) tau(phi_{i,j}) = (g-1) a_i^a_j^b_j - a_i^omega, in ker p.
struct TauPhi {
  Element element;        // the displayed element, carrying the (g-1) scale
  int normalization = 0;  // the factor g-1
};
TauPhi johnson_tau_phi(const freelie::Alphabet& alph, int i, int j);

// sigma(delta) = sum_i [delta(a_i), b_i] + [a_i, delta(b_i)].
freelie::Element sigma(Context& ctx, const Derivation& delta);

// Derivation algebra quotients in the representation ring:
//   d_g(l) = V (x) p_g(l+1) - p_g(l+2),   o_g(l) = d_g(l) - p_g(l).
VirtualRep dg_graded(int g, int l);
VirtualRep og_graded(int g, int l);

// Rank verification that sigma : Hom(V, p_g(l+1)) -> p_g(l+2) is
// surjective (checked for small g and l).
bool sigma_surjective(int g, int l);

// Constants of the decorated assembly.
struct JohnsonConstants {
  Rat c_coefficient;   // +/- 1/(2g+2)
  Rat c0_point;        // +/- 6/(g(2g+1))
  Rat c0_diagonal;     // doubled: +/- 12/(g(2g+1))
  int gamma_degree = 2;
  int gamma_tate_twist = 1;
  int sign_c = 0;   // resolved global sign for the Lambda^2 <-> bracket route
  int sign_c0 = 0;
};

struct ConstantCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerifiedConstants {
  int g = 0;
  JohnsonConstants constants;
  std::vector<ConstantCheck> checks;
  std::vector<std::string> notes;
  bool pass = false;
};

// Recomputes, from compn_bracket and the projections alone, the
// proportionality constants of the decorated assembly.  Requires g >= 4.
VerifiedConstants verify_constants(int g);

// The Section-10 highest-weight-vector walks with the literal operator
// sequences and a bounded fallback search over raising-operator words.
struct WalkReport {
  std::string target;            // e.g. "l2+l4"
  std::vector<int> weight;       // expected weight in e-coordinates
  bool literal_worked = false;
  std::string resolved_sequence;
  bool highest_weight_found = false;
};
std::vector<WalkReport> hw_walks(int g);

}  // namespace torelli::johnson
