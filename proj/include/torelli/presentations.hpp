#pragma once

// Builders and verifiers for the graded presentations: the surface
// algebra quotients p_g(l) via the Koszul recursion, the Torelli
// presentation (generators V(lambda_3), quadratic relations), decorated
// surface braid presentations, the H_1 computation and the lower central
// series rank generating functions.

#include <optional>

#include "torelli/johnson.hpp"
#include "torelli/presentation.hpp"
#include "torelli/repring.hpp"
#include "torelli/spmodule.hpp"

namespace torelli::presentations {

using presentation::GradedPresentation;

// l-th lower-central-series graded piece of the surface Lie algebra, as
// a virtual representation: l=1 -> V(l1), l=2 -> Lambda^2 V - V(0),
// l>=3 solved from the vanishing Euler characteristic of the weight-l
// Koszul piece.
VirtualRep pg_graded(int g, int l);

// Euler characteristic of the weight-l piece of the exterior algebra on
// the previously computed pieces (vanishes for l >= 3).
VirtualRep koszul_euler_characteristic(int g, int l);

// Free rank and invariant-factor torsion of H_1 of a decorated surface
// braid group.
struct AbelianGroupStructure {
  Int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors, each dividing the next
  bool degenerate_flag = false;  // g=1 with r>=1: Z/0 reported as free ranks
  std::string note;
};
AbelianGroupStructure h1_braid(int g, int n, int r);

// Rank series r_1..r_L of the lower central series.
struct RankSeries {
  std::vector<Int> ranks;
};

// Surface braid groups pi_g^n (r = 0 uses the product formula exactly as
// displayed; r > 0 adds one central degree-2 rank per framed strand --
// a documented extension checked only against the quotient engine).
RankSeries lcs_gf_ranks(int g, int n, int L, int r = 0);

// Classical pure braid groups on n strands: product_{k=1}^{n-1} (1-kt).
RankSeries classical_braid_gf(int n, int L);

// The classical infinitesimal pure-braid presentation on n strands
// (sanity fixture for the quotient engine).
GradedPresentation classical_braid_presentation(int n);

enum class TorelliMode { repring, concrete };

struct TorelliPresentation {
  // Representation-ring form of the relation module
  // R_g = Lambda^2 V(l3) - V(2 l2) - V(0).
  VirtualRep relation_module{1};
  // Concrete form (mode == concrete): generators are a basis of
  // ker p in Lambda^3 V; relations are explicit quadratic elements.
  std::optional<GradedPresentation> concrete;
  std::vector<std::string> notes;  // the genus-3 cubic caveat lives here
  int g = 0;
};
TorelliPresentation torelli_presentation(int g, TorelliMode mode);

// Decorated surface braid presentation of Gr p_{g,r}^n (Section 12
// relation families instantiated on the symplectic basis).
GradedPresentation braid_presentation(int g, int n, int r);

// Full decorated Torelli presentation of Gr t_{g,r}^n.  Requires a
// verified constants table for this g; throws a verification-required
// error otherwise.
GradedPresentation decorated_torelli_presentation(int g, int n, int r,
                                                  const johnson::VerifiedConstants& constants);

// Cross-check: the degree-2 dimension the decorated presentation must
// produce, from the representation ring.
Int decorated_degree2_dim(int g, int n, int r);

// Dimension of p_{g,r}^n(2) from the representation ring:
// (n+r) * (dim Lambda^2 V - 1) + C(n+r, 2) + r.
Int braid_degree2_dim(int g, int n, int r);

}  // namespace torelli::presentations
