#pragma once

// Finite-dimensional sp_g modules with a chosen basis: sparse operator
// matrices for the generator action, exact sparse echelon forms,
// submodule generation and decomposition of concrete subspaces into
// irreducibles by joint raising kernels.

#include <functional>
#include <map>
#include <vector>

#include "torelli/multilinear.hpp"
#include "torelli/virtual_rep.hpp"

namespace torelli::spmodule {

using freelie::SpOp;

// Sparse vector in basis coordinates.
using Vec = std::map<int, Rat>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Rat& k);

// Reduced row echelon basis of a rational row space, with deterministic
// pivot order (smallest coordinate index first).  Rows are kept
// primitive-integer during elimination (fraction-free cross
// multiplication, gcd-reduced) and normalized to leading coefficient 1
// at the end.
class Echelon {
 public:
  // Returns the remainder of v after reduction by the current rows.
  Vec reduce(Vec v) const;
  // Reduce and, if nonzero, insert; returns true if the rank grew.
  bool insert(Vec v);
  // Re-reduce rows above pivots and normalize leading coefficients to 1.
  void normalize();

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, Vec>& rows() const { return rows_; }  // pivot -> row
  bool contains(const Vec& v) const { return reduce(v).empty(); }

 private:
  std::map<int, Vec> rows_;
};

struct SpModule {
  int g = 0;
  int dim = 0;
  std::vector<ExpVec> weights;              // torus weight per basis index
  std::map<std::string, std::vector<Vec>> action;  // op name -> columns
  std::vector<SpOp> ops;                    // raising + lowering (H implicit)

  const std::vector<Vec>& matrix(const SpOp& op) const { return action.at(op.str()); }
  Vec apply(const SpOp& op, const Vec& v) const;
};

// Build a module from a multilinear shape space by enumerating canonical
// keys (all normalized keys of the shape over the alphabet).
SpModule module_from_shape(const multilinear::Shape& shape, const freelie::Alphabet& alph);

// The submodule ker(p) of Lambda^3 V, with a weight-pure echelon basis;
// also returns the basis vectors as Lambda^3 V elements.
struct KerP {
  SpModule mod;                      // operators in ker-p coordinates
  std::vector<multilinear::Element> basis;  // ker-p basis in Lambda^3 V
  // Express a Lambda^3 V element lying in ker p in basis coordinates.
  Vec coordinates(const multilinear::Element& x) const;

  const freelie::Alphabet* alph = nullptr;
};
KerP kerp_module(const freelie::Alphabet& alph);

// Lambda^2 of a module: basis pairs (i<j), derivation action.
SpModule wedge2_module(const SpModule& m);

// Smallest subspace containing the seeds and closed under the full
// generator set; returned as a canonical reduced echelon basis.
Echelon submodule_generated(const SpModule& m, const std::vector<Vec>& seeds);

// Decompose an sp-stable subspace into irreducibles by locating highest
// weight vectors (joint kernels of the raising operators per dominant
// weight).  Throws if the subspace is not stable.
VirtualRep decompose_concrete(const SpModule& m, const Echelon& sub);

}  // namespace torelli::spmodule
