#include <doctest.h>

#include "torelli/checks.hpp"
#include "torelli/repring.hpp"

using namespace torelli;
using namespace torelli::repring;

namespace {
Weight L(int g, std::initializer_list<int> coeffs) {
  std::vector<int> c(coeffs);
  c.resize(g, 0);
  return Weight(g, c);
}
VirtualRep V(const Weight& w) { return VirtualRep::irreducible(w); }
}  // namespace

TEST_CASE("weight coordinate systems round trip") {
  Weight w(4, {2, 0, 1, 3});
  CHECK(w.partition() == std::vector<int>{6, 4, 4, 3});
  CHECK(Weight::from_partition(4, w.partition()) == w);
  CHECK(w.size() == 2 * 1 + 1 * 3 + 3 * 4);
  CHECK(w.depth() == 4);
  CHECK(Weight::zero(5).depth() == 0);
  CHECK_THROWS(Weight::from_partition(3, {1, 2}));      // not decreasing
  CHECK_THROWS(Weight::from_partition(2, {1, 1, 1}));   // too many parts
  CHECK_THROWS(Weight(3, {1, -1, 0}));                  // negative coefficient
  CHECK_THROWS(Weight(0, {}));                          // rank 0
  CHECK_THROWS(Weight(3, {1, 1}));                      // length mismatch
}

TEST_CASE("weyl_dim base cases") {
  // rank 1: dim V(n l1) = n+1
  for (int n = 0; n <= 5; ++n) CHECK(weyl_dim(Weight(1, {n})) == n + 1);
  // trivial representation
  for (int g = 1; g <= 6; ++g) CHECK(weyl_dim(Weight::zero(g)) == 1);
  // dim V(l3) at g=3 equals dim L^3 V - dim V = 20 - 6
  CHECK(weyl_dim(L(3, {0, 0, 1})) == 14);
  // and agrees with character evaluation at the identity
  CHECK(irrep_character(L(3, {0, 0, 1})).dimension() == 14);
}

TEST_CASE("irrep_character small cases") {
  // g=1 fundamental: t + 1/t
  Character c = irrep_character(Weight(1, {1}));
  CHECK(c.coeff({1}) == 1);
  CHECK(c.coeff({-1}) == 1);
  CHECK(c.terms().size() == 2);

  // g=2 lambda_2: five weights, each multiplicity 1
  Character c2 = irrep_character(L(2, {0, 1}));
  CHECK(c2.terms().size() == 5);
  for (auto e : std::vector<ExpVec>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {0, 0}})
    CHECK(c2.coeff(e) == 1);

  // coefficient of the highest weight is 1, character invariant
  Character c3 = irrep_character(L(3, {1, 1, 0}));
  CHECK(c3.coeff({2, 1, 0}) == 1);
  CHECK(c3.is_weyl_invariant());
}

TEST_CASE("decompose: idempotence, squares, and the section-10 row") {
  // decompose(irrep_character) = identity
  Weight w = L(3, {0, 1, 1});
  CHECK(decompose(irrep_character(w)) == V(w));

  // V(l1)^{x2} at g >= 2
  Character sq = irrep_character(L(2, {1})) * irrep_character(L(2, {1}));
  VirtualRep expect(2);
  expect.add(L(2, {2}), 1);
  expect.add(L(2, {0, 1}), 1);
  expect.add(Weight::zero(2), 1);
  CHECK(decompose(sq) == expect);

  // Lambda^2 V(l3) at g=6 (the stable row)
  VirtualRep l2 = exterior_power(V(L(6, {0, 0, 1})), 2);
  VirtualRep row(6);
  row.add(L(6, {0, 0, 0, 0, 0, 1}), 1);
  row.add(L(6, {0, 0, 0, 1}), 1);
  row.add(L(6, {0, 1}), 1);
  row.add(L(6, {0, 1, 0, 1}), 1);
  row.add(L(6, {0, 2}), 1);
  row.add(Weight::zero(6), 1);
  CHECK(l2 == row);

  // non-invariant input is rejected
  Character bad(2);
  bad.add({1, 0}, 1);
  CHECK_THROWS_AS(decompose(bad), std::invalid_argument);
}

TEST_CASE("tensor products and the Klimyk oracle") {
  // V (x) V at g >= 2
  VirtualRep vv = tensor(V(L(2, {1})), V(L(2, {1})));
  VirtualRep expect(2);
  expect.add(L(2, {2}), 1);
  expect.add(L(2, {0, 1}), 1);
  expect.add(Weight::zero(2), 1);
  CHECK(vv == expect);

  // V(l1) (x) V(l2) at g >= 3
  VirtualRep vl12 = tensor(V(L(3, {1})), V(L(3, {0, 1})));
  VirtualRep expect2(3);
  expect2.add(L(3, {1, 1}), 1);
  expect2.add(L(3, {0, 0, 1}), 1);
  expect2.add(L(3, {1}), 1);
  CHECK(vl12 == expect2);
  CHECK(vl12 == tensor_klimyk(L(3, {1}), L(3, {0, 1})));

  // unit of the ring
  VirtualRep arbitrary(3);
  arbitrary.add(L(3, {1, 1}), 2);
  arbitrary.add(L(3, {0, 0, 1}), 1);
  CHECK(tensor(arbitrary, VirtualRep::trivial(3)) == arbitrary);

  CHECK_THROWS(tensor(V(L(2, {1})), V(L(3, {1}))));  // rank mismatch
}

TEST_CASE("exterior and symmetric powers") {
  // Lambda^2 V = V(l2) + V(0)
  VirtualRep l2v = exterior_power(V(L(3, {1})), 2);
  VirtualRep expect(3);
  expect.add(L(3, {0, 1}), 1);
  expect.add(Weight::zero(3), 1);
  CHECK(l2v == expect);

  // Lambda^3 V = V(l3) + V(l1) for g >= 3
  VirtualRep l3v = exterior_power(V(L(4, {1})), 3);
  VirtualRep expect3(4);
  expect3.add(L(4, {0, 0, 1}), 1);
  expect3.add(L(4, {1}), 1);
  CHECK(l3v == expect3);

  // Lambda^0 = trivial
  CHECK(exterior_power(V(L(3, {0, 1})), 0) == VirtualRep::trivial(3));

  // Sym^2 V = V(2 l1) (the adjoint representation)
  CHECK(symmetric_power(V(L(3, {1})), 2) == V(L(3, {2})));

  // multiset binomial: dim Sym^k = C(n+k-1, k)
  const Int n = weyl_dim(L(3, {0, 1}));
  CHECK(dim(symmetric_power(V(L(3, {0, 1})), 3)) == n * (n + 1) * (n + 2) / 6);

  // virtual input is rejected
  VirtualRep neg(3);
  neg.add(L(3, {1}), -1);
  CHECK_THROWS_AS(exterior_power(neg, 2), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_power(neg, 2), std::invalid_argument);
}

TEST_CASE("adams operations power the Newton recursions") {
  Character chi = irrep_character(L(2, {1}));
  Character a2 = adams(2, chi);
  CHECK(a2.coeff({2, 0}) == 1);
  CHECK(a2.dimension() == chi.dimension());
}

TEST_CASE("free_lie_graded") {
  VirtualRep gen = V(L(2, {1}));
  CHECK(free_lie_graded(gen, 1) == gen);
  CHECK(free_lie_graded(gen, 2) == exterior_power(gen, 2));
  // degree 3 of an m-dimensional module has dimension (m^3 - m)/3
  const Int m = dim(gen);
  CHECK(dim(free_lie_graded(gen, 3)) == (m * m * m - m) / 3);
  CHECK_THROWS(free_lie_graded(gen, 0));
}

TEST_CASE("stabilization") {
  // label transport
  VirtualRep r = V(L(3, {0, 0, 1}));
  VirtualRep s = stabilize(r, 7);
  CHECK(s == V(L(7, {0, 0, 1})));

  // tensor decomposition rank-independent in the stable range
  auto at_rank = [](int g) {
    return tensor(V(L(g, {1})), V(L(g, {1}))).partition_multiset();
  };
  CHECK(at_rank(2) == at_rank(5));

  CHECK_THROWS(stabilize(V(L(3, {0, 0, 1})), 2));  // too few parts available
}

TEST_CASE("Weyl alternating sum cross-check oracle") {
  for (int g : {2, 3}) {
    Weight w = L(g, {0, 1});
    CHECK(weyl_alternating_sum_check(w, irrep_character(w)));
    // a wrong character must be rejected
    Character wrong = irrep_character(w);
    wrong.add(ExpVec(g, 0), 1);
    CHECK_FALSE(weyl_alternating_sum_check(w, wrong));
  }
}

TEST_CASE("property suites at reduced case counts") {
  auto rr = checks::repring_suite(3, 40, checks::kDefaultSeed);
  CHECK(rr.failures == 0);
  auto pe = checks::peeling_suite(3, 20, checks::kDefaultSeed);
  CHECK(pe.failures == 0);
  auto st = checks::stability_suite();
  CHECK(st.failures == 0);
}
