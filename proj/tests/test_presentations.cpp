#include <doctest.h>

#include "torelli/checks.hpp"
#include "torelli/json_io.hpp"
#include "torelli/presentations.hpp"
#include "torelli/spmodule.hpp"

using namespace torelli;
using namespace torelli::presentations;
using freelie::Alphabet;
using freelie::Context;

namespace {
Weight W(int g, std::vector<int> coeffs) {
  coeffs.resize(g, 0);
  return Weight(g, coeffs);
}
}  // namespace

TEST_CASE("pg_graded: the lower-central-series table") {
  for (int g : {3, 4, 5, 6}) {
    CHECK(pg_graded(g, 1) == VirtualRep::irreducible(W(g, {1})));
    CHECK(pg_graded(g, 2) == VirtualRep::irreducible(W(g, {0, 1})));
    CHECK(pg_graded(g, 3) == VirtualRep::irreducible(W(g, {1, 1})));
    VirtualRep l4(g);
    l4.add(W(g, {2}), 1);
    l4.add(W(g, {2, 1}), 1);
    l4.add(W(g, {1, 0, 1}), 1);
    CHECK(pg_graded(g, 4) == l4);
  }
  // g=1: the torus is abelian in degree 2.
  CHECK(pg_graded(1, 2).empty());
}

TEST_CASE("Koszul Euler characteristic vanishes for l >= 3") {
  for (int g = 1; g <= 4; ++g)
    for (int l = 3; l <= 6; ++l) CHECK(koszul_euler_characteristic(g, l).empty());
}

TEST_CASE("torelli_presentation relation modules") {
  // g=6 row
  auto t6 = torelli_presentation(6, TorelliMode::repring);
  VirtualRep expect(6);
  expect.add(W(6, {0, 0, 0, 0, 0, 1}), 1);
  expect.add(W(6, {0, 0, 0, 1}), 1);
  expect.add(W(6, {0, 1}), 1);
  expect.add(W(6, {0, 1, 0, 1}), 1);
  CHECK(t6.relation_module == expect);

  // g=3: empty, with the cubic caveat recorded
  auto t3 = torelli_presentation(3, TorelliMode::repring);
  CHECK(t3.relation_module.empty());
  CHECK_FALSE(t3.notes.empty());

  // dimension check at g=3: dim Lambda^2 V(l3) = 91 = dim V(2 l2) + 1
  CHECK(repring::weyl_dim(W(3, {0, 0, 1})) == 14);
  CHECK(repring::weyl_dim(W(3, {0, 2})) == 90);

  CHECK_THROWS(torelli_presentation(2, TorelliMode::repring));
}

TEST_CASE("torelli concrete mode: generator completeness at g=4") {
  auto tp = torelli_presentation(4, TorelliMode::concrete);
  REQUIRE(tp.concrete.has_value());
  // The relation count equals dim Lambda^2 V(l3) - dim V(2 l2) - 1.
  const Int l2dim = repring::weyl_dim(W(4, {0, 0, 1})) * (repring::weyl_dim(W(4, {0, 0, 1})) - 1) / 2;
  const Int expected_rank = l2dim - repring::weyl_dim(W(4, {0, 2})) - 1;
  CHECK(Int(static_cast<int>(tp.concrete->relations.size())) == expected_rank);

  // The submodule generated by tau(phi_12) ^ tau(phi_34) decomposes as
  // the full complement V(l2) + V(l2+l4).
  Alphabet alph = Alphabet::symplectic_basis(4);
  auto kp = spmodule::kerp_module(alph);
  auto pair_mod = spmodule::wedge2_module(kp.mod);
  auto tau12 = johnson::johnson_tau_phi(alph, 1, 2).element;
  auto tau34 = johnson::johnson_tau_phi(alph, 3, 4).element;
  spmodule::Vec c1 = kp.coordinates(tau12), c2 = kp.coordinates(tau34);
  spmodule::Vec seed;
  int t = 0;
  std::map<std::pair<int, int>, int> pidx;
  for (int i = 0; i < kp.mod.dim; ++i)
    for (int j = i + 1; j < kp.mod.dim; ++j) pidx[{i, j}] = t++;
  for (const auto& [i, ci] : c1)
    for (const auto& [j, cj] : c2) {
      if (i == j) continue;
      int a = i, b = j;
      Rat c = ci * cj;
      if (a > b) {
        std::swap(a, b);
        c = -c;
      }
      seed[pidx.at({a, b})] += c;
      if (seed[pidx.at({a, b})] == 0) seed.erase(pidx.at({a, b}));
    }
  auto sub = spmodule::submodule_generated(pair_mod, {seed});
  auto dec = spmodule::decompose_concrete(pair_mod, sub);
  VirtualRep expect(4);
  expect.add(W(4, {0, 1}), 1);
  expect.add(W(4, {0, 1, 0, 1}), 1);
  CHECK(dec == expect);
}

TEST_CASE("submodule_generated basics") {
  Alphabet alph = Alphabet::symplectic_basis(3);
  // seed a1 in V generates all of V
  auto mv = spmodule::module_from_shape(multilinear::Shape::wedge(1), alph);
  spmodule::Vec seed;
  seed.emplace(0, 1);  // keys sorted: a1 is index 0
  auto sub = spmodule::submodule_generated(mv, {seed});
  CHECK(sub.rank() == 2 * 3);

  // seed a1^b1 in Lambda^2 V generates everything (omega and l2 parts)
  auto m2 = spmodule::module_from_shape(multilinear::Shape::wedge(2), alph);
  // find the index of key {a1, b1}: keys sorted lexicographically
  multilinear::Element probe(multilinear::Shape::wedge(2), &alph);
  probe.add_raw({alph.a(1), alph.b(1)}, 1);
  // translate to module coordinates by matching weights/keys: rebuild key list
  // the same way the module does (sorted), so a1^b1 has a known position.
  // a1 = 0, b1 = 3 at g=3; sorted pairs starting with (0,1),(0,2),(0,3)...
  // (0,3) is the third pair -> index 2.
  spmodule::Vec seed2;
  seed2.emplace(2, 1);
  auto sub2 = spmodule::submodule_generated(m2, {seed2});
  CHECK(sub2.rank() == 3 * (2 * 3 - 1));  // g(2g-1)

  // decompose_concrete of the full Lambda^2 V
  auto dec = spmodule::decompose_concrete(m2, sub2);
  VirtualRep expect(3);
  expect.add(W(3, {0, 1}), 1);
  expect.add(Weight::zero(3), 1);
  CHECK(dec == expect);

  // seed-order invariance of the echelon basis
  spmodule::Vec s3;
  s3.emplace(5, Rat(2));
  auto a = spmodule::submodule_generated(m2, {seed2, s3});
  auto b = spmodule::submodule_generated(m2, {s3, seed2});
  REQUIRE(a.rank() == b.rank());
  auto ita = a.rows().begin();
  auto itb = b.rows().begin();
  for (; ita != a.rows().end(); ++ita, ++itb) {
    CHECK(ita->first == itb->first);
    CHECK(ita->second == itb->second);
  }

  CHECK_THROWS(spmodule::submodule_generated(m2, {}));

  // zero subspace decomposes to the empty rep; non-stable input throws
  spmodule::Echelon empty;
  CHECK(spmodule::decompose_concrete(m2, empty).empty());
  spmodule::Echelon unstable;
  unstable.insert(seed2);  // a1^b1 alone is not sp-stable
  CHECK_THROWS_AS(spmodule::decompose_concrete(m2, unstable), std::invalid_argument);
}

TEST_CASE("V(l3) as the kernel of p") {
  Alphabet alph = Alphabet::symplectic_basis(3);
  auto kp = spmodule::kerp_module(alph);
  CHECK(kp.mod.dim == 14);
  spmodule::Echelon full;
  for (int i = 0; i < kp.mod.dim; ++i) {
    spmodule::Vec v;
    v.emplace(i, 1);
    full.insert(std::move(v));
  }
  auto dec = spmodule::decompose_concrete(kp.mod, full);
  CHECK(dec == VirtualRep::irreducible(W(3, {0, 0, 1})));
}

TEST_CASE("braid_presentation shapes and the surface degeneration") {
  // n=1, r=0: single relation sum [A_k, B_k]
  auto p = braid_presentation(2, 1, 0);
  CHECK(p.relations.size() == 1);
  Context ctx(p.generators);
  CHECK(ctx.degree_of(p.relations[0]) == 2);

  // (g=1, n=0, r=1): no third-family relation at all
  auto pt = braid_presentation(1, 0, 1);
  CHECK(pt.relations.empty());

  CHECK_THROWS(braid_presentation(2, 0, 0));
}

TEST_CASE("engine vs series for the braid presentations") {
  auto res = checks::gf_suite({{1, 1, 0}, {1, 2, 0}, {2, 1, 0}, {2, 2, 0}}, 4);
  for (const auto& m : res.messages) MESSAGE(m);
  CHECK(res.failures == 0);
  // r = 1 variants at g = 2 through degree 2 (the framing adds one
  // degree-2 class; see the decorated notes for degree >= 3).
  auto res2 = checks::gf_suite({{2, 1, 1}, {2, 0, 1}}, 2);
  for (const auto& m : res2.messages) MESSAGE(m);
  CHECK(res2.failures == 0);
}

TEST_CASE("torelli degree-2 engine dimensions (Thm lower)") {
  for (int g : {3, 4}) {
    auto tp = torelli_presentation(g, TorelliMode::concrete);
    REQUIRE(tp.concrete.has_value());
    Context ctx(tp.concrete->generators);
    auto rep = presentation::graded_nilpotent_quotient(ctx, *tp.concrete, 2);
    std::vector<int> c(g, 0);
    c[1] = 2;
    CHECK(rep.dims[1] == repring::weyl_dim(Weight(g, c)) + 1);
  }
}

TEST_CASE("h1_braid") {
  auto h = h1_braid(2, 0, 1);
  CHECK(h.free_rank == 4);
  REQUIRE(h.torsion.size() == 1);
  CHECK(h.torsion[0] == 2);

  auto h2 = h1_braid(3, 2, 0);
  CHECK(h2.free_rank == 12);
  CHECK(h2.torsion.empty());

  auto h3 = h1_braid(1, 1, 0);
  CHECK(h3.free_rank == 2);
  CHECK(h3.torsion.empty());

  // degenerate g=1 framing: flagged free ranks
  auto h4 = h1_braid(1, 0, 2);
  CHECK(h4.free_rank == 4 + 2);
  CHECK(h4.degenerate_flag);

  CHECK_THROWS(h1_braid(2, 0, 0));
}

TEST_CASE("rank generating functions") {
  CHECK(lcs_gf_ranks(1, 1, 3).ranks == std::vector<Int>{2, 0, 0});
  CHECK(lcs_gf_ranks(1, 2, 3).ranks == std::vector<Int>{4, 1, 2});
  CHECK(lcs_gf_ranks(2, 1, 3).ranks == std::vector<Int>{4, 5, 16});
  CHECK(lcs_gf_ranks(2, 1, 4).ranks == std::vector<Int>{4, 5, 16, 45});
  CHECK(classical_braid_gf(3, 3).ranks == std::vector<Int>{3, 1, 2});
  // product identity: prod (1-t^l)^{r_l} = the defining polynomial mod t^{L+1}
  // spot check via the Witt-style reconstruction at (2,2)
  auto rs = lcs_gf_ranks(2, 2, 4);
  CHECK(rs.ranks == std::vector<Int>{8, 11, 36, 105});
}

TEST_CASE("decorated torelli presentation") {
  auto vc = johnson::verify_constants(4);
  REQUIRE(vc.pass);

  // (g, 0, 0) reduces to the torelli presentation plus the central gamma.
  auto p00 = decorated_torelli_presentation(4, 0, 0, vc);
  CHECK(p00.has_central_gamma);
  Context c00(p00.generators);
  auto rep00 = presentation::graded_nilpotent_quotient(c00, p00, 2);
  CHECK(rep00.dims[1] == decorated_degree2_dim(4, 0, 0));

  // engine degree-2 self-consistency with marked points and tangents
  for (auto [n, r] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}}) {
    auto p = decorated_torelli_presentation(4, n, r, vc);
    Context ctx(p.generators);
    auto rep = presentation::graded_nilpotent_quotient(ctx, p, 2);
    CHECK(rep.dims[1] == decorated_degree2_dim(4, n, r));
  }

  // mixed relation instantiates the trivector action: probe one relation
  // of the form [u_i, X] - tau(u_i)(X).
  {
    auto p = decorated_torelli_presentation(4, 1, 0, vc);
    Context ctx(p.generators);
    Alphabet alph = Alphabet::symplectic_basis(4);
    auto kp = spmodule::kerp_module(alph);
    freelie::Context actx(alph);
    // find a relation whose leading word is [u_1, A1_1]: evaluate the
    // trivector action on A1 directly and compare coefficients.
    auto D = johnson::lambda3_derivation(actx, kp.basis[0]);
    freelie::Element img = D.images.count(alph.a(1)) ? D.images.at(alph.a(1)) : freelie::Element{};
    // the corresponding decorated relation: [u1, A1_1] - img-in-strand-1
    const int m = kp.mod.dim;
    freelie::Element expect;
    expect.add({0, m + 0}, 1);  // [u1, A1_1] as a Lyndon word (u1 < A1_1)
    for (const auto& [w, c] : img.terms) {
      freelie::Word sw = w;
      for (int& letter : sw) letter += m;
      expect.add(sw, -c);
    }
    bool found = false;
    for (const auto& rel : p.relations)
      if ((rel - expect).zero()) found = true;
    CHECK(found);
  }

  // unverified constants are refused
  johnson::VerifiedConstants bad = vc;
  bad.pass = false;
  CHECK_THROWS_AS(decorated_torelli_presentation(4, 1, 0, bad), std::invalid_argument);
  johnson::VerifiedConstants wrong_g = vc;
  wrong_g.g = 5;
  CHECK_THROWS_AS(decorated_torelli_presentation(5, 1, 0, wrong_g), std::invalid_argument);
}

TEST_CASE("H^2_cts identification at g=6") {
  // The relation module of the torelli presentation equals the stated
  // H^2_cts decomposition V(l6)+V(l4)+V(l2)+V(l2+l4).
  auto t6 = torelli_presentation(6, TorelliMode::repring);
  VirtualRep expect(6);
  expect.add(W(6, {0, 0, 0, 0, 0, 1}), 1);
  expect.add(W(6, {0, 0, 0, 1}), 1);
  expect.add(W(6, {0, 1}), 1);
  expect.add(W(6, {0, 1, 0, 1}), 1);
  CHECK(t6.relation_module == expect);
}

TEST_CASE("json round trips") {
  Weight w(4, {1, 0, 2, 0});
  CHECK(json_io::weight_from_json(json_io::to_json(w)) == w);
  VirtualRep r(4);
  r.add(w, 3);
  r.add(Weight::zero(4), -2);
  CHECK(json_io::virtual_rep_from_json(json_io::to_json(r)) == r);
}
