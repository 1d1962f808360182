#include <doctest.h>

#include "torelli/checks.hpp"
#include "torelli/freelie.hpp"
#include "torelli/presentation.hpp"
#include "torelli/presentations.hpp"

using namespace torelli;
using namespace torelli::freelie;
using presentation::GradedPresentation;
using presentation::graded_nilpotent_quotient;
using presentation::parse_expression;
using presentation::print_element;

TEST_CASE("lyndon_basis sizes and order") {
  Context ctx(Alphabet::plain({"x", "y"}));
  CHECK(ctx.lyndon_basis(1) == std::vector<Word>{{0}, {1}});
  CHECK(ctx.lyndon_basis(2) == std::vector<Word>{{0, 1}});
  // degree 3: words xxy and xyy
  CHECK(ctx.lyndon_basis(3) == std::vector<Word>{{0, 0, 1}, {0, 1, 1}});
  for (int n = 1; n <= 8; ++n)
    CHECK(Int(static_cast<int>(ctx.lyndon_basis(n).size())) == witt_number(2, n));
  CHECK_THROWS(ctx.lyndon_basis(0));
}

TEST_CASE("lyndon_basis respects letter degrees") {
  // gamma has degree 2: weight-2 basis is {[x,y], gamma}.
  Context ctx(Alphabet::graded({"x", "y", "g"}, {1, 1, 2}));
  CHECK(ctx.lyndon_basis(2).size() == 2);
  CHECK(ctx.lyndon_basis(3).size() == 2 + 2);  // xxy, xyy, xg, yg
}

TEST_CASE("bracket normal form") {
  Context ctx(Alphabet::plain({"x", "y", "z"}));
  Element x = ctx.letter(0), y = ctx.letter(1), z = ctx.letter(2);

  CHECK(ctx.bracket(x, x).zero());
  CHECK((ctx.bracket(x, y) + ctx.bracket(y, x)).zero());

  // Jacobi on a mixed-degree triple.
  Element a = ctx.bracket(x, y);
  Element jac = ctx.bracket(ctx.bracket(a, z), y) + ctx.bracket(ctx.bracket(z, y), a) +
                ctx.bracket(ctx.bracket(y, a), z);
  CHECK(jac.zero());

  // Every bracket of basis monomials lands in the Lyndon basis span of
  // the right degree.
  Element b = ctx.bracket(ctx.bracket(x, z), ctx.bracket(x, ctx.bracket(y, z)));
  CHECK(ctx.degree_of(b) == 5);
  for (const auto& [w, c] : b.terms) CHECK(is_lyndon(w));
}

TEST_CASE("sp generator action on symbols") {
  Alphabet alph = Alphabet::symplectic_basis(3);
  Context ctx(alph);
  auto img = [&](SpOp op, int letter) { return ctx.apply_op(op, ctx.letter(letter)); };

  // T_i(b_i) = a_i, others 0
  CHECK(print_element(ctx, img({SpOp::T, 1}, alph.b(1))) == "a1");
  CHECK(img({SpOp::T, 1}, alph.a(1)).zero());
  CHECK(img({SpOp::T, 1}, alph.b(2)).zero());
  // S_{1,2}(b_1) = -b_2, S_{1,2}(a_2) = a_1
  CHECK(print_element(ctx, img({SpOp::S, 1, 2}, alph.b(1))) == "-b2");
  CHECK(print_element(ctx, img({SpOp::S, 1, 2}, alph.a(2))) == "a1");
  // F_{1,2}(a_1) = 0, F_{1,2}(b_1) = a_2, F_{1,2}(b_2) = a_1
  CHECK(img({SpOp::F, 1, 2}, alph.a(1)).zero());
  CHECK(print_element(ctx, img({SpOp::F, 1, 2}, alph.b(1))) == "a2");
  CHECK(print_element(ctx, img({SpOp::F, 1, 2}, alph.b(2))) == "a1");
  CHECK_THROWS(img({SpOp::T, 4}, alph.a(1)));  // index out of range
}

TEST_CASE("sp action is a bracket derivation") {
  auto res = checks::freelie_suite(3, 60, checks::kDefaultSeed);
  CHECK(res.failures == 0);
}

TEST_CASE("derivations") {
  Alphabet alph = Alphabet::symplectic_basis(2);
  Context ctx(alph);

  // zero derivation
  Derivation zero = ctx.derivation_from_map({});
  CHECK(ctx.apply_derivation(zero, ctx.bracket(ctx.letter(0), ctx.letter(1))).zero());

  // [D, D] = 0
  std::map<int, Element> images;
  images[alph.a(1)] = ctx.bracket(ctx.letter(alph.a(2)), ctx.letter(alph.b(2)));
  images[alph.b(2)] = ctx.bracket(ctx.letter(alph.a(1)), ctx.letter(alph.b(1)));
  Derivation d = ctx.derivation_from_map(images);
  Derivation dd = ctx.derivation_bracket(d, d);
  CHECK(dd.images.empty());

  // mixed image degrees are rejected
  std::map<int, Element> bad;
  bad[alph.a(1)] = ctx.letter(alph.a(2));
  bad[alph.a(2)] = ctx.bracket(ctx.letter(alph.a(1)), ctx.letter(alph.b(1)));
  CHECK_THROWS_AS(ctx.derivation_from_map(bad), std::invalid_argument);
}

TEST_CASE("presentation grammar round trip") {
  Alphabet alph = Alphabet::symplectic_basis(2, 2);
  Context ctx(alph);
  const std::string src = "[A1_1, B1_1] - 2*[A2_1, B2_1]";
  Element e = parse_expression(ctx, src);
  CHECK_FALSE(e.zero());
  Element e2 = parse_expression(ctx, print_element(ctx, e));
  CHECK((e - e2).zero());

  // rational coefficients
  Element f = parse_expression(ctx, "1/2*[A1_1, B1_2] + 3/2*[A1_2, B1_1]");
  Element f2 = parse_expression(ctx, print_element(ctx, f));
  CHECK((f - f2).zero());

  CHECK_THROWS(parse_expression(ctx, "[A1_1, Q9]"));
  CHECK_THROWS(parse_expression(ctx, "[A1_1 B1_1]"));
}

TEST_CASE("graded_nilpotent_quotient: free algebras give Witt numbers") {
  Context ctx(Alphabet::plain({"x", "y", "z"}));
  GradedPresentation p;
  p.generators = ctx.alphabet();
  auto rep = graded_nilpotent_quotient(ctx, p, 3);
  CHECK(rep.dims == std::vector<Int>{3, 3, 8});  // m, m(m-1)/2 + ... witt numbers
  CHECK(rep.dims[1] == witt_number(3, 2));
  CHECK(rep.dims[2] == witt_number(3, 3));
}

TEST_CASE("graded_nilpotent_quotient: surface relation, g=2") {
  Alphabet alph = Alphabet::symplectic_basis(2);
  Context ctx(alph);
  Element rel;
  for (int k = 1; k <= 2; ++k)
    rel += ctx.bracket(ctx.letter(alph.a(k)), ctx.letter(alph.b(k)));
  GradedPresentation p;
  p.generators = alph;
  p.relations = {rel};
  auto rep = graded_nilpotent_quotient(ctx, p, 3);
  CHECK(rep.dims == std::vector<Int>{4, 5, 16});
}

TEST_CASE("graded_nilpotent_quotient: classical braid relations, n=3") {
  auto p = presentations::classical_braid_presentation(3);
  Context ctx(p.generators);
  auto rep = graded_nilpotent_quotient(ctx, p, 3);
  CHECK(rep.dims == std::vector<Int>{3, 1, 2});
  auto series = presentations::classical_braid_gf(3, 3);
  CHECK(rep.dims == series.ranks);
}

TEST_CASE("graded_nilpotent_quotient: degenerate degree-1 relation shrinks generators") {
  Context ctx(Alphabet::plain({"x", "y"}));
  GradedPresentation p;
  p.generators = ctx.alphabet();
  p.relations = {ctx.letter(1)};  // y = 0
  auto rep = graded_nilpotent_quotient(ctx, p, 3);
  CHECK(rep.dims == std::vector<Int>{1, 0, 0});
}

TEST_CASE("graded_nilpotent_quotient: inhomogeneous relation rejected") {
  Context ctx(Alphabet::plain({"x", "y"}));
  GradedPresentation p;
  p.generators = ctx.alphabet();
  Element bad = ctx.letter(0) + ctx.bracket(ctx.letter(0), ctx.letter(1));
  p.relations = {bad};
  CHECK_THROWS_AS(graded_nilpotent_quotient(ctx, p, 2), std::invalid_argument);
}

TEST_CASE("quotient engine agrees with the representation-ring recursion") {
  // Surface presentation dims equal dim p_g(l) for l <= 5, g in {2,3}.
  for (int g : {2, 3}) {
    Alphabet alph = Alphabet::symplectic_basis(g);
    Context ctx(alph);
    Element rel;
    for (int k = 1; k <= g; ++k)
      rel += ctx.bracket(ctx.letter(alph.a(k)), ctx.letter(alph.b(k)));
    GradedPresentation p;
    p.generators = alph;
    p.relations = {rel};
    auto rep = graded_nilpotent_quotient(ctx, p, 5);
    for (int l = 1; l <= 5; ++l)
      CHECK(rep.dims[l - 1] == repring::dim(presentations::pg_graded(g, l)));
  }
}

TEST_CASE("witt cross-check suite") {
  auto res = checks::witt_suite(12, 6);
  CHECK(res.failures == 0);
}

TEST_CASE("fingerprints are stable and order-sensitive") {
  Context ctx(Alphabet::plain({"x", "y"}));
  GradedPresentation p;
  p.generators = ctx.alphabet();
  p.relations = {ctx.bracket(ctx.letter(0), ctx.letter(1))};
  auto r1 = graded_nilpotent_quotient(ctx, p, 2);
  auto r2 = graded_nilpotent_quotient(ctx, p, 2);
  CHECK(r1.presentation_fingerprint == r2.presentation_fingerprint);
}
