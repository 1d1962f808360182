#include "torelli/checks.hpp"

#include <random>
#include <sstream>

#include "torelli/johnson.hpp"
#include "torelli/presentations.hpp"
#include "torelli/repring.hpp"

namespace torelli::checks {

using freelie::Alphabet;
using freelie::Context;
using freelie::SpOp;
using multilinear::Element;
using multilinear::Shape;

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  int uniform(int lo, int hi) {  // inclusive
    return static_cast<int>(lo + eng() % (hi - lo + 1));
  }
  Rat coeff() {
    int n = uniform(-4, 4);
    if (n == 0) n = 1;
    int d = uniform(1, 3);
    return Rat(n, d);
  }
};

Element random_element(Rng& rng, const Shape& shape, const Alphabet& alph, int terms) {
  Element e(shape, &alph);
  const int total = shape.total_symbols();
  for (int t = 0; t < terms; ++t) {
    std::vector<int> key(total);
    for (int& s : key) s = rng.uniform(0, alph.size() - 1);
    e.add_raw(std::move(key), rng.coeff());
  }
  return e;
}

// Random element of ker p: subtract the omega-correction of a random
// trivector, using p(x ^ omega) = (g-1) x.
Element random_kerp(Rng& rng, const Alphabet& alph, int terms) {
  Element e = random_element(rng, Shape::wedge(3), alph, terms);
  Element p = multilinear::proj_p(e);
  Element corr = multilinear::wedge_omega(p);
  corr *= Rat(1, alph.g - 1);
  return e - corr;
}

SpOp random_op(Rng& rng, const std::vector<SpOp>& ops) {
  return ops[rng.uniform(0, static_cast<int>(ops.size()) - 1)];
}

void fail(SuiteResult& r, const std::string& msg) {
  ++r.failures;
  if (r.messages.size() < 16) r.messages.push_back(msg);
}

}  // namespace

SuiteResult equivariance_suite(int g, int cases, uint64_t seed) {
  SuiteResult res{"equivariance(g=" + std::to_string(g) + ")"};
  Rng rng(seed + g);
  Alphabet alph = Alphabet::symplectic_basis(g);
  Context ctx(alph);
  const auto ops = freelie::all_ops(g);

  for (int t = 0; t < cases; ++t) {
    ++res.cases;
    const SpOp op = random_op(rng, ops);

    // p and wedge_omega.
    Element x3 = random_element(rng, Shape::wedge(3), alph, 3);
    if (!(multilinear::proj_p(multilinear::apply_op(op, x3)) -
          multilinear::apply_op(op, multilinear::proj_p(x3)))
             .zero())
      fail(res, "p not equivariant under " + op.str());
    Element x1 = random_element(rng, Shape::wedge(1), alph, 2);
    if (!(multilinear::wedge_omega(multilinear::apply_op(op, x1)) -
          multilinear::apply_op(op, multilinear::wedge_omega(x1)))
             .zero())
      fail(res, "wedge_omega not equivariant under " + op.str());

    // theta_k for k in {2, 4, 6}.
    for (int k : {2, 4, 6}) {
      Element xk = random_element(rng, Shape::wedge(k), alph, 3);
      if (!(multilinear::theta(multilinear::apply_op(op, xk)) -
            multilinear::apply_op(op, multilinear::theta(xk)))
               .zero())
        fail(res, "theta_" + std::to_string(k) + " not equivariant under " + op.str());
    }

    // p1..p4, q1, q2 equivariance (q's are invariant functionals).
    Element w = random_element(rng, Shape::tensor({1, 1, 2}), alph, 4);
    Element ow = multilinear::apply_op(op, w);
    using ProjFn = Element (*)(const Element&);
    const ProjFn projs[] = {multilinear::proj_p1, multilinear::proj_p2, multilinear::proj_p3,
                            multilinear::proj_p4};
    for (int i = 0; i < 4; ++i)
      if (!(projs[i](ow) - multilinear::apply_op(op, projs[i](w))).zero())
        fail(res, "p" + std::to_string(i + 1) + " not equivariant under " + op.str());
    if (op.kind != SpOp::H) {
      if (multilinear::proj_q1(ow) != 0) fail(res, "q1 not invariant under " + op.str());
      if (multilinear::proj_q2(ow) != 0) fail(res, "q2 not invariant under " + op.str());
    }

    // r and the bilinear form on ker p.
    Element u = random_kerp(rng, alph, 2);
    Element v = random_kerp(rng, alph, 2);
    Element ru_v = johnson::proj_r(multilinear::apply_op(op, u), v);
    Element ru_v2 = johnson::proj_r(u, multilinear::apply_op(op, v));
    Element rv = johnson::proj_r(u, v);
    if (!(ru_v + ru_v2 - multilinear::apply_op(op, rv)).zero())
      fail(res, "r not equivariant under " + op.str());
    Rat lhs = johnson::bilinear_form(multilinear::apply_op(op, u), v) +
              johnson::bilinear_form(u, multilinear::apply_op(op, v));
    if (lhs != 0) fail(res, "bilinear form not invariant under " + op.str());

    // Trivector action: D_{X xi} = [X, D_xi] on generators.
    Element xi = random_element(rng, Shape::wedge(3), alph, 2);
    auto D = johnson::lambda3_derivation(ctx, xi);
    auto DX = johnson::lambda3_derivation(ctx, multilinear::apply_op(op, xi));
    const int letter = rng.uniform(0, alph.size() - 1);
    freelie::Element lhs2 = ctx.apply_derivation(DX, ctx.letter(letter));
    freelie::Element rhs2 = ctx.apply_op(op, ctx.apply_derivation(D, ctx.letter(letter))) -
                            ctx.apply_derivation(D, ctx.apply_op(op, ctx.letter(letter)));
    if (!(lhs2 - rhs2).zero()) fail(res, "trivector action not equivariant under " + op.str());

    // Vanishing on the Jacobi image: q1-q2 exactly; p1-p3 and p2-p4 up
    // to multiples of omega (their primitive parts vanish).
    Element src = random_element(rng, Shape::tensor({1, 3}), alph, 3);
    Element jim = multilinear::jacobi_map(src);
    if (multilinear::proj_q1(jim) - multilinear::proj_q2(jim) != 0)
      fail(res, "(q1-q2) does not vanish on the Jacobi image");
    for (auto [a, b] : {std::pair{0, 2}, std::pair{1, 3}}) {
      Element d = projs[a](jim) - projs[b](jim);
      // subtract the omega component
      Rat trace = 0;
      for (const auto& [k, c] : d.terms()) trace += c * alph.pairing(k[0], k[1]);
      Element prim = d - multilinear::omega(alph) * (trace / g);
      if (!prim.zero())
        fail(res, "(p" + std::to_string(a + 1) + "-p" + std::to_string(b + 1) +
                      ") has nonzero primitive part on the Jacobi image");
    }
  }
  return res;
}

SuiteResult freelie_suite(int g, int cases, uint64_t seed) {
  SuiteResult res{"freelie(g=" + std::to_string(g) + ")"};
  Rng rng(seed + 10 * g);
  Alphabet alph = Alphabet::symplectic_basis(g);
  Context ctx(alph);
  const auto ops = freelie::all_ops(g);

  auto random_lie = [&](int degree, int terms) {
    freelie::Element e;
    const auto& basis = ctx.lyndon_basis(degree);
    for (int t = 0; t < terms; ++t)
      e.add(basis[rng.uniform(0, static_cast<int>(basis.size()) - 1)], rng.coeff());
    return e;
  };

  for (int t = 0; t < cases; ++t) {
    ++res.cases;
    freelie::Element x = random_lie(1 + t % 2, 2);
    freelie::Element y = random_lie(1, 2);
    freelie::Element z = random_lie(1, 2);

    // Antisymmetry and Jacobi.
    if (!(ctx.bracket(x, y) + ctx.bracket(y, x)).zero()) fail(res, "antisymmetry");
    freelie::Element jac = ctx.bracket(ctx.bracket(x, y), z) +
                           ctx.bracket(ctx.bracket(y, z), x) +
                           ctx.bracket(ctx.bracket(z, x), y);
    if (!jac.zero()) fail(res, "jacobi");

    // sp-equivariance of the bracket.
    const SpOp op = random_op(rng, ops);
    freelie::Element lhs = ctx.apply_op(op, ctx.bracket(x, y));
    freelie::Element rhs = ctx.bracket(ctx.apply_op(op, x), y) +
                           ctx.bracket(x, ctx.apply_op(op, y));
    if (!(lhs - rhs).zero()) fail(res, "bracket not equivariant under " + op.str());

    // Derivations extend by Leibniz: D[x,y] = [Dx,y] + [x,Dy].
    std::map<int, freelie::Element> images;
    for (int l = 0; l < alph.size(); ++l)
      if (rng.uniform(0, 1)) images[l] = random_lie(2, 2);
    auto D = ctx.derivation_from_map(std::move(images));
    freelie::Element dl = ctx.apply_derivation(D, ctx.bracket(x, y));
    freelie::Element dr = ctx.bracket(ctx.apply_derivation(D, x), y) +
                          ctx.bracket(x, ctx.apply_derivation(D, y));
    if (!(dl - dr).zero()) fail(res, "derivation Leibniz rule");
  }
  return res;
}

SuiteResult repring_suite(int g, int cases, uint64_t seed) {
  SuiteResult res{"repring(g=" + std::to_string(g) + ")"};
  Rng rng(seed + 100 * g);

  auto random_weight = [&](int max_size) {
    std::vector<int> coeffs(g, 0);
    int budget = rng.uniform(0, max_size);
    while (budget > 0) {
      int j = rng.uniform(1, std::min(g, budget));
      coeffs[j - 1] += 1;
      budget -= j;
    }
    return Weight(g, coeffs);
  };

  for (int t = 0; t < cases; ++t) {
    ++res.cases;
    Weight a = random_weight(4), b = random_weight(3);
    Character ca = repring::irrep_character(a);
    Character cb = repring::irrep_character(b);
    if (!ca.is_weyl_invariant()) fail(res, "character not Weyl invariant: " + a.str());
    Character prod = ca * cb;
    if (!prod.is_weyl_invariant()) fail(res, "product character not Weyl invariant");

    // Dimension homomorphism.
    VirtualRep va = VirtualRep::irreducible(a), vb = VirtualRep::irreducible(b);
    VirtualRep tp = repring::tensor(va, vb);
    if (repring::dim(tp) != repring::weyl_dim(a) * repring::weyl_dim(b))
      fail(res, "tensor dimension not multiplicative");

    // Klimyk oracle agreement.
    if (!(tp == repring::tensor_klimyk(a, b))) fail(res, "Klimyk disagreement");

    // Exterior power dimension binomial.
    const int k = rng.uniform(0, 3);
    VirtualRep ext = repring::exterior_power(va, k);
    Int n = repring::weyl_dim(a), binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
    if (repring::dim(ext) != binom) fail(res, "exterior power dimension");
  }
  return res;
}

SuiteResult witt_suite(int max_m, int max_n) {
  SuiteResult res{"witt"};
  for (int m = 2; m <= max_m; ++m) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back("x" + std::to_string(i));
    Context ctx(Alphabet::plain(names));
    // Representation-ring side: an m-dimensional genuine module.
    const int g = std::max(1, m / 2);
    VirtualRep gen(g);
    gen.add(Weight::fundamental(g, 1), 1);
    for (int extra = m - 2 * g; extra > 0; --extra) gen.add(Weight::zero(g), 1);
    for (int n = 1; n <= max_n; ++n) {
      ++res.cases;
      const Int expected = witt_number(m, n);
      if (Int(static_cast<int>(ctx.lyndon_basis(n).size())) != expected)
        fail(res, "lyndon count mismatch m=" + std::to_string(m) + " n=" + std::to_string(n));
      if (repring::dim(repring::free_lie_graded(gen, n)) != expected)
        fail(res, "free_lie_graded dim mismatch m=" + std::to_string(m) +
                      " n=" + std::to_string(n));
    }
  }
  return res;
}

SuiteResult peeling_suite(int g, int cases, uint64_t seed) {
  SuiteResult res{"peeling(g=" + std::to_string(g) + ")"};
  Rng rng(seed + 1000 * g);
  // All dominant weights with |lambda| <= 6.
  std::vector<Weight> doms;
  std::vector<int> coeffs(g, 0);
  auto rec = [&](auto&& self, int j, int budget) -> void {
    if (j == g) {
      doms.emplace_back(g, coeffs);
      return;
    }
    for (int c = 0; c * (j + 1) <= budget; ++c) {
      coeffs[j] = c;
      self(self, j + 1, budget - c * (j + 1));
    }
    coeffs[j] = 0;
  };
  rec(rec, 0, 6);
  for (const Weight& w : doms) {
    ++res.cases;
    VirtualRep d = repring::decompose(repring::irrep_character(w));
    if (!(d == VirtualRep::irreducible(w)))
      fail(res, "decompose(irrep_character) != identity at " + w.str());
  }
  for (int t = 0; t < cases; ++t) {
    ++res.cases;
    // Random small genuine rep: round trip through characters.
    VirtualRep r(g);
    for (int i = 0; i < 3; ++i)
      r.add(doms[rng.uniform(0, static_cast<int>(doms.size()) - 1)], rng.uniform(1, 3));
    if (!(repring::decompose(repring::character_of(r)) == r)) fail(res, "round trip");
  }
  return res;
}

SuiteResult gf_suite(const std::vector<std::tuple<int, int, int>>& cases, int cutoff) {
  SuiteResult res{"engine-vs-series"};
  for (const auto& [g, n, r] : cases) {
    ++res.cases;
    auto p = presentations::braid_presentation(g, n, r);
    Context ctx(p.generators);
    auto rep = presentation::graded_nilpotent_quotient(ctx, p, cutoff);
    auto series = presentations::lcs_gf_ranks(g, n, cutoff, r);
    for (int l = 1; l <= cutoff; ++l)
      if (rep.dims[l - 1] != series.ranks[l - 1]) {
        std::ostringstream os;
        os << "(g=" << g << ",n=" << n << ",r=" << r << ") degree " << l << ": engine "
           << rep.dims[l - 1] << " vs series " << series.ranks[l - 1];
        fail(res, os.str());
      }
  }
  return res;
}

SuiteResult stability_suite() {
  SuiteResult res{"stability"};
  // Tensor products: delta(V) + delta(W) <= g.
  struct TCase {
    std::vector<int> a, b;
  };
  const std::vector<TCase> tcases = {{{1}, {1}}, {{1, 1}, {1}}, {{1, 1, 1}, {1, 1}}, {{2}, {1, 1}}};
  for (const auto& c : tcases) {
    ++res.cases;
    const int da = static_cast<int>(c.a.size()), db = static_cast<int>(c.b.size());
    const int gmin = da + db;
    auto at_rank = [&](int g) {
      VirtualRep x = VirtualRep::irreducible(Weight::from_partition(g, c.a));
      VirtualRep y = VirtualRep::irreducible(Weight::from_partition(g, c.b));
      return repring::tensor(x, y).partition_multiset();
    };
    auto base = at_rank(gmin);
    for (int g = gmin + 1; g <= gmin + 2; ++g)
      if (at_rank(g) != base) fail(res, "tensor decomposition not stable");
  }
  // Exterior squares: |beta| delta(V) <= g, and the known unstable row:
  // Lambda^2 V(l3) differs between g=5 and g=6 exactly by V(l6).
  {
    ++res.cases;
    auto l2 = [&](int g) {
      return repring::exterior_power(VirtualRep::irreducible(Weight::fundamental(g, 3)), 2);
    };
    auto m6 = l2(6).partition_multiset();
    auto m7 = l2(7).partition_multiset();
    if (m6 != m7) fail(res, "Lambda^2 V(l3) not stable for g >= 6");
    auto m5 = l2(5).partition_multiset();
    auto diff = m6;
    for (auto& [p, m] : m5) diff[p] -= m;
    std::map<std::vector<int>, Int> expected{{{1, 1, 1, 1, 1, 1}, 1}};
    for (auto it = diff.begin(); it != diff.end();)
      it = it->second == 0 ? diff.erase(it) : std::next(it);
    if (diff != expected) fail(res, "g=5 vs g=6 row should differ exactly by V(l6)");
  }
  // pg_graded stability: partition multisets independent of g for l <= 4.
  for (int l = 1; l <= 4; ++l) {
    ++res.cases;
    auto base = presentations::pg_graded(4, l).partition_multiset();
    for (int g : {5, 6})
      if (presentations::pg_graded(g, l).partition_multiset() != base)
        fail(res, "pg_graded not stable at l=" + std::to_string(l));
  }
  return res;
}

}  // namespace torelli::checks
