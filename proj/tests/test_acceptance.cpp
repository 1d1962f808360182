// Acceptance suite: runs every acceptance criterion at its stated
// tolerance (exact equality throughout) and prints one pass/fail line
// per criterion.  Exit code 0 iff all criteria pass.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "torelli/checks.hpp"
#include "torelli/johnson.hpp"
#include "torelli/presentation.hpp"
#include "torelli/presentations.hpp"
#include "torelli/repring.hpp"
#include "torelli/spmodule.hpp"

using namespace torelli;
using presentations::TorelliMode;

namespace {

int g_failures = 0;

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::vector<std::string> details;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back(what);
    }
  }
  void finish() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "CRITERION " << id << " [" << (pass ? "PASS" : "FAIL") << "] " << name << " ("
              << ms << " ms)\n";
    for (const auto& d : details) std::cout << "    - " << d << "\n";
    if (!pass) ++g_failures;
  }
};

Weight W(int g, std::vector<int> coeffs) {
  coeffs.resize(g, 0);
  return Weight(g, coeffs);
}

VirtualRep rep_of(int g, std::initializer_list<std::vector<int>> weights) {
  VirtualRep r(g);
  for (auto& w : weights) r.add(W(g, w), 1);
  return r;
}

void criterion1() {
  Criterion c{1, "Lambda^2 V(l3) decomposition matches the quadratic-relations table, g=3..6"};
  for (int g = 3; g <= 6; ++g) {
    VirtualRep got =
        repring::exterior_power(VirtualRep::irreducible(Weight::fundamental(g, 3)), 2);
    VirtualRep expect(g);
    if (g >= 6) expect.add(W(g, {0, 0, 0, 0, 0, 1}), 1);
    if (g >= 5) expect.add(W(g, {0, 0, 0, 1}), 1);
    if (g >= 4) {
      expect.add(W(g, {0, 1}), 1);
      expect.add(W(g, {0, 1, 0, 1}), 1);
    }
    expect.add(W(g, {0, 2}), 1);
    expect.add(Weight::zero(g), 1);
    c.check(got == expect, "g=" + std::to_string(g) + ": got " + got.str());
    // the complement (relation module) is empty exactly at g=3
    VirtualRep complement = got;
    complement -= VirtualRep::irreducible(W(g, {0, 2}));
    complement -= VirtualRep::trivial(g);
    if (g == 3) c.check(complement.empty(), "g=3 complement not empty");
  }
  c.finish();
}

void criterion2() {
  Criterion c{2, "p_g(l) for l<=4 and d_g(l), o_g(l) for l<=3 match the tables, g=3..6"};
  for (int g = 3; g <= 6; ++g) {
    c.check(presentations::pg_graded(g, 1) == rep_of(g, {{1}}), "p(1) at g=" + std::to_string(g));
    c.check(presentations::pg_graded(g, 2) == rep_of(g, {{0, 1}}), "p(2) at g=" + std::to_string(g));
    c.check(presentations::pg_graded(g, 3) == rep_of(g, {{1, 1}}), "p(3) at g=" + std::to_string(g));
    c.check(presentations::pg_graded(g, 4) == rep_of(g, {{2}, {2, 1}, {1, 0, 1}}),
            "p(4) at g=" + std::to_string(g));
    c.check(johnson::dg_graded(g, 1) == rep_of(g, {{0, 0, 1}, {1}}), "d(1) g=" + std::to_string(g));
    c.check(johnson::dg_graded(g, 2) == rep_of(g, {{0, 2}, {0, 1}}), "d(2) g=" + std::to_string(g));
    c.check(johnson::dg_graded(g, 3) == rep_of(g, {{2, 0, 1}, {1, 1}, {3}}),
            "d(3) g=" + std::to_string(g));
    c.check(johnson::og_graded(g, 1) == rep_of(g, {{0, 0, 1}}), "o(1) g=" + std::to_string(g));
    c.check(johnson::og_graded(g, 2) == rep_of(g, {{0, 2}}), "o(2) g=" + std::to_string(g));
    c.check(johnson::og_graded(g, 3) == rep_of(g, {{2, 0, 1}, {3}}), "o(3) g=" + std::to_string(g));
  }
  c.finish();
}

void criterion3() {
  Criterion c{3, "Koszul self-consistency: weight-l Euler characteristic vanishes, 3<=l<=6, g<=4"};
  for (int g = 1; g <= 4; ++g)
    for (int l = 3; l <= 6; ++l)
      c.check(presentations::koszul_euler_characteristic(g, l).empty(),
              "chi != 0 at g=" + std::to_string(g) + ", l=" + std::to_string(l));
  c.finish();
}

void criterion4() {
  Criterion c{4, "constants suite: projection values and derived ratios, g=4..6"};
  for (int g = 4; g <= 6; ++g) {
    auto vc = johnson::verify_constants(g);
    for (const auto& chk : vc.checks)
      c.check(chk.pass, "g=" + std::to_string(g) + " " + chk.name + ": expected " + chk.expected +
                            ", computed " + chk.computed);
    Rat cc = vc.constants.c_coefficient;
    c.check((cc < 0 ? -cc : cc) == Rat(1, 2 * g + 2), "|c| != 1/(2g+2) at g=" + std::to_string(g));
    Rat c0 = vc.constants.c0_point;
    c.check((c0 < 0 ? -c0 : c0) == Rat(6, g * (2 * g + 1)),
            "|c0| != 6/(g(2g+1)) at g=" + std::to_string(g));
    Rat cd = vc.constants.c0_diagonal;
    c.check((cd < 0 ? -cd : cd) == Rat(12, g * (2 * g + 1)),
            "|c0 diagonal| != 12/(g(2g+1)) at g=" + std::to_string(g));
  }
  c.finish();
}

void criterion5() {
  Criterion c{5, "engine vs rank series through degree 4 for (1,1),(1,2),(1,3),(2,1),(2,2)"};
  const std::vector<std::pair<int, int>> cases = {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}};
  for (auto [g, n] : cases) {
    auto p = presentations::braid_presentation(g, n, 0);
    freelie::Context ctx(p.generators);
    auto rep = presentation::graded_nilpotent_quotient(ctx, p, 4);
    auto series = presentations::lcs_gf_ranks(g, n, 4);
    for (int l = 1; l <= 4; ++l) {
      std::ostringstream os;
      os << "(g=" << g << ",n=" << n << ") degree " << l << ": engine " << rep.dims[l - 1]
         << " vs series " << series.ranks[l - 1];
      c.check(rep.dims[l - 1] == series.ranks[l - 1], os.str());
    }
  }
  if (!c.pass)
    c.details.push_back(
        "note: the (1,3) rows fail for a reason intrinsic to the source material: the "
        "quadratic braid presentation is incomplete at g=1, n>=3 (the purity argument "
        "needs multiplicity 3 of V in V^(x3), which fails for rank 1), so no quadratic "
        "relation set can reproduce the series; see the decisions ledger");
  c.finish();
}

void criterion6() {
  Criterion c{6, "Torelli degree-2 engine dimension equals dim V(2l2)+1 for g=3,4"};
  for (int g : {3, 4}) {
    auto tp = presentations::torelli_presentation(g, TorelliMode::concrete);
    if (!tp.concrete) {
      c.check(false, "no concrete presentation at g=" + std::to_string(g));
      continue;
    }
    freelie::Context ctx(tp.concrete->generators);
    auto rep = presentation::graded_nilpotent_quotient(ctx, *tp.concrete, 2);
    const Int want = repring::weyl_dim(W(g, {0, 2})) + 1;
    std::ostringstream os;
    os << "g=" << g << ": engine " << rep.dims[1] << " vs dim V(2l2)+1 = " << want;
    c.check(rep.dims[1] == want, os.str());
  }
  c.finish();
}

void criterion7() {
  Criterion c{7, "V(3l1) has multiplicity 0 in V(l3) (x) V(2l2), g=3..6"};
  for (int g = 3; g <= 6; ++g) {
    VirtualRep t = repring::tensor(VirtualRep::irreducible(Weight::fundamental(g, 3)),
                                   VirtualRep::irreducible(W(g, {0, 2})));
    c.check(t.mult(W(g, {3})) == 0, "nonzero multiplicity at g=" + std::to_string(g));
  }
  c.finish();
}

void criterion8() {
  Criterion c{8, "H_1 structure on the grid g in {2,3}, n in {0,1,2}, r in {0,1,2}"};
  for (int g : {2, 3})
    for (int n = 0; n <= 2; ++n)
      for (int r = 0; r <= 2; ++r) {
        if (n + r < 1) continue;
        auto h = presentations::h1_braid(g, n, r);
        std::ostringstream os;
        os << "(g=" << g << ",n=" << n << ",r=" << r << ")";
        c.check(h.free_rank == Int(2) * g * (n + r), os.str() + " free rank");
        c.check(static_cast<int>(h.torsion.size()) == r, os.str() + " torsion count");
        for (const auto& t : h.torsion)
          c.check(t == 2 * g - 2, os.str() + " torsion order");
      }
  c.finish();
}

void criterion9() {
  Criterion c{9, "property suites at fixed seed, >= 500 cases each"};
  const uint64_t seed = checks::kDefaultSeed;
  auto run = [&](const checks::SuiteResult& r, int min_cases) {
    std::ostringstream os;
    os << r.name << ": " << r.cases << " cases, " << r.failures << " failures";
    c.check(r.failures == 0 && r.cases >= min_cases, os.str());
    for (const auto& m : r.messages) c.details.push_back("  " + m);
  };
  for (int g : {3, 4, 5}) run(checks::equivariance_suite(g, 500, seed), 500);
  run(checks::freelie_suite(3, 500, seed), 500);
  run(checks::repring_suite(3, 500, seed), 500);
  run(checks::witt_suite(12, 6), 50);
  run(checks::peeling_suite(3, 500, seed), 500);
  c.finish();
}

void criterion10() {
  Criterion c{10, "quadratic generator completeness: submodule of tau^tau at g=4"};
  const int g = 4;
  freelie::Alphabet alph = freelie::Alphabet::symplectic_basis(g);
  auto kp = spmodule::kerp_module(alph);
  auto pair_mod = spmodule::wedge2_module(kp.mod);
  auto tau12 = johnson::johnson_tau_phi(alph, 1, 2).element;
  auto tau34 = johnson::johnson_tau_phi(alph, 3, 4).element;
  spmodule::Vec c1 = kp.coordinates(tau12), c2 = kp.coordinates(tau34);
  std::map<std::pair<int, int>, int> pidx;
  {
    int t = 0;
    for (int i = 0; i < kp.mod.dim; ++i)
      for (int j = i + 1; j < kp.mod.dim; ++j) pidx[{i, j}] = t++;
  }
  spmodule::Vec seed;
  for (const auto& [i, ci] : c1)
    for (const auto& [j, cj] : c2) {
      if (i == j) continue;
      int a = i, b = j;
      Rat cc = ci * cj;
      if (a > b) {
        std::swap(a, b);
        cc = -cc;
      }
      auto it = seed.find(pidx.at({a, b}));
      if (it == seed.end())
        seed.emplace(pidx.at({a, b}), cc);
      else {
        it->second += cc;
        if (it->second == 0) seed.erase(it);
      }
    }
  auto sub = spmodule::submodule_generated(pair_mod, {seed});
  auto dec = spmodule::decompose_concrete(pair_mod, sub);
  VirtualRep expect = rep_of(g, {{0, 1}, {0, 1, 0, 1}});
  std::ostringstream os;
  os << "decomposition " << dec.str() << " (dim " << sub.rank() << ")";
  c.check(dec == expect, os.str());
  // dimension double check: complement of V(2l2) + V(0)
  const Int m = repring::weyl_dim(Weight::fundamental(g, 3));
  c.check(Int(sub.rank()) == m * (m - 1) / 2 - repring::weyl_dim(W(g, {0, 2})) - 1,
          "dimension mismatch with the complement");
  c.finish();
}

}  // namespace

int main() {
  std::cout << "acceptance suite (exact rational arithmetic; fixed seed "
            << checks::kDefaultSeed << ")\n";
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (g_failures == 0) {
    std::cout << "ALL CRITERIA PASS\n";
    return 0;
  }
  std::cout << g_failures << " criterion(a) failed\n";
  return 1;
}
