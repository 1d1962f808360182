#include "torelli/johnson.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "torelli/presentations.hpp"

namespace torelli::johnson {

using freelie::Alphabet;
using freelie::SpOp;
using freelie::Word;
using multilinear::Key;
using multilinear::Shape;

namespace {

void expect_lambda3(const Element& x, const char* who) {
  if (!(x.shape() == Shape::wedge(3)))
    throw std::invalid_argument(std::string(who) + ": expected a Lambda^3 V element");
}

void expect_single_strand(const Alphabet& alph, const char* who) {
  if (!alph.symplectic || alph.strands != 1)
    throw std::invalid_argument(std::string(who) + ": expected a single-strand symplectic alphabet");
}

}  // namespace

Derivation lambda3_derivation(Context& ctx, const Element& xi) {
  expect_lambda3(xi, "lambda3_derivation");
  const Alphabet& alph = ctx.alphabet();
  Derivation d;
  for (int v = 0; v < alph.size(); ++v) {
    freelie::Element img;
    for (const auto& [k, c] : xi.terms()) {
      const int e1 = k[0], e2 = k[1], e3 = k[2];
      const Rat q1 = alph.pairing(e1, v);
      const Rat q2 = alph.pairing(e2, v);
      const Rat q3 = alph.pairing(e3, v);
      if (q1 != 0) img += ctx.bracket(ctx.letter(e2), ctx.letter(e3)) * (-c * q1);
      if (q2 != 0) img += ctx.bracket(ctx.letter(e3), ctx.letter(e1)) * (-c * q2);
      if (q3 != 0) img += ctx.bracket(ctx.letter(e1), ctx.letter(e2)) * (-c * q3);
    }
    if (!img.zero()) d.images[v] = std::move(img);
  }
  return d;
}

Element compn_bracket(const Element& xi, const Element& eta) {
  expect_lambda3(xi, "compn_bracket");
  expect_lambda3(eta, "compn_bracket");
  const Alphabet& alph = xi.alphabet();
  Element out(Shape::tensor({1, 1, 2}), &alph);
  static const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& [ke, ce] : xi.terms())
    for (const auto& [kf, cf] : eta.terms()) {
      const Rat c = ce * cf;
      for (const auto& pe : cyc)
        for (const auto& pf : cyc) {
          const int e1 = ke[pe[0]], e2 = ke[pe[1]], e3 = ke[pe[2]];
          const int f1 = kf[pf[0]], f2 = kf[pf[1]], f3 = kf[pf[2]];
          const Rat q = alph.pairing(e1, f1);
          if (q == 0) continue;
          const Rat cc = c * q;
          out.add_raw({e2, e3, f2, f3}, cc);
          out.add_raw({e3, e2, f2, f3}, -cc);
          out.add_raw({f2, f3, e2, e3}, cc);
          out.add_raw({f3, f2, e2, e3}, -cc);
        }
    }
  return out;
}

Element hom_representative(Context& ctx, const Derivation& delta) {
  const Alphabet& alph = ctx.alphabet();
  expect_single_strand(alph, "hom_representative");
  Element out(Shape::tensor({1, 1, 2}), &alph);

  auto add_section = [&](int first, const freelie::Element& img, const Rat& sign) {
    for (const auto& [w, c] : img.terms) {
      if (w.size() != 3)
        throw std::invalid_argument("hom_representative: image degree must be 3");
      auto [u, v] = ctx.std_factor(w);
      if (u.size() == 1) {
        // [x,[y,z]] -> x (x) y^z
        out.add_raw({first, u[0], v[0], v[1]}, sign * c);
      } else {
        // [[x,y],z] = -[z,[x,y]] -> -z (x) x^y
        out.add_raw({first, v[0], u[0], u[1]}, -sign * c);
      }
    }
  };

  for (int k = 1; k <= alph.g; ++k) {
    auto itb = delta.images.find(alph.b(k));
    if (itb != delta.images.end()) add_section(alph.a(k), itb->second, 1);
    auto ita = delta.images.find(alph.a(k));
    if (ita != delta.images.end()) add_section(alph.b(k), ita->second, -1);
  }
  return out;
}

Element proj_r(const Element& u, const Element& v) {
  expect_lambda3(u, "proj_r");
  expect_lambda3(v, "proj_r");
  if (!multilinear::proj_p(u).zero() || !multilinear::proj_p(v).zero())
    throw std::invalid_argument("proj_r: factor not in ker p");
  const Alphabet& alph = u.alphabet();
  Element six = multilinear::multiply_to_lambda6(multilinear::outer_wedge(u, v));
  Element four = multilinear::theta(six);
  Element two = multilinear::theta(four);
  // Final displayed projection u^v -> u^v - (u.v) omega/(g-1).
  Rat trace = 0;
  for (const auto& [k, c] : two.terms()) trace += c * alph.pairing(k[0], k[1]);
  Element out = two - multilinear::omega(alph) * (trace / (alph.g - 1));
  return out;
}

Rat bilinear_form(const Element& u, const Element& v) {
  expect_lambda3(u, "bilinear_form");
  expect_lambda3(v, "bilinear_form");
  if (!multilinear::proj_p(u).zero() || !multilinear::proj_p(v).zero())
    throw std::invalid_argument("bilinear_form: input outside ker p");
  return multilinear::lambda3_pairing(u, v);
}

TauPhi johnson_tau_phi(const Alphabet& alph, int i, int j) {
  expect_single_strand(alph, "johnson_tau_phi");
  if (alph.g < 3) throw std::invalid_argument("johnson_tau_phi: requires g >= 3");
  if (i == j) throw std::invalid_argument("johnson_tau_phi: i == j");
  if (i < 1 || j < 1 || i > alph.g || j > alph.g || i >= j)
    throw std::invalid_argument("johnson_tau_phi: need 1 <= i < j <= g");
  Element e(Shape::wedge(3), &alph);
  e.add_raw({alph.a(i), alph.a(j), alph.b(j)}, alph.g - 1);
  // subtract a_i ^ omega
  for (int k = 1; k <= alph.g; ++k) e.add_raw({alph.a(i), alph.a(k), alph.b(k)}, -1);
  return TauPhi{std::move(e), alph.g - 1};
}

freelie::Element sigma(Context& ctx, const Derivation& delta) {
  const Alphabet& alph = ctx.alphabet();
  expect_single_strand(alph, "sigma");
  freelie::Element out;
  for (int k = 1; k <= alph.g; ++k) {
    auto ita = delta.images.find(alph.a(k));
    if (ita != delta.images.end()) out += ctx.bracket(ita->second, ctx.letter(alph.b(k)));
    auto itb = delta.images.find(alph.b(k));
    if (itb != delta.images.end()) out += ctx.bracket(ctx.letter(alph.a(k)), itb->second);
  }
  return out;
}

VirtualRep dg_graded(int g, int l) {
  if (l < 1) throw std::invalid_argument("dg_graded: l must be >= 1");
  VirtualRep v = VirtualRep::irreducible(Weight::fundamental(g, 1));
  return repring::tensor(v, presentations::pg_graded(g, l + 1)) - presentations::pg_graded(g, l + 2);
}

VirtualRep og_graded(int g, int l) {
  return dg_graded(g, l) - presentations::pg_graded(g, l);
}

bool sigma_surjective(int g, int l) {
  Alphabet alph = Alphabet::symplectic_basis(g);
  Context ctx(alph);
  // Degree-d basis of the surface-relation ideal: I_2 = <omega>,
  // I_d = [letters, I_{d-1}].
  freelie::Element omega_l;
  for (int k = 1; k <= g; ++k)
    omega_l += ctx.bracket(ctx.letter(alph.a(k)), ctx.letter(alph.b(k)));
  std::map<int, std::vector<freelie::Element>> ideal;
  ideal[2] = {omega_l};
  for (int d = 3; d <= l + 2; ++d) {
    std::vector<freelie::Element> next;
    for (int letter = 0; letter < alph.size(); ++letter)
      for (const auto& e : ideal[d - 1]) {
        auto b = ctx.bracket(ctx.letter(letter), e);
        if (!b.zero()) next.push_back(std::move(b));
      }
    ideal[d] = std::move(next);
  }

  auto index_of = [&](int degree) {
    std::map<Word, int> idx;
    const auto& basis = ctx.lyndon_basis(degree);
    for (size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
    return idx;
  };
  auto to_vec = [](const freelie::Element& e, const std::map<Word, int>& idx) {
    spmodule::Vec v;
    for (const auto& [w, c] : e.terms) v.emplace(idx.at(w), c);
    return v;
  };

  const auto idx_out = index_of(l + 2);
  spmodule::Echelon ideal_out;
  for (const auto& e : ideal[l + 2]) ideal_out.insert(to_vec(e, idx_out));
  const Int dim_target = Int(static_cast<int>(ctx.lyndon_basis(l + 2).size())) - ideal_out.rank();

  spmodule::Echelon image;
  Int rank = 0;
  for (int letter = 0; letter < alph.size(); ++letter) {
    for (const Word& m : ctx.lyndon_basis(l + 1)) {
      Derivation d;
      d.images[letter] = ctx.single(m);
      freelie::Element s = sigma(ctx, d);
      if (s.zero()) continue;
      spmodule::Vec v = ideal_out.reduce(to_vec(s, idx_out));
      if (image.insert(std::move(v))) ++rank;
    }
  }
  return rank == dim_target;
}

namespace {

// Membership in the image of id (x) j : V (x) Lambda^3 V -> V (x) V (x) Lambda^2 V.
bool in_jacobi_image(const Element& x) {
  if (x.zero()) return true;
  const Alphabet& alph = x.alphabet();
  // Index all keys touched; build the j-image span restricted to the
  // relevant weight graded piece (the full span is affordable for g <= 6).
  std::map<Key, int> index;
  auto index_of = [&](const Key& k) {
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(index.size());
    index.emplace(k, id);
    return id;
  };
  spmodule::Echelon span;
  const int n = alph.size();
  for (int u = 0; u < n; ++u)
    for (int x1 = 0; x1 < n; ++x1)
      for (int x2 = x1 + 1; x2 < n; ++x2)
        for (int x3 = x2 + 1; x3 < n; ++x3) {
          Element src(Shape::tensor({1, 3}), &alph);
          src.add_raw({u, x1, x2, x3}, 1);
          Element img = multilinear::jacobi_map(src);
          spmodule::Vec v;
          for (const auto& [k, c] : img.terms()) v.emplace(index_of(k), c);
          span.insert(std::move(v));
        }
  spmodule::Vec v;
  for (const auto& [k, c] : x.terms()) v.emplace(index_of(k), c);
  return span.contains(v);
}

// Coefficient of a1^a2 in a Lambda^2 V element that must be a pure
// multiple of a1^a2.
Rat a1a2_coefficient(const Element& x) {
  const Alphabet& alph = x.alphabet();
  const Key key{alph.a(1), alph.a(2)};
  for (const auto& [k, c] : x.terms())
    if (k != key) throw std::logic_error("expected a pure multiple of a1^a2");
  return x.coeff(key);
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

void record(VerifiedConstants& vc, std::string name, std::string expected, std::string computed) {
  bool ok = expected == computed;
  vc.checks.push_back({std::move(name), std::move(expected), std::move(computed), ok});
  if (!ok) vc.pass = false;
}

}  // namespace

VerifiedConstants verify_constants(int g) {
  if (g < 4) throw std::invalid_argument("verify_constants: requires g >= 4 (indices 1..4 used)");
  Alphabet alph = Alphabet::symplectic_basis(g);
  Context ctx(alph);
  VerifiedConstants vc;
  vc.g = g;
  vc.pass = true;

  auto wedge3 = [&](int x, int y, int z) {
    Element e(Shape::wedge(3), &alph);
    e.add_raw({x, y, z}, 1);
    return e;
  };

  // u_j = a_j ^ a_3 ^ b_3 - a_j ^ a_4 ^ b_4, j = 1, 2.
  Element u1 = wedge3(alph.a(1), alph.a(3), alph.b(3)) - wedge3(alph.a(1), alph.a(4), alph.b(4));
  Element u2 = wedge3(alph.a(2), alph.a(3), alph.b(3)) - wedge3(alph.a(2), alph.a(4), alph.b(4));

  Element B = compn_bracket(u1, u2);
  record(vc, "p1([u1,u2])", "0", multilinear::proj_p1(B).str());
  record(vc, "p2([u1,u2])", "0", multilinear::proj_p2(B).str());
  record(vc, "p3([u1,u2])", "-4*a1^a2", multilinear::proj_p3(B).str());
  record(vc, "p4([u1,u2])", "-4*a1^a2", multilinear::proj_p4(B).str());
  Element p13B = multilinear::proj_p1(B) - multilinear::proj_p3(B);
  Element p24B = multilinear::proj_p2(B) - multilinear::proj_p4(B);
  record(vc, "(p1-p3)([u1,u2])", "4*a1^a2", p13B.str());
  record(vc, "(p2-p4)([u1,u2])", "4*a1^a2", p24B.str());

  // r(u1 ^ u2) = -4 a1 ^ a2.
  Element r12 = proj_r(u1, u2);
  record(vc, "r(u1^u2)", "-4*a1^a2", r12.str());

  // Canonical representative of ad([a1,a2]) and the paper's corrected z.
  Derivation ad_a1a2;
  {
    freelie::Element w = ctx.bracket(ctx.letter(alph.a(1)), ctx.letter(alph.a(2)));
    for (int letter = 0; letter < alph.size(); ++letter) {
      freelie::Element img = ctx.bracket(w, ctx.letter(letter));
      if (!img.zero()) ad_a1a2.images[letter] = std::move(img);
    }
  }
  Element Z0 = hom_representative(ctx, ad_a1a2);
  Element z = Z0;
  for (int j = 1; j <= g; ++j)
    z.add_raw({alph.a(1), alph.a(2), alph.a(j), alph.b(j)}, -2);
  {
    Element p13z = multilinear::proj_p1(z) - multilinear::proj_p3(z);
    Element p24z = multilinear::proj_p2(z) - multilinear::proj_p4(z);
    std::string expect = "-" + std::to_string(2 * g + 2) + "*a1^a2";
    record(vc, "(p1-p3)(z)", expect, p13z.str());
    record(vc, "(p2-p4)(z)", expect, p24z.str());
  }

  // The lambda_2 functional that kills both V (x) Lambda^3 V and
  // V (x) V (x) omega: P* = (p1-p3) - (p2-p4)/(2g+1).  The c constant is
  // the ratio of its values on [u1,u2] and on ad([a1,a2]).
  auto p_star = [&](const Element& x) {
    Element e = multilinear::proj_p1(x) - multilinear::proj_p3(x);
    Element f = multilinear::proj_p2(x) - multilinear::proj_p4(x);
    e -= f * Rat(1, 2 * g + 1);
    return e;
  };
  const Rat c_meas = a1a2_coefficient(p_star(B)) / a1a2_coefficient(p_star(Z0));
  const Rat r_coef = a1a2_coefficient(r12);  // -4
  const Rat c_coefficient = c_meas / r_coef;
  record(vc, "|c|", rat_str(Rat(1, 2 * g + 2)),
         rat_str(c_coefficient < 0 ? -c_coefficient : c_coefficient));
  // Consistency of the canonical route with the paper's z-representative.
  record(vc, "c ratio (canonical vs z-route)",
         rat_str(a1a2_coefficient(p13B) / a1a2_coefficient(multilinear::proj_p1(z) -
                                                           multilinear::proj_p3(z))),
         rat_str(c_meas));
  vc.constants.c_coefficient = c_coefficient;
  vc.constants.sign_c = c_coefficient < 0 ? -1 : 1;

  // Invariant constants: u1' = a1^a2^a3, u2' = b1^b2^b3.
  Element u1p = wedge3(alph.a(1), alph.a(2), alph.a(3));
  Element u2p = wedge3(alph.b(1), alph.b(2), alph.b(3));
  record(vc, "<u1',u2'>", "1", rat_str(bilinear_form(u1p, u2p)));
  Element Bp = compn_bracket(u1p, u2p);
  const Rat q_B = multilinear::proj_q1(Bp) - multilinear::proj_q2(Bp);
  record(vc, "(q1-q2)([u1',u2'])", "6", rat_str(q_B));

  Derivation ad_omega;
  {
    freelie::Element wl;
    for (int k = 1; k <= g; ++k)
      wl += ctx.bracket(ctx.letter(alph.a(k)), ctx.letter(alph.b(k)));
    for (int letter = 0; letter < alph.size(); ++letter) {
      freelie::Element img = ctx.bracket(wl, ctx.letter(letter));
      if (!img.zero()) ad_omega.images[letter] = std::move(img);
    }
  }
  Element Z1 = hom_representative(ctx, ad_omega);
  {
    // Z1 equals the displayed
    // sum_{j,k} (b_j (x) a_j - a_j (x) b_j) (x) a_k^b_k
    // modulo the section ambiguity V (x) Lambda^3 V (the Jacobi image).
    Element expect(Shape::tensor({1, 1, 2}), &alph);
    for (int j = 1; j <= g; ++j)
      for (int k = 1; k <= g; ++k) {
        expect.add_raw({alph.b(j), alph.a(j), alph.a(k), alph.b(k)}, 1);
        expect.add_raw({alph.a(j), alph.b(j), alph.a(k), alph.b(k)}, -1);
      }
    Element diff = Z1 - expect;
    record(vc, "rep(ad sum[a_j,b_j]) matches displayed z mod V(x)L3V", "1",
           in_jacobi_image(diff) ? "1" : "0");
  }
  const Rat q_Z1 = multilinear::proj_q1(Z1) - multilinear::proj_q2(Z1);
  record(vc, "(q1-q2)(ad sum[a_j,b_j])", rat_str(Rat(-g * (2 * g + 1))), rat_str(q_Z1));

  const Rat c0_meas = q_B / q_Z1;  // coefficient of ad(sum [a_j,b_j])
  record(vc, "|c0 point|", rat_str(Rat(6, g * (2 * g + 1))),
         rat_str(c0_meas < 0 ? -c0_meas : c0_meas));
  vc.constants.c0_point = c0_meas;
  vc.constants.sign_c0 = c0_meas < 0 ? -1 : 1;

  // Diagonal doubling: expanding sum_k [A_k^(1)+A_k^(2), B_k^(1)+B_k^(2)]
  // in the two-strand algebra, the cross-strand content, with the
  // symmetry [X^(1),Y^(2)] = [X^(2),Y^(1)] applied, is
  // 2 sum_k [A_k^(1), B_k^(2)]; the strand-local remainder is
  // sum_k ([A_k^(1),B_k^(1)] + [A_k^(2),B_k^(2)]).
  {
    Alphabet alph2 = Alphabet::symplectic_basis(g, 2);
    Context ctx2(alph2);
    freelie::Element image;
    for (int k = 1; k <= g; ++k) {
      freelie::Element ak = ctx2.letter(alph2.a(k, 1)) + ctx2.letter(alph2.a(k, 2));
      freelie::Element bk = ctx2.letter(alph2.b(k, 1)) + ctx2.letter(alph2.b(k, 2));
      image += ctx2.bracket(ak, bk);
    }
    freelie::Element expect;
    for (int k = 1; k <= g; ++k) {
      expect += ctx2.bracket(ctx2.letter(alph2.a(k, 1)), ctx2.letter(alph2.b(k, 1)));
      expect += ctx2.bracket(ctx2.letter(alph2.a(k, 2)), ctx2.letter(alph2.b(k, 2)));
      expect += ctx2.bracket(ctx2.letter(alph2.a(k, 1)), ctx2.letter(alph2.b(k, 2)));
      expect += ctx2.bracket(ctx2.letter(alph2.a(k, 2)), ctx2.letter(alph2.b(k, 1)));
    }
    record(vc, "diagonal image expansion", "1", ((image - expect).zero()) ? "1" : "0");
    // Cross-strand part folded by the strand symmetry relations
    // [X^(1), Y^(2)] = [X^(2), Y^(1)].
    freelie::Element cross;
    for (int k = 1; k <= g; ++k) {
      cross += ctx2.bracket(ctx2.letter(alph2.a(k, 1)), ctx2.letter(alph2.b(k, 2)));
      cross += ctx2.bracket(ctx2.letter(alph2.a(k, 2)), ctx2.letter(alph2.b(k, 1)));
    }
    freelie::Element folded;
    for (int k = 1; k <= g; ++k)
      folded += ctx2.bracket(ctx2.letter(alph2.a(k, 1)), ctx2.letter(alph2.b(k, 2))) * Rat(2);
    // Span of the symmetry relations in degree 2.
    std::map<freelie::Word, int> index;
    auto index_of = [&](const freelie::Word& w) {
      auto it = index.find(w);
      if (it != index.end()) return it->second;
      const int id = static_cast<int>(index.size());
      index.emplace(w, id);
      return id;
    };
    spmodule::Echelon sym_span;
    for (int t = 0; t < 2 * g; ++t)
      for (int u = 0; u < 2 * g; ++u) {
        freelie::Element relsym =
            ctx2.bracket(ctx2.letter(t), ctx2.letter(2 * g + u)) -
            ctx2.bracket(ctx2.letter(2 * g + t), ctx2.letter(u));
        if (relsym.zero()) continue;
        spmodule::Vec v;
        for (const auto& [w, c] : relsym.terms) v.emplace(index_of(w), c);
        sym_span.insert(std::move(v));
      }
    freelie::Element diff = cross - folded;
    spmodule::Vec dv;
    for (const auto& [w, c] : diff.terms) dv.emplace(index_of(w), c);
    record(vc, "cross-strand doubling (mod strand symmetry)", "2",
           sym_span.contains(dv) ? "2" : "(mismatch)");
    vc.notes.push_back(
        "diagonal image = cross-strand part (doubling 2 under [X^(1),Y^(2)] = [X^(2),Y^(1)]) "
        "plus the strand-local remainder sum_k [A_k^(i), B_k^(i)]");
  }
  vc.constants.c0_diagonal = 2 * c0_meas;
  record(vc, "|c0 diagonal| (doubled)", rat_str(Rat(12, g * (2 * g + 1))),
         rat_str(vc.constants.c0_diagonal < 0 ? -vc.constants.c0_diagonal
                                              : vc.constants.c0_diagonal));

  vc.constants.gamma_degree = 2;
  vc.constants.gamma_tate_twist = 1;
  return vc;
}

std::vector<WalkReport> hw_walks(int g) {
  if (g < 4) throw std::invalid_argument("hw_walks: requires g >= 4");
  Alphabet alph = Alphabet::symplectic_basis(g);

  // Work in Lambda^2(Lambda^3 V) coordinates for the first walk and in
  // Lambda^k V for the others.
  auto tau12 = johnson_tau_phi(alph, 1, 2).element;
  auto tau34 = johnson_tau_phi(alph, 3, 4).element;
  Element v = multilinear::outer_wedge(tau12, tau34);
  Element w6 = multilinear::multiply_to_lambda6(v);

  std::vector<WalkReport> reports;

  // Walks run at the element level; raising checks act on elements
  // directly, no module matrices needed.
  auto elem_weight = [&](const Element& e) -> std::optional<ExpVec> {
    std::optional<ExpVec> w;
    for (const auto& [k, c] : e.terms()) {
      ExpVec kw = e.weight_of_key(k);
      if (!w)
        w = kw;
      else if (*w != kw)
        return std::nullopt;
    }
    return w;
  };
  auto is_hw_elem = [&](const Element& e) {
    if (e.zero()) return false;
    for (const SpOp& op : freelie::raising_ops(g))
      if (!multilinear::apply_op(op, e).zero()) return false;
    return true;
  };

  auto run_walk = [&](const std::string& target, const Element& start,
                      const std::vector<SpOp>& literal, const ExpVec& expected_weight,
                      int fallback_len) {
    WalkReport rep;
    rep.target = target;
    rep.weight = expected_weight;
    Element cur = start;
    std::string seq;
    for (const SpOp& op : literal) {
      cur = multilinear::apply_op(op, cur);
      seq += (seq.empty() ? "" : " ") + op.str();
    }
    auto wt = elem_weight(cur);
    if (!cur.zero() && wt && *wt == expected_weight && is_hw_elem(cur)) {
      rep.literal_worked = true;
      rep.highest_weight_found = true;
      rep.resolved_sequence = seq;
      reports.push_back(rep);
      return;
    }
    // The literal sequence failed: first try to complete the literal
    // prefix, then search from scratch.  Words of length <= fallback_len
    // over the raising operators, depth-first in operator order, so the
    // resolution is stable.
    const auto raise = freelie::raising_ops(g);
    std::vector<SpOp> word;
    std::function<bool(const Element&, int)> dfs = [&](const Element& e, int depth) -> bool {
      auto w = elem_weight(e);
      if (!e.zero() && w && *w == expected_weight && is_hw_elem(e)) return true;
      if (depth == 0 || e.zero()) return false;
      // Weight feasibility: remaining coordinate-sum gap must be
      // reachable by <= depth positive roots (each adds 0 or 2).
      if (w) {
        int gap = 0;
        for (size_t i = 0; i < w->size(); ++i) gap += expected_weight[i] - (*w)[i];
        if (gap < 0 || gap > 2 * depth) return false;
      }
      for (const SpOp& op : raise) {
        Element next = multilinear::apply_op(op, e);
        if (next.zero()) continue;
        word.push_back(op);
        if (dfs(next, depth - 1)) return true;
        word.pop_back();
      }
      return false;
    };
    auto search_from = [&](const Element& origin, const std::string& prefix) {
      for (int len = 1; len <= fallback_len; ++len) {
        word.clear();
        if (dfs(origin, len)) {
          rep.highest_weight_found = true;
          std::string found = prefix;
          for (const SpOp& op : word) found += (found.empty() ? "" : " ") + op.str();
          rep.resolved_sequence = found;
          return true;
        }
      }
      return false;
    };
    if (!(!cur.zero() && search_from(cur, seq)) && !search_from(start, ""))
      rep.resolved_sequence = seq + " (no completion found)";
    reports.push_back(rep);
  };

  // lambda_2 + lambda_4: literal "F_{2,3}, F_{1,4}, T_{2,3}" has the
  // undefined T_{2,3}; run the parseable prefix and search.
  {
    ExpVec wt(g, 0);
    wt[0] = 2;
    wt[1] = 2;
    wt[2] = 1;
    wt[3] = 1;
    run_walk("l2+l4", v, {SpOp{SpOp::F, 2, 3}, SpOp{SpOp::F, 1, 4}}, wt, 4);
  }
  if (g >= 6) {
    ExpVec wt(g, 0);
    for (int i = 0; i < 6; ++i) wt[i] = 1;
    run_walk("l6", w6, {SpOp{SpOp::F, 2, 5}, SpOp{SpOp::F, 4, 6}}, wt, 4);
  }
  if (g >= 5) {
    // lambda_4 from theta_6(w); only present for g >= 5 (the g=4 image
    // collapses onto a1^a3^omega).  The paper's literal sequence uses
    // relabeled indices, so a search is expected.
    ExpVec wt(g, 0);
    for (int i = 0; i < 4; ++i) wt[i] = 1;
    std::vector<SpOp> literal;
    if (g >= 6) literal = {SpOp{SpOp::F, 3, 6}, SpOp{SpOp::S, 4, 6}};
    run_walk("l4", multilinear::theta(w6), literal, wt, 4);
  }
  {
    ExpVec wt(g, 0);
    wt[0] = 1;
    wt[1] = 1;
    run_walk("l2", multilinear::theta(multilinear::theta(w6)), {SpOp{SpOp::S, 2, 3}}, wt, 4);
  }
  return reports;
}

}  // namespace torelli::johnson
