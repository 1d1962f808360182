#include "torelli/repring.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace torelli::repring {
namespace {

// Positive roots of C_g in e-coordinates: e_i - e_j, e_i + e_j (i<j), 2e_i.
std::vector<ExpVec> positive_roots(int g) {
  std::vector<ExpVec> roots;
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) {
      ExpVec r(g, 0);
      r[i] = 1;
      r[j] = -1;
      roots.push_back(r);
      r[j] = 1;
      roots.push_back(r);
    }
  for (int i = 0; i < g; ++i) {
    ExpVec r(g, 0);
    r[i] = 2;
    roots.push_back(r);
  }
  return roots;
}

ExpVec rho_vec(int g) {
  ExpVec r(g);
  for (int i = 0; i < g; ++i) r[i] = g - i;
  return r;
}

long long dot(const ExpVec& a, const ExpVec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

// Dominant representative under the hyperoctahedral Weyl group:
// absolute values sorted decreasingly.
ExpVec dominant_rep(ExpVec v) {
  for (int& x : v) x = std::abs(x);
  std::sort(v.begin(), v.end(), std::greater<int>());
  return v;
}

bool is_dominant(const ExpVec& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return v.empty() || v.back() >= 0;
}

// lambda - mu as a nonnegative sum of simple roots?  For C_g this means
// all partial sums of the difference are >= 0 and the total is even.
bool dominates(const ExpVec& lam, const ExpVec& mu) {
  int acc = 0;
  for (size_t i = 0; i < lam.size(); ++i) {
    acc += lam[i] - mu[i];
    if (acc < 0) return false;
  }
  return acc % 2 == 0;
}

// Height of lambda - mu in simple-root coordinates (used to order the
// Freudenthal recursion so dependencies are already computed).
long long root_height(const ExpVec& lam, const ExpVec& mu) {
  long long h = 0, acc = 0;
  for (size_t i = 0; i + 1 < lam.size(); ++i) {
    acc += lam[i] - mu[i];
    h += acc;
  }
  acc += lam.back() - mu.back();
  return h + acc / 2;
}

// All dominant weights mu <= lambda, i.e. possible dominant weights of
// V(lambda).
std::vector<ExpVec> dominant_weights_below(const ExpVec& lam) {
  const int g = static_cast<int>(lam.size());
  std::vector<ExpVec> out;
  ExpVec cur(g, 0);
  // DFS over weakly decreasing nonnegative vectors bounded by lam[0].
  auto rec = [&](auto&& self, int pos, int bound) -> void {
    if (pos == g) {
      if (dominates(lam, cur)) out.push_back(cur);
      return;
    }
    for (int v = bound; v >= 0; --v) {
      cur[pos] = v;
      // Partial-sum pruning: prefix sums of cur can't exceed those of lam.
      int pc = 0, pl = 0;
      bool ok = true;
      for (int i = 0; i <= pos; ++i) {
        pc += cur[i];
        pl += lam[i];
        if (pc > pl) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, pos + 1, v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, lam[0]);
  return out;
}

// Freudenthal recursion: multiplicities of all dominant weights of
// V(lambda), keyed by torus coordinates.
std::map<ExpVec, Int> freudenthal(const ExpVec& lam) {
  const int g = static_cast<int>(lam.size());
  const auto roots = positive_roots(g);
  const ExpVec rho = rho_vec(g);

  auto norm_sq_shifted = [&](const ExpVec& v) {
    long long s = 0;
    for (int i = 0; i < g; ++i) {
      long long x = v[i] + rho[i];
      s += x * x;
    }
    return s;
  };
  const long long lam_norm = norm_sq_shifted(lam);

  std::vector<ExpVec> doms = dominant_weights_below(lam);
  std::sort(doms.begin(), doms.end(), [&](const ExpVec& a, const ExpVec& b) {
    return root_height(lam, a) < root_height(lam, b);
  });

  std::map<ExpVec, Int> mult;
  ExpVec shifted(g);
  for (const ExpVec& mu : doms) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    Int rhs = 0;
    for (const ExpVec& alpha : roots) {
      for (int k = 1;; ++k) {
        for (int i = 0; i < g; ++i) shifted[i] = mu[i] + k * alpha[i];
        ExpVec rep = dominant_rep(shifted);
        if (!dominates(lam, rep)) break;  // outside the weight polytope
        auto it = mult.find(rep);
        if (it != mult.end() && it->second != 0)
          rhs += it->second * Int(dot(shifted, alpha));
      }
    }
    long long denom = lam_norm - norm_sq_shifted(mu);
    if (denom == 0) throw std::logic_error("freudenthal: zero denominator");
    mult[mu] = exact_div(2 * rhs, Int(denom));
  }
  return mult;
}

// Expand a dominant multiplicity table to a full Weyl-invariant character.
Character expand_orbits(int g, const std::map<ExpVec, Int>& doms) {
  Character chi(g);
  for (const auto& [mu, m] : doms) {
    if (m == 0) continue;
    ExpVec p = mu;  // sorted decreasing, nonnegative
    std::sort(p.begin(), p.end());
    do {
      // All sign patterns on nonzero entries.
      std::vector<int> nz;
      for (int i = 0; i < g; ++i)
        if (p[i] != 0) nz.push_back(i);
      const int k = static_cast<int>(nz.size());
      ExpVec e = p;
      for (int mask = 0; mask < (1 << k); ++mask) {
        for (int t = 0; t < k; ++t)
          e[nz[t]] = (mask >> t & 1) ? -p[nz[t]] : p[nz[t]];
        chi.add(e, m);
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return chi;
}

struct IrrepCache {
  std::mutex mu;
  std::map<std::pair<int, std::vector<int>>, Character> table;
};
IrrepCache& irrep_cache() {
  static IrrepCache c;
  return c;
}

void check_genuine(const VirtualRep& r, const char* who) {
  if (!r.is_genuine())
    throw std::invalid_argument(std::string(who) + ": virtual input with negative multiplicities is unsupported");
}

}  // namespace

Int weyl_dim(const Weight& lambda) {
  const int g = lambda.rank();
  const ExpVec lam = lambda.partition();
  const ExpVec rho = rho_vec(g);
  Int num = 1, den = 1;
  for (const ExpVec& alpha : positive_roots(g)) {
    long long n = 0, d = 0;
    for (int i = 0; i < g; ++i) {
      n += static_cast<long long>(lam[i] + rho[i]) * alpha[i];
      d += static_cast<long long>(rho[i]) * alpha[i];
    }
    num *= n;
    den *= d;
  }
  return exact_div(num, den);
}

Character irrep_character(const Weight& lambda) {
  auto key = std::make_pair(lambda.rank(), lambda.partition());
  auto& cache = irrep_cache();
  {
    std::lock_guard<std::mutex> lk(cache.mu);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second;
  }
  Character chi = expand_orbits(lambda.rank(), freudenthal(key.second));
  std::lock_guard<std::mutex> lk(cache.mu);
  return cache.table.emplace(std::move(key), std::move(chi)).first->second;
}

Character character_of(const VirtualRep& r) {
  Character chi(r.rank());
  for (const auto& [w, m] : r.terms()) {
    Character c = irrep_character(w);
    c *= m;
    chi += c;
  }
  return chi;
}

VirtualRep decompose(const Character& chi) {
  if (!chi.is_weyl_invariant())
    throw std::invalid_argument("decompose: character is not Weyl invariant");
  const int g = chi.rank();
  VirtualRep rep(g);
  Character work = chi;
  while (!work.empty()) {
    // The lex-greatest exponent vector of an invariant character is
    // dominant, and peeling only removes weights below it.
    const ExpVec lead = work.terms().rbegin()->first;
    if (!is_dominant(lead))
      throw std::logic_error("decompose: leading term not dominant");
    const Int c = work.terms().rbegin()->second;
    Weight w = Weight::from_partition(g, lead);
    rep.add(w, c);
    Character piece = irrep_character(w);
    piece *= c;
    work -= piece;
  }
  return rep;
}

VirtualRep tensor(const VirtualRep& a, const VirtualRep& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("tensor: rank mismatch");
  return decompose(character_of(a) * character_of(b));
}

VirtualRep tensor_klimyk(const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != mu.rank()) throw std::invalid_argument("tensor_klimyk: rank mismatch");
  const int g = lambda.rank();
  const ExpVec lam = lambda.partition();
  const ExpVec rho = rho_vec(g);

  // Dominant weights of V(mu) with multiplicities, then orbit expansion.
  Character chi_mu = irrep_character(mu);
  VirtualRep out(g);
  ExpVec xi(g);
  for (const auto& [nu, m] : chi_mu.terms()) {
    for (int i = 0; i < g; ++i) xi[i] = lam[i] + nu[i] + rho[i];
    // Reflect xi to the strictly dominant chamber; drop if on a wall.
    int sign = 1;
    ExpVec v = xi;
    bool wall = false;
    for (int& x : v) {
      if (x == 0) {
        wall = true;
        break;
      }
      if (x < 0) {
        x = -x;
        sign = -sign;
      }
    }
    if (wall) continue;
    // Sort decreasing, tracking permutation parity; repeats lie on a wall.
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j)
        if (v[i] < v[j]) {
          std::swap(v[i], v[j]);
          sign = -sign;
        }
    for (size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] == v[i + 1]) {
        wall = true;
        break;
      }
    if (wall) continue;
    for (int i = 0; i < g; ++i) v[i] -= rho[i];
    out.add(Weight::from_partition(g, v), sign * m);
  }
  return out;
}

Character adams(int d, const Character& chi) { return chi.adams(d); }

namespace {

// Newton recursion E_k = (1/k) sum_{i=1..k} (-1)^{i-1} psi^i(chi) E_{k-i}
// (exterior), H_k likewise with all plus signs (symmetric).
Character power_sequence(const Character& chi, int k, bool exterior) {
  std::vector<Character> seq;
  seq.push_back(Character::one(chi.rank()));
  for (int n = 1; n <= k; ++n) {
    Character acc(chi.rank());
    for (int i = 1; i <= n; ++i) {
      Character term = chi.adams(i) * seq[n - i];
      if (exterior && i % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    acc.exact_divide(n);
    seq.push_back(std::move(acc));
  }
  return seq[k];
}

}  // namespace

VirtualRep exterior_power(const VirtualRep& r, int k) {
  if (k < 0) throw std::invalid_argument("exterior_power: negative degree");
  check_genuine(r, "exterior_power");
  if (k == 0) return VirtualRep::trivial(r.rank());
  return decompose(power_sequence(character_of(r), k, /*exterior=*/true));
}

VirtualRep symmetric_power(const VirtualRep& r, int k) {
  if (k < 0) throw std::invalid_argument("symmetric_power: negative degree");
  check_genuine(r, "symmetric_power");
  if (k == 0) return VirtualRep::trivial(r.rank());
  return decompose(power_sequence(character_of(r), k, /*exterior=*/false));
}

VirtualRep free_lie_graded(const VirtualRep& gen, int n) {
  if (n < 1) throw std::invalid_argument("free_lie_graded: degree must be positive");
  check_genuine(gen, "free_lie_graded");
  const Character chi = character_of(gen);
  Character acc(gen.rank());
  for (int d : divisors(n)) {
    int mu = mobius(d);
    if (mu == 0) continue;
    Character p = Character::one(gen.rank());
    Character psi = chi.adams(d);
    for (int i = 0; i < n / d; ++i) p = p * psi;
    if (mu > 0)
      acc += p;
    else
      acc -= p;
  }
  acc.exact_divide(n);
  return decompose(acc);
}

VirtualRep stabilize(const VirtualRep& r, int h) {
  if (h < r.rank()) throw std::invalid_argument("stabilize: target rank below source");
  VirtualRep out(h);
  for (const auto& [w, m] : r.terms()) out.add(w.stabilized(h), m);
  return out;
}

Int dim(const VirtualRep& r) {
  Int d = 0;
  for (const auto& [w, m] : r.terms()) d += m * weyl_dim(w);
  return d;
}

bool weyl_alternating_sum_check(const Weight& lambda, const Character& chi) {
  const int g = lambda.rank();
  const ExpVec rho = rho_vec(g);
  ExpVec lam = lambda.partition();
  ExpVec lam_rho(g);
  for (int i = 0; i < g; ++i) lam_rho[i] = lam[i] + rho[i];

  // Evaluate a Laurent monomial prod t_i^{e_i} at t_i = z^{w_i}.
  auto eval_point = [&](const ExpVec& e, const std::vector<int>& wts, const Rat& z) {
    long long total = 0;
    for (int i = 0; i < g; ++i) total += static_cast<long long>(e[i]) * wts[i];
    Rat p = 1;
    const Rat zi = 1 / z;
    for (long long k = 0; k < std::llabs(total); ++k) p *= (total >= 0 ? z : zi);
    return p;
  };

  // Alternating sum over the hyperoctahedral group.
  auto alt_sum = [&](const ExpVec& v, const std::vector<int>& wts, const Rat& z) {
    Rat sum = 0;
    std::vector<int> perm(g);
    for (int i = 0; i < g; ++i) perm[i] = i;
    ExpVec e(g);
    do {
      int psign = 1;  // parity of perm
      {
        std::vector<bool> seen(g, false);
        for (int i = 0; i < g; ++i) {
          if (seen[i]) continue;
          int len = 0;
          for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
          }
          if (len % 2 == 0) psign = -psign;
        }
      }
      for (int mask = 0; mask < (1 << g); ++mask) {
        int sign = psign;
        for (int i = 0; i < g; ++i) {
          e[i] = v[perm[i]];
          if (mask >> i & 1) {
            e[i] = -e[i];
            sign = -sign;
          }
        }
        sum += sign * eval_point(e, wts, z);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
  };

  // Distinct weights keep the evaluation point regular.
  std::vector<int> wts(g);
  for (int i = 0; i < g; ++i) wts[i] = i + 1;
  for (const Rat z : {Rat(2), Rat(3, 2)}) {
    Rat denom = alt_sum(rho, wts, z);
    if (denom == 0) return false;
    Rat num = alt_sum(lam_rho, wts, z);
    Rat chi_val = 0;
    for (const auto& [e, c] : chi.terms()) chi_val += Rat(c) * eval_point(e, wts, z);
    if (chi_val * denom != num) return false;
  }
  return true;
}

}  // namespace torelli::repring
