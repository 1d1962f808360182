#include "torelli/spmodule.hpp"

#include <algorithm>

namespace torelli::spmodule {

using multilinear::Element;
using multilinear::Key;
using multilinear::Shape;

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (const auto& [i, c] : b) {
    auto it = r.find(i);
    if (it == r.end())
      r.emplace(i, c);
    else {
      it->second += c;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

Vec vec_scale(const Vec& a, const Rat& k) {
  Vec r;
  if (k == 0) return r;
  for (const auto& [i, c] : a) r.emplace(i, c * k);
  return r;
}

namespace {

// Clear denominators and divide by the content, keeping rows primitive
// integer vectors during elimination.
void make_primitive(Vec& v) {
  if (v.empty()) return;
  Int lcm_den = 1;
  for (const auto& [i, c] : v)
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(c));
  Int gcd_num = 0;
  for (auto& [i, c] : v) {
    c *= Rat(lcm_den);
    gcd_num = boost::multiprecision::gcd(gcd_num, boost::multiprecision::numerator(c));
  }
  if (gcd_num > 1)
    for (auto& [i, c] : v) c /= Rat(gcd_num);
}

// v <- row[pivot]*v - v[pivot]*row (fraction-free cross multiplication),
// then re-primitivized.  Only introduces coordinates >= pivot.
void eliminate(Vec& v, int pivot, const Vec& row) {
  auto it = v.find(pivot);
  if (it == v.end()) return;
  const Rat a = row.at(pivot);
  const Rat b = it->second;
  for (auto& [i, c] : v) c *= a;
  for (const auto& [i, c] : row) {
    auto jt = v.find(i);
    if (jt == v.end())
      v.emplace(i, -b * c);
    else {
      jt->second -= b * c;
      if (jt->second == 0) v.erase(jt);
    }
  }
  make_primitive(v);
}

}  // namespace

Vec Echelon::reduce(Vec v) const {
  make_primitive(v);
  auto it = v.begin();
  while (it != v.end()) {
    auto r = rows_.find(it->first);
    if (r == rows_.end()) {
      ++it;
      continue;
    }
    const int piv = it->first;
    eliminate(v, piv, r->second);
    it = v.upper_bound(piv);
  }
  return v;
}

bool Echelon::insert(Vec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const int piv = v.begin()->first;
  rows_.emplace(piv, std::move(v));
  return true;
}

void Echelon::normalize() {
  // Full back substitution, largest pivot first; rows used for reduction
  // are already reduced.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    Vec& row = it->second;
    auto jt = row.upper_bound(it->first);
    while (jt != row.end()) {
      auto r2 = rows_.find(jt->first);
      if (r2 == rows_.end()) {
        ++jt;
        continue;
      }
      const int piv = jt->first;
      eliminate(row, piv, r2->second);
      jt = row.upper_bound(piv);
    }
  }
  for (auto& [p, row] : rows_) {
    const Rat lead = row.at(p);
    if (lead != 1)
      for (auto& [i, c] : row) c /= lead;
  }
}

Vec SpModule::apply(const SpOp& op, const Vec& v) const {
  const auto& cols = matrix(op);
  Vec out;
  for (const auto& [i, c] : v) {
    for (const auto& [j, m] : cols[i]) {
      auto it = out.find(j);
      if (it == out.end())
        out.emplace(j, c * m);
      else {
        it->second += c * m;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

namespace {

std::vector<Key> increasing_tuples(int n, int k) {
  std::vector<Key> tuples;
  Key cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      tuples.push_back(cur);
      return;
    }
    for (int x = start; x < n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return tuples;
}

std::vector<Key> enumerate_keys(const Shape& shape, const freelie::Alphabet& alph) {
  const int n = alph.size();
  std::vector<Key> out;
  if (shape.kind == Shape::Kind::Wedge2OfLambda3) {
    auto triples = increasing_tuples(n, 3);
    for (size_t i = 0; i < triples.size(); ++i)
      for (size_t j = i + 1; j < triples.size(); ++j) {
        Key k = triples[i];
        k.insert(k.end(), triples[j].begin(), triples[j].end());
        out.push_back(std::move(k));
      }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<std::vector<Key>> slot_keys;
  for (int a : shape.arities) slot_keys.push_back(increasing_tuples(n, a));
  Key cur;
  auto rec = [&](auto&& self, size_t slot) -> void {
    if (slot == slot_keys.size()) {
      out.push_back(cur);
      return;
    }
    for (const Key& sk : slot_keys[slot]) {
      cur.insert(cur.end(), sk.begin(), sk.end());
      self(self, slot + 1);
      cur.resize(cur.size() - sk.size());
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SpModule module_from_shape(const Shape& shape, const freelie::Alphabet& alph) {
  SpModule m;
  m.g = alph.g;
  std::vector<Key> keys = enumerate_keys(shape, alph);
  m.dim = static_cast<int>(keys.size());
  std::map<Key, int> index;
  for (int i = 0; i < m.dim; ++i) index.emplace(keys[i], i);

  Element probe(shape, &alph);
  for (const Key& k : keys) m.weights.push_back(probe.weight_of_key(k));

  m.ops = freelie::all_ops(alph.g);
  for (const SpOp& op : m.ops) {
    std::vector<Vec> cols(m.dim);
    for (int i = 0; i < m.dim; ++i) {
      Element e(shape, &alph);
      e.add_normalized(keys[i], 1);
      Element img = multilinear::apply_op(op, e);
      for (const auto& [k, c] : img.terms()) cols[i].emplace(index.at(k), c);
    }
    m.action.emplace(op.str(), std::move(cols));
  }
  return m;
}

KerP kerp_module(const freelie::Alphabet& alph) {
  const Shape l3 = Shape::wedge(3);
  std::vector<Key> keys = enumerate_keys(l3, alph);
  const int adim = static_cast<int>(keys.size());
  std::map<Key, int> keyindex;
  for (int i = 0; i < adim; ++i) keyindex.emplace(keys[i], i);

  // Kernel of p via elimination on rows (image | combination), image
  // coordinates first so they are eliminated with priority.
  Echelon work;
  std::vector<Vec> kernel;  // combinations, in ambient coordinates
  for (int c = 0; c < adim; ++c) {
    Element e(l3, &alph);
    e.add_normalized(keys[c], 1);
    Element pe = multilinear::proj_p(e);
    Vec row;
    for (const auto& [k, cc] : pe.terms()) row.emplace(k[0] - alph.size(), cc);
    row.emplace(alph.size() + c, 1);
    Vec rem = work.reduce(std::move(row));
    const bool image_zero = rem.empty() || rem.begin()->first >= 0;
    if (image_zero) {
      Vec combo;
      for (const auto& [i, v] : rem) combo.emplace(i - alph.size(), v);
      kernel.push_back(std::move(combo));
    } else {
      work.insert(std::move(rem));
    }
  }

  // Canonical reduced basis (keys are weight-pure, so echelon rows built
  // from single basis keys... rows may mix weights; re-split below).
  Echelon canon;
  for (const Vec& v : kernel) canon.insert(v);
  canon.normalize();

  // Weight-split the rows so every basis vector is weight-pure.
  std::vector<ExpVec> wts(adim);
  {
    Element probe(l3, &alph);
    for (int i = 0; i < adim; ++i) wts[i] = probe.weight_of_key(keys[i]);
  }
  Echelon pure;
  for (const auto& [p, row] : canon.rows()) {
    std::map<ExpVec, Vec> split;
    for (const auto& [i, c] : row) split[wts[i]].emplace(i, c);
    for (auto& [w, v] : split) pure.insert(std::move(v));
  }
  pure.normalize();
  if (pure.rank() != canon.rank())
    throw std::logic_error("kerp_module: weight split changed rank");

  KerP out;
  out.alph = &alph;
  std::vector<Vec> basis_coords;
  for (const auto& [p, row] : pure.rows()) basis_coords.push_back(row);
  const int dim = static_cast<int>(basis_coords.size());

  out.mod.g = alph.g;
  out.mod.dim = dim;
  out.mod.ops = freelie::all_ops(alph.g);
  for (const Vec& v : basis_coords) {
    Element e(l3, &alph);
    for (const auto& [i, c] : v) e.add_normalized(keys[i], c);
    out.basis.push_back(std::move(e));
    out.mod.weights.push_back(wts[v.begin()->first]);
  }

  for (const SpOp& op : out.mod.ops) {
    std::vector<Vec> cols(dim);
    for (int i = 0; i < dim; ++i) {
      Element img = multilinear::apply_op(op, out.basis[i]);
      if (img.zero()) continue;
      cols[i] = out.coordinates(img);
    }
    out.mod.action.emplace(op.str(), std::move(cols));
  }
  return out;
}

Vec KerP::coordinates(const Element& x) const {
  if (!(x.shape() == Shape::wedge(3)))
    throw std::invalid_argument("KerP::coordinates: expected Lambda^3 V");
  // The basis is a reduced echelon set over ambient keys; peel leading
  // terms.  Build the pivot lookup once per call.
  std::map<Key, int> pivot_row;
  for (size_t r = 0; r < basis.size(); ++r)
    pivot_row.emplace(basis[r].terms().begin()->first, static_cast<int>(r));
  Element rem = x;
  Vec coords;
  while (!rem.zero()) {
    const Key lead = rem.terms().begin()->first;
    auto it = pivot_row.find(lead);
    if (it == pivot_row.end())
      throw std::invalid_argument("KerP::coordinates: element not in ker p");
    const int row = it->second;
    const Rat c = rem.terms().begin()->second / basis[row].terms().begin()->second;
    Element scaled = basis[row];
    scaled *= c;
    rem -= scaled;
    auto jt = coords.find(row);
    if (jt == coords.end())
      coords.emplace(row, c);
    else
      jt->second += c;
  }
  return coords;
}

SpModule wedge2_module(const SpModule& m) {
  SpModule out;
  out.g = m.g;
  out.ops = m.ops;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m.dim; ++i)
    for (int j = i + 1; j < m.dim; ++j) pairs.emplace_back(i, j);
  out.dim = static_cast<int>(pairs.size());
  std::map<std::pair<int, int>, int> index;
  for (int t = 0; t < out.dim; ++t) index.emplace(pairs[t], t);

  for (const auto& [i, j] : pairs) {
    ExpVec w = m.weights[i];
    for (size_t t = 0; t < w.size(); ++t) w[t] += m.weights[j][t];
    out.weights.push_back(std::move(w));
  }

  auto add_pair = [&](Vec& v, int i, int j, const Rat& c) {
    if (i == j || c == 0) return;
    int sign = 1, a = i, b = j;
    if (a > b) {
      std::swap(a, b);
      sign = -1;
    }
    const int t = index.at({a, b});
    auto it = v.find(t);
    if (it == v.end())
      v.emplace(t, sign > 0 ? c : -c);
    else {
      it->second += (sign > 0 ? c : -c);
      if (it->second == 0) v.erase(it);
    }
  };

  for (const SpOp& op : m.ops) {
    const auto& cols = m.matrix(op);
    std::vector<Vec> wcols(out.dim);
    for (int t = 0; t < out.dim; ++t) {
      const auto& [i, j] = pairs[t];
      Vec v;
      for (const auto& [k, c] : cols[i]) add_pair(v, k, j, c);
      for (const auto& [k, c] : cols[j]) add_pair(v, i, k, c);
      wcols[t] = std::move(v);
    }
    out.action.emplace(op.str(), std::move(wcols));
  }
  return out;
}

Echelon submodule_generated(const SpModule& m, const std::vector<Vec>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("submodule_generated: empty seed");
  Echelon ech;
  std::vector<Vec> frontier;
  for (const Vec& s : seeds) {
    Vec rem = ech.reduce(s);
    if (!rem.empty()) {
      frontier.push_back(rem);
      ech.insert(std::move(rem));
    }
  }
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& v : frontier) {
      for (const SpOp& op : m.ops) {
        Vec img = m.apply(op, v);
        if (img.empty()) continue;
        Vec rem = ech.reduce(std::move(img));
        if (!rem.empty()) {
          next.push_back(rem);
          ech.insert(std::move(rem));
        }
      }
    }
    frontier = std::move(next);
  }
  ech.normalize();
  return ech;
}

VirtualRep decompose_concrete(const SpModule& m, const Echelon& sub) {
  for (const auto& [p, row] : sub.rows())
    for (const SpOp& op : m.ops)
      if (!sub.contains(m.apply(op, row)))
        throw std::invalid_argument("decompose_concrete: subspace is not sp-stable");

  VirtualRep rep(m.g);
  if (sub.rank() == 0) return rep;

  std::map<ExpVec, std::vector<Vec>> blocks;
  {
    Echelon pure;
    for (const auto& [p, row] : sub.rows()) {
      std::map<ExpVec, Vec> split;
      for (const auto& [i, c] : row) split[m.weights[i]].emplace(i, c);
      for (auto& [w, v] : split) pure.insert(std::move(v));
    }
    if (pure.rank() != sub.rank())
      throw std::logic_error("decompose_concrete: weight split changed dimension");
    for (const auto& [p, row] : pure.rows())
      blocks[m.weights[row.begin()->first]].push_back(row);
  }

  const auto raising = freelie::raising_ops(m.g);
  for (const auto& [w, rows] : blocks) {
    bool dominant = !w.empty() && w.back() >= 0;
    for (size_t i = 0; i + 1 < w.size() && dominant; ++i)
      if (w[i] < w[i + 1]) dominant = false;
    if (!dominant) continue;

    const int n = static_cast<int>(rows.size());
    Echelon e;
    int rank = 0;
    for (int r = 0; r < n; ++r) {
      Vec stacked;
      int offset = 0;
      for (const SpOp& op : raising) {
        Vec img = m.apply(op, rows[r]);
        for (const auto& [i, c] : img) stacked.emplace(offset + i, c);
        offset += m.dim;
      }
      if (e.insert(std::move(stacked))) ++rank;
    }
    const int mult = n - rank;
    if (mult > 0)
      rep.add(Weight::from_partition(m.g, std::vector<int>(w.begin(), w.end())), mult);
  }
  return rep;
}

}  // namespace torelli::spmodule
