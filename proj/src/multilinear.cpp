#include "torelli/multilinear.hpp"

#include <algorithm>
#include <sstream>

namespace torelli::multilinear {
namespace {

// Sort a range with sign tracking; returns 0 on repeated entries.
int sort_signed(Key::iterator lo, Key::iterator hi) {
  int sign = 1;
  for (auto i = lo; i != hi; ++i)
    for (auto j = i + 1; j != hi; ++j) {
      if (*i == *j) return 0;
      if (*i > *j) {
        std::swap(*i, *j);
        sign = -sign;
      }
    }
  return sign;
}

}  // namespace

std::string Shape::str() const {
  if (kind == Kind::Wedge2OfLambda3) return "L2L3V";
  std::string s;
  for (size_t i = 0; i < arities.size(); ++i) {
    if (i) s += "x";
    s += arities[i] == 1 ? "V" : "L" + std::to_string(arities[i]) + "V";
  }
  return s;
}

void Element::add_raw(Key k, Rat c) {
  if (c == 0) return;
  if (static_cast<int>(k.size()) != shape_.total_symbols())
    throw std::invalid_argument("Element::add_raw: key length mismatch");
  if (shape_.kind == Shape::Kind::Wedge2OfLambda3) {
    int s1 = sort_signed(k.begin(), k.begin() + 3);
    if (s1 == 0) return;
    int s2 = sort_signed(k.begin() + 3, k.end());
    if (s2 == 0) return;
    Key t1(k.begin(), k.begin() + 3), t2(k.begin() + 3, k.end());
    if (t1 == t2) return;
    int outer = 1;
    if (t2 < t1) {
      std::swap_ranges(k.begin(), k.begin() + 3, k.begin() + 3);
      outer = -1;
    }
    add_normalized(k, c * s1 * s2 * outer);
    return;
  }
  int sign = 1;
  auto it = k.begin();
  for (int a : shape_.arities) {
    int s = sort_signed(it, it + a);
    if (s == 0) return;
    sign *= s;
    it += a;
  }
  add_normalized(k, c * sign);
}

void Element::add_normalized(const Key& k, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end())
    terms_.emplace(k, c);
  else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (!(shape_ == o.shape_)) throw std::invalid_argument("Element: shape mismatch");
  for (const auto& [k, c] : o.terms_) add_normalized(k, c);
  return *this;
}
Element& Element::operator-=(const Element& o) {
  if (!(shape_ == o.shape_)) throw std::invalid_argument("Element: shape mismatch");
  for (const auto& [k, c] : o.terms_) add_normalized(k, -c);
  return *this;
}
Element& Element::operator*=(const Rat& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= k;
  return *this;
}

ExpVec Element::weight_of_key(const Key& k) const {
  ExpVec w(alph_->g, 0);
  for (int sym : k) {
    ExpVec sw = alph_->weight_of(sym);
    for (size_t i = 0; i < w.size(); ++i) w[i] += sw[i];
  }
  return w;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rat ac = c > 0 ? c : Rat(-c);
    if (ac != 1) os << ac << "*";
    size_t pos = 0;
    if (shape_.kind == Shape::Kind::Wedge2OfLambda3) {
      os << "(";
      for (int i = 0; i < 3; ++i) os << (i ? "^" : "") << alph_->names[k[i]];
      os << ")^(";
      for (int i = 3; i < 6; ++i) os << (i > 3 ? "^" : "") << alph_->names[k[i]];
      os << ")";
    } else {
      for (size_t s = 0; s < shape_.arities.size(); ++s) {
        if (s) os << "(x)";
        for (int i = 0; i < shape_.arities[s]; ++i)
          os << (i ? "^" : "") << alph_->names[k[pos + i]];
        pos += shape_.arities[s];
      }
    }
  }
  return os.str();
}

Element apply_op(const SpOp& op, const Element& x) {
  Element out(x.shape(), &x.alphabet());
  for (const auto& [k, c] : x.terms()) {
    for (size_t pos = 0; pos < k.size(); ++pos) {
      for (const auto& [sym, coeff] : op.apply_letter(x.alphabet(), k[pos])) {
        Key nk = k;
        nk[pos] = sym;
        out.add_raw(std::move(nk), c * coeff);
      }
    }
  }
  return out;
}

Element wedge_element(const Alphabet& alph, const std::vector<int>& symbols) {
  Element e(Shape::wedge(static_cast<int>(symbols.size())), &alph);
  e.add_raw(symbols, 1);
  return e;
}

Element omega(const Alphabet& alph, int strand) {
  Element e(Shape::wedge(2), &alph);
  for (int k = 1; k <= alph.g; ++k) e.add_raw({alph.a(k, strand), alph.b(k, strand)}, 1);
  return e;
}

Element wedge_omega(const Element& v) {
  if (!(v.shape() == Shape::wedge(1)))
    throw std::invalid_argument("wedge_omega: expected a V element");
  const Alphabet& alph = v.alphabet();
  Element out(Shape::wedge(3), &alph);
  for (const auto& [k, c] : v.terms()) {
    const int strand = alph.strand_of(k[0]);
    for (int j = 1; j <= alph.g; ++j)
      out.add_raw({k[0], alph.a(j, strand), alph.b(j, strand)}, c);
  }
  return out;
}

Element proj_p(const Element& x) {
  if (!(x.shape() == Shape::wedge(3)))
    throw std::invalid_argument("proj_p: expected a Lambda^3 V element");
  const Alphabet& alph = x.alphabet();
  Element out(Shape::wedge(1), &alph);
  for (const auto& [k, c] : x.terms()) {
    out.add_raw({k[2]}, c * alph.pairing(k[0], k[1]));
    out.add_raw({k[0]}, c * alph.pairing(k[1], k[2]));
    out.add_raw({k[1]}, c * alph.pairing(k[2], k[0]));
  }
  return out;
}

Element theta(const Element& x) {
  if (x.shape().kind != Shape::Kind::TensorOfWedges || x.shape().arities.size() != 1 ||
      x.shape().arities[0] < 2)
    throw std::invalid_argument("theta: expected Lambda^k V with k >= 2");
  const int k = x.shape().arities[0];
  const Alphabet& alph = x.alphabet();
  Element out(Shape::wedge(k - 2), &alph);
  for (const auto& [key, c] : x.terms()) {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        Rat q = alph.pairing(key[i], key[j]);
        if (q == 0) continue;
        // (-1)^{i+j+1} with 1-based slots = (-1)^{i+j+1} with 0-based too.
        int sign = ((i + 1) + (j + 1) + 1) % 2 == 0 ? 1 : -1;
        Key nk;
        nk.reserve(k - 2);
        for (int t = 0; t < k; ++t)
          if (t != i && t != j) nk.push_back(key[t]);
        out.add_raw(std::move(nk), c * q * sign);
      }
  }
  return out;
}

Element outer_wedge(const Element& x, const Element& y) {
  if (!(x.shape() == Shape::wedge(3)) || !(y.shape() == Shape::wedge(3)))
    throw std::invalid_argument("outer_wedge: expected Lambda^3 V elements");
  Element out(Shape::wedge2_lambda3(), &x.alphabet());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      Key k = kx;
      k.insert(k.end(), ky.begin(), ky.end());
      out.add_raw(std::move(k), cx * cy);
    }
  return out;
}

Element multiply_to_lambda6(const Element& x) {
  if (x.shape().kind != Shape::Kind::Wedge2OfLambda3)
    throw std::invalid_argument("multiply_to_lambda6: expected Lambda^2 Lambda^3 V");
  Element out(Shape::wedge(6), &x.alphabet());
  for (const auto& [k, c] : x.terms()) out.add_raw(k, c);
  return out;
}

Element jacobi_map(const Element& x) {
  if (!(x.shape() == Shape::tensor({1, 3})))
    throw std::invalid_argument("jacobi_map: expected V (x) Lambda^3 V");
  Element out(Shape::tensor({1, 1, 2}), &x.alphabet());
  for (const auto& [k, c] : x.terms()) {
    const int u = k[0], v1 = k[1], v2 = k[2], v3 = k[3];
    out.add_raw({u, v1, v2, v3}, c);
    out.add_raw({u, v2, v3, v1}, c);
    out.add_raw({u, v3, v1, v2}, c);
  }
  return out;
}

namespace {
void expect_vvl2(const Element& x, const char* who) {
  if (!(x.shape() == Shape::tensor({1, 1, 2})))
    throw std::invalid_argument(std::string(who) + ": expected V (x) V (x) Lambda^2 V");
}
}  // namespace

Element proj_p1(const Element& x) {
  expect_vvl2(x, "proj_p1");
  const Alphabet& alph = x.alphabet();
  Element out(Shape::wedge(2), &alph);
  for (const auto& [k, c] : x.terms())
    out.add_raw({k[2], k[3]}, c * alph.pairing(k[0], k[1]));
  return out;
}

Element proj_p2(const Element& x) {
  expect_vvl2(x, "proj_p2");
  const Alphabet& alph = x.alphabet();
  Element out(Shape::wedge(2), &alph);
  for (const auto& [k, c] : x.terms())
    out.add_raw({k[0], k[1]}, c * alph.pairing(k[2], k[3]));
  return out;
}

Element proj_p3(const Element& x) {
  expect_vvl2(x, "proj_p3");
  const Alphabet& alph = x.alphabet();
  Element out(Shape::wedge(2), &alph);
  for (const auto& [k, c] : x.terms()) {
    out.add_raw({k[1], k[2]}, c * alph.pairing(k[0], k[3]) / 2);
    out.add_raw({k[1], k[3]}, -c * alph.pairing(k[0], k[2]) / 2);
  }
  return out;
}

Element proj_p4(const Element& x) {
  expect_vvl2(x, "proj_p4");
  const Alphabet& alph = x.alphabet();
  Element out(Shape::wedge(2), &alph);
  for (const auto& [k, c] : x.terms()) {
    out.add_raw({k[0], k[3]}, c * alph.pairing(k[1], k[2]) / 2);
    out.add_raw({k[0], k[2]}, -c * alph.pairing(k[1], k[3]) / 2);
  }
  return out;
}

Rat proj_q1(const Element& x) {
  expect_vvl2(x, "proj_q1");
  const Alphabet& alph = x.alphabet();
  Rat out = 0;
  for (const auto& [k, c] : x.terms())
    out += c * alph.pairing(k[0], k[1]) * alph.pairing(k[2], k[3]);
  return out;
}

Rat proj_q2(const Element& x) {
  expect_vvl2(x, "proj_q2");
  const Alphabet& alph = x.alphabet();
  Rat out = 0;
  for (const auto& [k, c] : x.terms())
    out += c *
           (alph.pairing(k[0], k[3]) * alph.pairing(k[1], k[2]) -
            alph.pairing(k[0], k[2]) * alph.pairing(k[1], k[3])) /
           2;
  return out;
}

Rat lambda3_pairing(const Element& x, const Element& y) {
  if (!(x.shape() == Shape::wedge(3)) || !(y.shape() == Shape::wedge(3)))
    throw std::invalid_argument("lambda3_pairing: expected Lambda^3 V elements");
  const Alphabet& alph = x.alphabet();
  Rat out = 0;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      // det of the 3x3 pairing matrix
      Rat m[3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = alph.pairing(kx[i], ky[j]);
      Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
      out += cx * cy * det;
    }
  return out;
}

}  // namespace torelli::multilinear
