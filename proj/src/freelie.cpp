#include "torelli/freelie.hpp"

#include <algorithm>
#include <sstream>

namespace torelli::freelie {

Alphabet Alphabet::plain(std::vector<std::string> names) {
  Alphabet a;
  a.degrees.assign(names.size(), 1);
  a.names = std::move(names);
  return a;
}

Alphabet Alphabet::graded(std::vector<std::string> names, std::vector<int> degrees) {
  if (names.size() != degrees.size())
    throw std::invalid_argument("Alphabet::graded: size mismatch");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("Alphabet::graded: degrees must be >= 1");
  Alphabet a;
  a.names = std::move(names);
  a.degrees = std::move(degrees);
  return a;
}

Alphabet Alphabet::symplectic_basis(int g, int strands) {
  if (g < 1 || strands < 1)
    throw std::invalid_argument("symplectic_basis: g and strands must be positive");
  Alphabet a;
  a.symplectic = true;
  a.g = g;
  a.strands = strands;
  for (int s = 1; s <= strands; ++s) {
    for (int k = 1; k <= g; ++k)
      a.names.push_back(strands == 1 ? "a" + std::to_string(k)
                                     : "A" + std::to_string(k) + "_" + std::to_string(s));
    for (int k = 1; k <= g; ++k)
      a.names.push_back(strands == 1 ? "b" + std::to_string(k)
                                     : "B" + std::to_string(k) + "_" + std::to_string(s));
  }
  a.degrees.assign(a.names.size(), 1);
  return a;
}

int Alphabet::a(int k, int strand) const {
  if (!symplectic || k < 1 || k > g || strand < 1 || strand > strands)
    throw std::invalid_argument("Alphabet::a: bad index");
  return (strand - 1) * 2 * g + (k - 1);
}

int Alphabet::b(int k, int strand) const {
  if (!symplectic || k < 1 || k > g || strand < 1 || strand > strands)
    throw std::invalid_argument("Alphabet::b: bad index");
  return (strand - 1) * 2 * g + g + (k - 1);
}

bool Alphabet::is_a(int letter) const { return letter % (2 * g) < g; }

int Alphabet::k_index(int letter) const {
  int r = letter % (2 * g);
  return (r < g ? r : r - g) + 1;
}

int Alphabet::strand_of(int letter) const { return letter / (2 * g) + 1; }

Rat Alphabet::pairing(int x, int y) const {
  if (!symplectic) return 0;
  if (strand_of(x) != strand_of(y)) return 0;
  if (k_index(x) != k_index(y)) return 0;
  if (is_a(x) && !is_a(y)) return 1;
  if (!is_a(x) && is_a(y)) return -1;
  return 0;
}

ExpVec Alphabet::weight_of(int letter) const {
  if (!symplectic) throw std::logic_error("weight_of: alphabet is not symplectic");
  ExpVec w(g, 0);
  w[k_index(letter) - 1] = is_a(letter) ? 1 : -1;
  return w;
}

std::string SpOp::str() const {
  switch (kind) {
    case S: return "S" + std::to_string(i) + "," + std::to_string(j);
    case T: return "T" + std::to_string(i);
    case F: return "F" + std::to_string(i) + "," + std::to_string(j);
    case LS: return "S'" + std::to_string(i) + "," + std::to_string(j);
    case LT: return "T'" + std::to_string(i);
    case LF: return "F'" + std::to_string(i) + "," + std::to_string(j);
    case H: return "H" + std::to_string(i);
  }
  return "?";
}

std::vector<std::pair<int, Rat>> SpOp::apply_letter(const Alphabet& alph, int letter) const {
  if (!alph.symplectic) throw std::logic_error("SpOp: alphabet is not symplectic");
  const int g = alph.g;
  if (i < 1 || i > g || ((kind == S || kind == F || kind == LS || kind == LF) && (j < 1 || j > g)))
    throw std::invalid_argument("SpOp: index out of range");
  const int s = alph.strand_of(letter);
  const int k = alph.k_index(letter);
  const bool is_a = alph.is_a(letter);
  std::vector<std::pair<int, Rat>> out;
  switch (kind) {
    case S:  // S_{i,j}: a_j -> a_i, b_i -> -b_j
      if (is_a && k == j) out.emplace_back(alph.a(i, s), 1);
      if (!is_a && k == i) out.emplace_back(alph.b(j, s), -1);
      break;
    case T:  // T_i: b_i -> a_i
      if (!is_a && k == i) out.emplace_back(alph.a(i, s), 1);
      break;
    case F:  // F_{i,j}: b_i -> a_j, b_j -> a_i
      if (!is_a && k == i) out.emplace_back(alph.a(j, s), 1);
      if (!is_a && k == j) out.emplace_back(alph.a(i, s), 1);
      break;
    case LS:  // transpose of S_{i,j}: a_i -> a_j, b_j -> -b_i
      if (is_a && k == i) out.emplace_back(alph.a(j, s), 1);
      if (!is_a && k == j) out.emplace_back(alph.b(i, s), -1);
      break;
    case LT:  // transpose of T_i: a_i -> b_i
      if (is_a && k == i) out.emplace_back(alph.b(i, s), 1);
      break;
    case LF:  // transpose of F_{i,j}: a_i -> b_j, a_j -> b_i
      if (is_a && k == i) out.emplace_back(alph.b(j, s), 1);
      if (is_a && k == j) out.emplace_back(alph.b(i, s), 1);
      break;
    case H:  // torus: a_i -> a_i, b_i -> -b_i
      if (k == i) out.emplace_back(letter, is_a ? 1 : -1);
      break;
  }
  return out;
}

std::vector<SpOp> raising_ops(int g) {
  std::vector<SpOp> ops;
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) ops.push_back({SpOp::S, i, j});
  for (int i = 1; i <= g; ++i) ops.push_back({SpOp::T, i});
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) ops.push_back({SpOp::F, i, j});
  return ops;
}

std::vector<SpOp> lowering_ops(int g) {
  std::vector<SpOp> ops;
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) ops.push_back({SpOp::LS, i, j});
  for (int i = 1; i <= g; ++i) ops.push_back({SpOp::LT, i});
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) ops.push_back({SpOp::LF, i, j});
  return ops;
}

std::vector<SpOp> torus_ops(int g) {
  std::vector<SpOp> ops;
  for (int i = 1; i <= g; ++i) ops.push_back({SpOp::H, i});
  return ops;
}

std::vector<SpOp> all_ops(int g) {
  std::vector<SpOp> ops = raising_ops(g);
  auto lo = lowering_ops(g);
  ops.insert(ops.end(), lo.begin(), lo.end());
  auto to = torus_ops(g);
  ops.insert(ops.end(), to.begin(), to.end());
  return ops;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  const size_t n = w.size();
  for (size_t i = 1; i < n; ++i) {
    // w must be strictly smaller than each proper suffix.
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
      return false;
  }
  return true;
}

Context::Context(Alphabet alph) : alph_(std::move(alph)) {
  if (alph_.size() == 0) throw std::invalid_argument("Context: empty alphabet");
}

const std::vector<Word>& Context::lyndon_basis(int degree) {
  if (degree < 1) throw std::invalid_argument("lyndon_basis: degree must be >= 1");
  auto it = lyndon_cache_.find(degree);
  if (it != lyndon_cache_.end()) return it->second;

  // Duval's generation of all Lyndon words of length <= degree, filtered
  // by total letter degree.  Letter degrees are >= 1 so length <= degree.
  std::vector<Word> out;
  const int m = alph_.size();
  Word w{0};
  while (true) {
    if (alph_.degree_of(w) == degree) out.push_back(w);
    const size_t n = w.size();
    Word t = w;
    while (t.size() < static_cast<size_t>(degree)) t.push_back(t[t.size() - n]);
    while (!t.empty() && t.back() == m - 1) t.pop_back();
    if (t.empty()) break;
    ++t.back();
    w = std::move(t);
  }
  std::sort(out.begin(), out.end());
  return lyndon_cache_.emplace(degree, std::move(out)).first->second;
}

std::pair<Word, Word> Context::std_factor(const Word& w) const {
  if (w.size() < 2) throw std::invalid_argument("std_factor: word too short");
  // Right factor = lexicographically smallest proper suffix.
  size_t best = 1;
  for (size_t i = 2; i < w.size(); ++i)
    if (std::lexicographical_compare(w.begin() + i, w.end(), w.begin() + best, w.end()))
      best = i;
  return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

Element Context::bracket(const Element& x, const Element& y) {
  Element out;
  for (const auto& [u, cu] : x.terms)
    for (const auto& [v, cv] : y.terms) {
      Element b = bracket_words(u, v);
      b *= cu * cv;
      out += b;
    }
  return out;
}

Element Context::bracket_words(const Word& u, const Word& v) {
  if (u == v) return {};
  if (v < u) {
    Element e = bracket_words(v, u);
    e *= Rat(-1);
    return e;
  }
  return nf_lyndon_pair(u, v);
}

Element Context::nf_lyndon_pair(const Word& u, const Word& v) {
  auto key = std::make_pair(u, v);
  auto it = bracket_cache_.find(key);
  if (it != bracket_cache_.end()) return it->second;

  Element out;
  // For Lyndon u < v the concatenation uv is Lyndon; [s(u), s(v)] is the
  // standard bracketing of uv exactly when v is the smallest proper
  // suffix of uv.
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  {
    size_t best = 1;
    for (size_t i = 2; i < w.size(); ++i)
      if (std::lexicographical_compare(w.begin() + i, w.end(), w.begin() + best, w.end()))
        best = i;
    if (Word(w.begin() + best, w.end()) == v) {
      out.add(w, 1);
      bracket_cache_.emplace(std::move(key), out);
      return out;
    }
  }
  // Otherwise expand via the standard factorization u = u1 u2 and Jacobi:
  // [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2].
  auto [u1, u2] = std_factor(u);
  Element a = bracket(single(u1), bracket_words(u2, v));
  Element b = bracket(bracket_words(u1, v), single(u2));
  out = a + b;
  bracket_cache_.emplace(std::move(key), out);
  return out;
}

Element Context::apply_op(const SpOp& op, const Element& x) {
  Element out;
  for (const auto& [w, c] : x.terms) {
    Element e = apply_op_word(op, w);
    e *= c;
    out += e;
  }
  return out;
}

Element Context::apply_op_word(const SpOp& op, const Word& w) {
  if (w.size() == 1) {
    Element out;
    for (auto& [letter, coeff] : op.apply_letter(alph_, w[0])) out.add(Word{letter}, coeff);
    return out;
  }
  auto [u, v] = std_factor(w);
  Element left = bracket(apply_op_word(op, u), single(v));
  Element right = bracket(single(u), apply_op_word(op, v));
  return left + right;
}

Element Context::apply_derivation(const Derivation& d, const Element& x) {
  Element out;
  for (const auto& [w, c] : x.terms) {
    Element e = apply_derivation_word(d, w);
    e *= c;
    out += e;
  }
  return out;
}

Element Context::apply_derivation_word(const Derivation& d, const Word& w) {
  if (w.size() == 1) {
    auto it = d.images.find(w[0]);
    return it == d.images.end() ? Element{} : it->second;
  }
  auto [u, v] = std_factor(w);
  Element left = bracket(apply_derivation_word(d, u), single(v));
  Element right = bracket(single(u), apply_derivation_word(d, v));
  return left + right;
}

Derivation Context::derivation_from_map(std::map<int, Element> images) {
  std::optional<int> deg;
  for (const auto& [letter, img] : images) {
    if (letter < 0 || letter >= alph_.size())
      throw std::invalid_argument("derivation_from_map: letter out of range");
    auto d = degree_of(img);
    if (img.zero()) continue;
    if (!d) throw std::invalid_argument("derivation_from_map: inhomogeneous image");
    if (deg && *deg != *d)
      throw std::invalid_argument("derivation_from_map: mixed image degrees");
    deg = d;
  }
  return Derivation{std::move(images)};
}

Derivation Context::derivation_bracket(const Derivation& d1, const Derivation& d2) {
  Derivation out;
  for (int letter = 0; letter < alph_.size(); ++letter) {
    if (alph_.degrees[letter] != 1) continue;
    Element x = this->letter(letter);
    Element e = apply_derivation(d1, apply_derivation(d2, x)) -
                apply_derivation(d2, apply_derivation(d1, x));
    if (!e.zero()) out.images[letter] = std::move(e);
  }
  return out;
}

std::optional<ExpVec> Context::weight_of(const Element& x) const {
  std::optional<ExpVec> wt;
  for (const auto& [w, c] : x.terms) {
    ExpVec acc(alph_.g, 0);
    for (int letter : w) {
      ExpVec lw = alph_.weight_of(letter);
      for (size_t i = 0; i < acc.size(); ++i) acc[i] += lw[i];
    }
    if (!wt)
      wt = acc;
    else if (*wt != acc)
      return std::nullopt;
  }
  return wt;
}

std::optional<int> Context::degree_of(const Element& x) const {
  std::optional<int> deg;
  for (const auto& [w, c] : x.terms) {
    int d = alph_.degree_of(w);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

namespace {
void word_str(const Alphabet& alph, const Word& w, size_t lo, size_t hi, std::ostream& os) {
  // Print the standard bracketing of w[lo..hi).
  if (hi - lo == 1) {
    os << alph.names[w[lo]];
    return;
  }
  Word sub(w.begin() + lo, w.begin() + hi);
  size_t best = 1;
  for (size_t i = 2; i < sub.size(); ++i)
    if (std::lexicographical_compare(sub.begin() + i, sub.end(), sub.begin() + best, sub.end()))
      best = i;
  os << "[";
  word_str(alph, w, lo, lo + best, os);
  os << ",";
  word_str(alph, w, lo + best, hi, os);
  os << "]";
}
}  // namespace

std::string Context::str(const Element& x) const {
  if (x.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rat ac = c > 0 ? c : Rat(-c);
    if (ac != 1) os << ac << "*";
    word_str(alph_, w, 0, w.size(), os);
  }
  return os.str();
}

}  // namespace torelli::freelie
