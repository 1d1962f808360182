#include "torelli/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "torelli/spmodule.hpp"

namespace torelli::presentation {

using freelie::Word;
using spmodule::Echelon;
using spmodule::Vec;

GradedQuotientReport graded_nilpotent_quotient(Context& ctx, const GradedPresentation& p,
                                               int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("graded_nilpotent_quotient: cutoff must be >= 1");
  const Alphabet& alph = ctx.alphabet();

  // Bucket relations by degree, rejecting inhomogeneous input.
  std::map<int, std::vector<const Element*>> by_degree;
  for (const Element& rel : p.relations) {
    if (rel.zero()) continue;
    auto d = ctx.degree_of(rel);
    if (!d) throw std::invalid_argument("presentation-format error: inhomogeneous relation");
    by_degree[*d].push_back(&rel);
  }

  GradedQuotientReport report;
  report.cutoff = cutoff;
  report.presentation_fingerprint = fingerprint(ctx, p);

  // Ideal bases per degree, kept as elements for the bracket step.
  std::map<int, std::vector<Element>> ideal;

  for (int deg = 1; deg <= cutoff; ++deg) {
    const std::vector<Word>& basis = ctx.lyndon_basis(deg);
    std::map<Word, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));

    auto to_vec = [&](const Element& e) {
      Vec v;
      for (const auto& [w, c] : e.terms) v.emplace(index.at(w), c);
      return v;
    };

    Echelon ech;
    std::vector<Element> ideal_basis;
    auto feed = [&](const Element& e) {
      if (e.zero()) return;
      Vec rem = ech.reduce(to_vec(e));
      if (rem.empty()) return;
      Element red;
      for (const auto& [i, c] : rem) red.add(basis[i], c);
      ech.insert(std::move(rem));
      ideal_basis.push_back(std::move(red));
    };

    auto it = by_degree.find(deg);
    if (it != by_degree.end())
      for (const Element* rel : it->second) feed(*rel);

    // [letter, I_{deg - deg(letter)}]
    for (int letter = 0; letter < alph.size(); ++letter) {
      const int ld = alph.degrees[letter];
      auto jt = ideal.find(deg - ld);
      if (jt == ideal.end()) continue;
      const Element x = ctx.letter(letter);
      for (const Element& gen : jt->second) feed(ctx.bracket(x, gen));
    }

    report.ideal_dims.push_back(static_cast<int>(ideal_basis.size()));
    report.dims.push_back(Int(static_cast<int>(basis.size())) - Int(static_cast<int>(ideal_basis.size())));
    ideal.emplace(deg, std::move(ideal_basis));
  }
  return report;
}

namespace {

struct Parser {
  const Context& ctx;
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument("parse error: expected '" + std::string(1, c) + "' at position " +
                                  std::to_string(pos) + " in \"" + s + "\"");
  }

  Rat number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("parse error: expected number in \"" + s + "\"");
    Int num(s.substr(start, pos - start));
    if (eat('/')) {
      skip_ws();
      size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (dstart == pos) throw std::invalid_argument("parse error: expected denominator");
      Int den(s.substr(dstart, pos - dstart));
      return Rat(num, den);
    }
    return Rat(num);
  }

  Element ident_or_bracket() {
    skip_ws();
    if (pos < s.size() && s[pos] == '[') {
      ++pos;
      Element lhs = expression();
      expect(',');
      Element rhs = expression();
      expect(']');
      return const_cast<Context&>(ctx).bracket(lhs, rhs);
    }
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\''))
      ++pos;
    if (start == pos)
      throw std::invalid_argument("parse error: expected identifier at position " +
                                  std::to_string(pos) + " in \"" + s + "\"");
    const std::string name = s.substr(start, pos - start);
    const auto& names = ctx.alphabet().names;
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw std::invalid_argument("parse error: unknown generator \"" + name + "\"");
    return ctx.letter(static_cast<int>(it - names.begin()));
  }

  Element term() {
    skip_ws();
    Rat coeff = 1;
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = number();
      have_coeff = true;
    }
    if (have_coeff) {
      skip_ws();
      if (eat('*')) return ident_or_bracket() * coeff;
      // bare scalar is not an element of a Lie algebra
      throw std::invalid_argument("parse error: expected '*' after coefficient in \"" + s + "\"");
    }
    return ident_or_bracket();
  }

  Element expression() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Element acc = term();
    if (neg) acc *= Rat(-1);
    while (true) {
      skip_ws();
      if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) break;
      const bool minus = s[pos] == '-';
      ++pos;
      Element t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }
};

void print_word(const Context& ctx, const Word& w, size_t lo, size_t hi, std::ostream& os) {
  if (hi - lo == 1) {
    os << ctx.alphabet().names[w[lo]];
    return;
  }
  Word sub(w.begin() + lo, w.begin() + hi);
  auto [u, v] = ctx.std_factor(sub);
  os << "[";
  print_word(ctx, w, lo, lo + u.size(), os);
  os << ", ";
  print_word(ctx, w, lo + u.size(), hi, os);
  os << "]";
}

}  // namespace

Element parse_expression(const Context& ctx, const std::string& text) {
  Parser p{ctx, text};
  Element e = p.expression();
  p.skip_ws();
  if (p.pos != text.size())
    throw std::invalid_argument("parse error: trailing input in \"" + text + "\"");
  return e;
}

std::string print_element(const Context& ctx, const Element& e) {
  if (e.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e.terms) {
    if (!first)
      os << (c > 0 ? " + " : " - ");
    else if (c < 0)
      os << "-";
    first = false;
    Rat ac = c > 0 ? c : Rat(-c);
    if (ac != 1) os << ac << "*";
    print_word(ctx, w, 0, w.size(), os);
  }
  return os.str();
}

std::string fingerprint(const Context& ctx, const GradedPresentation& p) {
  std::ostringstream os;
  os << p.name << "|g=" << p.g << ",n=" << p.n << ",r=" << p.r << "|";
  for (const auto& name : p.generators.names) os << name << ";";
  os << "|";
  for (const Element& rel : p.relations) os << print_element(ctx, rel) << ";";
  const std::string data = os.str();
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

}  // namespace torelli::presentation
