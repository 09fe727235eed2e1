#include "lbss/dgl_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace lbss {

ParseError::ParseError(std::string source, int line, const std::string& what)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what),
      line_(line) {}

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

bool valid_name(const std::string& s) {
  if (s.empty() || !name_start(s[0])) return false;
  for (char c : s)
    if (!name_char(c)) return false;
  return true;
}

class Scanner {
 public:
  Scanner(const std::string& text, const std::string& source, int line) : s_(text), source_(source), line_(line) {}

  void skip() {
    while (at_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[at_]))) ++at_;
  }
  bool done() {
    skip();
    return at_ >= s_.size();
  }
  char peek() {
    skip();
    return at_ < s_.size() ? s_[at_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++at_;
    return true;
  }
  std::string integer() {
    skip();
    std::size_t start = at_;
    while (at_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[at_]))) ++at_;
    if (start == at_) fail("expected an integer");
    return s_.substr(start, at_ - start);
  }
  std::string name() {
    skip();
    std::size_t start = at_;
    if (at_ < s_.size() && name_start(s_[at_]))
      while (at_ < s_.size() && name_char(s_[at_])) ++at_;
    if (start == at_) fail("expected a generator name");
    return s_.substr(start, at_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(source_, line_, what + " at column " + std::to_string(at_ + 1) + " in '" + s_ + "'");
  }

 private:
  const std::string& s_;
  const std::string& source_;
  int line_;
  std::size_t at_ = 0;
};

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string strip_comment(const std::string& line) { return line.substr(0, line.find('#')); }

int parse_int(const std::string& w, const std::string& source, int line, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(w, &used);
    if (used != w.size()) throw std::invalid_argument(w);
    return v;
  } catch (const std::exception&) {
    throw ParseError(source, line, what + " must be an integer, got '" + w + "'");
  }
}

// "<head...> = <expr>": returns the words before '=' and the expression text.
std::pair<std::vector<std::string>, std::string> split_assignment(const std::string& body, const std::string& source,
                                                                  int line) {
  auto eq = body.find('=');
  if (eq == std::string::npos) throw ParseError(source, line, "expected '='");
  return {words(body.substr(0, eq)), body.substr(eq + 1)};
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

template <ExactScalar S>
S to_scalar(const mpq_class& q, unsigned p, const std::string& source, int line) {
  if (mpz_divisible_ui_p(q.get_den_mpz_t(), p))
    throw ParseError(source, line,
                     "coefficient " + q.get_str() + " has a denominator divisible by p = " + std::to_string(p));
  PLocal x(q, p);
  if constexpr (std::is_same_v<S, Fp>)
    return x.reduce();
  else
    return x;
}

Vec<PLocal> linear(const Expr& e, const DgLie<PLocal>& L, const std::string& source) {
  Vec<PLocal> v = with_prime<PLocal>(zero_vector<PLocal>(L.size()), L.prime());
  for (const auto& t : e.terms) {
    if (t.factors.size() != 1 || t.factors[0].second != 1)
      throw ParseError(source, e.line, "expected a linear combination of generators, got '" + emit_expr(e) + "'");
    int k = L.index_of(t.factors[0].first);
    if (k < 0) throw ParseError(source, e.line, "unknown generator '" + t.factors[0].first + "'");
    v(k) += to_scalar<PLocal>(t.coefficient, L.prime(), source, e.line);
  }
  return v;
}

}  // namespace

Expr parse_expr(const std::string& text, const std::string& source, int line) {
  Expr e;
  e.line = line;
  Scanner sc(text, source, line);
  if (sc.done()) sc.fail("empty expression");
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.accept('-'))
      sign = -1;
    else if (!sc.accept('+') && !first)
      sc.fail("expected '+' or '-'");
    first = false;
    ExprTerm t;
    t.coefficient = sign;
    bool has_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      mpq_class c(sc.integer());
      if (sc.accept('/')) {
        mpz_class den(sc.integer());
        if (den == 0) sc.fail("zero denominator");
        c /= den;
      }
      t.coefficient *= c;
      has_coefficient = true;
      sc.accept('*');
    }
    if (name_start(sc.peek())) {
      do {
        std::string n = sc.name();
        int k = 1;
        if (sc.accept('^')) k = parse_int(sc.integer(), source, line, "exponent");
        if (k < 1) sc.fail("exponents must be positive");
        t.factors.emplace_back(n, k);
      } while (sc.accept('.'));
    } else if (!has_coefficient) {
      sc.fail("expected a coefficient or a generator");
    }
    t.coefficient.canonicalize();
    if (t.coefficient != 0) e.terms.push_back(std::move(t));
  }
  return e;
}

std::string emit_expr(const Expr& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (const auto& t : e.terms) {
    mpq_class c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    for (const auto& [n, k] : t.factors) {
      if (!mono.empty()) mono += ".";
      mono += n;
      if (k != 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty())
      out += c.get_str();
    else
      out += (c == 1 ? std::string() : c.get_str() + "*") + mono;
  }
  return out;
}

DglFile parse_dgl(std::istream& in, const std::string& source) {
  DglFile f;
  std::set<std::string> names;
  int lineno = 0;
  bool seen_prime = false, seen_nmax = false;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = strip_comment(raw);
    auto w = words(line);
    if (w.empty()) continue;
    const std::string& key = w[0];
    std::string rest = line.substr(line.find(key) + key.size());
    if (key == "prime") {
      if (w.size() != 2) throw ParseError(source, lineno, "usage: prime <p>");
      if (seen_prime) throw ParseError(source, lineno, "prime given twice");
      int p = parse_int(w[1], source, lineno, "prime");
      if (p < 3 || !is_prime(static_cast<unsigned>(p))) throw ParseError(source, lineno, "p must be an odd prime");
      f.prime = static_cast<unsigned>(p);
      seen_prime = true;
    } else if (key == "nmax") {
      if (w.size() != 2) throw ParseError(source, lineno, "usage: nmax <N>");
      if (seen_nmax) throw ParseError(source, lineno, "nmax given twice");
      f.nmax = parse_int(w[1], source, lineno, "nmax");
      if (f.nmax < 1) throw ParseError(source, lineno, "nmax must be positive");
      seen_nmax = true;
    } else if (key == "generator") {
      if (w.size() != 3) throw ParseError(source, lineno, "usage: generator <name> <degree>");
      if (!valid_name(w[1])) throw ParseError(source, lineno, "invalid generator name '" + w[1] + "'");
      if (!names.insert(w[1]).second) throw ParseError(source, lineno, "generator '" + w[1] + "' defined twice");
      f.generators.push_back({w[1], parse_int(w[2], source, lineno, "degree")});
    } else if (key == "differential") {
      auto [head, expr] = split_assignment(rest, source, lineno);
      if (head.size() != 1) throw ParseError(source, lineno, "usage: differential <name> = <expression>");
      f.differentials.push_back({head[0], parse_expr(expr, source, lineno)});
    } else if (key == "bracket") {
      auto [head, expr] = split_assignment(rest, source, lineno);
      if (head.size() != 2) throw ParseError(source, lineno, "usage: bracket <name> <name> = <expression>");
      f.brackets.push_back({head[0], head[1], parse_expr(expr, source, lineno)});
    } else {
      throw ParseError(source, lineno, "unknown directive '" + key + "'");
    }
  }
  return f;
}

DglFile read_dgl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_dgl(in, path);
}

std::string emit_dgl(const DglFile& f) {
  std::ostringstream out;
  if (f.prime) out << "prime " << f.prime << "\n";
  if (f.nmax) out << "nmax " << f.nmax << "\n";
  for (const auto& g : f.generators) out << "generator " << g.name << " " << g.degree << "\n";
  for (const auto& d : f.differentials) out << "differential " << d.source << " = " << emit_expr(d.value) << "\n";
  for (const auto& b : f.brackets)
    out << "bracket " << b.left << " " << b.right << " = " << emit_expr(b.value) << "\n";
  return out.str();
}

DgLie<PLocal> to_lie(const DglFile& f, unsigned prime, const std::string& source) {
  const unsigned p = prime ? prime : f.prime;
  if (p == 0) throw ParseError(source, 0, "no prime given (add 'prime <p>' or pass --prime)");
  if (p < 3 || !is_prime(p)) throw ParseError(source, 0, "p must be an odd prime, got " + std::to_string(p));
  DgLie<PLocal> L(p);
  for (const auto& g : f.generators) L.add_generator(g.name, g.degree);
  std::set<int> seen;
  for (const auto& d : f.differentials) {
    int i = L.index_of(d.source);
    if (i < 0) throw ParseError(source, d.value.line, "unknown generator '" + d.source + "'");
    if (!seen.insert(i).second) throw ParseError(source, d.value.line, "differential of '" + d.source + "' given twice");
    L.set_differential(i, linear(d.value, L, source));
  }
  std::set<std::pair<int, int>> pairs;
  for (const auto& b : f.brackets) {
    int i = L.index_of(b.left), j = L.index_of(b.right);
    if (i < 0) throw ParseError(source, b.value.line, "unknown generator '" + b.left + "'");
    if (j < 0) throw ParseError(source, b.value.line, "unknown generator '" + b.right + "'");
    if (!pairs.insert({i, j}).second)
      throw ParseError(source, b.value.line, "bracket [" + b.left + "," + b.right + "] given twice");
    L.set_bracket(i, j, linear(b.value, L, source));
  }
  L.complete_antisymmetry();
  return L;
}

namespace {

Expr linear_expr(const DgLie<PLocal>& L, const Vec<PLocal>& v) {
  Expr e;
  for (int k = 0; k < L.size(); ++k)
    if (!v(k).is_zero()) e.terms.push_back({v(k).value(), {{L.generator(k).name, 1}}});
  return e;
}

}  // namespace

DglFile from_lie(const DgLie<PLocal>& L, int nmax) {
  DglFile f;
  f.prime = L.prime();
  f.nmax = nmax;
  for (int i = 0; i < L.size(); ++i) f.generators.push_back({L.generator(i).name, L.degree(i)});
  for (int i = 0; i < L.size(); ++i)
    if (!is_zero(L.differential(i))) f.differentials.push_back({L.generator(i).name, linear_expr(L, L.differential(i))});
  for (int i = 0; i < L.size(); ++i)
    for (int j = i; j < L.size(); ++j)
      if (!is_zero(L.bracket(i, j)))
        f.brackets.push_back({L.generator(i).name, L.generator(j).name, linear_expr(L, L.bracket(i, j))});
  return f;
}

MapFile parse_map(std::istream& in, const std::string& source) {
  MapFile m;
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = strip_comment(raw);
    auto w = words(line);
    if (w.empty()) continue;
    if (w[0] != "map") throw ParseError(source, lineno, "unknown directive '" + w[0] + "'");
    auto [head, expr] = split_assignment(line.substr(line.find("map") + 3), source, lineno);
    if (head.size() != 1) throw ParseError(source, lineno, "usage: map <generator> = <element>");
    m.entries.push_back({head[0], parse_expr(expr, source, lineno)});
  }
  return m;
}

MapFile read_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_map(in, path);
}

std::string emit_map(const MapFile& m) {
  std::string out;
  for (const auto& e : m.entries) out += "map " + e.generator + " = " + emit_expr(e.value) + "\n";
  return out;
}

template <ExactScalar S>
Element<S> to_element(const PbwAlgebra<S>& U, const Expr& e, const std::string& source) {
  const auto& L = U.lie();
  Element<S> out;
  for (const auto& t : e.terms) {
    Element<S> term = scaled(U.one(), to_scalar<S>(t.coefficient, U.prime(), source, e.line));
    for (const auto& [n, k] : t.factors) {
      int i = L.index_of(n);
      if (i < 0) throw ParseError(source, e.line, "unknown generator '" + n + "'");
      term = U.multiply(term, U.power(U.generator(i), k));
    }
    add_to(out, term, scalar<S>(1, U.prime()));
  }
  return out;
}

template <ExactScalar S>
std::vector<Element<S>> map_images(const MapFile& m, const DgLie<S>& source, const PbwAlgebra<S>& target,
                                   const std::string& where) {
  std::vector<Element<S>> images(static_cast<std::size_t>(source.size()));
  std::vector<bool> given(images.size(), false);
  for (const auto& e : m.entries) {
    int i = source.index_of(e.generator);
    if (i < 0) throw ParseError(where, e.value.line, "unknown source generator '" + e.generator + "'");
    if (given[static_cast<std::size_t>(i)])
      throw ParseError(where, e.value.line, "image of '" + e.generator + "' given twice");
    given[static_cast<std::size_t>(i)] = true;
    images[static_cast<std::size_t>(i)] = to_element(target, e.value, where);
  }
  for (int i = 0; i < source.size(); ++i)
    if (!given[static_cast<std::size_t>(i)])
      throw ParseError(where, 0, "no image given for '" + source.generator(i).name + "'");
  return images;
}

template <ExactScalar S>
Expr to_expr(const PbwAlgebra<S>& U, const Element<S>& u) {
  Expr e;
  for (const auto& [m, c] : u) {
    ExprTerm t;
    t.coefficient = mpq_class(to_string(c));
    t.coefficient.canonicalize();
    for (int i = 0; i < U.lie().size(); ++i)
      if (m[static_cast<std::size_t>(i)] > 0) t.factors.emplace_back(U.lie().generator(i).name, m[static_cast<std::size_t>(i)]);
    e.terms.push_back(std::move(t));
  }
  return e;
}

template Element<PLocal> to_element(const PbwAlgebra<PLocal>&, const Expr&, const std::string&);
template Element<Fp> to_element(const PbwAlgebra<Fp>&, const Expr&, const std::string&);
template std::vector<Element<PLocal>> map_images(const MapFile&, const DgLie<PLocal>&, const PbwAlgebra<PLocal>&,
                                                 const std::string&);
template std::vector<Element<Fp>> map_images(const MapFile&, const DgLie<Fp>&, const PbwAlgebra<Fp>&,
                                             const std::string&);
template Expr to_expr(const PbwAlgebra<PLocal>&, const Element<PLocal>&);
template Expr to_expr(const PbwAlgebra<Fp>&, const Element<Fp>&);

}  // namespace lbss
