#pragma once

// Line-oriented text format for DGL presentations (.dgl) and for maps between
// enveloping algebras (.map). The grammar is documented in the README.

#include "lbss/lie.hpp"

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbss {

/// Malformed input; carries the 1-based line number (0 when not line-specific).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// coefficient * f_1^{k_1} . f_2^{k_2} ...; no factors means the unit.
struct ExprTerm {
  mpq_class coefficient;
  std::vector<std::pair<std::string, int>> factors;
  friend bool operator==(const ExprTerm&, const ExprTerm&) = default;
};

struct Expr {
  std::vector<ExprTerm> terms;
  int line = 0;  // not part of the value
  friend bool operator==(const Expr& a, const Expr& b) { return a.terms == b.terms; }
};

/// "2 x + 1/3*y.z^2 - 1"; "0" is the empty sum.
Expr parse_expr(const std::string& text, const std::string& source = "<expr>", int line = 0);
std::string emit_expr(const Expr& e);

struct DglFile {
  unsigned prime = 0;  // 0: not given
  int nmax = 0;        // 0: not given
  struct Generator {
    std::string name;
    int degree = 0;
    friend bool operator==(const Generator&, const Generator&) = default;
  };
  struct Differential {
    std::string source;
    Expr value;
    friend bool operator==(const Differential&, const Differential&) = default;
  };
  struct Bracket {
    std::string left, right;
    Expr value;
    friend bool operator==(const Bracket&, const Bracket&) = default;
  };
  std::vector<Generator> generators;
  std::vector<Differential> differentials;
  std::vector<Bracket> brackets;
  friend bool operator==(const DglFile&, const DglFile&) = default;
};

DglFile parse_dgl(std::istream& in, const std::string& source = "<input>");
DglFile read_dgl(const std::string& path);
std::string emit_dgl(const DglFile& f);

/// Builds the presentation over Z_(p); the prime argument overrides the file's.
/// Throws ParseError for unknown names, a missing or even/non-prime p, and
/// coefficients whose denominator is divisible by p. Brackets given for (x, y)
/// only are completed by graded antisymmetry; the result is not validated.
DgLie<PLocal> to_lie(const DglFile& f, unsigned prime = 0, const std::string& source = "<input>");
DglFile from_lie(const DgLie<PLocal>& L, int nmax);

/// Generator images of an algebra map, one line "map <name> = <element>" each.
struct MapFile {
  struct Entry {
    std::string generator;
    Expr value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;
};

MapFile parse_map(std::istream& in, const std::string& source = "<input>");
MapFile read_map(const std::string& path);
std::string emit_map(const MapFile& m);

/// Evaluates an expression in UL (factors multiplied in the order written).
template <ExactScalar S>
Element<S> to_element(const PbwAlgebra<S>& U, const Expr& e, const std::string& source = "<expr>");

/// Images of all source generators (missing entries are an error).
template <ExactScalar S>
std::vector<Element<S>> map_images(const MapFile& m, const DgLie<S>& source, const PbwAlgebra<S>& target,
                                   const std::string& where = "<map>");

/// The element as an expression over generator names.
template <ExactScalar S>
Expr to_expr(const PbwAlgebra<S>& U, const Element<S>& u);

}  // namespace lbss
