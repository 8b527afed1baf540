#pragma once

#include "tropgb/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropgb {

/// Syntax or semantic error in textual input; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Declarative description of a polynomial system, before parsing the polynomials.
struct SystemSpec {
  ValuationContext ctx;
  std::vector<std::string> vars;
  std::vector<mpq_class> weights;
  MonomialOrderKind order = MonomialOrderKind::grevlex;
  std::optional<std::int64_t> precision;
  std::vector<std::string> polys;
};

/// A parsed system: the ambient ring plus its generators sorted by increasing degree.
struct ParsedSystem {
  PolyRing ring;
  std::vector<Polynomial> polys;
  std::optional<std::int64_t> precision;
};

/// Reads the line-oriented system format:
///   field: padic 2 | field: trivial
///   vars: x y z
///   weights: 0 0 0        (optional, defaults to zeros)
///   order: grevlex        (optional)
///   precision: 50         (optional)
///   polys:
///   <one polynomial per line>
/// Blank lines and lines starting with '#' are ignored.
SystemSpec parse_system_spec(std::string_view text);
std::string format_system_spec(const SystemSpec& spec);

/// Ring for a spec; precision tracking is on iff a precision is declared.
PolyRing make_ring(const SystemSpec& spec);
/// Parses every polynomial, stamps the declared precision and sorts by degree (stable).
std::vector<Polynomial> build_polynomials(const SystemSpec& spec, const PolyRing& ring);
ParsedSystem parse_system(std::string_view text);
ParsedSystem load_system(const SystemSpec& spec);

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := ['+' | '-'] factor ('*' factor)*
///   factor := atom ['^' INT]
///   atom   := INT ['/' INT] | VAR | '(' expr ')'
Polynomial parse_polynomial(std::string_view text, const PolyRing& ring, std::size_t line = 1);

/// Canonical text: terms in decreasing tropical order, "c*x^a*y^b" factors.
std::string format_polynomial(const Polynomial& f, const PolyRing& ring);
std::string format_term(const Term& t, const PolyRing& ring);

}  // namespace tropgb
