#include "tropgb/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tropgb {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PolyRing& ring, std::size_t line)
      : text_(text), ring_(ring), line_(line) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, pos_ + 1); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial expr() {
    Polynomial acc = term(true);
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial t = term(false);
      acc = c == '+' ? ring_.add(acc, t) : ring_.sub(acc, t);
    }
  }

  Polynomial term(bool allow_sign) {
    skip_ws();
    bool negate = false;
    if (allow_sign && (peek() == '+' || peek() == '-')) {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = ring_.mul(acc, factor());
    }
    return negate ? ring_.neg(acc) : acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const mpz_class e = integer("exponent");
    if (!e.fits_uint_p() || e > 0xFFFF) fail("exponent too large");
    Polynomial r = ring_.constant(1);
    for (unsigned long i = 0; i < e.get_ui(); ++i) r = ring_.mul(r, base);
    return r;
  }

  Polynomial atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q(integer("number"));
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        mpz_class den = integer("denominator");
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        q = mpq_class(q.get_num(), den);
        q.canonicalize();
      }
      return ring_.constant(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto& names = ring_.names();
      const auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return ring_.variable(static_cast<std::size_t>(it - names.begin()));
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  mpz_class integer(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const PolyRing& ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

mpq_class parse_rational(const std::string& tok, std::size_t line, std::size_t col) {
  mpq_class q;
  if (q.set_str(tok, 10) != 0 || tok.empty()) throw ParseError("invalid rational '" + tok + "'", line, col);
  if (q.get_den() == 0) throw ParseError("zero denominator", line, col);
  q.canonicalize();
  return q;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRing& ring, std::size_t line) {
  return PolyParser(text, ring, line).parse();
}

SystemSpec parse_system_spec(std::string_view text) {
  SystemSpec spec;
  bool have_field = false;
  bool have_vars = false;
  bool have_weights = false;
  bool in_polys = false;
  std::size_t weights_line = 0;
  std::vector<std::size_t> poly_lines;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data()) + 1;
    if (in_polys) {
      spec.polys.emplace_back(line);
      poly_lines.push_back(lineno);
      continue;
    }
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", lineno, indent);
    const std::string key(trim(line.substr(0, colon)));
    const std::string_view value = trim(line.substr(colon + 1));
    const std::size_t vcol = indent + static_cast<std::size_t>(value.data() - line.data());
    const auto toks = split_ws(value);
    if (key == "field") {
      if (toks.size() == 1 && toks[0] == "trivial") {
        spec.ctx = ValuationContext::trivial();
      } else if (toks.size() == 2 && toks[0] == "padic") {
        std::uint64_t p = 0;
        try {
          p = std::stoull(toks[1]);
        } catch (const std::exception&) {
          throw ParseError("invalid prime '" + toks[1] + "'", lineno, vcol);
        }
        if (!is_prime(p)) throw ParseError("p = " + toks[1] + " is not prime", lineno, vcol);
        spec.ctx = ValuationContext::padic(p);
      } else {
        throw ParseError("expected 'padic <p>' or 'trivial'", lineno, vcol);
      }
      have_field = true;
    } else if (key == "vars") {
      if (toks.empty()) throw ParseError("no variables declared", lineno, vcol);
      if (toks.size() > kMaxVars) throw ParseError("too many variables", lineno, vcol);
      for (const auto& v : toks) {
        const bool ok = (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_') &&
                        std::all_of(v.begin(), v.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
        if (!ok) throw ParseError("invalid variable name '" + v + "'", lineno, vcol);
        if (std::count(toks.begin(), toks.end(), v) > 1) throw ParseError("duplicate variable '" + v + "'", lineno, vcol);
      }
      spec.vars = toks;
      have_vars = true;
    } else if (key == "weights") {
      spec.weights.clear();
      for (const auto& t : toks) spec.weights.push_back(parse_rational(t, lineno, vcol));
      have_weights = true;
      weights_line = lineno;
    } else if (key == "order") {
      if (toks.size() != 1) throw ParseError("expected a single order name", lineno, vcol);
      try {
        spec.order = parse_order_kind(toks[0]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, vcol);
      }
    } else if (key == "precision") {
      if (toks.size() != 1) throw ParseError("expected a single precision value", lineno, vcol);
      try {
        std::size_t used = 0;
        const long long n = std::stoll(toks[0], &used);
        if (used != toks[0].size() || n < 1) throw std::invalid_argument("bad");
        spec.precision = n;
      } catch (const std::exception&) {
        throw ParseError("invalid precision '" + toks[0] + "'", lineno, vcol);
      }
    } else if (key == "polys") {
      if (!value.empty()) {
        spec.polys.emplace_back(value);
        poly_lines.push_back(lineno);
      }
      in_polys = true;
    } else {
      throw ParseError("unknown key '" + key + "'", lineno, indent);
    }
  }
  if (!have_field) throw ParseError("missing 'field:' line", lineno, 1);
  if (!have_vars) throw ParseError("missing 'vars:' line", lineno, 1);
  if (!in_polys) throw ParseError("missing 'polys:' section", lineno, 1);
  if (spec.polys.empty()) throw ParseError("no polynomials", lineno, 1);
  if (!have_weights) spec.weights.assign(spec.vars.size(), mpq_class(0));
  if (spec.weights.size() != spec.vars.size()) {
    throw ParseError("weight vector has " + std::to_string(spec.weights.size()) + " entries for " +
                         std::to_string(spec.vars.size()) + " variables",
                     weights_line, 1);
  }
  if (spec.precision && spec.ctx.is_trivial()) {
    throw ParseError("precision requires a p-adic field", lineno, 1);
  }
  // Validate every polynomial now so errors carry their source line.
  const PolyRing ring = make_ring(spec);
  for (std::size_t i = 0; i < spec.polys.size(); ++i) parse_polynomial(spec.polys[i], ring, poly_lines[i]);
  return spec;
}

std::string format_system_spec(const SystemSpec& spec) {
  std::string out = "field: " + spec.ctx.describe() + "\nvars:";
  for (const auto& v : spec.vars) out += " " + v;
  out += "\nweights:";
  for (const auto& w : spec.weights) out += " " + w.get_str();
  out += "\norder: " + std::string(order_name(spec.order)) + "\n";
  if (spec.precision) out += "precision: " + std::to_string(*spec.precision) + "\n";
  out += "polys:\n";
  for (const auto& p : spec.polys) out += p + "\n";
  return out;
}

PolyRing make_ring(const SystemSpec& spec) {
  std::vector<mpq_class> weights = spec.weights;
  if (weights.empty()) weights.assign(spec.vars.size(), mpq_class(0));
  return PolyRing(spec.vars, TropicalOrder(weights, spec.order), CoeffField(spec.ctx, spec.precision.has_value()));
}

std::vector<Polynomial> build_polynomials(const SystemSpec& spec, const PolyRing& ring) {
  std::vector<Polynomial> polys;
  polys.reserve(spec.polys.size());
  for (std::size_t i = 0; i < spec.polys.size(); ++i) {
    Polynomial f = parse_polynomial(spec.polys[i], ring, i + 1);
    if (spec.precision) {
      std::vector<Term> ts = f.terms();
      for (auto& t : ts) t.coef.prec = *spec.precision;
      f = ring.make(std::move(ts));
    }
    polys.push_back(std::move(f));
  }
  std::stable_sort(polys.begin(), polys.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  return polys;
}

ParsedSystem load_system(const SystemSpec& spec) {
  ParsedSystem sys;
  sys.ring = make_ring(spec);
  sys.polys = build_polynomials(spec, sys.ring);
  sys.precision = spec.precision;
  return sys;
}

ParsedSystem parse_system(std::string_view text) { return load_system(parse_system_spec(text)); }

std::string format_term(const Term& t, const PolyRing& ring) {
  const std::string mon = format_monomial(t.mon, ring.names());
  if (t.mon.is_one()) return t.coef.value.get_str();
  if (t.coef.value == 1) return mon;
  if (t.coef.value == -1) return "-" + mon;
  return t.coef.value.get_str() + "*" + mon;
}

std::string format_polynomial(const Polynomial& f, const PolyRing& ring) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    std::string s = format_term(t, ring);
    if (out.empty()) {
      out = s;
    } else if (s.front() == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
  }
  return out;
}

}  // namespace tropgb
