#pragma once

#include <string>
#include <vector>

#include "zdsolve/multipoly.hpp"

namespace zdsolve {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

namespace detail {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen,
                    RParen, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(const std::string& src, int line_offset);

}  // namespace detail

/// Recursive-descent parser for the ideal-file polynomial grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | var | '(' expr ')'
///   rational := int ('/' nat)?
/// Juxtaposition is not multiplication; '*' is required.
template <CoefficientField K>
class PolyParser {
 public:
  PolyParser(const std::string& src, RingPtr<K> ring, int line_offset = 1)
      : ring_(std::move(ring)),
        toks_(detail::tokenize(src, line_offset)) {}

  MultiPoly<K> parse() {
    MultiPoly<K> p = expr();
    expect(detail::Token::Kind::End, "end of input");
    return p;
  }

 private:
  using Tok = detail::Token;
  using P = MultiPoly<K>;

  const Tok& cur() const { return toks_[pos_]; }
  bool accept(typename Tok::Kind k) {
    if (cur().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(typename Tok::Kind k, const std::string& what) {
    if (cur().kind != k)
      throw ParseError("expected " + what + ", got '" + describe(cur()) + "'",
                       cur().line, cur().col);
    ++pos_;
  }
  static std::string describe(const Tok& t) {
    return t.kind == Tok::Kind::End ? "end of input" : t.text;
  }

  P expr() {
    bool neg = false;
    if (accept(Tok::Kind::Minus)) neg = true;
    else accept(Tok::Kind::Plus);
    P acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept(Tok::Kind::Plus)) acc += term();
      else if (accept(Tok::Kind::Minus)) acc -= term();
      else break;
    }
    return acc;
  }

  P term() {
    P acc = factor();
    while (accept(Tok::Kind::Star)) acc *= factor();
    return acc;
  }

  P factor() {
    P b = base();
    if (accept(Tok::Kind::Caret)) {
      const Tok& t = cur();
      expect(Tok::Kind::Number, "exponent");
      unsigned long e = 0;
      try {
        e = std::stoul(t.text);
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", t.line, t.col);
      }
      if (e > 1'000'000)
        throw ParseError("exponent out of range", t.line, t.col);
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  P base() {
    const Tok& t = cur();
    switch (t.kind) {
      case Tok::Kind::Number: {
        ++pos_;
        std::string lit = t.text;
        if (accept(Tok::Kind::Slash)) {
          const Tok& d = cur();
          expect(Tok::Kind::Number, "denominator");
          lit += "/" + d.text;
        }
        typename K::Elem c;
        try {
          c = ring_->field().parse(lit);
        } catch (const std::exception& e) {
          throw ParseError(e.what(), t.line, t.col);
        }
        return P::constant(ring_, std::move(c));
      }
      case Tok::Kind::Ident: {
        auto idx = ring_->var_index(t.text);
        if (!idx)
          throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
        ++pos_;
        return P::variable(ring_, *idx);
      }
      case Tok::Kind::LParen: {
        ++pos_;
        P inner = expr();
        expect(Tok::Kind::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError("expected a number, variable or '('", t.line, t.col);
    }
  }

  RingPtr<K> ring_;
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

template <CoefficientField K>
MultiPoly<K> parse_poly(const std::string& src, const RingPtr<K>& ring,
                        int line_offset = 1) {
  return PolyParser<K>(src, ring, line_offset).parse();
}

/// Header + raw polynomial lines of an ideal file, before the field is
/// known. Line 1 must read:
///   ring <QQ|Fp:PRIME> vars <v1> <v2> ... order <lex|grevlex>
/// Later non-empty lines hold one polynomial each; '#' starts a comment.
struct IdealFileText {
  FieldDesc field;
  std::vector<std::string> vars;
  MonomialOrder::Kind order = MonomialOrder::Kind::GRevLex;
  std::vector<std::pair<std::string, int>> poly_lines;  // text, line number
};

IdealFileText read_ideal_file_text(const std::string& text);
IdealFileText read_ideal_file(const std::string& path);  // "-" reads stdin

template <CoefficientField K>
std::vector<MultiPoly<K>> parse_ideal_polys(const IdealFileText& f,
                                            const RingPtr<K>& ring) {
  std::vector<MultiPoly<K>> out;
  out.reserve(f.poly_lines.size());
  for (const auto& [text, line] : f.poly_lines)
    out.push_back(parse_poly(text, ring, line));
  return out;
}

/// Renders generators as a complete ideal file (header + one polynomial
/// per line); the output parses back to the same ideal.
template <CoefficientField K>
std::string render_ideal_file(const RingPtr<K>& ring,
                              const std::vector<MultiPoly<K>>& gens) {
  std::string out = "ring " + ring->field().desc().str() + " vars";
  for (const auto& v : ring->var_names()) out += " " + v;
  const auto& ord = ring->order();
  if (ord.kind == MonomialOrder::Kind::Lex)
    out += " order lex\n";
  else if (ord.kind == MonomialOrder::Kind::GRevLex)
    out += " order grevlex\n";
  else
    throw std::invalid_argument("render_ideal_file: elimination orders have "
                                "no file syntax");
  for (const auto& g : gens) out += g.str() + "\n";
  return out;
}

}  // namespace zdsolve
