#include "zdsolve/parse.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace zdsolve {

namespace detail {

std::vector<Token> tokenize(const std::string& src, int line_offset) {
  std::vector<Token> out;
  int line = line_offset, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string text, int c) {
    out.push_back({k, std::move(text), line, c});
  };
  while (i < src.size()) {
    char c = src[i];
    int start_col = col;
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        num += src[i++];
        ++col;
      }
      push(Token::Kind::Number, std::move(num), start_col);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) ||
              src[i] == '_')) {
        id += src[i++];
        ++col;
      }
      push(Token::Kind::Ident, std::move(id), start_col);
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::Plus; break;
      case '-': k = Token::Kind::Minus; break;
      case '*': k = Token::Kind::Star; break;
      case '/': k = Token::Kind::Slash; break;
      case '^': k = Token::Kind::Caret; break;
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line, col);
    }
    push(k, std::string(1, c), start_col);
    ++col;
    ++i;
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

}  // namespace detail

IdealFileText read_ideal_file_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  IdealFileText out;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;  // blank
    if (!have_header) {
      if (word != "ring")
        throw ParseError("first line must start with 'ring'", lineno, 1);
      std::string field_s;
      if (!(ls >> field_s))
        throw ParseError("missing field after 'ring'", lineno, 1);
      try {
        out.field = FieldDesc::parse(field_s);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), lineno, 1);
      }
      std::string kw;
      if (!(ls >> kw) || kw != "vars")
        throw ParseError("expected 'vars'", lineno, 1);
      std::string tok;
      bool saw_order = false;
      while (ls >> tok) {
        if (tok == "order") {
          saw_order = true;
          break;
        }
        out.vars.push_back(tok);
      }
      if (out.vars.empty())
        throw ParseError("no variables declared", lineno, 1);
      if (!saw_order) throw ParseError("expected 'order'", lineno, 1);
      std::string ord;
      if (!(ls >> ord)) throw ParseError("missing order name", lineno, 1);
      if (ord == "lex") out.order = MonomialOrder::Kind::Lex;
      else if (ord == "grevlex") out.order = MonomialOrder::Kind::GRevLex;
      else
        throw ParseError("order must be lex or grevlex, got '" + ord + "'",
                         lineno, 1);
      have_header = true;
      continue;
    }
    // remainder of the line is one polynomial
    std::string rest = line;
    // strip leading whitespace for a cleaner column origin
    out.poly_lines.emplace_back(rest, lineno);
  }
  if (!have_header)
    throw ParseError("empty file: missing ring header", 1, 1);
  return out;
}

IdealFileText read_ideal_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return read_ideal_file_text(buf.str());
}

}  // namespace zdsolve
