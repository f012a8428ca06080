#pragma once

// Concrete syntax for objects and arrows. Objects: unit I, lowercase letters,
// left-associative tensor A * B, functor application T(A) or E1(A). Arrows:
// braced constants id{A}, a{A,B,C}, ..., composition g . f (right to left,
// left associative), tensor f * g, functor application T[f]. Precedence:
// application, then tensor, then composition. Whitespace is insignificant.

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "relmon/terms.hpp"

namespace relmon {

struct ParseError : std::runtime_error {
  std::size_t pos;   // byte offset into the input
  std::size_t line;  // 1-based
  std::size_t col;   // 1-based
  ParseError(const std::string& input, std::size_t at, const std::string& msg)
      : std::runtime_error(format(input, at, msg)), pos(at), line(1), col(1) {
    for (std::size_t i = 0; i < at && i < input.size(); ++i) {
      if (input[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }

 private:
  static std::string format(const std::string& input, std::size_t at,
                            const std::string& msg) {
    std::size_t ln = 1, cl = 1;
    for (std::size_t i = 0; i < at && i < input.size(); ++i) {
      if (input[i] == '\n') {
        ++ln;
        cl = 1;
      } else {
        ++cl;
      }
    }
    return "parse error at line " + std::to_string(ln) + ", column " +
           std::to_string(cl) + ": " + msg;
  }
};

namespace detail {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ObjPtr object() {
    ObjPtr o = object_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after object");
    return o;
  }

  ArrPtr arrow() {
    ArrPtr f = comp_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after arrow");
    return f;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(text_, pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  // Uppercase identifier with trailing digits split off as the family index.
  FunctorSym functor_sym(const std::string& name) {
    std::size_t d = name.size();
    while (d > 0 && std::isdigit(static_cast<unsigned char>(name[d - 1]))) --d;
    if (d == 0) fail("functor symbol must start with a letter");
    if (d == name.size()) return {name, std::nullopt};
    return {name.substr(0, d), std::stoi(name.substr(d))};
  }

  //// objects

  ObjPtr object_expr() {
    ObjPtr o = object_atom();
    while (eat('*')) o = tensor(o, object_atom());
    return o;
  }

  ObjPtr object_atom() {
    skip_ws();
    if (eat('(')) {
      ObjPtr o = object_expr();
      expect(')', "to close the parenthesis");
      return o;
    }
    if (pos_ >= text_.size()) fail("expected an object");
    char c = text_[pos_];
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      std::string name = ident();
      if (name == "I") {
        if (peek() == '(') {
          pos_ = at;
          fail("the unit I is not a functor symbol");
        }
        return unit();
      }
      FunctorSym sym = functor_sym(name);
      expect('(', "after a functor symbol");
      ObjPtr arg = object_expr();
      expect(')', "to close the functor application");
      return app(sym, arg);
    }
    if (std::islower(static_cast<unsigned char>(c))) return letter(ident());
    fail("expected an object");
  }

  //// arrows

  ArrPtr comp_expr() {
    ArrPtr f = tens_expr();
    while (eat('.')) f = comp(f, tens_expr());
    return f;
  }

  ArrPtr tens_expr() {
    ArrPtr f = arrow_atom();
    while (eat('*')) f = tens(f, arrow_atom());
    return f;
  }

  struct ConstantName {
    ArrKind kind;
    const char* token;
  };

  static const std::vector<ConstantName>& constant_names() {
    // longest tokens first, so psiL and psi0 win over psi
    static const std::vector<ConstantName> names = {
        {ArrKind::Codiag, "codiag"}, {ArrKind::Cobang, "cobang"},
        {ArrKind::Delta, "delta"},   {ArrKind::Diag, "diag"},
        {ArrKind::Bang, "bang"},     {ArrKind::PsiL, "psiL"},
        {ArrKind::PsiR, "psiR"},     {ArrKind::Psi0, "psi0"},
        {ArrKind::Psi, "psi"},       {ArrKind::Eta, "eta"},
        {ArrKind::Eps, "eps"},       {ArrKind::Mu, "mu"},
        {ArrKind::Id, "id"},         {ArrKind::Assoc, "a"},
        {ArrKind::Lunit, "l"},       {ArrKind::Runit, "r"},
        {ArrKind::Braid, "c"},
    };
    return names;
  }

  ArrPtr arrow_atom() {
    skip_ws();
    if (eat('(')) {
      ArrPtr f = comp_expr();
      expect(')', "to close the parenthesis");
      return f;
    }
    if (pos_ >= text_.size()) fail("expected an arrow");
    char c = text_[pos_];
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::string name = ident();
      FunctorSym sym = functor_sym(name);
      expect('[', "after a functor symbol in an arrow");
      ArrPtr inner = comp_expr();
      expect(']', "to close the functor application");
      return fapp(sym, inner);
    }
    if (!std::islower(static_cast<unsigned char>(c))) fail("expected an arrow");
    std::size_t at = pos_;
    std::string name = ident();
    ArrKind kind;
    std::string rest;
    bool found = false;
    for (const ConstantName& cn : constant_names()) {
      std::string tok = cn.token;
      if (name.size() >= tok.size() && name.compare(0, tok.size(), tok) == 0) {
        std::string tail = name.substr(tok.size());
        bool digits = !tail.empty();
        for (char d : tail)
          if (!std::isdigit(static_cast<unsigned char>(d))) digits = false;
        if (tail.empty() || digits) {
          kind = cn.kind;
          rest = tail;
          found = true;
          break;
        }
      }
    }
    if (!found) {
      pos_ = at;
      fail("unknown arrow constant '" + name + "'");
    }
    // a', l', r' are separate constants
    if (rest.empty() && pos_ < text_.size() && text_[pos_] == '\'') {
      bool inv = true;
      switch (kind) {
        case ArrKind::Assoc: kind = ArrKind::AssocInv; break;
        case ArrKind::Lunit: kind = ArrKind::LunitInv; break;
        case ArrKind::Runit: kind = ArrKind::RunitInv; break;
        default: inv = false; break;
      }
      if (inv) ++pos_;
    }
    std::optional<int> idx;
    if (!rest.empty()) idx = std::stoi(rest);
    int arity = constant_arity(kind);
    if (arity == 0) {
      if (peek() == '{') fail(std::string(constant_token(kind)) + " takes no objects");
      return detail::make_const(kind, nullptr, nullptr, nullptr, idx);
    }
    expect('{', "to open the object arguments");
    std::vector<ObjPtr> args;
    args.push_back(object_expr());
    while (eat(',')) args.push_back(object_expr());
    expect('}', "to close the object arguments");
    if (static_cast<int>(args.size()) != arity)
      fail(std::string(constant_token(kind)) + " takes " + std::to_string(arity) +
           (arity == 1 ? " object" : " objects") + ", got " +
           std::to_string(args.size()));
    ObjPtr o1 = args.size() > 0 ? args[0] : nullptr;
    ObjPtr o2 = args.size() > 1 ? args[1] : nullptr;
    ObjPtr o3 = args.size() > 2 ? args[2] : nullptr;
    return detail::make_const(kind, o1, o2, o3, idx);
  }
};

}  // namespace detail

inline ObjPtr parse_object(const std::string& text) {
  return detail::Parser(text).object();
}

inline ArrPtr parse_arrow(const std::string& text) {
  return detail::Parser(text).arrow();
}

}  // namespace relmon
