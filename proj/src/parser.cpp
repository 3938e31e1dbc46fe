#include "diffchow/parser.hpp"

#include <cctype>

#include "diffchow/errors.hpp"

namespace diffchow {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const ParseOptions& o) : s_(s), o_(o) {}

  Poly run() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Poly d = unary();
        if (!d.is_constant()) {
          pos_ = at;
          fail("division by a non-constant");
        }
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc.scaled(d.constant_term().inverse());
      } else {
        break;
      }
    }
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  unsigned integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    const std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 6) {
      pos_ = start;
      fail("integer too large");
    }
    return static_cast<unsigned>(std::stoul(digits));
  }

  Poly power() {
    Poly a = atom();
    if (accept('@')) a = a.transform(integer());
    if (accept('^')) a = a.pow(integer());
    return a;
  }

  Poly atom() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly(Coeff(Rational(Integer(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      return named(name, start);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Poly named(const std::string& name, std::size_t start) {
    if (o_.names) {
      auto it = o_.names->find(name);
      if (it != o_.names->end()) return it->second;
    }
    if (name == "x") {
      if (!o_.allow_x) {
        pos_ = start;
        fail("the indeterminate x is only available over Q(x)");
      }
      return Poly(Coeff::x());
    }
    std::optional<Var> v = var_from_name(name);
    if (!v) {
      pos_ = start;
      fail("undeclared name '" + name + "'");
    }
    if (o_.declared && !o_.declared->count(*v)) {
      pos_ = start;
      fail("undeclared variable '" + name + "'");
    }
    return Poly(*v);
  }

 public:
  static std::optional<Var> var_from_name(const std::string& name) {
    auto all_digits = [](const std::string& t) {
      if (t.empty() || t.size() > 6) return false;
      for (char ch : t)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
      return true;
    };
    if (name.size() >= 2 && name[0] == 'y' && all_digits(name.substr(1)))
      return Var::y(static_cast<std::uint32_t>(std::stoul(name.substr(1))));
    if (name.size() >= 4 && name[0] == 'u') {
      const auto us = name.find('_');
      if (us == std::string::npos) return std::nullopt;
      const std::string a = name.substr(1, us - 1), b = name.substr(us + 1);
      if (!all_digits(a) || !all_digits(b)) return std::nullopt;
      const auto blk = std::stoul(a);
      if (blk >= Var::kFirstReservedBlock) return std::nullopt;
      return Var::u(static_cast<std::uint32_t>(blk), static_cast<std::uint32_t>(std::stoul(b)));
    }
    return std::nullopt;
  }

 private:
  const std::string& s_;
  const ParseOptions& o_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const ParseOptions& opts) { return Parser(text, opts).run(); }

Var parse_var(const std::string& text) {
  std::string name = text;
  std::uint32_t shift = 0;
  const auto at = text.find('@');
  if (at != std::string::npos) {
    name = text.substr(0, at);
    const std::string k = text.substr(at + 1);
    if (k.empty() || k.size() > 6 || k.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad shift in '" + text + "'", at + 2);
    shift = static_cast<std::uint32_t>(std::stoul(k));
  }
  auto v = Parser::var_from_name(name);
  if (!v) throw ParseError("not a variable: '" + text + "'", 1);
  return v->with_shift(shift);
}

}  // namespace diffchow
