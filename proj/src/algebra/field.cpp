#include "bethe/algebra/field.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace bethe {

bool is_squarefree(long d) {
  long n = d < 0 ? -d : d;
  if (n == 0) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

void FieldSpec::validate() const {
  if (radical) {
    long d = *radical;
    if (d == 0 || d == 1 || !is_squarefree(d))
      throw std::invalid_argument("radical must be squarefree and not 0 or 1, got " +
                                  std::to_string(d));
  }
  if (params.size() > 2) throw std::invalid_argument("at most two parameters are supported");
  std::set<std::string> seen;
  for (const std::string& p : params) {
    if (p.empty() || !(std::isalpha((unsigned char)p[0]) || p[0] == '_'))
      throw std::invalid_argument("bad parameter name '" + p + "'");
    for (char ch : p)
      if (!(std::isalnum((unsigned char)ch) || ch == '_'))
        throw std::invalid_argument("bad parameter name '" + p + "'");
    if (p == "x" || p == "r") throw std::invalid_argument("parameter name '" + p + "' is reserved");
    if (!seen.insert(p).second) throw std::invalid_argument("duplicate parameter '" + p + "'");
  }
  if (h.is_zero()) throw std::invalid_argument("shift step h must be nonzero");
}

Scalar FieldSpec::root() const {
  if (!radical) throw std::invalid_argument("no radical configured in the field");
  return Scalar::root(*radical);
}

int FieldSpec::param_index(const std::string& name) const {
  for (size_t i = 0; i < params.size(); ++i)
    if (params[i] == name) return int(i);
  throw std::invalid_argument("unknown parameter '" + name + "'");
}

Scalar FieldSpec::param(const std::string& name) const { return Scalar::param(param_index(name)); }

namespace {

// Recursive-descent parser for + - * / ^ with integers, r, x and parameter names.
class Parser {
 public:
  Parser(const FieldSpec& f, const std::string& s, bool allow_x) : f_(f), s_(s), allow_x_(allow_x) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("cannot parse \"" + s_ + "\" at " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  RatFunc term() {
    RatFunc v = factor();
    for (;;) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        RatFunc d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  RatFunc factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    RatFunc base = atom();
    if (accept('^')) {
      bool neg = accept('-');
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      if (neg && base.is_zero()) fail("division by zero");
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      RatFunc v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit((unsigned char)ch)) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
      return RatFunc(Scalar(mpq_class(mpz_class(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha((unsigned char)ch) || ch == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "x") {
        if (!allow_x_) fail("variable x not allowed in a scalar");
        return RatFunc::x();
      }
      if (name == "r") {
        if (!f_.radical) fail("r used but no radical is configured");
        return RatFunc(f_.root());
      }
      for (size_t i = 0; i < f_.params.size(); ++i)
        if (f_.params[i] == name) return RatFunc(Scalar::param(int(i)));
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  const FieldSpec& f_;
  const std::string& s_;
  bool allow_x_;
  size_t pos_ = 0;
};

}  // namespace

Scalar FieldSpec::parse_scalar(const std::string& text) const {
  RatFunc v = Parser(*this, text, false).parse();
  return v.num().coeff(0);
}

RatFunc FieldSpec::parse_ratfunc(const std::string& text) const {
  return Parser(*this, text, true).parse();
}

Poly FieldSpec::parse_poly(const std::string& text) const {
  RatFunc v = parse_ratfunc(text);
  if (!v.is_poly()) throw std::invalid_argument("\"" + text + "\" is not a polynomial");
  return v.num();
}

}  // namespace bethe
