#include "randgrp/expression.hpp"

#include <cctype>
#include <cmath>
#include <functional>

#include "randgrp/error.hpp"

namespace randgrp {

double to_double(Value const& v) {
  if (auto const* r = std::get_if<Rational>(&v)) {
    return r->to_double();
  }
  return std::get<double>(v);
}

namespace {

// Exact when both sides are rational and the operation does not overflow.
template <typename Exact, typename Approx>
Value combine(Value const& x, Value const& y, Exact exact, Approx approx) {
  auto const* a = std::get_if<Rational>(&x);
  auto const* b = std::get_if<Rational>(&y);
  if (a && b) {
    try {
      return exact(*a, *b);
    } catch (PreconditionError const&) {
      // overflow; fall through to doubles
    }
  }
  return approx(to_double(x), to_double(y));
}

class Parser {
 public:
  Parser(std::string const& text, std::map<std::string, Value> const& vars)
      : s_(text), vars_(vars) {}

  Value run() {
    Value v = sum();
    skip();
    if (pos_ != s_.size()) {
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }
    return v;
  }

 private:
  [[noreturn]] void fail(std::string const& what) const {
    throw ParseError("expression: " + what, 1, pos_ + 1);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value sum() {
    Value v = product();
    for (;;) {
      if (eat('+')) {
        v = combine(v, product(), std::plus<>{}, std::plus<>{});
      } else if (eat('-')) {
        v = combine(v, product(), std::minus<>{}, std::minus<>{});
      } else {
        return v;
      }
    }
  }

  Value product() {
    Value v = unary();
    for (;;) {
      if (eat('*')) {
        v = combine(v, unary(), std::multiplies<>{}, std::multiplies<>{});
      } else if (eat('/')) {
        std::size_t at = pos_;
        Value d = unary();
        if (to_double(d) == 0.0) {
          pos_ = at;
          fail("division by zero");
        }
        v = combine(v, d, std::divides<>{}, std::divides<>{});
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (eat('-')) {
      Value v = unary();
      return combine(Rational(0), v, std::minus<>{}, std::minus<>{});
    }
    if (eat('+')) {
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (!eat('^')) {
      return base;
    }
    Value e = unary();  // right associative
    auto const* b = std::get_if<Rational>(&base);
    auto const* x = std::get_if<Rational>(&e);
    if (b && x && x->den() == 1 && std::abs(x->num()) <= 64) {
      try {
        Rational acc(1);
        for (std::int64_t i = 0; i < std::abs(x->num()); ++i) {
          acc = acc * *b;
        }
        return x->num() < 0 ? Rational(1) / acc : acc;
      } catch (PreconditionError const&) {
      }
    }
    return std::pow(to_double(base), to_double(e));
  }

  Value atom() {
    skip();
    if (pos_ >= s_.size()) {
      fail("unexpected end of input");
    }
    char c = s_[pos_];
    if (eat('(')) {
      Value v = sum();
      if (!eat(')')) {
        fail("expected ')'");
      }
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
        ++pos_;
      }
      try {
        return Rational::parse(s_.substr(start, pos_ - start));
      } catch (Error const&) {
        pos_ = start;
        fail("bad number");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = s_.substr(start, pos_ - start);
      if (eat('(')) {
        Value arg = sum();
        if (!eat(')')) {
          fail("expected ')'");
        }
        return call(name, arg, start);
      }
      auto it = vars_.find(name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return it->second;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Value call(std::string const& name, Value const& arg, std::size_t at) {
    double const x = to_double(arg);
    auto const* exact = std::get_if<Rational>(&arg);
    if (name == "log" || name == "ln") {
      if (!(x > 0.0)) {
        pos_ = at;
        fail(name + " of a nonpositive number");
      }
      if (exact && *exact == Rational(1)) {
        return Rational(0);
      }
      return std::log(x);
    }
    if (name == "exp") {
      if (exact && exact->num() == 0) {
        return Rational(1);
      }
      return std::exp(x);
    }
    if (name == "sqrt") {
      if (x < 0.0) {
        pos_ = at;
        fail("sqrt of a negative number");
      }
      return std::sqrt(x);
    }
    if (name == "floor" || name == "ceil") {
      if (exact) {
        std::int64_t f = exact->floor();
        if (name == "ceil" && Rational(f) != *exact) {
          ++f;
        }
        return Rational(f);
      }
      double r = name == "floor" ? std::floor(x) : std::ceil(x);
      if (std::abs(r) < 9e15) {
        return Rational(static_cast<std::int64_t>(r));
      }
      return r;
    }
    pos_ = at;
    fail("unknown function '" + name + "'");
  }

  std::string const& s_;
  std::map<std::string, Value> const& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Value evaluate(std::string const& expr,
               std::map<std::string, Value> const& vars) {
  return Parser(expr, vars).run();
}

void validate_expression(std::string const& expr,
                         std::map<std::string, Value> const& sample_vars) {
  try {
    evaluate(expr, sample_vars);
  } catch (ParseError const&) {
    throw;
  } catch (Error const&) {
    // domain errors at the sample point are not syntax errors
  }
}

}  // namespace randgrp
