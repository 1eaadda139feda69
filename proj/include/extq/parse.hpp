#pragma once

#include <cctype>
#include <string>

#include "extq/element.hpp"

namespace extq {

namespace detail {

class ElementParser {
 public:
  ElementParser(const std::string& text, int n) : text_(text), n_(n) {}

  ExtElement<Rational> parse() {
    ExtElement<Rational> out = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  ExtElement<Rational> parse_sum() {
    skip_space();
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
    ExtElement<Rational> out = parse_term().scaled(Rational(sign));
    while (true) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      take();
      ExtElement<Rational> t = parse_term();
      out = c == '-' ? out - t : out + t;
    }
    return out;
  }

  ExtElement<Rational> parse_term() {
    skip_space();
    ExtElement<Rational> out(n_);
    bool have = false;
    if (isdigit(static_cast<unsigned char>(peek()))) {
      out = ExtElement<Rational>::term(n_, Monomial{}, parse_rational());
      have = true;
    }
    while (true) {
      skip_space();
      if (have) {
        if (peek() != '*') break;
        take();
        skip_space();
      }
      char c = peek();
      if (c == 'e') {
        out = have ? out * parse_variable() : parse_variable();
      } else if (c == '(') {
        take();
        ExtElement<Rational> inner = parse_sum();
        skip_space();
        if (peek() != ')') fail("expected ')'");
        take();
        out = have ? out * inner : inner;
      } else if (isdigit(static_cast<unsigned char>(c)) && have) {
        out = out * ExtElement<Rational>::term(n_, Monomial{}, parse_rational());
      } else {
        if (!have) fail("expected a variable, '(' or a number");
        break;
      }
      have = true;
    }
    return out;
  }

  ExtElement<Rational> parse_variable() {
    take();  // 'e'
    if (!isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index");
    long idx = 0;
    while (isdigit(static_cast<unsigned char>(peek()))) idx = idx * 10 + (take() - '0');
    if (idx < 1 || idx > n_)
      fail("variable index out of range 1.." + std::to_string(n_));
    return ExtElement<Rational>::term(n_, Monomial::variable(static_cast<int>(idx)),
                                      Rational(1));
  }

  Rational parse_rational() {
    mpz_class num = parse_integer();
    skip_space();
    if (peek() == '/') {
      take();
      skip_space();
      if (!isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      mpz_class den = parse_integer();
      if (den == 0) fail("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  mpz_class parse_integer() {
    std::string digits;
    while (isdigit(static_cast<unsigned char>(peek()))) digits += take();
    return mpz_class(digits);
  }

  void skip_space() {
    while (pos_ < text_.size() && isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError("parse error at position " + std::to_string(pos_ + 1) + ": " + msg);
  }

  const std::string& text_;
  size_t pos_ = 0;
  int n_;
};

}  // namespace detail

/// Parses an exterior-algebra expression: sums of terms, each an optional
/// rational coefficient times '*'-separated factors; a factor is a variable
/// e<k> or a parenthesized expression.  Products expand with exterior signs.
inline ExtElement<Rational> parse_element(const std::string& text, int ambient_n) {
  return detail::ElementParser(text, ambient_n).parse();
}

/// Order syntax: lex | deglex | degrevlex, optionally ":i1,i2,..,in" listing
/// the variables from largest to smallest.
inline MonomialOrder parse_order(const std::string& text, int n) {
  std::string kind_s = text;
  std::string perm_s;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    kind_s = text.substr(0, colon);
    perm_s = text.substr(colon + 1);
  }
  OrderKind kind;
  if (kind_s == "lex") kind = OrderKind::lex;
  else if (kind_s == "deglex") kind = OrderKind::deglex;
  else if (kind_s == "degrevlex") kind = OrderKind::degrevlex;
  else throw UsageError("unknown order kind: " + kind_s);
  if (perm_s.empty()) return MonomialOrder(kind, n);
  std::vector<int> prio(n, -1);
  int rank = 0;
  std::string cur;
  for (char ch : perm_s + ",") {
    if (ch == ',') {
      if (cur.empty()) throw UsageError("empty entry in order permutation");
      int v = std::stoi(cur);
      cur.clear();
      if (v < 1 || v > n) throw UsageError("order permutation entry out of range");
      if (prio[v - 1] != -1) throw UsageError("duplicate entry in order permutation");
      prio[v - 1] = rank++;
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (rank != n) throw UsageError("order permutation must list all variables");
  return MonomialOrder(kind, std::move(prio));
}

}  // namespace extq
