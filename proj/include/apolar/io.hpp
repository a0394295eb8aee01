#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>

#include "apolar/poly.hpp"

namespace apolar {

// Grammar:
//   poly   := ["-"] term (("+"|"-") term)*
//   term   := coeff? factor ("*"? factor)*  |  coeff
//   factor := ("x"|"X") index ("^" exponent)?
//   coeff  := integer | integer "/" integer
// Whitespace insignificant; "*" optional between coefficient and factors.
// Variable case must be uniform and selects ring (x) vs dual (X) context.

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& text, FieldSpec field, std::optional<int> n_vars)
      : s_(text), field_(field), n_vars_override_(n_vars) {}

  Poly run() {
    struct RawTerm {
      FieldElem coeff;
      std::vector<std::pair<int, int>> factors;  // (1-based index, exponent)
    };
    std::vector<RawTerm> raw;
    int max_index = 0;

    skip_ws();
    bool neg = accept('-');
    if (!neg) accept('+');
    for (;;) {
      RawTerm t{parse_term(), {}};
      t.factors = factors_;
      if (neg) t.coeff = -t.coeff;
      for (auto& [idx, e] : t.factors) max_index = std::max(max_index, idx);
      raw.push_back(std::move(t));
      skip_ws();
      if (pos_ >= s_.size()) break;
      if (accept('+')) {
        neg = false;
      } else if (accept('-')) {
        neg = true;
      } else {
        throw ParseError("expected '+' or '-'", pos_);
      }
    }

    int n = n_vars_override_.value_or(std::max(max_index, 1));
    if (max_index > n)
      throw ParseError("variable index " + std::to_string(max_index) + " exceeds --nvars", 0);
    VarContext ctx{n, role_.value_or(VarRole::ring)};
    Poly p(ctx, field_);
    for (auto& t : raw) {
      ExponentVector e(n, 0);
      for (auto& [idx, exp] : t.factors) e[idx - 1] += exp;
      p.add_term(e, t.coeff);
    }
    return p;
  }

 private:
  FieldElem parse_term() {
    factors_.clear();
    skip_ws();
    FieldElem c = FieldElem::one(field_);
    bool saw_anything = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      c = parse_coeff();
      saw_anything = true;
      skip_ws();
      accept('*');
    }
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char ch = s_[pos_];
      if (ch == 'x' || ch == 'X') {
        parse_factor();
        saw_anything = true;
        skip_ws();
        accept('*');
        continue;
      }
      break;
    }
    if (!saw_anything) throw ParseError("expected a term", pos_);
    return c;
  }

  FieldElem parse_coeff() {
    Int num = parse_integer();
    skip_ws();
    if (accept('/')) {
      skip_ws();
      Int den = parse_integer();
      if (den == 0) throw ParseError("zero denominator", pos_);
      return FieldElem::from_fraction(field_, num, den);
    }
    return FieldElem(field_, Rat(num));
  }

  Int parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return Int(s_.substr(start, pos_ - start));
  }

  void parse_factor() {
    char ch = s_[pos_];
    VarRole role = ch == 'x' ? VarRole::ring : VarRole::dual;
    if (role_ && *role_ != role) throw ParseError("mixed-case variables", pos_);
    role_ = role;
    ++pos_;
    std::size_t at = pos_;
    Int idx = parse_integer();
    if (idx == 0) throw ParseError("variables are 1-indexed", at);
    if (idx > 4096) throw ParseError("variable index too large", at);
    int exponent = 1;
    skip_ws();
    if (accept('^')) {
      skip_ws();
      Int e = parse_integer();
      if (e > 100000) throw ParseError("exponent too large", pos_);
      exponent = static_cast<int>(e);
    }
    factors_.emplace_back(static_cast<int>(idx), exponent);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& s_;
  FieldSpec field_;
  std::optional<int> n_vars_override_;
  std::size_t pos_ = 0;
  std::optional<VarRole> role_;
  std::vector<std::pair<int, int>> factors_;
};

}  // namespace detail

inline Poly parse_poly(const std::string& text, FieldSpec field,
                       std::optional<int> n_vars = std::nullopt) {
  std::string stripped;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
  if (stripped == "0" || stripped == "-0") {
    int n = n_vars.value_or(1);
    return Poly::zero(VarContext{n, VarRole::ring}, field);
  }
  return detail::PolyParser(text, field, n_vars).run();
}

/// Canonical text form: terms in graded-lex order (degree ascending, then
/// lex with x1 > x2 > ...).  parse(format(f)) == f.
inline std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  char letter = f.context().role == VarRole::ring ? 'x' : 'X';
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rat v = c.value();
    bool neg = v < 0;
    Rat mag = neg ? Rat(-v) : v;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;

    std::string coeff_str;
    {
      std::ostringstream cs;
      cs << numerator(mag).str();
      if (denominator(mag) != 1) cs << "/" << denominator(mag).str();
      coeff_str = cs.str();
    }
    bool has_vars = total_degree(e) > 0;
    if (!has_vars) {
      out << coeff_str;
      continue;
    }
    bool printed = false;
    if (mag != 1) {
      out << coeff_str;
      printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) out << "*";
      out << letter << (i + 1);
      if (e[i] > 1) out << "^" << e[i];
      printed = true;
    }
  }
  return out.str();
}

}  // namespace apolar
