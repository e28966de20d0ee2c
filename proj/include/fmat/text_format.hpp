// Copyright 2026 The fmat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Textual input and output.
//
// Scalars render through their own to_text(); this header adds the inverse
// direction (a small expression grammar) plus renderers for whole morphisms
// and a parser for state vectors.
//
// Scalar expression grammar (whitespace between tokens is ignored):
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom
//   atom   := rational symbol? | symbol | 's' | '(' expr ')'
//   symbol := '√2i' | '√2' | 'i'           (ASCII aliases sqrt2i, sqrt2)
//   rational := digits ('/' digits)?
//
// A rational may be juxtaposed directly with a symbol ("3√2i", "1/2i"), which
// is how scalars render themselves, so rendering round-trips through parsing.
//
// 's' abbreviates the normalization scalar 1/√2.  Over the boolean semiring
// the only atoms are '0', '1' and 's' (which is 1 there), and '-' is
// rejected: the semiring has no negation.
//
// State grammar: '[' is not used; a state is "(c1, c2, ..., cn)" with one
// scalar expression per basis vector of the target shape, optionally
// prefixed by "scalar *" for an overall factor.

#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fmat/boolean.hpp"
#include "fmat/complex_root_two.hpp"
#include "fmat/compact.hpp"
#include "fmat/errors.hpp"
#include "fmat/morphism.hpp"

namespace fmat {

namespace detail {

template <InvolutiveScalar S>
class ScalarExprParser {
 public:
  explicit ScalarExprParser(std::string_view text) : text_(text) {}

  /** Parses the full input as one expression; rejects trailing input. */
  S parse_all() {
    S v = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input at offset " +
                       std::to_string(pos_) + " in scalar '" +
                       std::string(text_) + "'");
    }
    return v;
  }

  /** Parses one expression and stops (used inside larger grammars). */
  S parse_expr() {
    S v = parse_term();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        v += parse_term();
      } else if (peek('-')) {
        if constexpr (has_negation_v<S>) {
          eat('-');
          v += -parse_term();
        } else {
          throw ParseError(
              "'-' at offset " + std::to_string(pos_) +
              ": the boolean semiring has no negation");
        }
      } else {
        return v;
      }
    }
  }

 private:
  S parse_term() {
    S v = parse_factor();
    for (;;) {
      skip_ws();
      if (!eat('*')) return v;
      v *= parse_factor();
    }
  }

  S parse_factor() {
    skip_ws();
    if (peek('-')) {
      if constexpr (has_negation_v<S>) {
        eat('-');
        return -parse_factor();
      } else {
        throw ParseError("'-' at offset " + std::to_string(pos_) +
                         ": the boolean semiring has no negation");
      }
    }
    return parse_atom();
  }

  S parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of scalar input");
    }
    if (eat('(')) {
      S v = parse_expr();
      skip_ws();
      if (!eat(')')) {
        throw ParseError("expected ')' at offset " + std::to_string(pos_));
      }
      return v;
    }
    if (eat_word("\xE2\x88\x9A" "2i") || eat_word("sqrt2i")) {
      return root_two_atom() * imaginary_atom();
    }
    if (eat_word("\xE2\x88\x9A" "2") || eat_word("sqrt2")) {
      return root_two_atom();
    }
    if (peek_symbol('i')) {
      ++pos_;
      return imaginary_atom();
    }
    if (peek_symbol('s')) {
      ++pos_;
      if constexpr (std::is_same_v<S, ComplexRootTwo>) {
        return ComplexRootTwo::inv_sqrt2();
      } else {
        return S(1);  // over the boolean semiring the normalizer is 1
      }
    }
    if (is_digit(cur())) return rational_atom();
    throw ParseError("unexpected character '" + std::string(1, cur()) +
                     "' at offset " + std::to_string(pos_) + " in scalar");
  }

  S root_two_atom() {
    if constexpr (std::is_same_v<S, ComplexRootTwo>) {
      return ComplexRootTwo::sqrt2();
    } else {
      throw ParseError("'\xE2\x88\x9A" "2' is not an element of the boolean semiring");
    }
  }

  S imaginary_atom() {
    if constexpr (std::is_same_v<S, ComplexRootTwo>) {
      return ComplexRootTwo::i();
    } else {
      throw ParseError("'i' is not an element of the boolean semiring");
    }
  }

  S rational_atom() {
    const size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if constexpr (std::is_same_v<S, ComplexRootTwo>) {
      std::string denom;
      size_t save = pos_;
      if (eat('/')) {
        skip_ws();
        const size_t dstart = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        denom = std::string(text_.substr(dstart, pos_ - dstart));
        if (denom.empty() || denom.find_first_not_of('0') == std::string::npos) {
          pos_ = save;
          throw ParseError("expected a nonzero denominator at offset " +
                           std::to_string(pos_ + 1));
        }
      }
      Rational r(digits + (denom.empty() ? "" : "/" + denom));
      const S value(r, Rational(0), Rational(0), Rational(0));
      // A rational coefficient may be juxtaposed with its symbol, the way
      // scalars render: "3√2i", "1/2√2", "5i".
      if (eat_word("\xE2\x88\x9A" "2i") || eat_word("sqrt2i")) {
        return value * root_two_atom() * imaginary_atom();
      }
      if (eat_word("\xE2\x88\x9A" "2") || eat_word("sqrt2")) {
        return value * root_two_atom();
      }
      if (peek_symbol('i')) {
        ++pos_;
        return value * imaginary_atom();
      }
      return value;
    } else {
      if (digits == "0") return S(0);
      if (digits == "1") return S(1);
      throw ParseError("'" + digits +
                       "' is not a boolean scalar (only 0 and 1 exist)");
    }
  }

  char cur() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  /** True when c is at pos_ and not glued to a following word character. */
  bool peek_symbol(char c) const {
    if (!peek(c)) return false;
    const char nxt = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
    return !(is_digit(nxt) || (nxt >= 'a' && nxt <= 'z'));
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool eat_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace detail

/** Parses one scalar expression; the whole string must be consumed. */
template <InvolutiveScalar S>
S parse_scalar(std::string_view text) {
  detail::ScalarExprParser<S> p(text);
  return p.parse_all();
}

/**
 * Parses a state "(c1, ..., cn)" or "scalar * (c1, ..., cn)" into a point
 * I → a.  The component count must equal dim(a) (a ShapeError otherwise).
 */
template <InvolutiveScalar S>
Morphism<S> parse_state(std::string_view text, const Shape& a) {
  constexpr auto npos = std::string_view::npos;
  auto is_ws = [](char c) { return c == ' ' || c == '\t'; };

  // The component list is the trailing "( ... )" group; anything before it
  // must be "scalar *".  Working backwards from the final ')' avoids any
  // ambiguity with '*' as multiplication inside the prefix.
  size_t end = text.size();
  while (end > 0 && is_ws(text[end - 1])) --end;
  if (end == 0 || text[end - 1] != ')') {
    throw ParseError("a state must end with a parenthesized component list");
  }
  int depth = 0;
  size_t open = npos;
  for (size_t k = end; k-- > 0;) {
    if (text[k] == ')') {
      ++depth;
    } else if (text[k] == '(') {
      --depth;
      if (depth == 0) {
        open = k;
        break;
      }
    }
  }
  if (open == npos) {
    throw ParseError("unbalanced parentheses in state '" + std::string(text) +
                     "'");
  }

  S prefix = S(1);
  size_t pend = open;
  while (pend > 0 && is_ws(text[pend - 1])) --pend;
  if (pend > 0) {
    if (text[pend - 1] != '*') {
      throw ParseError("expected '*' between the overall scalar and the "
                       "component list in state '" + std::string(text) + "'");
    }
    prefix = parse_scalar<S>(text.substr(0, pend - 1));
  }

  std::string_view inside = text.substr(open + 1, (end - 1) - (open + 1));
  std::vector<S> components;
  size_t start = 0;
  depth = 0;
  for (size_t k = 0; k <= inside.size(); ++k) {
    if (k == inside.size() || (inside[k] == ',' && depth == 0)) {
      components.push_back(parse_scalar<S>(inside.substr(start, k - start)));
      start = k + 1;
    } else if (inside[k] == '(') {
      ++depth;
    } else if (inside[k] == ')') {
      --depth;
    }
  }

  if (static_cast<Index>(components.size()) != a.dim()) {
    throw ShapeError("state has " + std::to_string(components.size()) +
                     " components but shape " + a.to_text() + " has dimension " +
                     std::to_string(a.dim()));
  }
  DenseMatrix<S> m(a.dim(), 1);
  for (Index r = 0; r < a.dim(); ++r) {
    m(r, 0) = prefix * components[static_cast<size_t>(r)];
  }
  return Morphism<S>(Shape::unit(), a, std::move(m));
}

/**
 * Renders a morphism as a header line "dom -> cod" followed by one line per
 * codomain basis vector, entries separated by ", ".
 */
template <InvolutiveScalar S>
std::string render_morphism(const Morphism<S>& m) {
  std::string out = m.dom().to_text() + " -> " + m.cod().to_text();
  for (Index r = 0; r < m.rows(); ++r) {
    out += '\n';
    for (Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ", ";
      out += m.entry(r, c).to_text();
    }
  }
  return out;
}

template <InvolutiveScalar S>
std::ostream& operator<<(std::ostream& os, const Morphism<S>& m) {
  return os << render_morphism(m);
}

}  // namespace fmat
