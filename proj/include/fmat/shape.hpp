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

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fmat/errors.hpp"

namespace fmat {

/**
 * An object of the matrix category: a finite tree over the leaves I (the
 * tensor unit, dimension 1) and Q (the qubit object, dimension 2) under the
 * binary constructors tensor (⊗), biproduct (⊕) and the unary dual (*).
 *
 * Duals are strictly involutive: dual(dual(A)) normalizes to A at
 * construction, so A** == A holds as shape equality. A dual contributes
 * nothing to linearization (same dimension and basis order as its child); it
 * participates only in typing.
 *
 * Shapes are immutable values with shared structure; copying is cheap.
 */
class Shape {
 public:
  enum class Kind { unit, qubit, tensor, biproduct, dual };

  /** The tensor unit I (dimension 1). */
  static Shape unit() { return Shape(unit_node()); }
  /** The qubit object Q (dimension 2). */
  static Shape qubit() { return Shape(qubit_node()); }
  static Shape tensor(const Shape& l, const Shape& r) {
    return Shape(std::make_shared<const Node>(
        Node{Kind::tensor, l.dim() * r.dim(), l.n_, r.n_}));
  }
  static Shape biproduct(const Shape& l, const Shape& r) {
    return Shape(std::make_shared<const Node>(
        Node{Kind::biproduct, l.dim() + r.dim(), l.n_, r.n_}));
  }
  /** Dual object; dual(dual(A)) collapses to A. */
  static Shape dual(const Shape& a) {
    if (a.kind() == Kind::dual) return Shape(a.n_->a);
    return Shape(
        std::make_shared<const Node>(Node{Kind::dual, a.dim(), a.n_, nullptr}));
  }

  Kind kind() const { return n_->kind; }
  std::int64_t dim() const { return n_->dim; }

  /** Left child of a tensor/biproduct node. */
  Shape left() const { return Shape(n_->a); }
  /** Right child of a tensor/biproduct node. */
  Shape right() const { return Shape(n_->b); }
  /** Child of a dual node. */
  Shape child() const { return Shape(n_->a); }

  friend bool operator==(const Shape& x, const Shape& y) {
    return equal(x.n_.get(), y.n_.get());
  }
  friend bool operator!=(const Shape& x, const Shape& y) { return !(x == y); }

  /**
   * Canonical rendering: "I", "Q", "(A * B)", "(A + B)", postfix "^" for
   * duals. Output of to_text() always re-parses to an equal shape.
   */
  std::string to_text() const {
    switch (kind()) {
      case Kind::unit:
        return "I";
      case Kind::qubit:
        return "Q";
      case Kind::tensor:
        return "(" + left().to_text() + " * " + right().to_text() + ")";
      case Kind::biproduct:
        return "(" + left().to_text() + " + " + right().to_text() + ")";
      case Kind::dual:
        return child().to_text() + "^";
    }
    return {};
  }

  /**
   * Parses the shape grammar. Accepts the canonical rendering and also
   * unparenthesized infix with the usual precedences ('*' binds tighter than
   * '+', both left-associative, postfix '^' tightest), e.g. "Q*Q^ + I".
   * Throws ParseError on malformed input.
   */
  static Shape parse(std::string_view text) {
    Parser p{text, 0};
    Shape s = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) {
      throw ParseError("unexpected trailing input in shape at offset " +
                       std::to_string(p.pos));
    }
    return s;
  }

 private:
  struct Node {
    Kind kind;
    std::int64_t dim;
    std::shared_ptr<const Node> a, b;
  };

  explicit Shape(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  static const std::shared_ptr<const Node>& unit_node() {
    static const auto n =
        std::make_shared<const Node>(Node{Kind::unit, 1, nullptr, nullptr});
    return n;
  }
  static const std::shared_ptr<const Node>& qubit_node() {
    static const auto n =
        std::make_shared<const Node>(Node{Kind::qubit, 2, nullptr, nullptr});
    return n;
  }

  static bool equal(const Node* x, const Node* y) {
    if (x == y) return true;
    if (x->kind != y->kind || x->dim != y->dim) return false;
    switch (x->kind) {
      case Kind::unit:
      case Kind::qubit:
        return true;
      case Kind::dual:
        return equal(x->a.get(), y->a.get());
      default:
        return equal(x->a.get(), y->a.get()) && equal(x->b.get(), y->b.get());
    }
  }

  struct Parser {
    std::string_view text;
    size_t pos;

    void skip_ws() {
      while (pos < text.size() &&
             (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) {
        ++pos;
      }
    }
    bool eat(char c) {
      skip_ws();
      if (pos < text.size() && text[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    Shape parse_sum() {
      Shape s = parse_product();
      while (eat('+')) s = Shape::biproduct(s, parse_product());
      return s;
    }
    Shape parse_product() {
      Shape s = parse_postfix();
      while (eat('*')) s = Shape::tensor(s, parse_postfix());
      return s;
    }
    Shape parse_postfix() {
      Shape s = parse_atom();
      while (eat('^')) s = Shape::dual(s);
      return s;
    }
    Shape parse_atom() {
      skip_ws();
      if (pos >= text.size()) throw ParseError("shape ended unexpectedly");
      const char c = text[pos];
      if (c == 'I') {
        ++pos;
        return Shape::unit();
      }
      if (c == 'Q') {
        ++pos;
        return Shape::qubit();
      }
      if (c == '(') {
        ++pos;
        Shape s = parse_sum();
        if (!eat(')')) {
          throw ParseError("expected ')' in shape at offset " +
                           std::to_string(pos));
        }
        return s;
      }
      throw ParseError(std::string("unexpected character '") + c +
                       "' in shape at offset " + std::to_string(pos));
    }
  };

  std::shared_ptr<const Node> n_;
};

/**
 * Address of one basis vector of a shape: a tree mirroring the shape with a
 * bit at each qubit leaf, a child pair at each tensor node and a tagged branch
 * at each biproduct node. Dual nodes are transparent — the path of dual(A) is
 * the path of A.
 */
class BasisPath {
 public:
  enum class Kind { unit, qubit, pair, side };

  static BasisPath unit() { return BasisPath(unit_node()); }
  static BasisPath qubit(int bit) {
    return BasisPath(std::make_shared<const Node>(
        Node{Kind::qubit, bit, false, nullptr, nullptr}));
  }
  static BasisPath pair(const BasisPath& l, const BasisPath& r) {
    return BasisPath(
        std::make_shared<const Node>(Node{Kind::pair, 0, false, l.n_, r.n_}));
  }
  static BasisPath side(bool is_right, const BasisPath& sub) {
    return BasisPath(std::make_shared<const Node>(
        Node{Kind::side, 0, is_right, sub.n_, nullptr}));
  }

  Kind kind() const { return n_->kind; }
  int bit() const { return n_->bit; }
  bool is_right() const { return n_->is_right; }
  BasisPath left() const { return BasisPath(n_->a); }
  BasisPath right() const { return BasisPath(n_->b); }
  BasisPath sub() const { return BasisPath(n_->a); }

  friend bool operator==(const BasisPath& x, const BasisPath& y) {
    return equal(x.n_.get(), y.n_.get());
  }
  friend bool operator!=(const BasisPath& x, const BasisPath& y) {
    return !(x == y);
  }

  /** "(l,r)" for pairs, "L"/"R" (":sub" when nontrivial) for branches. */
  std::string to_text() const {
    switch (kind()) {
      case Kind::unit:
        return "*";
      case Kind::qubit:
        return std::to_string(bit());
      case Kind::pair:
        return "(" + left().to_text() + "," + right().to_text() + ")";
      case Kind::side: {
        std::string tag = is_right() ? "R" : "L";
        if (sub().kind() != Kind::unit) tag += ":" + sub().to_text();
        return tag;
      }
    }
    return {};
  }

 private:
  struct Node {
    Kind kind;
    int bit;
    bool is_right;
    std::shared_ptr<const Node> a, b;
  };

  explicit BasisPath(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  static const std::shared_ptr<const Node>& unit_node() {
    static const auto n = std::make_shared<const Node>(
        Node{Kind::unit, 0, false, nullptr, nullptr});
    return n;
  }

  static bool equal(const Node* x, const Node* y) {
    if (x == y) return true;
    if (x->kind != y->kind) return false;
    switch (x->kind) {
      case Kind::unit:
        return true;
      case Kind::qubit:
        return x->bit == y->bit;
      case Kind::pair:
        return equal(x->a.get(), y->a.get()) && equal(x->b.get(), y->b.get());
      case Kind::side:
        return x->is_right == y->is_right && equal(x->a.get(), y->a.get());
    }
    return false;
  }

  std::shared_ptr<const Node> n_;
};

/**
 * Enumerates the basis of A in the canonical order that fixes the matrix
 * conventions everywhere else:
 *  - qubit: 0 then 1;
 *  - tensor: lexicographic with the left factor's index varying slowest;
 *  - biproduct: the whole left block, then the whole right block;
 *  - dual: the child's enumeration unchanged.
 * The list has exactly A.dim() entries and indexing it is the linearization
 * bijection.
 */
inline std::vector<BasisPath> linearize(const Shape& a) {
  switch (a.kind()) {
    case Shape::Kind::unit:
      return {BasisPath::unit()};
    case Shape::Kind::qubit:
      return {BasisPath::qubit(0), BasisPath::qubit(1)};
    case Shape::Kind::tensor: {
      std::vector<BasisPath> out;
      out.reserve(static_cast<size_t>(a.dim()));
      for (const BasisPath& l : linearize(a.left())) {
        for (const BasisPath& r : linearize(a.right())) {
          out.push_back(BasisPath::pair(l, r));
        }
      }
      return out;
    }
    case Shape::Kind::biproduct: {
      std::vector<BasisPath> out;
      out.reserve(static_cast<size_t>(a.dim()));
      for (const BasisPath& l : linearize(a.left())) {
        out.push_back(BasisPath::side(false, l));
      }
      for (const BasisPath& r : linearize(a.right())) {
        out.push_back(BasisPath::side(true, r));
      }
      return out;
    }
    case Shape::Kind::dual:
      return linearize(a.child());
  }
  return {};
}

/** Left-fold biproduct of a nonempty list: ((A1 ⊕ A2) ⊕ …) ⊕ An. */
inline Shape biproduct_fold(const std::vector<Shape>& summands) {
  if (summands.empty()) {
    throw ShapeError("biproduct_fold: empty summand list");
  }
  Shape acc = summands[0];
  for (size_t k = 1; k < summands.size(); ++k) {
    acc = Shape::biproduct(acc, summands[k]);
  }
  return acc;
}

/** n-fold biproduct of one shape (n ≥ 1), left-folded. */
inline Shape nfold_shape(int n, const Shape& a) {
  if (n < 1) throw ShapeError("nfold_shape: n must be positive");
  return biproduct_fold(std::vector<Shape>(static_cast<size_t>(n), a));
}

}  // namespace fmat
