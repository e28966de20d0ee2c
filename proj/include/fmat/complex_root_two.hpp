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

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>
#include <utility>

namespace fmat {

/** Arbitrary-precision rational, kept canonical (reduced, positive denominator). */
using Rational = boost::multiprecision::cpp_rational;

/**
 * An element of the field Q(i, √2), stored exactly as the canonical 4-tuple
 * (a, b, c, d) of rationals representing a + b·√2 + c·i + d·√2·i. The tuple is
 * a basis representation, so equality is component-wise and needs no
 * normalization beyond the rationals' own canonical form.
 *
 * Arithmetic uses √2·√2 = 2 and i·i = −1. The involution is complex
 * conjugation: conj(a, b, c, d) = (a, b, −c, −d). The constant
 * inv_sqrt2() = √2/2 satisfies 2·conj(s)·s = 1, which is what the
 * teleportation-base normalization requires.
 */
class ComplexRootTwo {
 public:
  static constexpr const char* semiring_name = "complex-root-two";

  ComplexRootTwo() = default;
  ComplexRootTwo(int n) : a_(n) {}
  ComplexRootTwo(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static ComplexRootTwo zero() { return ComplexRootTwo(); }
  static ComplexRootTwo one() { return ComplexRootTwo(1); }
  static ComplexRootTwo i() { return ComplexRootTwo(0, 0, 1, 0); }
  static ComplexRootTwo sqrt2() { return ComplexRootTwo(0, 1, 0, 0); }
  /** √2/2 = 1/√2, the Bell-base scalar. */
  static ComplexRootTwo inv_sqrt2() {
    return ComplexRootTwo(0, Rational(1, 2), 0, 0);
  }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  const Rational& imag_part() const { return c_; }
  const Rational& imag_sqrt2_part() const { return d_; }

  /** True for the additive identity.  Used to fast-path sparse arithmetic. */
  bool is_zero() const {
    return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
  }

  friend ComplexRootTwo operator+(const ComplexRootTwo& x,
                                  const ComplexRootTwo& y) {
    // Matrices here are mostly zeros (permutations, injections), and each
    // rational operation re-normalizes through a gcd; skipping zero operands
    // makes dense composition of such matrices cheap.
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    return ComplexRootTwo(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_);
  }
  friend ComplexRootTwo operator-(const ComplexRootTwo& x) {
    return ComplexRootTwo(-x.a_, -x.b_, -x.c_, -x.d_);
  }
  friend ComplexRootTwo operator-(const ComplexRootTwo& x,
                                  const ComplexRootTwo& y) {
    return x + (-y);
  }
  friend ComplexRootTwo operator*(const ComplexRootTwo& x,
                                  const ComplexRootTwo& y) {
    if (x.is_zero() || y.is_zero()) return ComplexRootTwo();
    // (x_re + i·x_im)(y_re + i·y_im) over Q(√2), with (a + b√2)(a' + b'√2)
    // = (aa' + 2bb') + (ab' + ba')√2.
    return ComplexRootTwo(
        x.a_ * y.a_ + 2 * x.b_ * y.b_ - x.c_ * y.c_ - 2 * x.d_ * y.d_,
        x.a_ * y.b_ + x.b_ * y.a_ - x.c_ * y.d_ - x.d_ * y.c_,
        x.a_ * y.c_ + x.c_ * y.a_ + 2 * (x.b_ * y.d_ + x.d_ * y.b_),
        x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_);
  }
  ComplexRootTwo& operator+=(const ComplexRootTwo& o) {
    if (o.is_zero()) return *this;
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
  }
  ComplexRootTwo& operator-=(const ComplexRootTwo& o) { return *this += -o; }
  ComplexRootTwo& operator*=(const ComplexRootTwo& o) {
    *this = *this * o;
    return *this;
  }

  friend ComplexRootTwo conj(const ComplexRootTwo& x) {
    return ComplexRootTwo(x.a_, x.b_, -x.c_, -x.d_);
  }

  friend bool operator==(const ComplexRootTwo& x, const ComplexRootTwo& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const ComplexRootTwo& x, const ComplexRootTwo& y) {
    return !(x == y);
  }

  /**
   * Renders in the grammar "a + b√2 + ci + d√2i": one signed term per nonzero
   * component, rationals as p/q, unit coefficients elided before a symbol
   * ("√2", not "1√2"). The zero element renders as "0".
   */
  std::string to_text() const {
    std::string out;
    append_term(out, a_, "");
    append_term(out, b_, "√2");
    append_term(out, c_, "i");
    append_term(out, d_, "√2i");
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const ComplexRootTwo& x) {
    return os << x.to_text();
  }

 private:
  static void append_term(std::string& out, const Rational& r,
                          const char* symbol) {
    if (r == 0) return;
    const bool negative = r < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-r) : r;
    if (mag != 1 || symbol[0] == '\0') out += mag.str();
    out += symbol;
  }

  Rational a_, b_, c_, d_;
};

}  // namespace fmat

namespace Eigen {
template <>
struct NumTraits<fmat::ComplexRootTwo>
    : GenericNumTraits<fmat::ComplexRootTwo> {
  typedef fmat::ComplexRootTwo Real;
  typedef fmat::ComplexRootTwo NonInteger;
  typedef fmat::ComplexRootTwo Nested;
  typedef fmat::ComplexRootTwo Literal;
  enum {
    // Conjugation is applied explicitly by the library (adjoint and friends),
    // never through Eigen's complex machinery, so IsComplex stays 0.
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return fmat::ComplexRootTwo(0); }
  static inline Real dummy_precision() { return fmat::ComplexRootTwo(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
