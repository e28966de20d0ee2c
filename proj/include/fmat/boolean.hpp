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

#include <ostream>
#include <string>

#include "fmat/errors.hpp"

namespace fmat {

/**
 * The two-element Boolean semiring {0, 1} with + = OR and * = AND, so
 * 1 + 1 = 1. Matrices over it are relations. The involution is the identity.
 *
 * There are no additive inverses: unary minus is not defined, and attempting
 * to build the element "-1" (or any integer outside {0, 1}) raises
 * UnsupportedSemiringError rather than silently wrapping.
 */
class BooleanScalar {
 public:
  static constexpr const char* semiring_name = "boolean";

  BooleanScalar() = default;
  BooleanScalar(int n) : v_(n != 0) {
    if (n != 0 && n != 1) {
      throw UnsupportedSemiringError("boolean semiring has no element " +
                                     std::to_string(n));
    }
  }

  static BooleanScalar zero() { return BooleanScalar(0); }
  static BooleanScalar one() { return BooleanScalar(1); }

  bool value() const { return v_; }

  friend BooleanScalar operator+(BooleanScalar x, BooleanScalar y) {
    return make(x.v_ || y.v_);
  }
  friend BooleanScalar operator*(BooleanScalar x, BooleanScalar y) {
    return make(x.v_ && y.v_);
  }
  BooleanScalar& operator+=(BooleanScalar o) {
    v_ = v_ || o.v_;
    return *this;
  }
  BooleanScalar& operator*=(BooleanScalar o) {
    v_ = v_ && o.v_;
    return *this;
  }

  friend BooleanScalar conj(BooleanScalar x) { return x; }

  friend bool operator==(BooleanScalar x, BooleanScalar y) {
    return x.v_ == y.v_;
  }
  friend bool operator!=(BooleanScalar x, BooleanScalar y) {
    return x.v_ != y.v_;
  }

  std::string to_text() const { return v_ ? "1" : "0"; }

  friend std::ostream& operator<<(std::ostream& os, BooleanScalar x) {
    return os << x.to_text();
  }

 private:
  static BooleanScalar make(bool v) {
    BooleanScalar s;
    s.v_ = v;
    return s;
  }

  bool v_ = false;
};

}  // namespace fmat

namespace Eigen {
template <>
struct NumTraits<fmat::BooleanScalar> : GenericNumTraits<fmat::BooleanScalar> {
  typedef fmat::BooleanScalar Real;
  typedef fmat::BooleanScalar NonInteger;
  typedef fmat::BooleanScalar Nested;
  typedef fmat::BooleanScalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };
  static inline Real epsilon() { return fmat::BooleanScalar(0); }
  static inline Real dummy_precision() { return fmat::BooleanScalar(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
