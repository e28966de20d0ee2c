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

#include <concepts>
#include <string>

namespace fmat {

/**
 * Requirements on a scalar type usable as the entry semiring of the matrix
 * category: commutative semiring arithmetic (+, *), an involution `conj` that
 * fixes 0 and 1 and distributes over both operations, exact equality, and
 * construction from small integers (0 and 1 at minimum).
 *
 * Additive inverses are optional; scalar types without them simply do not
 * define unary minus, and ring-only code paths detect that at compile time
 * via `has_negation_v`.
 */
template <typename S>
concept InvolutiveScalar =
    std::regular<S> && std::constructible_from<S, int> &&
    requires(const S x, const S y) {
      { x + y } -> std::convertible_to<S>;
      { x * y } -> std::convertible_to<S>;
      { conj(x) } -> std::convertible_to<S>;
      { x.to_text() } -> std::convertible_to<std::string>;
    };

/** True when S has additive inverses (unary minus). */
template <typename S>
inline constexpr bool has_negation_v = requires(const S x) {
  { -x } -> std::convertible_to<S>;
};

}  // namespace fmat
