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

#include <vector>

#include "fmat/morphism.hpp"
#include "fmat/shape.hpp"

namespace fmat {

// Structural isomorphisms. Every shape change in the library flows through
// one of these named constructors (or a composite of them); there is no
// generic retype operation. Each is a permutation matrix — the permutation
// induced on canonical basis indices by re-associating the basis path — and
// each is unitary, so its inverse is its adjoint. Under the left-major
// linearization, α, λ, ρ, υ, d, u and ν act as identity matrices with retyped
// endpoints; σ and τ genuinely permute.

namespace detail {
template <InvolutiveScalar S>
Morphism<S> permutation(const Shape& dom, const Shape& cod,
                        const std::vector<Index>& image) {
  DenseMatrix<S> m = zero_matrix<S>(cod.dim(), dom.dim());
  for (Index c = 0; c < dom.dim(); ++c) m(image[static_cast<size_t>(c)], c) = S(1);
  return Morphism<S>(dom, cod, std::move(m));
}

template <InvolutiveScalar S>
Morphism<S> retyped_identity(const Shape& dom, const Shape& cod) {
  return Morphism<S>(dom, cod, identity_matrix<S>(dom.dim()));
}
}  // namespace detail

/** Associator α : A ⊗ (B ⊗ C) → (A ⊗ B) ⊗ C. */
template <InvolutiveScalar S>
Morphism<S> alpha(const Shape& a, const Shape& b, const Shape& c) {
  return detail::retyped_identity<S>(
      Shape::tensor(a, Shape::tensor(b, c)),
      Shape::tensor(Shape::tensor(a, b), c));
}

/** Left unitor λ : A → I ⊗ A. */
template <InvolutiveScalar S>
Morphism<S> lambda(const Shape& a) {
  return detail::retyped_identity<S>(a, Shape::tensor(Shape::unit(), a));
}

/** Right unitor ρ : A → A ⊗ I. */
template <InvolutiveScalar S>
Morphism<S> rho(const Shape& a) {
  return detail::retyped_identity<S>(a, Shape::tensor(a, Shape::unit()));
}

/** Tensor symmetry σ : A ⊗ B → B ⊗ A. */
template <InvolutiveScalar S>
Morphism<S> sigma_tensor(const Shape& a, const Shape& b) {
  const Index da = a.dim(), db = b.dim();
  std::vector<Index> image(static_cast<size_t>(da * db));
  for (Index x = 0; x < da; ++x) {
    for (Index y = 0; y < db; ++y) {
      image[static_cast<size_t>(x * db + y)] = y * da + x;
    }
  }
  return detail::permutation<S>(Shape::tensor(a, b), Shape::tensor(b, a),
                                image);
}

/** Biproduct symmetry σ⊕ : A ⊕ B → B ⊕ A. */
template <InvolutiveScalar S>
Morphism<S> sigma_biproduct(const Shape& a, const Shape& b) {
  const Index da = a.dim(), db = b.dim();
  std::vector<Index> image(static_cast<size_t>(da + db));
  for (Index x = 0; x < da; ++x) image[static_cast<size_t>(x)] = db + x;
  for (Index y = 0; y < db; ++y) image[static_cast<size_t>(da + y)] = y;
  return detail::permutation<S>(Shape::biproduct(a, b), Shape::biproduct(b, a),
                                image);
}

/** Left distributor τ : A ⊗ (B ⊕ C) → (A ⊗ B) ⊕ (A ⊗ C). */
template <InvolutiveScalar S>
Morphism<S> tau_left(const Shape& a, const Shape& b, const Shape& c) {
  const Index da = a.dim(), db = b.dim(), dc = c.dim();
  std::vector<Index> image(static_cast<size_t>(da * (db + dc)));
  for (Index x = 0; x < da; ++x) {
    for (Index y = 0; y < db + dc; ++y) {
      const Index in = x * (db + dc) + y;
      image[static_cast<size_t>(in)] =
          y < db ? x * db + y : da * db + x * dc + (y - db);
    }
  }
  return detail::permutation<S>(
      Shape::tensor(a, Shape::biproduct(b, c)),
      Shape::biproduct(Shape::tensor(a, b), Shape::tensor(a, c)), image);
}

/** Right distributor υ : (A ⊕ B) ⊗ C → (A ⊗ C) ⊕ (B ⊗ C). */
template <InvolutiveScalar S>
Morphism<S> upsilon_right(const Shape& a, const Shape& b, const Shape& c) {
  return detail::retyped_identity<S>(
      Shape::tensor(Shape::biproduct(a, b), c),
      Shape::biproduct(Shape::tensor(a, c), Shape::tensor(b, c)));
}

/** Unit-sum collapse d : (n·I) ⊗ (m·I) → (nm)·I, block (i, j) ↦ i·m + j. */
template <InvolutiveScalar S>
Morphism<S> d_nm(int n, int m) {
  return detail::retyped_identity<S>(
      Shape::tensor(nfold_shape(n, Shape::unit()),
                    nfold_shape(m, Shape::unit())),
      nfold_shape(n * m, Shape::unit()));
}

/** u : I* → I. */
template <InvolutiveScalar S>
Morphism<S> u_unit() {
  return detail::retyped_identity<S>(Shape::dual(Shape::unit()),
                                     Shape::unit());
}

/** u⊗ : (A ⊗ B)* → A* ⊗ B*. */
template <InvolutiveScalar S>
Morphism<S> u_tensor(const Shape& a, const Shape& b) {
  return detail::retyped_identity<S>(
      Shape::dual(Shape::tensor(a, b)),
      Shape::tensor(Shape::dual(a), Shape::dual(b)));
}

/** ν : (A ⊕ B)* → A* ⊕ B*. */
template <InvolutiveScalar S>
Morphism<S> nu(const Shape& a, const Shape& b) {
  return detail::retyped_identity<S>(
      Shape::dual(Shape::biproduct(a, b)),
      Shape::biproduct(Shape::dual(a), Shape::dual(b)));
}

/** Biproduct injection q_i : A_i → A_1 ⊕ … ⊕ A_n (i is 0-based). */
template <InvolutiveScalar S>
Morphism<S> injection(size_t i, const std::vector<Shape>& summands) {
  if (i >= summands.size()) {
    throw ShapeError("injection: index " + std::to_string(i) +
                     " out of range for " + std::to_string(summands.size()) +
                     " summands");
  }
  const Shape whole = biproduct_fold(summands);
  Index offset = 0;
  for (size_t k = 0; k < i; ++k) offset += summands[k].dim();
  DenseMatrix<S> m = zero_matrix<S>(whole.dim(), summands[i].dim());
  for (Index r = 0; r < summands[i].dim(); ++r) m(offset + r, r) = S(1);
  return Morphism<S>(summands[i], whole, std::move(m));
}

/** Biproduct projection p_i : A_1 ⊕ … ⊕ A_n → A_i (i is 0-based). */
template <InvolutiveScalar S>
Morphism<S> projection(size_t i, const std::vector<Shape>& summands) {
  return adjoint(injection<S>(i, summands));
}

/**
 * n-ary left distributor A ⊗ (B_1 ⊕ … ⊕ B_n) → (A⊗B_1) ⊕ … ⊕ (A⊗B_n),
 * built as a composite of binary τ's over the left-folded sum.
 */
template <InvolutiveScalar S>
Morphism<S> tau_nary(const Shape& a, const std::vector<Shape>& summands) {
  if (summands.empty()) throw ShapeError("tau_nary: empty summand list");
  if (summands.size() == 1) {
    return identity<S>(Shape::tensor(a, summands[0]));
  }
  std::vector<Shape> init(summands.begin(), summands.end() - 1);
  const Shape left = biproduct_fold(init);
  const Shape last = summands.back();
  // A⊗(left ⊕ last) → (A⊗left) ⊕ (A⊗last), then recurse into A⊗left.
  const Morphism<S> split = tau_left<S>(a, left, last);
  const Morphism<S> rec = direct_sum(
      tau_nary<S>(a, init), identity<S>(Shape::tensor(a, last)));
  return compose(rec, split);
}

/**
 * n-ary right distributor (A_1 ⊕ … ⊕ A_n) ⊗ C → (A_1⊗C) ⊕ … ⊕ (A_n⊗C),
 * built as a composite of binary υ's over the left-folded sum.
 */
template <InvolutiveScalar S>
Morphism<S> upsilon_nary(const std::vector<Shape>& summands, const Shape& c) {
  if (summands.empty()) throw ShapeError("upsilon_nary: empty summand list");
  if (summands.size() == 1) {
    return identity<S>(Shape::tensor(summands[0], c));
  }
  std::vector<Shape> init(summands.begin(), summands.end() - 1);
  const Shape left = biproduct_fold(init);
  const Shape last = summands.back();
  const Morphism<S> split = upsilon_right<S>(left, last, c);
  const Morphism<S> rec = direct_sum(
      upsilon_nary<S>(init, c), identity<S>(Shape::tensor(last, c)));
  return compose(rec, split);
}

}  // namespace fmat
