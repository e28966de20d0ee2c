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

#include "fmat/morphism.hpp"
#include "fmat/structural.hpp"

namespace fmat {

/** Unit of compact closure η_A : I → A* ⊗ A, the diagonal Σ ē_k ⊗ e_k. */
template <InvolutiveScalar S>
Morphism<S> eta(const Shape& a) {
  const Index n = a.dim();
  DenseMatrix<S> m = zero_matrix<S>(n * n, 1);
  for (Index k = 0; k < n; ++k) m(k * n + k, 0) = S(1);
  return Morphism<S>(Shape::unit(), Shape::tensor(Shape::dual(a), a),
                     std::move(m));
}

/** Counit of compact closure ε_A : A ⊗ A* → I. */
template <InvolutiveScalar S>
Morphism<S> epsilon(const Shape& a) {
  const Index n = a.dim();
  DenseMatrix<S> m = zero_matrix<S>(1, n * n);
  for (Index k = 0; k < n; ++k) m(0, k * n + k) = S(1);
  return Morphism<S>(Shape::tensor(a, Shape::dual(a)), Shape::unit(),
                     std::move(m));
}

/**
 * Name of f : A → B — the point ⌜f⌝ = (1_{A*} ⊗ f) ∘ η_A : I → A* ⊗ B.
 * Its vector entry at basis pair (i, j) (i a domain index, varying slowest)
 * is entry(j, i) of f.
 */
template <InvolutiveScalar S>
Morphism<S> name_of(const Morphism<S>& f) {
  return compose(tensor(identity<S>(Shape::dual(f.dom())), f),
                 eta<S>(f.dom()));
}

/** Coname of f : A → B — the copoint ⌞f⌟ = ε_B ∘ (f ⊗ 1_{B*}) : A ⊗ B* → I. */
template <InvolutiveScalar S>
Morphism<S> coname_of(const Morphism<S>& f) {
  return compose(epsilon<S>(f.cod()),
                 tensor(f, identity<S>(Shape::dual(f.cod()))));
}

/**
 * Inverse of name_of: recovers f : A → B from a point I → A* ⊗ B.
 * Throws ShapeError unless the codomain is a tensor (whose left factor is
 * read as A*) and the domain is I.
 */
template <InvolutiveScalar S>
Morphism<S> unname(const Morphism<S>& point) {
  if (point.dom() != Shape::unit() ||
      point.cod().kind() != Shape::Kind::tensor) {
    throw ShapeError("unname: expected a point I -> A* (x) B, got " +
                     point.dom().to_text() + " -> " + point.cod().to_text());
  }
  const Shape a = Shape::dual(point.cod().left());
  const Shape b = point.cod().right();
  const Index na = a.dim(), nb = b.dim();
  DenseMatrix<S> m(nb, na);
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < nb; ++j) m(j, i) = point.entry(i * nb + j, 0);
  }
  return Morphism<S>(a, b, std::move(m));
}

/**
 * Scalar action s•f, defined by conjugation with the left unitor:
 * λ_B⁻¹ ∘ (s ⊗ f) ∘ λ_A. Equals entrywise scaling (a tested law, not an
 * implementation shortcut).
 */
template <InvolutiveScalar S>
Morphism<S> scalar_action(const S& s, const Morphism<S>& f) {
  return compose(adjoint(lambda<S>(f.cod())),
                 compose(tensor(scalar_morphism<S>(s), f),
                         lambda<S>(f.dom())));
}

/** The unique entry of a 1×1 morphism (typically an endomorphism of I). */
template <InvolutiveScalar S>
S scalar_of(const Morphism<S>& m) {
  if (m.rows() != 1 || m.cols() != 1) {
    throw ShapeError("scalar_of: morphism is not 1x1");
  }
  return m.entry(0, 0);
}

/**
 * Inner product ⟨ψ|φ⟩ of two points ψ, φ : I → A, computed as the entry of
 * ψ† ∘ φ (the composite form through ε and conjugation is a tested law).
 */
template <InvolutiveScalar S>
S inner_product(const Morphism<S>& psi, const Morphism<S>& phi) {
  if (psi.dom() != Shape::unit() || phi.dom() != Shape::unit() ||
      psi.cod() != phi.cod()) {
    throw ShapeError("inner_product: expected two points with a common shape");
  }
  return scalar_of(compose(adjoint(psi), phi));
}

/** True when f† ∘ f and f ∘ f† are both identities (endpoint dims must agree). */
template <InvolutiveScalar S>
bool is_unitary(const Morphism<S>& f) {
  if (f.dom().dim() != f.cod().dim()) return false;
  return compose(adjoint(f), f) == identity<S>(f.dom()) &&
         compose(f, adjoint(f)) == identity<S>(f.cod());
}

template <InvolutiveScalar S>
bool is_self_adjoint(const Morphism<S>& f) {
  return f.dom() == f.cod() && f == adjoint(f);
}

template <InvolutiveScalar S>
bool is_projector(const Morphism<S>& f) {
  return is_self_adjoint(f) && compose(f, f) == f;
}

/** Scalar dimension ε_A ∘ σ_{A*,A} ∘ η_A (2 per qubit over a field; 1 in Rel). */
template <InvolutiveScalar S>
S dim_scalar(const Shape& a) {
  return scalar_of(compose(
      epsilon<S>(a), compose(sigma_tensor<S>(Shape::dual(a), a), eta<S>(a))));
}

}  // namespace fmat
