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

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fmat/compact.hpp"
#include "fmat/morphism.hpp"
#include "fmat/structural.hpp"

namespace fmat {

/** A basis of A: a unitary n·I → A. The identity-entried one always exists. */
template <InvolutiveScalar S>
Morphism<S> canonical_basis(const Shape& a) {
  return Morphism<S>(nfold_shape(static_cast<int>(a.dim()), Shape::unit()), a,
                     identity_matrix<S>(a.dim()));
}

/** The computational qubit basis I ⊕ I → Q. */
template <InvolutiveScalar S>
Morphism<S> computational_qubit_basis() {
  return canonical_basis<S>(Shape::qubit());
}

/** Product basis (base_A ⊗ base_B) ∘ d⁻¹ : (nm)·I → A ⊗ B. */
template <InvolutiveScalar S>
Morphism<S> product_basis(const Morphism<S>& base_a,
                          const Morphism<S>& base_b) {
  const int n = static_cast<int>(base_a.dom().dim());
  const int m = static_cast<int>(base_b.dom().dim());
  return compose(tensor(base_a, base_b), adjoint(d_nm<S>(n, m)));
}

/**
 * A measurement context on A: a unitary U : A → A_1 ⊕ … ⊕ A_n. From it the
 * spectral data is materialized up front:
 *   point(j)     ψ_j = U† ∘ q_j : A_j → A,
 *   copoint(j)   π_j = p_j ∘ U  : A → A_j,
 *   projector(j) P_j = ψ_j ∘ π_j : A → A,
 * with the projector laws (self-adjoint, idempotent, mutually annihilating,
 * summing to the identity) holding by construction — and tested.
 */
template <InvolutiveScalar S>
class SpectralDecomposition {
 public:
  SpectralDecomposition(Morphism<S> u, std::vector<Shape> summands)
      : u_(std::move(u)), summands_(std::move(summands)) {
    if (summands_.empty()) {
      throw ShapeError("spectral decomposition needs at least one summand");
    }
    if (u_.cod() != biproduct_fold(summands_)) {
      throw ShapeError(
          "spectral decomposition: unitary codomain " + u_.cod().to_text() +
          " does not match summand fold " +
          biproduct_fold(summands_).to_text());
    }
    if (!is_unitary(u_)) {
      throw ShapeError("spectral decomposition: morphism is not unitary");
    }
    const Morphism<S> u_dag = adjoint(u_);
    for (size_t j = 0; j < summands_.size(); ++j) {
      points_.push_back(compose(u_dag, injection<S>(j, summands_)));
      copoints_.push_back(compose(projection<S>(j, summands_), u_));
      projectors_.push_back(compose(points_[j], copoints_[j]));
    }
  }

  const Shape& object() const { return u_.dom(); }
  size_t size() const { return summands_.size(); }
  const Morphism<S>& unitary() const { return u_; }
  const Shape& summand(size_t j) const { return summands_.at(j); }
  const std::vector<Shape>& summands() const { return summands_; }
  const Morphism<S>& point(size_t j) const { return points_.at(j); }
  const Morphism<S>& copoint(size_t j) const { return copoints_.at(j); }
  const Morphism<S>& projector(size_t j) const { return projectors_.at(j); }

 private:
  Morphism<S> u_;
  std::vector<Shape> summands_;
  std::vector<Morphism<S>> points_;
  std::vector<Morphism<S>> copoints_;
  std::vector<Morphism<S>> projectors_;
};

/** True when every branch of the decomposition is one-dimensional (all I). */
template <InvolutiveScalar S>
bool is_nondegenerate(const SpectralDecomposition<S>& sd) {
  for (size_t j = 0; j < sd.size(); ++j) {
    if (sd.summand(j) != Shape::unit()) return false;
  }
  return true;
}

/** Nondestructive measurement ⟨P_1, …, P_n⟩ : A → n·A. */
template <InvolutiveScalar S>
Morphism<S> nondestructive_measurement(const SpectralDecomposition<S>& sd) {
  std::vector<Morphism<S>> ps;
  for (size_t j = 0; j < sd.size(); ++j) ps.push_back(sd.projector(j));
  return tuple_of(ps);
}

/**
 * Destructive measurement (observation) ⟨π_1, …, π_n⟩ : A → n·I. Only defined
 * for nondegenerate decompositions; degenerate ones are rejected explicitly
 * rather than silently collapsed.
 */
template <InvolutiveScalar S>
Morphism<S> observation(const SpectralDecomposition<S>& sd) {
  if (!is_nondegenerate(sd)) {
    throw UnsupportedSemiringError(
        "observation: destructive measurement of a degenerate decomposition "
        "is not supported");
  }
  std::vector<Morphism<S>> ps;
  for (size_t j = 0; j < sd.size(); ++j) ps.push_back(sd.copoint(j));
  return tuple_of(ps);
}

/** A preparation is a point I → A of norm exactly one. */
template <InvolutiveScalar S>
bool is_preparation(const Morphism<S>& psi) {
  return psi.dom() == Shape::unit() && inner_product(psi, psi) == S(1);
}

template <InvolutiveScalar S>
struct BornBranch {
  size_t index = 0;
  /** Branch amplitude π_j ∘ ψ, present when the branch is one-dimensional. */
  std::optional<S> amplitude;
  /** Branch probability ⟨π_j ψ | π_j ψ⟩ = ψ† P_j ψ. */
  S probability = S(0);
};

/**
 * Born rule: branch probabilities of measuring the preparation ψ in the given
 * decomposition. Each probability equals its own involution and the list sums
 * to exactly 1 (tested laws).
 */
template <InvolutiveScalar S>
std::vector<BornBranch<S>> born(const SpectralDecomposition<S>& sd,
                                const Morphism<S>& psi) {
  if (!is_preparation(psi)) {
    throw ShapeError("born: state is not a preparation (norm must be 1)");
  }
  if (psi.cod() != sd.object()) {
    throw ShapeError("born: state shape " + psi.cod().to_text() +
                     " does not match measured object " +
                     sd.object().to_text());
  }
  std::vector<BornBranch<S>> out;
  for (size_t j = 0; j < sd.size(); ++j) {
    const Morphism<S> a_j = compose(sd.copoint(j), psi);
    BornBranch<S> b;
    b.index = j;
    if (sd.summand(j) == Shape::unit()) b.amplitude = scalar_of(a_j);
    b.probability = scalar_of(compose(adjoint(a_j), a_j));
    out.push_back(std::move(b));
  }
  return out;
}

/**
 * Entanglement projector of f : A → B — the endomorphism ⌜f⌝ ∘ ⌞f_*⌟ of
 * A* ⊗ B (the coname typechecks strictly because (B*)* = B). For unitary f
 * on Q it becomes a projector once weighted by s†s.
 */
template <InvolutiveScalar S>
Morphism<S> entanglement_projector(const Morphism<S>& f) {
  return compose(name_of(f), coname_of(conj_star(f)));
}

/** Integer dimension of A (the size of any basis n·I → A). */
inline std::int64_t dim_int(const Shape& a) { return a.dim(); }

}  // namespace fmat
