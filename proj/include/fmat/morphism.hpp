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

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fmat/scalar.hpp"
#include "fmat/shape.hpp"

namespace fmat {

using Index = std::int64_t;

template <InvolutiveScalar S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <InvolutiveScalar S>
DenseMatrix<S> zero_matrix(Index rows, Index cols) {
  DenseMatrix<S> m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = S(0);
  }
  return m;
}

template <InvolutiveScalar S>
DenseMatrix<S> identity_matrix(Index n) {
  DenseMatrix<S> m = zero_matrix<S>(n, n);
  for (Index k = 0; k < n; ++k) m(k, k) = S(1);
  return m;
}

/**
 * A morphism A → B of the matrix category: a pair of endpoint shapes plus a
 * dense dim(B) × dim(A) matrix over the scalar semiring. entry(r, c) is the
 * coefficient of the r-th basis vector of the codomain in the image of the
 * c-th basis vector of the domain, with basis order fixed by linearize().
 *
 * Composition is matrix product; there is no implicit retyping anywhere —
 * every shape change goes through a named constructor (see structural.hpp).
 */
template <InvolutiveScalar S>
class Morphism {
 public:
  Morphism(Shape dom, Shape cod, DenseMatrix<S> entries)
      : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(entries)) {
    if (m_.rows() != cod_.dim() || m_.cols() != dom_.dim()) {
      throw ShapeError("morphism entries are " + std::to_string(m_.rows()) +
                       "x" + std::to_string(m_.cols()) +
                       " but shapes demand " + std::to_string(cod_.dim()) +
                       "x" + std::to_string(dom_.dim()) + " for " +
                       dom_.to_text() + " -> " + cod_.to_text());
    }
  }

  /** Convenience: build from row-major entry lists. */
  Morphism(Shape dom, Shape cod,
           std::initializer_list<std::initializer_list<S>> rows)
      : Morphism(std::move(dom), std::move(cod), from_rows(rows)) {}

  const Shape& dom() const { return dom_; }
  const Shape& cod() const { return cod_; }
  const DenseMatrix<S>& entries() const { return m_; }
  const S& entry(Index r, Index c) const { return m_(r, c); }
  Index rows() const { return m_.rows(); }
  Index cols() const { return m_.cols(); }

  friend bool operator==(const Morphism& f, const Morphism& g) {
    if (f.dom_ != g.dom_ || f.cod_ != g.cod_) return false;
    for (Index r = 0; r < f.m_.rows(); ++r) {
      for (Index c = 0; c < f.m_.cols(); ++c) {
        if (!(f.m_(r, c) == g.m_(r, c))) return false;
      }
    }
    return true;
  }
  friend bool operator!=(const Morphism& f, const Morphism& g) {
    return !(f == g);
  }

 private:
  static DenseMatrix<S> from_rows(
      std::initializer_list<std::initializer_list<S>> rows) {
    const Index nr = static_cast<Index>(rows.size());
    const Index nc = nr == 0 ? 0 : static_cast<Index>(rows.begin()->size());
    DenseMatrix<S> m(nr, nc);
    Index r = 0;
    for (const auto& row : rows) {
      if (static_cast<Index>(row.size()) != nc) {
        throw ShapeError("ragged entry rows");
      }
      Index c = 0;
      for (const S& x : row) m(r, c++) = x;
      ++r;
    }
    return m;
  }

  Shape dom_;
  Shape cod_;
  DenseMatrix<S> m_;
};

/** Identity morphism on A. */
template <InvolutiveScalar S>
Morphism<S> identity(const Shape& a) {
  return Morphism<S>(a, a, identity_matrix<S>(a.dim()));
}

/** The zero morphism A → B. */
template <InvolutiveScalar S>
Morphism<S> zero_morphism(const Shape& dom, const Shape& cod) {
  return Morphism<S>(dom, cod, zero_matrix<S>(cod.dim(), dom.dim()));
}

/** A scalar as an endomorphism of the tensor unit I. */
template <InvolutiveScalar S>
Morphism<S> scalar_morphism(const S& s) {
  DenseMatrix<S> m(1, 1);
  m(0, 0) = s;
  return Morphism<S>(Shape::unit(), Shape::unit(), m);
}

/** f ∘ g — f after g. Requires g.cod() == f.dom() exactly. */
template <InvolutiveScalar S>
Morphism<S> compose(const Morphism<S>& f, const Morphism<S>& g) {
  if (g.cod() != f.dom()) {
    throw ShapeError("compose: middle shapes differ: " + g.cod().to_text() +
                     " vs " + f.dom().to_text());
  }
  return Morphism<S>(g.dom(), f.cod(), f.entries() * g.entries());
}

/** Composes a chain in application order: pipeline({f1, f2, f3}) = f3∘f2∘f1. */
template <InvolutiveScalar S>
Morphism<S> pipeline(const std::vector<Morphism<S>>& stages) {
  if (stages.empty()) throw ShapeError("pipeline: empty stage list");
  Morphism<S> acc = stages[0];
  for (size_t k = 1; k < stages.size(); ++k) acc = compose(stages[k], acc);
  return acc;
}

/**
 * Tensor (Kronecker) product, in the same left-major order as linearize():
 * entry at (rf·rows(g)+rg, cf·cols(g)+cg) is f(rf,cf)·g(rg,cg).
 */
template <InvolutiveScalar S>
Morphism<S> tensor(const Morphism<S>& f, const Morphism<S>& g) {
  const Index fr = f.rows(), fc = f.cols(), gr = g.rows(), gc = g.cols();
  DenseMatrix<S> m(fr * gr, fc * gc);
  for (Index rf = 0; rf < fr; ++rf) {
    for (Index cf = 0; cf < fc; ++cf) {
      for (Index rg = 0; rg < gr; ++rg) {
        for (Index cg = 0; cg < gc; ++cg) {
          m(rf * gr + rg, cf * gc + cg) = f.entry(rf, cf) * g.entry(rg, cg);
        }
      }
    }
  }
  return Morphism<S>(Shape::tensor(f.dom(), g.dom()),
                     Shape::tensor(f.cod(), g.cod()), std::move(m));
}

/** Biproduct of morphisms: block diagonal, (A⊕C) → (B⊕D). */
template <InvolutiveScalar S>
Morphism<S> direct_sum(const Morphism<S>& f, const Morphism<S>& g) {
  DenseMatrix<S> m = zero_matrix<S>(f.rows() + g.rows(), f.cols() + g.cols());
  for (Index r = 0; r < f.rows(); ++r) {
    for (Index c = 0; c < f.cols(); ++c) m(r, c) = f.entry(r, c);
  }
  for (Index r = 0; r < g.rows(); ++r) {
    for (Index c = 0; c < g.cols(); ++c) {
      m(f.rows() + r, f.cols() + c) = g.entry(r, c);
    }
  }
  return Morphism<S>(Shape::biproduct(f.dom(), g.dom()),
                     Shape::biproduct(f.cod(), g.cod()), std::move(m));
}

/** Biproduct of a nonempty list of morphisms, left-folded like the shapes. */
template <InvolutiveScalar S>
Morphism<S> direct_sum_of(const std::vector<Morphism<S>>& fs) {
  if (fs.empty()) throw ShapeError("direct_sum_of: empty list");
  Morphism<S> acc = fs[0];
  for (size_t k = 1; k < fs.size(); ++k) acc = direct_sum(acc, fs[k]);
  return acc;
}

/** n-fold biproduct of one morphism, matching nfold_shape's left fold. */
template <InvolutiveScalar S>
Morphism<S> nfold(int n, const Morphism<S>& f) {
  if (n < 1) throw ShapeError("nfold: n must be positive");
  Morphism<S> acc = f;
  for (int k = 1; k < n; ++k) acc = direct_sum(acc, f);
  return acc;
}

/** Pairing ⟨f1, …, fn⟩ : A → B1 ⊕ … ⊕ Bn of morphisms with a common domain. */
template <InvolutiveScalar S>
Morphism<S> tuple_of(const std::vector<Morphism<S>>& fs) {
  if (fs.empty()) throw ShapeError("tuple_of: empty list");
  std::vector<Shape> cods;
  Index rows = 0;
  for (const auto& f : fs) {
    if (f.dom() != fs[0].dom()) {
      throw ShapeError("tuple_of: domains differ: " + f.dom().to_text() +
                       " vs " + fs[0].dom().to_text());
    }
    cods.push_back(f.cod());
    rows += f.rows();
  }
  DenseMatrix<S> m(rows, fs[0].cols());
  Index at = 0;
  for (const auto& f : fs) {
    for (Index r = 0; r < f.rows(); ++r) {
      for (Index c = 0; c < f.cols(); ++c) m(at + r, c) = f.entry(r, c);
    }
    at += f.rows();
  }
  return Morphism<S>(fs[0].dom(), biproduct_fold(cods), std::move(m));
}

/** Copairing [f1, …, fn] : A1 ⊕ … ⊕ An → B of morphisms with a common codomain. */
template <InvolutiveScalar S>
Morphism<S> cotuple_of(const std::vector<Morphism<S>>& fs) {
  if (fs.empty()) throw ShapeError("cotuple_of: empty list");
  std::vector<Shape> doms;
  Index cols = 0;
  for (const auto& f : fs) {
    if (f.cod() != fs[0].cod()) {
      throw ShapeError("cotuple_of: codomains differ: " + f.cod().to_text() +
                       " vs " + fs[0].cod().to_text());
    }
    doms.push_back(f.dom());
    cols += f.cols();
  }
  DenseMatrix<S> m(fs[0].rows(), cols);
  Index at = 0;
  for (const auto& f : fs) {
    for (Index r = 0; r < f.rows(); ++r) {
      for (Index c = 0; c < f.cols(); ++c) m(r, at + c) = f.entry(r, c);
    }
    at += f.cols();
  }
  return Morphism<S>(biproduct_fold(doms), fs[0].cod(), std::move(m));
}

/** Pointwise sum of parallel morphisms. */
template <InvolutiveScalar S>
Morphism<S> add(const Morphism<S>& f, const Morphism<S>& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw ShapeError("add: endpoints differ");
  }
  return Morphism<S>(f.dom(), f.cod(), DenseMatrix<S>(f.entries() + g.entries()));
}

/** Adjoint f† : B → A — conjugate transpose. */
template <InvolutiveScalar S>
Morphism<S> adjoint(const Morphism<S>& f) {
  DenseMatrix<S> m(f.cols(), f.rows());
  for (Index r = 0; r < f.rows(); ++r) {
    for (Index c = 0; c < f.cols(); ++c) m(c, r) = conj(f.entry(r, c));
  }
  return Morphism<S>(f.cod(), f.dom(), std::move(m));
}

/** Dual f* : B* → A* — plain transpose with dualized endpoints. */
template <InvolutiveScalar S>
Morphism<S> dual(const Morphism<S>& f) {
  DenseMatrix<S> m(f.cols(), f.rows());
  for (Index r = 0; r < f.rows(); ++r) {
    for (Index c = 0; c < f.cols(); ++c) m(c, r) = f.entry(r, c);
  }
  return Morphism<S>(Shape::dual(f.cod()), Shape::dual(f.dom()), std::move(m));
}

/**
 * Covariant conjugation f_* : A* → B* — entrywise involution with dualized
 * endpoints (no transpose).
 */
template <InvolutiveScalar S>
Morphism<S> conj_star(const Morphism<S>& f) {
  DenseMatrix<S> m(f.rows(), f.cols());
  for (Index r = 0; r < f.rows(); ++r) {
    for (Index c = 0; c < f.cols(); ++c) m(r, c) = conj(f.entry(r, c));
  }
  return Morphism<S>(Shape::dual(f.dom()), Shape::dual(f.cod()), std::move(m));
}

}  // namespace fmat
