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
#include <random>
#include <vector>

#include "fmat/boolean.hpp"
#include "fmat/complex_root_two.hpp"
#include "fmat/quantum.hpp"

namespace fmat {

/**
 * Deterministic random source. std::mt19937_64 has a fully specified output
 * sequence, and draws go through plain modulo (std::uniform_int_distribution
 * is implementation-defined), so a seed reproduces byte-identical runs on any
 * platform.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /** Uniform-ish pick in [0, n); modulo bias is irrelevant at these sizes. */
  size_t pick(size_t n) { return static_cast<size_t>(eng_() % n); }
  bool coin() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

/** Entry pool for random morphisms: {0, 1, −1, i, s} over Q(i,√2); {0, 1} in Rel. */
template <InvolutiveScalar S>
const std::vector<S>& scalar_pool() {
  static const std::vector<S> pool = [] {
    if constexpr (has_negation_v<S>) {
      return std::vector<S>{S(0), S(1), -S(1), ComplexRootTwo::i(),
                            ComplexRootTwo::inv_sqrt2()};
    } else {
      return std::vector<S>{S(0), S(1)};
    }
  }();
  return pool;
}

template <InvolutiveScalar S>
S random_scalar(Rng& rng) {
  const auto& pool = scalar_pool<S>();
  return pool[rng.pick(pool.size())];
}

/** Random morphism with entries drawn uniformly from the scalar pool. */
template <InvolutiveScalar S>
Morphism<S> random_morphism(Rng& rng, const Shape& dom, const Shape& cod) {
  DenseMatrix<S> m(cod.dim(), dom.dim());
  for (Index r = 0; r < cod.dim(); ++r) {
    for (Index c = 0; c < dom.dim(); ++c) m(r, c) = random_scalar<S>(rng);
  }
  return Morphism<S>(dom, cod, std::move(m));
}

/** A fixed pool of small shapes (dimension ≤ max_dim) for property tests. */
inline std::vector<Shape> small_shape_pool(int max_dim) {
  const Shape i = Shape::unit(), q = Shape::qubit();
  std::vector<Shape> all = {
      i,
      q,
      Shape::dual(q),
      Shape::biproduct(i, i),
      Shape::biproduct(q, i),
      Shape::biproduct(i, q),
      Shape::dual(Shape::biproduct(q, i)),
      Shape::biproduct(q, q),
      Shape::tensor(q, q),
      Shape::tensor(q, Shape::dual(q)),
      Shape::tensor(Shape::biproduct(i, i), q),
      Shape::dual(Shape::tensor(q, q)),
      Shape::tensor(q, Shape::tensor(q, q)),
      Shape::biproduct(Shape::tensor(q, q), q),
  };
  std::vector<Shape> out;
  for (const Shape& s : all) {
    if (s.dim() <= max_dim) out.push_back(s);
  }
  return out;
}

inline Shape random_shape(Rng& rng, int max_dim) {
  const std::vector<Shape> pool = small_shape_pool(max_dim);
  return pool[rng.pick(pool.size())];
}

namespace detail {

/** Random permutation morphism on A (Fisher–Yates over basis indices). */
template <InvolutiveScalar S>
Morphism<S> random_permutation(Rng& rng, const Shape& a) {
  const Index n = a.dim();
  std::vector<Index> perm(static_cast<size_t>(n));
  for (Index k = 0; k < n; ++k) perm[static_cast<size_t>(k)] = k;
  for (Index k = n - 1; k > 0; --k) {
    std::swap(perm[static_cast<size_t>(k)],
              perm[rng.pick(static_cast<size_t>(k + 1))]);
  }
  DenseMatrix<S> m = zero_matrix<S>(n, n);
  for (Index c = 0; c < n; ++c) m(perm[static_cast<size_t>(c)], c) = S(1);
  return Morphism<S>(a, a, std::move(m));
}

}  // namespace detail

/**
 * Random unitary on A from the test subgroup: a product of permutations,
 * diagonal phase matrices over {±1, ±i} and (where the semiring has
 * negation) 2×2 Hadamard-like blocks s•[[1,1],[1,−1]] on adjacent index
 * pairs. Over the Boolean semiring the subgroup degenerates to permutations,
 * which are in fact all the Boolean unitaries.
 */
template <InvolutiveScalar S>
Morphism<S> random_unitary(Rng& rng, const Shape& a) {
  const Index n = a.dim();
  Morphism<S> acc = identity<S>(a);
  const int factors = 3 + static_cast<int>(rng.pick(4));
  const size_t nchoices = has_negation_v<S> ? (n >= 2 ? 3u : 2u) : 1u;
  for (int t = 0; t < factors; ++t) {
    const size_t choice = rng.pick(nchoices);
    if (choice == 0) {
      acc = compose(detail::random_permutation<S>(rng, a), acc);
    } else if constexpr (has_negation_v<S>) {
      if (choice == 1) {
        // Diagonal phases from {1, −1, i, −i}.
        DenseMatrix<S> m = zero_matrix<S>(n, n);
        const S phases[4] = {S(1), -S(1), ComplexRootTwo::i(),
                             -ComplexRootTwo::i()};
        for (Index k = 0; k < n; ++k) m(k, k) = phases[rng.pick(4)];
        acc = compose(Morphism<S>(a, a, std::move(m)), acc);
      } else {
        // Hadamard-like block at a random adjacent pair.
        const S s = ComplexRootTwo::inv_sqrt2();
        DenseMatrix<S> m = identity_matrix<S>(n);
        const Index at = static_cast<Index>(rng.pick(static_cast<size_t>(n - 1)));
        m(at, at) = s;
        m(at, at + 1) = s;
        m(at + 1, at) = s;
        m(at + 1, at + 1) = -s;
        acc = compose(Morphism<S>(a, a, std::move(m)), acc);
      }
    }
  }
  return acc;
}

/**
 * Random unitary A → B between equal-dimension shapes: a subgroup unitary on
 * A followed by a basis-relabeling permutation into B.
 */
template <InvolutiveScalar S>
Morphism<S> random_unitary_between(Rng& rng, const Shape& a, const Shape& b) {
  if (a.dim() != b.dim()) {
    throw ShapeError("random_unitary_between: dimensions differ");
  }
  const Morphism<S> relabel(a, b, identity_matrix<S>(a.dim()));
  return compose(relabel, random_unitary<S>(rng, a));
}

/** Random preparation on A: U ∘ q_0 for a random unitary U : n·I → A. */
template <InvolutiveScalar S>
Morphism<S> random_preparation(Rng& rng, const Shape& a) {
  const int n = static_cast<int>(a.dim());
  const std::vector<Shape> units(static_cast<size_t>(n), Shape::unit());
  const Morphism<S> u =
      random_unitary_between<S>(rng, nfold_shape(n, Shape::unit()), a);
  return compose(u, injection<S>(rng.pick(static_cast<size_t>(n)), units));
}

/**
 * Random spectral decomposition of A: a random summand partition of dim(A)
 * into I's and Q's and a random subgroup unitary onto its fold.
 */
template <InvolutiveScalar S>
SpectralDecomposition<S> random_spectral(Rng& rng, const Shape& a) {
  std::vector<Shape> summands;
  Index remaining = a.dim();
  while (remaining > 0) {
    if (remaining >= 2 && rng.coin()) {
      summands.push_back(Shape::qubit());
      remaining -= 2;
    } else {
      summands.push_back(Shape::unit());
      remaining -= 1;
    }
  }
  const Morphism<S> u =
      random_unitary_between<S>(rng, a, biproduct_fold(summands));
  return SpectralDecomposition<S>(u, summands);
}

}  // namespace fmat
