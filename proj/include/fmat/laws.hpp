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

// The algebraic law suite.
//
// Each law is a runnable property: it draws random morphisms over the active
// scalar semiring, builds both sides of an identity out of the library's
// structural and compact-closed operations, and compares them entry by entry
// with exact arithmetic.  The suite powers the unit tests, the `lemmas` CLI
// command, and the acceptance gate, so a law's name is part of the public
// surface: keep names stable.
//
// Every law here holds over any involutive semiring, so the whole suite runs
// over both the boolean scalars and the ℚ(i,√2) scalars.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fmat/compact.hpp"
#include "fmat/morphism.hpp"
#include "fmat/quantum.hpp"
#include "fmat/random_gen.hpp"
#include "fmat/structural.hpp"
#include "fmat/text_format.hpp"

namespace fmat {

/** One checkable law.  check() returns a failure description, or nothing. */
template <InvolutiveScalar S>
struct Law {
  std::string name;
  std::function<std::optional<std::string>(Rng&)> check;
};

/** Outcome of running one law over a number of random cases. */
struct LawResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;  // empty when every case passed
};

namespace detail {

/** Exact comparison with a rendered counterexample on mismatch. */
template <InvolutiveScalar S>
std::optional<std::string> expect_equal(const Morphism<S>& lhs,
                                        const Morphism<S>& rhs) {
  if (lhs == rhs) return std::nullopt;
  return "lhs:\n" + render_morphism(lhs) + "\nrhs:\n" + render_morphism(rhs);
}

template <InvolutiveScalar S>
std::optional<std::string> expect_equal(const S& lhs, const S& rhs) {
  if (lhs == rhs) return std::nullopt;
  return "lhs scalar: " + lhs.to_text() + "\nrhs scalar: " + rhs.to_text();
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

}  // namespace detail

/**
 * The law suite.  Dimensions are kept small (shapes of dimension ≤ 4, so
 * four-fold tensor products stay ≤ 256) because every comparison is exact;
 * coverage comes from case count, not size.
 */
template <InvolutiveScalar S>
std::vector<Law<S>> law_suite() {
  using M = Morphism<S>;
  const Shape I = Shape::unit();
  constexpr int kDim = 4;

  std::vector<Law<S>> laws;

  // (1_{A*} ⊗ g) ∘ ⌜f⌝ = ⌜g∘f⌝ : post-composition is absorbed into a name.
  laws.push_back({"name-absorption", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim), b = random_shape(rng, kDim),
                c = random_shape(rng, kDim);
    const M f = random_morphism<S>(rng, a, b), g = random_morphism<S>(rng, b, c);
    return detail::expect_equal(
        compose(tensor(identity<S>(Shape::dual(a)), g), name_of(f)),
        name_of(compose(g, f)));
  }});

  // ⌞f⌟ ∘ (g ⊗ 1_{B*}) = ⌞f∘g⌟ : pre-composition is absorbed into a coname.
  laws.push_back({"coname-absorption", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim), b = random_shape(rng, kDim),
                c = random_shape(rng, kDim);
    const M f = random_morphism<S>(rng, a, b), g = random_morphism<S>(rng, c, a);
    return detail::expect_equal(
        compose(coname_of(f), tensor(g, identity<S>(Shape::dual(b)))),
        coname_of(compose(f, g)));
  }});

  // Sliding ⌜g⌝ in and ⌞f⌟ out along a wire composes the two morphisms.
  laws.push_back({"name-coname-composition", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim), b = random_shape(rng, kDim),
                c = random_shape(rng, kDim);
    const M f = random_morphism<S>(rng, a, b), g = random_morphism<S>(rng, b, c);
    const M route = pipeline<S>({
        rho<S>(a),                                   // A → A⊗I
        tensor(identity<S>(a), name_of(g)),          // → A⊗(B*⊗C)
        alpha<S>(a, Shape::dual(b), c),              // → (A⊗B*)⊗C
        tensor(coname_of(f), identity<S>(c)),        // → I⊗C
        adjoint(lambda<S>(c)),                       // → C
    });
    return detail::expect_equal(route, compose(g, f));
  }});

  // A coname spliced between two names fuses all three into one name.
  laws.push_back({"name-coname-fusion", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim), b = random_shape(rng, kDim),
                c = random_shape(rng, kDim), d = random_shape(rng, kDim);
    const M f = random_morphism<S>(rng, a, b), g = random_morphism<S>(rng, b, c),
            h = random_morphism<S>(rng, c, d);
    const Shape as = Shape::dual(a), cs = Shape::dual(c);
    const M route = pipeline<S>({
        rho<S>(I),                                           // I → I⊗I
        tensor(name_of(f), name_of(h)),                      // → (A*⊗B)⊗(C*⊗D)
        adjoint(alpha<S>(as, b, Shape::tensor(cs, d))),      // → A*⊗(B⊗(C*⊗D))
        tensor(identity<S>(as), alpha<S>(b, cs, d)),         // → A*⊗((B⊗C*)⊗D)
        tensor(identity<S>(as),
               tensor(coname_of(g), identity<S>(d))),        // → A*⊗(I⊗D)
        tensor(identity<S>(as), adjoint(lambda<S>(d))),      // → A*⊗D
    });
    return detail::expect_equal(route, name_of(compose(h, compose(g, f))));
  }});

  // (g* ⊗ 1_B) ∘ ⌜f⌝ = ⌜f∘g⌝ : duals slide backwards through names.
  laws.push_back({"dual-name-absorption", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim), b = random_shape(rng, kDim),
                c = random_shape(rng, kDim);
    const M f = random_morphism<S>(rng, a, b), g = random_morphism<S>(rng, c, a);
    return detail::expect_equal(
        compose(tensor(dual(g), identity<S>(b)), name_of(f)),
        name_of(compose(f, g)));
  }});

  // ⌞f⌟ ∘ (1_A ⊗ h*) = ⌞h∘f⌟ : duals slide backwards through conames.
  laws.push_back({"dual-coname-absorption", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim), b = random_shape(rng, kDim),
                d = random_shape(rng, kDim);
    const M f = random_morphism<S>(rng, a, b), h = random_morphism<S>(rng, b, d);
    return detail::expect_equal(
        compose(coname_of(f), tensor(identity<S>(a), dual(h))),
        coname_of(compose(h, f)));
  }});

  // Units and counits at A* are the A ones conjugated by the symmetry.
  laws.push_back({"unit-counit-dual-swap", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim);
    const Shape as = Shape::dual(a);
    auto r1 = detail::expect_equal(
        eta<S>(as), compose(sigma_tensor<S>(as, a), eta<S>(a)));
    if (r1) return r1;
    return detail::expect_equal(
        epsilon<S>(as), compose(epsilon<S>(a), sigma_tensor<S>(as, a)));
  }});

  // ψ† factors through the counit and the conjugate point.
  laws.push_back({"point-adjoint-via-counit", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim);
    const M psi = random_morphism<S>(rng, I, a);
    const M route = pipeline<S>({
        rho<S>(a),                                         // A → A⊗I
        tensor(identity<S>(a), adjoint(u_unit<S>())),      // → A⊗I*
        tensor(identity<S>(a), conj_star(psi)),            // → A⊗A*
        epsilon<S>(a),                                     // → I
    });
    return detail::expect_equal(route, adjoint(psi));
  }});

  // The adjoint is a contravariant involution fixing identities, and it
  // factors as conjugation∘dual in either order.
  laws.push_back({"adjoint-contravariant-involution", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim), b = random_shape(rng, kDim),
                c = random_shape(rng, kDim);
    const M f = random_morphism<S>(rng, a, b), g = random_morphism<S>(rng, c, a);
    auto r1 = detail::expect_equal(adjoint(compose(f, g)),
                                   compose(adjoint(g), adjoint(f)));
    if (r1) return r1;
    auto r2 = detail::expect_equal(adjoint(adjoint(f)), f);
    if (r2) return r2;
    auto r3 = detail::expect_equal(adjoint(identity<S>(a)), identity<S>(a));
    if (r3) return r3;
    auto r4 = detail::expect_equal(dual(conj_star(f)), adjoint(f));
    if (r4) return r4;
    return detail::expect_equal(conj_star(dual(f)), adjoint(f));
  }});

  // The adjoint preserves sums, tensors and biproducts.
  laws.push_back({"adjoint-additivity", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim), b = random_shape(rng, kDim),
                c = random_shape(rng, kDim), d = random_shape(rng, kDim);
    const M f = random_morphism<S>(rng, a, b), g = random_morphism<S>(rng, a, b);
    const M h = random_morphism<S>(rng, c, d);
    auto r1 = detail::expect_equal(adjoint(add(f, g)),
                                   add(adjoint(f), adjoint(g)));
    if (r1) return r1;
    auto r2 = detail::expect_equal(adjoint(tensor(f, h)),
                                   tensor(adjoint(f), adjoint(h)));
    if (r2) return r2;
    return detail::expect_equal(adjoint(direct_sum(f, h)),
                                direct_sum(adjoint(f), adjoint(h)));
  }});

  // ⟨ψ|φ⟩ equals the counit applied to φ ⊗ ψ_*.
  laws.push_back({"inner-product-via-counit", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim);
    const M psi = random_morphism<S>(rng, I, a), phi = random_morphism<S>(rng, I, a);
    const M route = pipeline<S>({
        rho<S>(I),                                         // I → I⊗I
        tensor(identity<S>(I), adjoint(u_unit<S>())),      // → I⊗I*
        tensor(phi, conj_star(psi)),                       // → A⊗A*
        epsilon<S>(a),                                     // → I
    });
    return detail::expect_equal(scalar_of(route), inner_product(psi, phi));
  }});

  // ⟨f†ψ|φ⟩ = ⟨ψ|fφ⟩ : the adjoint is adjoint for the inner product.
  laws.push_back({"adjoint-inner-product-adjunction", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim), b = random_shape(rng, kDim);
    const M f = random_morphism<S>(rng, a, b);
    const M psi = random_morphism<S>(rng, I, b), phi = random_morphism<S>(rng, I, a);
    return detail::expect_equal(inner_product(compose(adjoint(f), psi), phi),
                                inner_product(psi, compose(f, phi)));
  }});

  // Unitaries preserve all inner products.
  laws.push_back({"unitary-inner-product-invariance", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim);
    const M u = random_unitary<S>(rng, a);
    const M psi = random_morphism<S>(rng, I, a), phi = random_morphism<S>(rng, I, a);
    return detail::expect_equal(inner_product(compose(u, psi), compose(u, phi)),
                                inner_product(psi, phi));
  }});

  // In any pair of unitary bases, the adjoint's matrix elements are the
  // conjugates of f's with the indices swapped.
  laws.push_back({"adjoint-matrix-conjugate-transpose", [=](Rng& rng) {
    const Shape a = random_shape(rng, kDim), b = random_shape(rng, kDim);
    const M f = random_morphism<S>(rng, a, b);
    const M va = random_unitary<S>(rng, a), vb = random_unitary<S>(rng, b);
    const M base_a = canonical_basis<S>(a), base_b = canonical_basis<S>(b);
    for (Index i = 0; i < a.dim(); ++i) {
      std::vector<Shape> ais(static_cast<size_t>(a.dim()), I);
      const M ei = compose(va, compose(base_a, injection<S>(static_cast<size_t>(i), ais)));
      for (Index j = 0; j < b.dim(); ++j) {
        std::vector<Shape> bjs(static_cast<size_t>(b.dim()), I);
        const M dj = compose(vb, compose(base_b, injection<S>(static_cast<size_t>(j), bjs)));
        const S m_ji = inner_product(dj, compose(f, ei));
        const S n_ij = inner_product(ei, compose(adjoint(f), dj));
        if (n_ij != conj(m_ji)) {
          return std::optional<std::string>(
              "matrix element (" + std::to_string(i) + "," + std::to_string(j) +
              "): ⟨e_i|f†d_j⟩ = " + n_ij.to_text() + " but conj⟨d_j|f e_i⟩ = " +
              conj(m_ji).to_text());
        }
      }
    }
    return std::optional<std::string>();
  }});

  return laws;
}

/** Runs one law over `cases` fresh random cases. */
template <InvolutiveScalar S>
LawResult run_law(const Law<S>& law, std::uint64_t seed, int cases) {
  Rng rng(seed);
  LawResult result;
  result.name = law.name;
  result.cases = cases;
  for (int k = 0; k < cases; ++k) {
    std::optional<std::string> fail;
    try {
      fail = law.check(rng);
    } catch (const Error& e) {
      fail = std::string("exception: ") + e.what();
    }
    if (fail) {
      ++result.failures;
      if (result.first_failure.empty()) {
        result.first_failure = "case " + std::to_string(k) + ": " + *fail;
      }
    }
  }
  return result;
}

/** Runs the whole suite, decorrelating the per-law seeds. */
template <InvolutiveScalar S>
std::vector<LawResult> run_law_suite(std::uint64_t seed, int cases) {
  const std::vector<Law<S>> laws = law_suite<S>();
  std::vector<LawResult> out;
  out.reserve(laws.size());
  for (size_t k = 0; k < laws.size(); ++k) {
    out.push_back(run_law(laws[k], detail::mix_seed(seed, k), cases));
  }
  return out;
}

}  // namespace fmat
