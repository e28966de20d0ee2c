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

#include <functional>
#include <vector>

#include "doctest.h"
#include "fmat/complex_root_two.hpp"
#include "fmat/morphism.hpp"
#include "fmat/random_gen.hpp"
#include "fmat/structural.hpp"

namespace {

using fmat::BasisPath;
using fmat::Index;
using fmat::Morphism;
using fmat::Rng;
using fmat::Shape;

using C = fmat::ComplexRootTwo;

Shape q() { return Shape::qubit(); }
Shape iu() { return Shape::unit(); }

/** Position of a path in the canonical enumeration of a shape. */
Index index_of(const Shape& a, const BasisPath& p) {
  const auto paths = fmat::linearize(a);
  for (size_t k = 0; k < paths.size(); ++k) {
    if (paths[k] == p) return static_cast<Index>(k);
  }
  return -1;
}

/**
 * Brute-force oracle: m must be the permutation matrix that sends the c-th
 * domain basis path to transform(path) in the codomain enumeration. This
 * reconstructs the expected matrix from the path semantics alone, with no
 * reference to the index arithmetic inside the generators.
 */
bool matches_path_map(const Morphism<C>& m,
                      const std::function<BasisPath(const BasisPath&)>& f) {
  const auto dom_paths = fmat::linearize(m.dom());
  for (size_t c = 0; c < dom_paths.size(); ++c) {
    const Index target = index_of(m.cod(), f(dom_paths[c]));
    if (target < 0) return false;
    for (Index r = 0; r < m.rows(); ++r) {
      const C want = (r == target) ? C(1) : C(0);
      if (m.entry(r, static_cast<Index>(c)) != want) return false;
    }
  }
  return true;
}

TEST_CASE("associator rebrackets basis paths") {
  const Shape a = Shape::biproduct(q(), iu());
  const Morphism<C> m = fmat::alpha<C>(a, q(), q());
  CHECK(m.dom() == Shape::tensor(a, Shape::tensor(q(), q())));
  CHECK(m.cod() == Shape::tensor(Shape::tensor(a, q()), q()));
  CHECK(matches_path_map(m, [](const BasisPath& p) {
    return BasisPath::pair(BasisPath::pair(p.left(), p.right().left()),
                           p.right().right());
  }));
}

TEST_CASE("unitors insert and remove the unit factor") {
  const Shape a = Shape::tensor(q(), q());
  const Morphism<C> l = fmat::lambda<C>(a);  // A → I ⊗ A
  CHECK(l.cod() == Shape::tensor(iu(), a));
  CHECK(matches_path_map(l, [](const BasisPath& p) {
    return BasisPath::pair(BasisPath::unit(), p);
  }));
  const Morphism<C> r = fmat::rho<C>(a);  // A → A ⊗ I
  CHECK(r.cod() == Shape::tensor(a, iu()));
  CHECK(matches_path_map(r, [](const BasisPath& p) {
    return BasisPath::pair(p, BasisPath::unit());
  }));
}

TEST_CASE("tensor symmetry swaps the pair") {
  const Shape a = Shape::biproduct(q(), iu());
  const Morphism<C> m = fmat::sigma_tensor<C>(a, q());
  CHECK(m.dom() == Shape::tensor(a, q()));
  CHECK(m.cod() == Shape::tensor(q(), a));
  CHECK(matches_path_map(m, [](const BasisPath& p) {
    return BasisPath::pair(p.right(), p.left());
  }));
}

TEST_CASE("biproduct symmetry swaps the branch tag") {
  const Shape a = Shape::tensor(q(), q());
  const Morphism<C> m = fmat::sigma_biproduct<C>(a, q());
  CHECK(m.dom() == Shape::biproduct(a, q()));
  CHECK(m.cod() == Shape::biproduct(q(), a));
  CHECK(matches_path_map(m, [](const BasisPath& p) {
    return BasisPath::side(!p.is_right(), p.sub());
  }));
}

TEST_CASE("left distributor routes the tagged factor outward") {
  const Morphism<C> m = fmat::tau_left<C>(q(), q(), iu());
  CHECK(m.dom() == Shape::tensor(q(), Shape::biproduct(q(), iu())));
  CHECK(m.cod() == Shape::biproduct(Shape::tensor(q(), q()),
                                    Shape::tensor(q(), iu())));
  CHECK(matches_path_map(m, [](const BasisPath& p) {
    const BasisPath tagged = p.right();
    return BasisPath::side(tagged.is_right(),
                           BasisPath::pair(p.left(), tagged.sub()));
  }));
}

TEST_CASE("right distributor routes the tagged factor outward") {
  const Morphism<C> m = fmat::upsilon_right<C>(q(), iu(), q());
  CHECK(m.dom() == Shape::tensor(Shape::biproduct(q(), iu()), q()));
  CHECK(m.cod() == Shape::biproduct(Shape::tensor(q(), q()),
                                    Shape::tensor(iu(), q())));
  CHECK(matches_path_map(m, [](const BasisPath& p) {
    const BasisPath tagged = p.left();
    return BasisPath::side(tagged.is_right(),
                           BasisPath::pair(tagged.sub(), p.right()));
  }));
}

TEST_CASE("retyped identities carry identity matrices") {
  // These generators only rebracket unit blocks or push duals around, so
  // their matrices in the canonical bases are exactly the identity.
  const Shape a = Shape::tensor(q(), q());
  for (const Morphism<C>& m : {
           fmat::u_unit<C>(),
           fmat::u_tensor<C>(a, q()),
           fmat::nu<C>(a, q()),
           fmat::d_nm<C>(3, 2),
           fmat::upsilon_right<C>(q(), iu(), q()),
       }) {
    CAPTURE(m.dom().to_text());
    for (Index r = 0; r < m.rows(); ++r) {
      for (Index c = 0; c < m.cols(); ++c) {
        CHECK(m.entry(r, c) == ((r == c) ? C(1) : C(0)));
      }
    }
  }
  CHECK(fmat::u_tensor<C>(a, q()).dom() == Shape::dual(Shape::tensor(a, q())));
  CHECK(fmat::u_tensor<C>(a, q()).cod() ==
        Shape::tensor(Shape::dual(a), Shape::dual(q())));
  CHECK(fmat::nu<C>(a, q()).cod() ==
        Shape::biproduct(Shape::dual(a), Shape::dual(q())));
  CHECK(fmat::d_nm<C>(3, 2).cod().dim() == 6);
}

TEST_CASE("injections and projections") {
  const std::vector<Shape> parts = {q(), iu(), q()};
  const Shape fold = Shape::biproduct(Shape::biproduct(q(), iu()), q());

  const Morphism<C> i1 = fmat::injection<C>(1, parts);
  CHECK(i1.dom() == iu());
  CHECK(i1.cod() == fold);
  CHECK(i1.entry(2, 0) == C(1));  // offset dim(Q) = 2
  CHECK(i1.entry(0, 0) == C(0));
  CHECK(i1.entry(3, 0) == C(0));

  const Morphism<C> p2 = fmat::projection<C>(2, parts);
  CHECK(p2.dom() == fold);
  CHECK(p2.cod() == q());
  CHECK(p2 == fmat::adjoint(fmat::injection<C>(2, parts)));
  CHECK(p2.entry(0, 3) == C(1));
  CHECK(p2.entry(1, 4) == C(1));
  CHECK(p2.entry(0, 0) == C(0));

  // Biproduct equations: π_j ∘ ι_i = δ_ij; Σ ι_i ∘ π_i = 1.
  for (size_t i = 0; i < parts.size(); ++i) {
    for (size_t j = 0; j < parts.size(); ++j) {
      const Morphism<C> pj_ii =
          fmat::compose(fmat::projection<C>(j, parts),
                        fmat::injection<C>(i, parts));
      if (i == j) {
        CHECK(pj_ii == fmat::identity<C>(parts[i]));
      } else {
        CHECK(pj_ii == fmat::zero_morphism<C>(parts[i], parts[j]));
      }
    }
  }
  Morphism<C> resolution = fmat::zero_morphism<C>(fold, fold);
  for (size_t i = 0; i < parts.size(); ++i) {
    resolution = fmat::add(
        resolution, fmat::compose(fmat::injection<C>(i, parts),
                                  fmat::projection<C>(i, parts)));
  }
  CHECK(resolution == fmat::identity<C>(fold));

  CHECK_THROWS_AS(fmat::injection<C>(3, parts), fmat::ShapeError);
  CHECK_THROWS_AS(fmat::projection<C>(7, parts), fmat::ShapeError);
}

TEST_CASE("n-ary distributors agree with their binary generators") {
  const Shape a = Shape::biproduct(q(), iu());
  CHECK(fmat::tau_nary<C>(a, {q(), iu()}) == fmat::tau_left<C>(a, q(), iu()));
  CHECK(fmat::upsilon_nary<C>({q(), iu()}, a) ==
        fmat::upsilon_right<C>(q(), iu(), a));
  CHECK(fmat::tau_nary<C>(a, {q()}) ==
        fmat::identity<C>(Shape::tensor(a, q())));
  CHECK_THROWS_AS(fmat::tau_nary<C>(a, {}), fmat::ShapeError);

  // Path oracle for a three-summand distributor: the tag of the tensor's
  // biproduct factor becomes the outer tag, depth-for-depth.
  const std::vector<Shape> parts = {q(), iu(), q()};
  const Morphism<C> t = fmat::tau_nary<C>(q(), parts);
  CHECK(matches_path_map(t, [](const BasisPath& p) {
    // Rewrap p.right()'s nested side-tags around pair(p.left(), leaf).
    std::function<BasisPath(const BasisPath&, const BasisPath&)> rewrap =
        [&](const BasisPath& x, const BasisPath& tagged) -> BasisPath {
      if (tagged.kind() != BasisPath::Kind::side) return BasisPath::pair(x, tagged);
      return BasisPath::side(tagged.is_right(), rewrap(x, tagged.sub()));
    };
    return rewrap(p.left(), p.right());
  }));
}

TEST_CASE("pentagon coherence") {
  const Shape a = q(), b = Shape::biproduct(iu(), iu()), c = q(), d = iu();
  const Morphism<C> way1 =
      fmat::compose(fmat::alpha<C>(Shape::tensor(a, b), c, d),
                    fmat::alpha<C>(a, b, Shape::tensor(c, d)));
  const Morphism<C> way2 = fmat::pipeline<C>({
      fmat::tensor(fmat::identity<C>(a), fmat::alpha<C>(b, c, d)),
      fmat::alpha<C>(a, Shape::tensor(b, c), d),
      fmat::tensor(fmat::alpha<C>(a, b, c), fmat::identity<C>(d)),
  });
  CHECK(way1 == way2);
}

TEST_CASE("triangle coherence") {
  const Shape a = Shape::biproduct(q(), iu()), b = q();
  const Morphism<C> via_alpha = fmat::pipeline<C>({
      fmat::tensor(fmat::identity<C>(a), fmat::lambda<C>(b)),
      fmat::alpha<C>(a, iu(), b),
  });
  CHECK(via_alpha == fmat::tensor(fmat::rho<C>(a), fmat::identity<C>(b)));
}

TEST_CASE("hexagon coherence") {
  const Shape a = q(), b = Shape::biproduct(iu(), iu()), c = q();
  const Morphism<C> lhs = fmat::pipeline<C>({
      fmat::alpha<C>(a, b, c),
      fmat::sigma_tensor<C>(Shape::tensor(a, b), c),
      fmat::alpha<C>(c, a, b),
  });
  const Morphism<C> rhs = fmat::pipeline<C>({
      fmat::tensor(fmat::identity<C>(a), fmat::sigma_tensor<C>(b, c)),
      fmat::alpha<C>(a, c, b),
      fmat::tensor(fmat::sigma_tensor<C>(a, c), fmat::identity<C>(b)),
  });
  CHECK(lhs == rhs);
}

TEST_CASE("distributor naturality") {
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const Shape a = fmat::random_shape(rng, 3), a2 = fmat::random_shape(rng, 3);
    const Shape b = fmat::random_shape(rng, 3), b2 = fmat::random_shape(rng, 3);
    const Shape c = fmat::random_shape(rng, 3), c2 = fmat::random_shape(rng, 3);
    const Morphism<C> f = fmat::random_morphism<C>(rng, a, a2);
    const Morphism<C> g = fmat::random_morphism<C>(rng, b, b2);
    const Morphism<C> h = fmat::random_morphism<C>(rng, c, c2);
    // τ′ ∘ (f ⊗ (g ⊕ h)) == ((f⊗g) ⊕ (f⊗h)) ∘ τ
    const Morphism<C> lhs =
        fmat::compose(fmat::tau_left<C>(a2, b2, c2),
                      fmat::tensor(f, fmat::direct_sum(g, h)));
    const Morphism<C> rhs =
        fmat::compose(fmat::direct_sum(fmat::tensor(f, g), fmat::tensor(f, h)),
                      fmat::tau_left<C>(a, b, c));
    CHECK(lhs == rhs);
    // υ′ ∘ ((f ⊕ g) ⊗ h) == ((f⊗h) ⊕ (g⊗h)) ∘ υ
    const Morphism<C> lhs2 =
        fmat::compose(fmat::upsilon_right<C>(a2, b2, c2),
                      fmat::tensor(fmat::direct_sum(f, g), h));
    const Morphism<C> rhs2 =
        fmat::compose(fmat::direct_sum(fmat::tensor(f, h), fmat::tensor(g, h)),
                      fmat::upsilon_right<C>(a, b, c));
    CHECK(lhs2 == rhs2);
    // σ-naturality on both monoidal structures.
    CHECK(fmat::compose(fmat::sigma_tensor<C>(a2, b2), fmat::tensor(f, g)) ==
          fmat::compose(fmat::tensor(g, f), fmat::sigma_tensor<C>(a, b)));
    CHECK(fmat::compose(fmat::sigma_biproduct<C>(a2, b2),
                        fmat::direct_sum(f, g)) ==
          fmat::compose(fmat::direct_sum(g, f), fmat::sigma_biproduct<C>(a, b)));
  }
}

TEST_CASE("structural generators are unitary with adjoint inverse") {
  const Shape a = Shape::biproduct(q(), iu());
  const std::vector<Morphism<C>> gens = {
      fmat::alpha<C>(a, q(), q()),
      fmat::lambda<C>(a),
      fmat::rho<C>(a),
      fmat::sigma_tensor<C>(a, q()),
      fmat::sigma_biproduct<C>(a, q()),
      fmat::tau_left<C>(q(), a, q()),
      fmat::upsilon_right<C>(a, q(), q()),
      fmat::u_unit<C>(),
      fmat::u_tensor<C>(a, q()),
      fmat::nu<C>(a, q()),
      fmat::d_nm<C>(2, 3),
      fmat::tau_nary<C>(q(), {q(), iu(), q()}),
      fmat::upsilon_nary<C>({q(), iu(), q()}, q()),
  };
  for (const Morphism<C>& m : gens) {
    CAPTURE(m.dom().to_text() + " -> " + m.cod().to_text());
    CHECK(fmat::compose(fmat::adjoint(m), m) == fmat::identity<C>(m.dom()));
    CHECK(fmat::compose(m, fmat::adjoint(m)) == fmat::identity<C>(m.cod()));
  }
}

}  // namespace
