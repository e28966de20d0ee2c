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

// Teleportation bases and protocol verifiers.
//
// A teleportation base packages a normalizing scalar s with four unitaries
// β_1..β_4 on the qubit such that the four scaled names s•⌜β_i⌝ form a
// unitary change of base (4·I) → Q* ⊗ Q.  The verifiers below build each
// protocol as one explicit composite per branch — preparation, observation,
// classical fan-out, unitary correction — and compare it against the claimed
// result with exact arithmetic.  Nothing is simplified symbolically: every
// equation is checked on the nose, entry by entry.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmat/boolean.hpp"
#include "fmat/compact.hpp"
#include "fmat/complex_root_two.hpp"
#include "fmat/morphism.hpp"
#include "fmat/quantum.hpp"
#include "fmat/random_gen.hpp"
#include "fmat/structural.hpp"
#include "fmat/text_format.hpp"

namespace fmat {

// ---------------------------------------------------------------------------
// Elementary qubit transformations.

/** Swaps the two computational basis vectors, via the biproduct symmetry. */
template <InvolutiveScalar S>
Morphism<S> bit_flip() {
  const Morphism<S> base = computational_qubit_basis<S>();
  return compose(base, compose(sigma_biproduct<S>(Shape::unit(), Shape::unit()),
                               adjoint(base)));
}

/** diag(1, -1).  Needs negation, so it only exists over ℚ(i,√2) here. */
template <InvolutiveScalar S>
Morphism<S> phase_flip() {
  if constexpr (has_negation_v<S>) {
    return Morphism<S>(Shape::qubit(), Shape::qubit(),
                       {{S(1), S(0)}, {S(0), -S(1)}});
  } else {
    throw UnsupportedSemiringError(
        "phase_flip needs -1, which the boolean semiring lacks");
  }
}

/** The self-adjoint basis-rotating unitary s·[[1,1],[1,-1]]. */
template <InvolutiveScalar S>
Morphism<S> hadamard_like() {
  if constexpr (std::is_same_v<S, ComplexRootTwo>) {
    const S s = ComplexRootTwo::inv_sqrt2();
    return Morphism<S>(Shape::qubit(), Shape::qubit(),
                       {{s, s}, {s, -s}});
  } else {
    throw UnsupportedSemiringError(
        "hadamard_like needs 1/\xE2\x88\x9A" "2, which the boolean semiring lacks");
  }
}

/** The controlled flip on Q ⊗ Q: |x,y⟩ ↦ |x, y xor x⟩.  A permutation. */
template <InvolutiveScalar S>
Morphism<S> standard_cnot() {
  const Shape qq = Shape::tensor(Shape::qubit(), Shape::qubit());
  DenseMatrix<S> m = zero_matrix<S>(4, 4);
  m(0, 0) = S(1);
  m(1, 1) = S(1);
  m(3, 2) = S(1);
  m(2, 3) = S(1);
  return Morphism<S>(qq, qq, std::move(m));
}

// ---------------------------------------------------------------------------
// Teleportation bases.

/**
 * A validated teleportation base: four unitaries on Q whose scaled names
 * tile a unitary (4·I) → Q* ⊗ Q.  Build through make_teleportation_base.
 */
template <InvolutiveScalar S>
struct TeleportationBase {
  S normalizer;            // the scalar s
  Morphism<S> prebase;     // (4·I) → Q* ⊗ Q, column j = ⌜β_j⌝
  std::vector<Morphism<S>> beta;

  /** The unitary base s • prebase. */
  Morphism<S> base() const { return scalar_action(normalizer, prebase); }
};

/** The four defining conditions, each named, in checking order. */
template <InvolutiveScalar S>
std::vector<std::pair<std::string, bool>> teleportation_base_conditions(
    const S& s, const std::vector<Morphism<S>>& betas) {
  const Shape q = Shape::qubit();
  std::vector<std::pair<std::string, bool>> conds;
  const bool four = betas.size() == 4;
  conds.emplace_back("four-transformations", four);
  bool each_unitary = four;
  for (const Morphism<S>& b : betas) {
    each_unitary = each_unitary && b.dom() == q && b.cod() == q && is_unitary(b);
  }
  conds.emplace_back("each-transformation-unitary", each_unitary);
  // 2·s̄·s = 1, written as a sum because not every semiring contains a 2.
  const S half = conj(s) * s;
  conds.emplace_back("normalizer-condition", half + half == S(1));
  bool base_unitary = false;
  if (four && each_unitary) {
    std::vector<Morphism<S>> names;
    names.reserve(4);
    for (const Morphism<S>& b : betas) names.push_back(name_of(b));
    base_unitary = is_unitary(scalar_action(s, cotuple_of(names)));
  }
  conds.emplace_back("base-unitary", base_unitary);
  return conds;
}

/** Validates and packages a teleportation base; throws on any violation. */
template <InvolutiveScalar S>
TeleportationBase<S> make_teleportation_base(
    const S& s, const std::vector<Morphism<S>>& betas) {
  for (const auto& [name, ok] : teleportation_base_conditions(s, betas)) {
    if (!ok) {
      throw Error("not a teleportation base: condition '" + name + "' fails");
    }
  }
  std::vector<Morphism<S>> names;
  names.reserve(4);
  for (const Morphism<S>& b : betas) names.push_back(name_of(b));
  return TeleportationBase<S>{s, cotuple_of(names), betas};
}

/**
 * The Bell base over ℚ(i,√2): β_1 = 1, β_2 = bit flip, β_3 = phase flip,
 * β_4 = β_2 ∘ β_3, with s = 1/√2.  Over the boolean semiring no
 * teleportation base exists at all (rel_teleportation_search enumerates
 * every candidate), so asking for one is refused.
 */
template <InvolutiveScalar S>
TeleportationBase<S> make_bell_base() {
  if constexpr (std::is_same_v<S, ComplexRootTwo>) {
    const Morphism<S> b2 = bit_flip<S>();
    const Morphism<S> b3 = phase_flip<S>();
    return make_teleportation_base(
        ComplexRootTwo::inv_sqrt2(),
        {identity<S>(Shape::qubit()), b2, b3, compose(b2, b3)});
  } else {
    throw UnsupportedSemiringError(
        "no teleportation base exists over the boolean semiring "
        "(exhaustive search over all 65536 candidates finds none)");
  }
}

/**
 * How to read a 4×4 array of published base entries: either each column is
 * the vectorized ⌜β_j⌝ with the domain index varying slowest, or each column
 * lists β_j's entries row by row.  The two readings differ by a transpose
 * of each β_j, which flips the sign of the fourth Bell transformation.
 */
enum class VecReading { kDomainMajor, kEntryRowMajor };

/** The Bell base as a bare 4×4 array (rows of the base matrix). */
template <InvolutiveScalar S>
std::vector<std::vector<S>> bell_base_entries() {
  if constexpr (has_negation_v<S>) {
    const S o = S(1), z = S(0);
    return {{o, z, o, z}, {z, o, z, o}, {z, o, z, -o}, {o, z, -o, z}};
  } else {
    throw UnsupportedSemiringError(
        "the Bell base entries need -1, which the boolean semiring lacks");
  }
}

/** Rebuilds a teleportation base from a published 4×4 entry array. */
template <InvolutiveScalar S>
TeleportationBase<S> base_from_entries(const S& s,
                                       const std::vector<std::vector<S>>& rows,
                                       VecReading reading) {
  if (rows.size() != 4 || rows[0].size() != 4 || rows[1].size() != 4 ||
      rows[2].size() != 4 || rows[3].size() != 4) {
    throw ShapeError("base_from_entries: expected a 4x4 entry array");
  }
  const Shape q = Shape::qubit();
  std::vector<Morphism<S>> betas;
  for (size_t j = 0; j < 4; ++j) {
    DenseMatrix<S> m = zero_matrix<S>(2, 2);
    for (Index r = 0; r < 2; ++r) {
      for (Index c = 0; c < 2; ++c) {
        const size_t flat = reading == VecReading::kDomainMajor
                                ? static_cast<size_t>(c * 2 + r)
                                : static_cast<size_t>(r * 2 + c);
        m(r, c) = rows[flat][j];
      }
    }
    betas.emplace_back(q, q, std::move(m));
  }
  return make_teleportation_base(s, betas);
}

/**
 * Composition-only inverse bookkeeping for the Bell base: every correction
 * a protocol needs can be written without inverting anything.
 */
template <InvolutiveScalar S>
std::vector<std::pair<std::string, bool>> bell_base_identities(
    const TeleportationBase<S>& tb) {
  const Morphism<S> one = identity<S>(Shape::qubit());
  const auto& b = tb.beta;
  std::vector<std::pair<std::string, bool>> out;
  out.emplace_back("b1-is-identity", b[0] == one);
  out.emplace_back("b2-self-inverse", compose(b[1], b[1]) == one);
  out.emplace_back("b3-self-inverse", compose(b[2], b[2]) == one);
  out.emplace_back("b3-self-adjoint", b[2] == adjoint(b[2]));
  out.emplace_back("b4-left-inverse", compose(b[3], compose(b[2], b[1])) == one);
  out.emplace_back("b4-right-inverse", compose(compose(b[2], b[1]), b[3]) == one);
  out.emplace_back("b4-adjoint-is-b3-b2", adjoint(b[3]) == compose(b[2], b[1]));
  out.emplace_back("b2-is-base-swap", b[1] == bit_flip<S>());
  return out;
}

/**
 * A random teleportation base: the Bell base transformed by
 * β'_i = θ_i • (U ∘ β_{π(i)} ∘ V) for random unitaries U, V, a random
 * permutation π and random unit phases θ_i.  The result is validated from
 * scratch, not trusted.
 */
template <InvolutiveScalar S>
TeleportationBase<S> random_teleportation_base(Rng& rng) {
  if constexpr (std::is_same_v<S, ComplexRootTwo>) {
    const TeleportationBase<S> bell = make_bell_base<S>();
    const Shape q = Shape::qubit();
    const Morphism<S> u = random_unitary<S>(rng, q);
    const Morphism<S> v = random_unitary<S>(rng, q);
    std::vector<size_t> perm = {0, 1, 2, 3};
    for (size_t k = 4; k-- > 1;) std::swap(perm[k], perm[rng.pick(k + 1)]);
    const S phases[4] = {S(1), -S(1), ComplexRootTwo::i(),
                         -ComplexRootTwo::i()};
    std::vector<Morphism<S>> betas;
    for (size_t i = 0; i < 4; ++i) {
      const S theta = phases[rng.pick(4)];
      betas.push_back(scalar_action(
          theta, compose(u, compose(bell.beta[perm[i]], v))));
    }
    return make_teleportation_base(bell.normalizer, betas);
  } else {
    throw UnsupportedSemiringError(
        "no teleportation base exists over the boolean semiring");
  }
}

// ---------------------------------------------------------------------------
// Protocol reports.

/** One measurement branch of a verified protocol. */
struct BranchCheck {
  size_t index = 0;        // 0-based branch number
  std::string correction;  // which unitary correction the branch applies
  std::string weight;      // the branch's scalar weight, rendered
  bool ok = false;
};

/** Location and values of the first mismatching entry, if any. */
struct FirstDifference {
  Index row = 0;
  Index col = 0;
  std::string lhs;
  std::string rhs;
};

/** Full outcome of verifying one protocol. */
template <InvolutiveScalar S>
struct ProtocolReport {
  std::string protocol;
  Morphism<S> lhs;  // the claimed result
  Morphism<S> rhs;  // the protocol composite
  bool equal = false;
  std::vector<std::pair<std::string, bool>> preconditions;
  std::vector<BranchCheck> branches;
  std::optional<FirstDifference> first_difference;

  bool ok() const {
    if (!equal) return false;
    for (const auto& [name, good] : preconditions) {
      if (!good) return false;
    }
    for (const BranchCheck& b : branches) {
      if (!b.ok) return false;
    }
    return true;
  }
};

namespace detail {

template <InvolutiveScalar S>
std::optional<FirstDifference> first_difference(const Morphism<S>& lhs,
                                                const Morphism<S>& rhs) {
  if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod()) {
    return FirstDifference{-1, -1,
                           lhs.dom().to_text() + " -> " + lhs.cod().to_text(),
                           rhs.dom().to_text() + " -> " + rhs.cod().to_text()};
  }
  for (Index r = 0; r < lhs.rows(); ++r) {
    for (Index c = 0; c < lhs.cols(); ++c) {
      if (!(lhs.entry(r, c) == rhs.entry(r, c))) {
        return FirstDifference{r, c, lhs.entry(r, c).to_text(),
                               rhs.entry(r, c).to_text()};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Teleportation.

/**
 * Verifies teleportation: prepare the named identity, observe the first two
 * systems in the teleportation base, correct each branch with β_i⁻¹ (taken
 * as the adjoint).  The composite must equal the fourfold diagonal of
 * s̄s • 1_Q exactly — all four branches carry the input unchanged.
 */
template <InvolutiveScalar S>
ProtocolReport<S> verify_teleportation(const TeleportationBase<S>& tb) {
  const Shape q = Shape::qubit(), qd = Shape::dual(q), I = Shape::unit();
  const S s = tb.normalizer;
  const S w = conj(s) * s;

  std::vector<Morphism<S>> observers, corrections, diagonal;
  for (size_t i = 0; i < 4; ++i) {
    observers.push_back(scalar_action(conj(s), coname_of(tb.beta[i])));
    corrections.push_back(adjoint(tb.beta[i]));
    diagonal.push_back(scalar_action(w, identity<S>(q)));
  }

  const Morphism<S> rhs = pipeline<S>({
      rho<S>(q),
      tensor(identity<S>(q),
             scalar_action(s, name_of(identity<S>(q)))),
      alpha<S>(q, qd, q),
      tensor(tuple_of(observers), identity<S>(q)),
      upsilon_nary<S>(std::vector<Shape>(4, I), q),
      nfold(4, adjoint(lambda<S>(q))),
      direct_sum_of(corrections),
  });
  const Morphism<S> lhs = tuple_of(diagonal);

  ProtocolReport<S> report{"teleportation", lhs, rhs, lhs == rhs,
                           teleportation_base_conditions(s, tb.beta),
                           {},
                           detail::first_difference(lhs, rhs)};
  const std::vector<Shape> qs(4, q);
  for (size_t i = 0; i < 4; ++i) {
    const bool ok =
        compose(projection<S>(i, qs), rhs) == scalar_action(w, identity<S>(q));
    report.branches.push_back(BranchCheck{
        i, "adjoint(b" + std::to_string(i + 1) + ")", w.to_text(), ok});
  }
  return report;
}

/**
 * Verifies logic-gate teleportation of a unitary f on Q: the prepared pair
 * is ⌜f⌝ and branch i is corrected with (f ∘ β_i ∘ f†)⁻¹.  The composite
 * must equal the fourfold diagonal of s̄s • f.
 */
template <InvolutiveScalar S>
ProtocolReport<S> verify_gate_teleportation(const TeleportationBase<S>& tb,
                                            const Morphism<S>& f) {
  const Shape q = Shape::qubit(), qd = Shape::dual(q), I = Shape::unit();
  const S s = tb.normalizer;
  const S w = conj(s) * s;

  std::vector<Morphism<S>> observers, corrections, diagonal;
  for (size_t i = 0; i < 4; ++i) {
    observers.push_back(scalar_action(conj(s), coname_of(tb.beta[i])));
    corrections.push_back(
        adjoint(compose(f, compose(tb.beta[i], adjoint(f)))));
    diagonal.push_back(scalar_action(w, f));
  }

  const Morphism<S> rhs = pipeline<S>({
      rho<S>(q),
      tensor(identity<S>(q), scalar_action(s, name_of(f))),
      alpha<S>(q, qd, q),
      tensor(tuple_of(observers), identity<S>(q)),
      upsilon_nary<S>(std::vector<Shape>(4, I), q),
      nfold(4, adjoint(lambda<S>(q))),
      direct_sum_of(corrections),
  });
  const Morphism<S> lhs = tuple_of(diagonal);

  ProtocolReport<S> report{"gate-teleportation", lhs, rhs, lhs == rhs,
                           teleportation_base_conditions(s, tb.beta),
                           {},
                           detail::first_difference(lhs, rhs)};
  report.preconditions.emplace_back("gate-unitary", is_unitary(f));
  const std::vector<Shape> qs(4, q);
  for (size_t i = 0; i < 4; ++i) {
    const bool ok =
        compose(projection<S>(i, qs), rhs) == scalar_action(w, f);
    report.branches.push_back(BranchCheck{
        i, "adjoint(f b" + std::to_string(i + 1) + " adjoint(f))",
        w.to_text(), ok});
  }
  return report;
}

/**
 * Verifies two-round teleportation of a controlled flip on Q ⊗ Q.
 *
 * One entangled pair carries ⌜cnot⌝.  The first observation touches the
 * first input qubit against the first leg of the pair; its correction
 * φ1_i = cnot ∘ (β_i ⊗ 1) ∘ cnot† acts on both carried qubits.  The second
 * observation then touches the second input qubit against the second leg;
 * its correction is φ2_j = cnot ∘ (1 ⊗ β_j) ∘ cnot†.  For the Bell base and
 * the standard flip both correction families are products of single-qubit
 * transformations — those commutation identities are checked here as named
 * preconditions, branch equality is checked independently of them.
 */
template <InvolutiveScalar S>
ProtocolReport<S> verify_cnot_teleportation(const TeleportationBase<S>& tb,
                                            const Morphism<S>& cn) {
  const Shape q = Shape::qubit(), qd = Shape::dual(q), I = Shape::unit();
  const Shape qq = Shape::tensor(q, q);
  const Shape p = Shape::tensor(q, qd);  // the observed pair, both rounds
  const S s = tb.normalizer;
  const S w = conj(s) * s;

  const Morphism<S> one_q = identity<S>(q);
  std::vector<Morphism<S>> phi1, phi2;
  for (size_t i = 0; i < 4; ++i) {
    phi1.push_back(
        compose(cn, compose(tensor(tb.beta[i], one_q), adjoint(cn))));
    phi2.push_back(
        compose(cn, compose(tensor(one_q, tb.beta[i]), adjoint(cn))));
  }

  std::vector<Morphism<S>> observers;
  for (size_t i = 0; i < 4; ++i) {
    observers.push_back(scalar_action(conj(s), coname_of(tb.beta[i])));
  }
  const Morphism<S> obs = tuple_of(observers);  // Q ⊗ Q* → 4·I

  // Rearrangement (a1⊗a2) ⊗ ((b1*⊗b2*) ⊗ (c1⊗c2)) → ((a1⊗b1*) ⊗ C) ⊗ (a2⊗b2*):
  // the first observed pair moves to the front, the second to the back.
  const Shape bs = Shape::tensor(qd, qd);
  const Shape r = Shape::tensor(q, qd);
  const Morphism<S> rearrange = pipeline<S>({
      alpha<S>(qq, bs, qq),
      tensor(alpha<S>(qq, qd, qd), identity<S>(qq)),
      tensor(tensor(adjoint(alpha<S>(q, q, qd)), identity<S>(qd)),
             identity<S>(qq)),
      tensor(tensor(tensor(one_q, sigma_tensor<S>(q, qd)), identity<S>(qd)),
             identity<S>(qq)),
      tensor(tensor(alpha<S>(q, qd, q), identity<S>(qd)), identity<S>(qq)),
      tensor(adjoint(alpha<S>(p, q, qd)), identity<S>(qq)),
      adjoint(alpha<S>(p, r, qq)),
      tensor(identity<S>(p), sigma_tensor<S>(r, qq)),
      alpha<S>(p, qq, r),
  });

  std::vector<Morphism<S>> corr1, corr2;
  for (size_t i = 0; i < 4; ++i) corr1.push_back(adjoint(phi1[i]));
  const Shape f4 = nfold_shape(4, qq);
  for (size_t j = 0; j < 4; ++j) corr2.push_back(nfold(4, adjoint(phi2[j])));

  const Morphism<S> rhs = pipeline<S>({
      rho<S>(qq),
      tensor(identity<S>(qq), scalar_action(s * s, name_of(cn))),
      tensor(identity<S>(qq), tensor(u_tensor<S>(q, q), identity<S>(qq))),
      rearrange,
      tensor(tensor(obs, identity<S>(qq)), identity<S>(r)),
      tensor(compose(nfold(4, adjoint(lambda<S>(qq))),
                     upsilon_nary<S>(std::vector<Shape>(4, I), qq)),
             identity<S>(r)),
      tensor(direct_sum_of(corr1), identity<S>(r)),
      tensor(identity<S>(f4), obs),
      compose(nfold(4, adjoint(rho<S>(f4))),
              tau_nary<S>(f4, std::vector<Shape>(4, I))),
      direct_sum_of(corr2),
  });

  std::vector<Morphism<S>> inner(4, scalar_action(w, cn));
  const Morphism<S> inner_tuple = tuple_of(inner);
  std::vector<Morphism<S>> outer(4, scalar_action(w, inner_tuple));
  const Morphism<S> lhs = tuple_of(outer);

  ProtocolReport<S> report{"cnot-teleportation", lhs, rhs, lhs == rhs,
                           teleportation_base_conditions(s, tb.beta),
                           {},
                           detail::first_difference(lhs, rhs)};

  // Commutation identities making the corrections local (Bell base +
  // standard flip).  b2 plays the bit flip, b3 the phase flip.
  const auto& b = tb.beta;
  report.preconditions.emplace_back("cnot-unitary", is_unitary(cn));
  report.preconditions.emplace_back(
      "first-wire-bit-flip-commutation",
      compose(cn, tensor(b[1], one_q)) == compose(tensor(b[1], b[1]), cn));
  report.preconditions.emplace_back(
      "second-wire-bit-flip-commutation",
      compose(cn, tensor(one_q, b[1])) == compose(tensor(one_q, b[1]), cn));
  report.preconditions.emplace_back(
      "first-wire-phase-flip-commutation",
      compose(cn, tensor(b[2], one_q)) == compose(tensor(b[2], one_q), cn));
  report.preconditions.emplace_back(
      "second-wire-phase-flip-commutation",
      compose(cn, tensor(one_q, b[2])) == compose(tensor(b[2], b[2]), cn));
  report.preconditions.emplace_back(
      "first-wire-composite-commutation",
      compose(cn, tensor(b[3], one_q)) == compose(tensor(b[3], b[1]), cn));
  report.preconditions.emplace_back(
      "second-wire-composite-commutation",
      compose(cn, tensor(one_q, b[3])) == compose(tensor(b[2], b[3]), cn));
  {
    const std::vector<Morphism<S>> expect1 = {
        tensor(one_q, one_q), tensor(b[1], b[1]), tensor(b[2], one_q),
        tensor(b[3], b[1])};
    const std::vector<Morphism<S>> expect2 = {
        tensor(one_q, one_q), tensor(one_q, b[1]), tensor(b[2], b[2]),
        tensor(b[2], b[3])};
    bool t1 = true, t2 = true;
    for (size_t i = 0; i < 4; ++i) {
      t1 = t1 && phi1[i] == expect1[i];
      t2 = t2 && phi2[i] == expect2[i];
    }
    report.preconditions.emplace_back("first-corrections-are-products", t1);
    report.preconditions.emplace_back("second-corrections-are-products", t2);
  }

  const std::vector<Shape> inner_summands(4, qq);
  const std::vector<Shape> outer_summands(4, f4);
  for (size_t j = 0; j < 4; ++j) {
    for (size_t i = 0; i < 4; ++i) {
      const Morphism<S> branch = compose(
          projection<S>(i, inner_summands),
          compose(projection<S>(j, outer_summands), rhs));
      const bool ok = branch == scalar_action(w * w, cn);
      report.branches.push_back(BranchCheck{
          j * 4 + i,
          "adjoint(phi2[" + std::to_string(j + 1) + "]) after adjoint(phi1[" +
              std::to_string(i + 1) + "])",
          (w * w).to_text(), ok});
    }
  }
  return report;
}

/**
 * Verifies entanglement swapping.  Two named identities are prepared; the
 * middle two systems are hit by the four weighted entanglement projectors
 * built from ⌜conj_star(β_i)⌝∘⌞β_i⌟; after regrouping, branch i carries
 * ⌜β_i-transported⌝ ⊗ ⌜β_i⁻¹⌝ corrections on the outer wires.  The
 * composite must equal the fourfold diagonal of s̄s³ • (⌜1⌝ ⊗ ⌜1⌝): all
 * four branches hold the freshly swapped entangled pairs.
 */
template <InvolutiveScalar S>
ProtocolReport<S> verify_entanglement_swap(const TeleportationBase<S>& tb) {
  const Shape q = Shape::qubit(), qd = Shape::dual(q), I = Shape::unit();
  const Shape n = Shape::tensor(qd, q);   // a named pair
  const Shape x = Shape::tensor(q, qd);   // the observed middle pair
  const S s = tb.normalizer;
  const S w = conj(s) * s;
  const S lhs_weight = w * (s * s);

  const Morphism<S> nm = name_of(identity<S>(q));  // I → Q* ⊗ Q

  std::vector<Morphism<S>> projectors;
  for (size_t i = 0; i < 4; ++i) {
    const Morphism<S> gamma = conj_star(tb.beta[i]);
    projectors.push_back(scalar_action(
        w, compose(name_of(gamma), coname_of(tb.beta[i]))));
  }

  // Per-branch regrouping (d* ⊗ (a ⊗ b*)) ⊗ c → (b* ⊗ a) ⊗ (d* ⊗ c).
  const Morphism<S> regroup = pipeline<S>({
      tensor(sigma_tensor<S>(qd, x), identity<S>(q)),
      adjoint(alpha<S>(x, qd, q)),
      tensor(sigma_tensor<S>(q, qd), identity<S>(n)),
  });

  std::vector<Morphism<S>> corrections;
  for (size_t i = 0; i < 4; ++i) {
    const Morphism<S> gamma = conj_star(tb.beta[i]);
    corrections.push_back(
        tensor(tensor(identity<S>(qd), dual(adjoint(gamma))),
               tensor(identity<S>(qd), adjoint(tb.beta[i]))));
  }

  const Morphism<S> rhs = pipeline<S>({
      scalar_action(s * s, tensor(nm, nm)),
      alpha<S>(n, qd, q),
      tensor(adjoint(alpha<S>(qd, q, qd)), identity<S>(q)),
      tensor(tensor(identity<S>(qd), tuple_of(projectors)), identity<S>(q)),
      tensor(tau_nary<S>(qd, std::vector<Shape>(4, x)), identity<S>(q)),
      upsilon_nary<S>(std::vector<Shape>(4, Shape::tensor(qd, x)), q),
      nfold(4, regroup),
      direct_sum_of(corrections),
  });

  std::vector<Morphism<S>> diagonal(
      4, scalar_action(lhs_weight, tensor(nm, nm)));
  const Morphism<S> lhs = tuple_of(diagonal);

  ProtocolReport<S> report{"entanglement-swapping", lhs, rhs, lhs == rhs,
                           teleportation_base_conditions(s, tb.beta),
                           {},
                           detail::first_difference(lhs, rhs)};
  const std::vector<Shape> summands(4, Shape::tensor(n, n));
  for (size_t i = 0; i < 4; ++i) {
    const bool ok = compose(projection<S>(i, summands), rhs) ==
                    scalar_action(lhs_weight, tensor(nm, nm));
    report.branches.push_back(BranchCheck{
        i,
        "left pair dual(adjoint(conj_star(b" + std::to_string(i + 1) +
            "))), right pair adjoint(b" + std::to_string(i + 1) + ")",
        lhs_weight.to_text(), ok});
  }
  return report;
}

// ---------------------------------------------------------------------------
// The boolean-semiring search.

/** Outcome of enumerating every boolean teleportation-base candidate. */
struct RelSearchResult {
  std::int64_t candidates = 0;       // 2^16 candidate bases
  std::int64_t valid_bases = 0;      // how many satisfy the definition
  std::int64_t qubit_unitaries = 0;  // unitary 2×2 boolean matrices
};

/**
 * Enumerates all 65536 boolean 4×4 arrays as candidate bases (the
 * normalizer over booleans can only be 1, which does satisfy the scalar
 * condition: 1·1 + 1·1 = 1).  A candidate qualifies only if the base map
 * (4·I) → Q* ⊗ Q is unitary and every column un-names to a unitary on Q.
 * None qualifies, which is why the protocols above refuse boolean scalars.
 */
inline RelSearchResult rel_teleportation_search() {
  using S = BooleanScalar;
  RelSearchResult out;
  const Shape q = Shape::qubit();
  const Shape fourI = nfold_shape(4, Shape::unit());
  const Shape nq = Shape::tensor(Shape::dual(q), q);
  const std::vector<Shape> units(4, Shape::unit());

  for (unsigned bits = 0; bits < 16; ++bits) {
    DenseMatrix<S> m = zero_matrix<S>(2, 2);
    for (unsigned k = 0; k < 4; ++k) {
      m(static_cast<Index>(k / 2), static_cast<Index>(k % 2)) =
          S(static_cast<int>((bits >> k) & 1u));
    }
    if (is_unitary(Morphism<S>(q, q, std::move(m)))) ++out.qubit_unitaries;
  }

  for (std::uint32_t bits = 0; bits < 65536u; ++bits) {
    ++out.candidates;
    DenseMatrix<S> m = zero_matrix<S>(4, 4);
    for (Index r = 0; r < 4; ++r) {
      for (Index c = 0; c < 4; ++c) {
        m(r, c) = S(static_cast<int>((bits >> (r * 4 + c)) & 1u));
      }
    }
    const Morphism<S> base(fourI, nq, std::move(m));
    if (!is_unitary(base)) continue;
    bool all_unitary = true;
    for (size_t j = 0; j < 4 && all_unitary; ++j) {
      const Morphism<S> column = compose(base, injection<S>(j, units));
      all_unitary = is_unitary(unname(column));
    }
    if (all_unitary) ++out.valid_bases;
  }
  return out;
}

}  // namespace fmat
