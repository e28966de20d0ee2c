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

// Acceptance gate: every release-blocking property in one binary, one line
// per criterion, exact (zero-tolerance) comparisons throughout. Exit status
// is 0 only when every criterion passes. Where a criterion carries a time
// budget, exceeding the budget fails it even if the mathematics holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fmat/fmat.hpp"

namespace {

using fmat::BasisPath;
using fmat::BooleanScalar;
using fmat::Index;
using fmat::Morphism;
using fmat::Rational;
using fmat::Rng;
using fmat::Shape;
using fmat::SpectralDecomposition;
using fmat::TeleportationBase;

using C = fmat::ComplexRootTwo;
using B = BooleanScalar;

Shape q() { return Shape::qubit(); }

C half() { return C(Rational(1, 2), 0, 0, 0); }
C quarter() { return C(Rational(1, 4), 0, 0, 0); }

/** The published target of teleportation: four stacked copies of ½·1_Q. */
Morphism<C> fourfold_diagonal(const Morphism<C>& f) {
  return fmat::tuple_of<C>(std::vector<Morphism<C>>(
      4, fmat::scalar_action(half(), f)));
}

// --- Criterion 1: teleportation ---------------------------------------------

std::optional<std::string> teleportation_criterion() {
  const Morphism<C> target = fourfold_diagonal(fmat::identity<C>(q()));

  std::vector<std::pair<std::string, TeleportationBase<C>>> bases;
  bases.emplace_back("bell", fmat::make_bell_base<C>());
  bases.emplace_back(
      "published/domain-major",
      fmat::base_from_entries(C::inv_sqrt2(), fmat::bell_base_entries<C>(),
                              fmat::VecReading::kDomainMajor));
  bases.emplace_back(
      "published/row-major",
      fmat::base_from_entries(C::inv_sqrt2(), fmat::bell_base_entries<C>(),
                              fmat::VecReading::kEntryRowMajor));
  Rng rng(20260817);
  for (int k = 0; k < 20; ++k) {
    bases.emplace_back("random #" + std::to_string(k + 1),
                       fmat::random_teleportation_base<C>(rng));
  }

  for (const auto& [label, tb] : bases) {
    const auto rep = fmat::verify_teleportation(tb);
    if (!rep.ok()) return "base " + label + ": protocol verification fails";
    // The composite must literally be the fourfold diagonal of ½·1_Q.
    if (rep.rhs != target) {
      return "base " + label + ": composite is not the fourfold diagonal";
    }
  }
  return std::nullopt;
}

// --- Criterion 2: bell correction identities --------------------------------

std::optional<std::string> bell_corrections_criterion() {
  const auto bell = fmat::make_bell_base<C>();
  const Morphism<C> one = fmat::identity<C>(q());

  // Inversion-free: exhibit each claimed inverse and check both composites.
  for (size_t i = 0; i < 3; ++i) {
    if (fmat::compose(bell.beta[i], bell.beta[i]) != one) {
      return "b" + std::to_string(i + 1) + " is not its own inverse";
    }
  }

  // The fourth correction: β₄⁻¹ = β₃ ∘ σ_Q, with the qubit's swap built from
  // the biproduct symmetry conjugated through the computational basis.
  const Morphism<C> basis = fmat::computational_qubit_basis<C>();
  const Morphism<C> swap_q = fmat::compose(
      basis, fmat::compose(
                 fmat::sigma_biproduct<C>(Shape::unit(), Shape::unit()),
                 fmat::adjoint(basis)));
  const Morphism<C> claimed_inverse = fmat::compose(bell.beta[2], swap_q);
  if (fmat::compose(bell.beta[3], claimed_inverse) != one) {
    return "b4 ∘ (b3 ∘ swap) is not the identity";
  }
  if (fmat::compose(claimed_inverse, bell.beta[3]) != one) {
    return "(b3 ∘ swap) ∘ b4 is not the identity";
  }

  for (const auto& [name, ok] : fmat::bell_base_identities(bell)) {
    if (!ok) return "identity '" + name + "' fails";
  }
  return std::nullopt;
}

// --- Criterion 3: logic-gate teleportation -----------------------------------

std::optional<std::string> gate_teleportation_criterion() {
  const auto bell = fmat::make_bell_base<C>();
  const std::vector<std::pair<std::string, Morphism<C>>> gates = {
      {"identity", fmat::identity<C>(q())},
      {"bit-flip", fmat::bit_flip<C>()},
      {"phase-flip", fmat::phase_flip<C>()},
      {"composite-flip",
       fmat::compose(fmat::bit_flip<C>(), fmat::phase_flip<C>())},
      {"basis-rotation", fmat::hadamard_like<C>()},
  };
  for (const auto& [label, f] : gates) {
    const auto rep = fmat::verify_gate_teleportation(bell, f);
    if (!rep.ok()) return "gate " + label + ": verification fails";
    if (rep.rhs != fourfold_diagonal(f)) {
      return "gate " + label + ": composite is not the fourfold diagonal of f";
    }
  }
  return std::nullopt;
}

// --- Criterion 4: controlled-flip teleportation ------------------------------

std::optional<std::string> cnot_teleportation_criterion() {
  const auto rep = fmat::verify_cnot_teleportation(
      fmat::make_bell_base<C>(), fmat::standard_cnot<C>());

  // The four assumed commutation equations and the two that follow.
  const std::vector<std::string> assumed = {
      "first-wire-bit-flip-commutation", "second-wire-bit-flip-commutation",
      "first-wire-phase-flip-commutation",
      "second-wire-phase-flip-commutation"};
  const std::vector<std::string> derived = {
      "first-wire-composite-commutation", "second-wire-composite-commutation"};
  for (const auto& want : assumed) {
    bool found = false, ok = false;
    for (const auto& [name, good] : rep.preconditions) {
      if (name == want) found = true, ok = good;
    }
    if (!found || !ok) return "assumed equation '" + want + "' fails";
  }
  for (const auto& want : derived) {
    bool found = false, ok = false;
    for (const auto& [name, good] : rep.preconditions) {
      if (name == want) found = true, ok = good;
    }
    if (!found || !ok) return "derived equation '" + want + "' fails";
  }
  if (!rep.ok()) return "16-branch verification fails";
  if (rep.branches.size() != 16) return "expected 16 branches";
  for (const auto& b : rep.branches) {
    if (b.weight != "1/4") {
      return "branch " + std::to_string(b.index) + " weight is " + b.weight +
             ", not 1/4";
    }
  }

  // The composite must literally be the 16-fold diagonal of ¼·cnot.
  const Morphism<C> cn = fmat::standard_cnot<C>();
  const Morphism<C> inner = fmat::tuple_of<C>(
      std::vector<Morphism<C>>(4, fmat::scalar_action(quarter(), cn)));
  const Morphism<C> target =
      fmat::tuple_of<C>(std::vector<Morphism<C>>(4, inner));
  if (rep.rhs != target) return "composite is not the 16-fold diagonal";
  return std::nullopt;
}

// --- Criterion 5: entanglement swapping --------------------------------------

std::optional<std::string> entanglement_swap_criterion() {
  const auto bell = fmat::make_bell_base<C>();
  const auto rep = fmat::verify_entanglement_swap(bell);
  if (!rep.ok()) return "protocol verification fails";

  // Target: four stacked copies of ¼ · (⌜1⌝ ⊗ ⌜1⌝).
  const Morphism<C> nm = fmat::name_of(fmat::identity<C>(q()));
  const Morphism<C> target = fmat::tuple_of<C>(std::vector<Morphism<C>>(
      4, fmat::scalar_action(quarter(), fmat::tensor(nm, nm))));
  if (rep.rhs != target) return "composite is not the fourfold swapped pair";

  // The measurement family: weighted entanglement projectors.
  const C w = conj(bell.normalizer) * bell.normalizer;
  if (w != half()) return "branch weight s†s is not 1/2";
  std::vector<Morphism<C>> ps;
  for (const Morphism<C>& beta : bell.beta) {
    const Morphism<C> gamma = fmat::conj_star(beta);
    ps.push_back(fmat::scalar_action(
        w, fmat::compose(fmat::name_of(gamma), fmat::coname_of(beta))));
  }
  const Shape obj = ps[0].dom();
  Morphism<C> sum = fmat::zero_morphism<C>(obj, obj);
  for (size_t i = 0; i < ps.size(); ++i) {
    if (!fmat::is_self_adjoint(ps[i])) {
      return "projector " + std::to_string(i + 1) + " is not self-adjoint";
    }
    if (fmat::compose(ps[i], ps[i]) != ps[i]) {
      return "projector " + std::to_string(i + 1) + " is not idempotent";
    }
    for (size_t j = 0; j < ps.size(); ++j) {
      if (i != j && fmat::compose(ps[i], ps[j]) !=
                        fmat::zero_morphism<C>(obj, obj)) {
        return "projectors " + std::to_string(i + 1) + " and " +
               std::to_string(j + 1) + " are not orthogonal";
      }
    }
    sum = fmat::add(sum, ps[i]);
  }
  // Weight consistency: the four s†s-weighted projectors resolve the
  // identity, so the branch weights exhaust the state exactly.
  if (sum != fmat::identity<C>(obj)) {
    return "weighted projectors do not resolve the identity";
  }
  return std::nullopt;
}

// --- Criterion 6: the equational law suite -----------------------------------

template <class S>
std::optional<std::string> law_suite_failures(const char* semiring) {
  const auto results = fmat::run_law_suite<S>(6021, 200);
  if (results.size() != 14) {
    return std::string(semiring) + ": expected 14 laws, found " +
           std::to_string(results.size());
  }
  for (const auto& r : results) {
    if (r.cases != 200) {
      return std::string(semiring) + ": law '" + r.name +
             "' ran " + std::to_string(r.cases) + " cases, not 200";
    }
    if (r.failures != 0) {
      return std::string(semiring) + ": law '" + r.name + "' fails (" +
             r.first_failure + ")";
    }
  }
  return std::nullopt;
}

std::optional<std::string> law_suite_criterion() {
  if (auto err = law_suite_failures<C>("complex-root-two")) return err;
  if (auto err = law_suite_failures<B>("boolean")) return err;
  return std::nullopt;
}

// --- Criterion 7: branch probabilities ---------------------------------------

std::optional<std::string> born_criterion() {
  int pairs = 0;
  Rng rng(8101);
  const std::vector<Shape> objects = {
      q(), Shape::tensor(q(), q()), Shape::biproduct(q(), Shape::unit()),
      Shape::tensor(Shape::dual(q()), q())};
  for (const Shape& a : objects) {
    for (int k = 0; k < 13; ++k) {
      const SpectralDecomposition<C> sd = fmat::random_spectral<C>(rng, a);
      const Morphism<C> psi = fmat::random_preparation<C>(rng, a);
      const auto branches = fmat::born(sd, psi);
      C total = C(0);
      for (const auto& b : branches) {
        if (conj(b.probability) != b.probability) {
          return "pair " + std::to_string(pairs + 1) + " on " + a.to_text() +
                 ": probability " + b.probability.to_text() +
                 " is not self-adjoint";
        }
        total += b.probability;
      }
      if (total != C(1)) {
        return "pair " + std::to_string(pairs + 1) + " on " + a.to_text() +
               ": probabilities sum to " + total.to_text();
      }
      ++pairs;
    }
  }

  // Fixed cross-checks with independently computed outcomes.
  const SpectralDecomposition<C> standard(
      fmat::adjoint(fmat::canonical_basis<C>(q())), {Shape::unit(), Shape::unit()});
  const auto ground = fmat::born(
      standard, Morphism<C>(Shape::unit(), q(), {{C(1)}, {C(0)}}));
  if (ground[0].probability != C(1) || ground[1].probability != C(0)) {
    return "measuring |0> in the computational basis is not deterministic";
  }
  const C s = C::inv_sqrt2();
  const auto plus =
      fmat::born(standard, Morphism<C>(Shape::unit(), q(), {{s}, {s}}));
  if (plus[0].probability != half() || plus[1].probability != half()) {
    return "the plus state is not an even coin";
  }
  const auto bell = fmat::make_bell_base<C>();
  const auto entangled = fmat::born(
      SpectralDecomposition<C>(fmat::adjoint(bell.base()),
                               std::vector<Shape>(4, Shape::unit())),
      fmat::scalar_action(bell.normalizer, fmat::eta<C>(q())));
  if (entangled[0].probability != C(1) || entangled[1].probability != C(0) ||
      entangled[2].probability != C(0) || entangled[3].probability != C(0)) {
    return "bell measurement of the entangled pair is not deterministic";
  }
  pairs += 3;
  if (pairs < 50) return "corpus holds only " + std::to_string(pairs) + " pairs";
  return std::nullopt;
}

// --- Criterion 8: spectral projector laws ------------------------------------

std::optional<std::string> spectral_criterion() {
  Rng rng(909);
  const std::vector<Shape> objects = {q(), Shape::tensor(q(), q()),
                                      Shape::biproduct(q(), Shape::unit())};
  for (int trial = 0; trial < 21; ++trial) {
    const Shape a = objects[trial % objects.size()];
    const SpectralDecomposition<C> sd = fmat::random_spectral<C>(rng, a);
    Morphism<C> sum = fmat::zero_morphism<C>(a, a);
    for (size_t j = 0; j < sd.size(); ++j) {
      const Morphism<C>& pj = sd.projector(j);
      const std::string at = "decomposition " + std::to_string(trial + 1) +
                             ", projector " + std::to_string(j + 1);
      if (!fmat::is_self_adjoint(pj)) return at + ": not self-adjoint";
      if (fmat::compose(pj, pj) != pj) return at + ": not idempotent";
      for (size_t k = 0; k < sd.size(); ++k) {
        if (k != j && fmat::compose(pj, sd.projector(k)) !=
                          fmat::zero_morphism<C>(a, a)) {
          return at + ": not orthogonal to projector " + std::to_string(k + 1);
        }
      }
      sum = fmat::add(sum, pj);
    }
    if (sum != fmat::identity<C>(a)) {
      return "decomposition " + std::to_string(trial + 1) +
             ": projectors do not resolve the identity";
    }
  }
  return std::nullopt;
}

// --- Criterion 9: the boolean semiring ---------------------------------------

std::optional<std::string> boolean_criterion() {
  const fmat::RelSearchResult r = fmat::rel_teleportation_search();
  if (r.candidates != 65536) {
    return "searched " + std::to_string(r.candidates) +
           " candidates, not 65536";
  }
  if (r.valid_bases != 0) {
    return std::to_string(r.valid_bases) +
           " boolean teleportation bases found; expected none";
  }
  if (r.qubit_unitaries != 2) {
    return std::to_string(r.qubit_unitaries) +
           " boolean unitaries on Q; expected exactly 2";
  }

  // Independent count of the boolean 2×2 unitaries.
  int unitaries = 0;
  for (int bits = 0; bits < 16; ++bits) {
    fmat::DenseMatrix<B> m = fmat::zero_matrix<B>(2, 2);
    for (int k = 0; k < 4; ++k) m(k / 2, k % 2) = B((bits >> k) & 1);
    if (fmat::is_unitary(Morphism<B>(q(), q(), m))) ++unitaries;
  }
  if (unitaries != 2) {
    return "independent count finds " + std::to_string(unitaries) +
           " unitaries on Q";
  }

  // The scalar dimension collapses to 1 for every nonempty shape.
  std::vector<Shape> pool = fmat::small_shape_pool(4);
  pool.push_back(Shape::tensor(q(), Shape::dual(q())));
  pool.push_back(Shape::biproduct(Shape::tensor(q(), q()), q()));
  pool.push_back(Shape::dual(Shape::biproduct(q(), Shape::unit())));
  for (const Shape& a : pool) {
    if (fmat::dim_scalar<B>(a) != B(1)) {
      return "dim over booleans is not 1 on " + a.to_text();
    }
  }
  return std::nullopt;
}

// --- Criterion 10: structural coherence --------------------------------------

Index index_of(const Shape& a, const BasisPath& p) {
  const auto paths = fmat::linearize(a);
  for (size_t k = 0; k < paths.size(); ++k) {
    if (paths[k] == p) return static_cast<Index>(k);
  }
  return -1;
}

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

std::optional<std::string> coherence_criterion() {
  Rng rng(515);

  // Every generated structural isomorphism is unitary (adjoint inverse on
  // both sides), over a pool of random shape combinations.
  for (int round = 0; round < 10; ++round) {
    const Shape a = fmat::random_shape(rng, 3);
    const Shape b = fmat::random_shape(rng, 3);
    const Shape c = fmat::random_shape(rng, 3);
    const std::vector<Morphism<C>> gens = {
        fmat::alpha<C>(a, b, c),
        fmat::lambda<C>(a),
        fmat::rho<C>(b),
        fmat::sigma_tensor<C>(a, b),
        fmat::sigma_biproduct<C>(a, b),
        fmat::tau_left<C>(a, b, c),
        fmat::upsilon_right<C>(a, b, c),
        fmat::u_unit<C>(),
        fmat::u_tensor<C>(a, b),
        fmat::nu<C>(a, b),
        fmat::d_nm<C>(2, 3),
        fmat::tau_nary<C>(a, {b, c, a}),
        fmat::upsilon_nary<C>({a, b, c}, b),
    };
    for (const Morphism<C>& m : gens) {
      if (fmat::compose(fmat::adjoint(m), m) != fmat::identity<C>(m.dom()) ||
          fmat::compose(m, fmat::adjoint(m)) != fmat::identity<C>(m.cod())) {
        return "a structural generator on " + a.to_text() + ", " +
               b.to_text() + ", " + c.to_text() + " is not unitary";
      }
    }
  }

  // Distributor naturality on 100 random triples of morphisms.
  for (int trial = 0; trial < 100; ++trial) {
    const Shape a = fmat::random_shape(rng, 3), a2 = fmat::random_shape(rng, 3);
    const Shape b = fmat::random_shape(rng, 3), b2 = fmat::random_shape(rng, 3);
    const Shape c = fmat::random_shape(rng, 3), c2 = fmat::random_shape(rng, 3);
    const Morphism<C> f = fmat::random_morphism<C>(rng, a, a2);
    const Morphism<C> g = fmat::random_morphism<C>(rng, b, b2);
    const Morphism<C> h = fmat::random_morphism<C>(rng, c, c2);
    const Morphism<C> lhs =
        fmat::compose(fmat::tau_left<C>(a2, b2, c2),
                      fmat::tensor(f, fmat::direct_sum(g, h)));
    const Morphism<C> rhs =
        fmat::compose(fmat::direct_sum(fmat::tensor(f, g), fmat::tensor(f, h)),
                      fmat::tau_left<C>(a, b, c));
    if (lhs != rhs) {
      return "distributor naturality fails on triple " + std::to_string(trial);
    }
  }

  // Permutation matrices match brute-force relocation of basis paths.
  for (int trial = 0; trial < 25; ++trial) {
    const Shape a = fmat::random_shape(rng, 3);
    const Shape b = fmat::random_shape(rng, 3);
    const Shape c = fmat::random_shape(rng, 3);
    const bool sigma_ok = matches_path_map(
        fmat::sigma_tensor<C>(a, b), [](const BasisPath& p) {
          return BasisPath::pair(p.right(), p.left());
        });
    if (!sigma_ok) {
      return "symmetry matrix on " + a.to_text() + " ⊗ " + b.to_text() +
             " does not match path relocation";
    }
    const bool tau_ok = matches_path_map(
        fmat::tau_left<C>(a, b, c), [](const BasisPath& p) {
          const BasisPath tagged = p.right();
          return BasisPath::side(tagged.is_right(),
                                 BasisPath::pair(p.left(), tagged.sub()));
        });
    if (!tau_ok) {
      return "left distributor on " + a.to_text() + ", " + b.to_text() + ", " +
             c.to_text() + " does not match path relocation";
    }
    const bool upsilon_ok = matches_path_map(
        fmat::upsilon_right<C>(a, b, c), [](const BasisPath& p) {
          const BasisPath tagged = p.left();
          return BasisPath::side(tagged.is_right(),
                                 BasisPath::pair(tagged.sub(), p.right()));
        });
    if (!upsilon_ok) {
      return "right distributor on " + a.to_text() + ", " + b.to_text() +
             ", " + c.to_text() + " does not match path relocation";
    }
  }
  return std::nullopt;
}

// --- Driver -------------------------------------------------------------------

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 = no stated budget
  std::function<std::optional<std::string>()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "teleportation-fourfold-diagonal", 1.0, teleportation_criterion},
      {2, "bell-correction-inverses", 0.0, bell_corrections_criterion},
      {3, "logic-gate-teleportation", 1.0, gate_teleportation_criterion},
      {4, "controlled-flip-teleportation", 5.0, cnot_teleportation_criterion},
      {5, "entanglement-swapping", 5.0, entanglement_swap_criterion},
      {6, "equational-law-suite", 10.0, law_suite_criterion},
      {7, "branch-probabilities", 0.0, born_criterion},
      {8, "spectral-projector-laws", 0.0, spectral_criterion},
      {9, "boolean-semiring-results", 10.0, boolean_criterion},
      {10, "structural-coherence", 0.0, coherence_criterion},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::string> err;
    try {
      err = c.run();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (!err && c.budget_seconds > 0 && elapsed >= c.budget_seconds) {
      std::ostringstream os;
      os << "exceeded the " << c.budget_seconds << " s budget";
      err = os.str();
    }
    std::printf("%s %2d %-34s %6.2f s", err ? "FAIL" : "PASS", c.id, c.name,
                elapsed);
    if (c.budget_seconds > 0) std::printf(" (budget %.0f s)", c.budget_seconds);
    if (err) std::printf(": %s", err->c_str());
    std::printf("\n");
    if (err) ++failed;
  }
  if (failed == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("acceptance: %d of %zu criteria FAILED\n", failed,
              criteria.size());
  return 1;
}
