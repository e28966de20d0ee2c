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

// Command-line front end.
//
//   fmat lemmas     [--semiring S] [--seed N] [--count N]
//   fmat protocol   (teleport|gate-teleport|cnot-teleport|swap)
//                   [--semiring S] [--seed N] [--count N]
//   fmat born       --state TEXT [--object SHAPE] [--measurement M]
//                   [--semiring S] [--seed N]
//   fmat rel-search [--semiring S]
//   fmat dim        SHAPE [--semiring S]
//
// Every command accepts --format text|json and --out PATH (which writes the
// report to a file in addition to stdout).  Exit codes: 0 success, 1 a
// verification failed (the first counterexample is in the output), 2 the
// semiring cannot express the request, 3 shape mismatch, 4 malformed input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fmat/fmat.hpp"

namespace {

using fmat::BooleanScalar;
using fmat::ComplexRootTwo;
using fmat::Json;
using fmat::Morphism;
using fmat::Rng;
using fmat::Shape;
using fmat::SpectralDecomposition;
using fmat::TeleportationBase;

struct Options {
  std::string semiring;  // empty = per-command default
  std::uint64_t seed = 0;
  int count = -1;  // -1 = per-command default
  std::string format = "text";
  std::string out_path;

  std::string protocol_kind;
  std::string state_text;
  std::string object_text = "Q";
  std::string measurement = "standard";
  std::string shape_text;
};

/** Prints to stdout and, when --out was given, to the file as well. */
void emit(const Options& opt, const std::string& body) {
  std::cout << body;
  if (!body.empty() && body.back() != '\n') std::cout << '\n';
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw fmat::Error("cannot open output file " + opt.out_path);
    f << body;
    if (!body.empty() && body.back() != '\n') f << '\n';
  }
}

std::string bool_word(bool b) { return b ? "ok" : "FAIL"; }

// --- lemmas -----------------------------------------------------------------

template <class S>
int run_lemmas(const Options& opt) {
  const int cases = opt.count < 0 ? 200 : opt.count;
  const auto results = fmat::run_law_suite<S>(opt.seed, cases);
  bool all_ok = true;
  for (const auto& r : results) all_ok = all_ok && r.failures == 0;

  if (opt.format == "json") {
    Json j{{"schema", 1},
           {"command", "lemmas"},
           {"semiring", S::semiring_name},
           {"seed", opt.seed},
           {"cases", cases},
           {"ok", all_ok}};
    Json list = Json::array();
    for (const auto& r : results) list.push_back(fmat::to_json(r));
    j["results"] = std::move(list);
    if (cases == 0) j["note"] = "0 cases per law: vacuously passing";
    emit(opt, j.dump(2));
  } else {
    std::string body = "law suite over " + std::string(S::semiring_name) +
                       ": " + std::to_string(results.size()) + " laws, " +
                       std::to_string(cases) + " cases each, seed " +
                       std::to_string(opt.seed) + "\n";
    for (const auto& r : results) {
      body += "  " + bool_word(r.failures == 0) + " " + r.name + " (" +
              std::to_string(r.failures) + "/" + std::to_string(r.cases) +
              " failures)\n";
      if (!r.first_failure.empty()) {
        body += "      first counterexample: " + r.first_failure + "\n";
      }
    }
    if (cases == 0) {
      body += "note: 0 cases per law: vacuously passing\n";
    }
    body += all_ok ? "all laws hold\n" : "law suite FAILED\n";
    emit(opt, body);
  }
  return all_ok ? 0 : 1;
}

// --- protocol ---------------------------------------------------------------

template <class S>
fmat::ProtocolReport<S> run_one_protocol(const std::string& kind,
                                         const TeleportationBase<S>& tb) {
  if (kind == "teleport") return fmat::verify_teleportation(tb);
  if (kind == "gate-teleport") {
    // The most structured of the published gates; the full set is exercised
    // in the acceptance gate.
    return fmat::verify_gate_teleportation(tb, fmat::hadamard_like<S>());
  }
  if (kind == "cnot-teleport") {
    return fmat::verify_cnot_teleportation(tb, fmat::standard_cnot<S>());
  }
  return fmat::verify_entanglement_swap(tb);
}

template <class S>
int run_protocol(const Options& opt) {
  const int random_count = opt.count < 0 ? 5 : opt.count;

  std::vector<std::pair<std::string, TeleportationBase<S>>> bases;
  bases.emplace_back("bell", fmat::make_bell_base<S>());
  bases.emplace_back(
      "published/domain-major",
      fmat::base_from_entries(fmat::make_bell_base<S>().normalizer,
                              fmat::bell_base_entries<S>(),
                              fmat::VecReading::kDomainMajor));
  bases.emplace_back(
      "published/row-major",
      fmat::base_from_entries(fmat::make_bell_base<S>().normalizer,
                              fmat::bell_base_entries<S>(),
                              fmat::VecReading::kEntryRowMajor));
  // The controlled-flip corrections are products only for bell-like bases,
  // so random bases drive the base-generic protocols only.
  if (opt.protocol_kind != "cnot-teleport") {
    Rng rng(opt.seed);
    for (int k = 0; k < random_count; ++k) {
      bases.emplace_back("random #" + std::to_string(k + 1),
                         fmat::random_teleportation_base<S>(rng));
    }
  }

  bool all_ok = true;
  std::vector<std::pair<std::string, fmat::ProtocolReport<S>>> runs;
  for (const auto& [label, tb] : bases) {
    runs.emplace_back(label, run_one_protocol<S>(opt.protocol_kind, tb));
    all_ok = all_ok && runs.back().second.ok();
  }

  if (opt.format == "json") {
    Json j{{"schema", 1},
           {"command", "protocol"},
           {"protocol", opt.protocol_kind},
           {"semiring", S::semiring_name},
           {"ok", all_ok}};
    Json list = Json::array();
    for (const auto& [label, rep] : runs) {
      Json entry = fmat::to_json(rep);
      entry["base"] = label;
      list.push_back(std::move(entry));
    }
    j["runs"] = std::move(list);
    emit(opt, j.dump(2));
  } else {
    std::string body = "protocol " + opt.protocol_kind + " over " +
                       std::string(S::semiring_name) + "\n";
    for (const auto& [label, rep] : runs) {
      body += "  " + bool_word(rep.ok()) + " base " + label + ": " +
              std::to_string(rep.branches.size()) + " branches";
      int bad_pre = 0;
      for (const auto& [name, good] : rep.preconditions) {
        if (!good) ++bad_pre;
      }
      if (bad_pre > 0) {
        body += ", " + std::to_string(bad_pre) + " preconditions FAILED";
      }
      if (!rep.equal && rep.first_difference) {
        body += "; first difference at (" +
                std::to_string(rep.first_difference->row) + ", " +
                std::to_string(rep.first_difference->col) + "): " +
                rep.first_difference->lhs + " vs " +
                rep.first_difference->rhs;
      }
      body += "\n";
    }
    body += all_ok ? "protocol verified\n" : "protocol verification FAILED\n";
    emit(opt, body);
  }
  return all_ok ? 0 : 1;
}

// --- born ---------------------------------------------------------------------

template <class S>
int run_born(const Options& opt) {
  const Shape a = Shape::parse(opt.object_text);
  const Morphism<S> psi = fmat::parse_state<S>(opt.state_text, a);

  SpectralDecomposition<S> sd = [&]() {
    if (opt.measurement == "standard") {
      return SpectralDecomposition<S>(
          fmat::adjoint(fmat::canonical_basis<S>(a)),
          std::vector<Shape>(static_cast<size_t>(a.dim()), Shape::unit()));
    }
    Rng rng(opt.seed);
    return fmat::random_spectral<S>(rng, a);
  }();

  const auto branches = fmat::born(sd, psi);
  S total = S(0);
  bool self_adjoint = true;
  for (const auto& b : branches) {
    total += b.probability;
    self_adjoint = self_adjoint && conj(b.probability) == b.probability;
  }
  const bool ok = self_adjoint && total == S(1);

  if (opt.format == "json") {
    Json j{{"schema", 1},
           {"command", "born"},
           {"semiring", S::semiring_name},
           {"object", a.to_text()},
           {"measurement", opt.measurement},
           {"state", opt.state_text},
           {"sum", total.to_text()},
           {"ok", ok}};
    Json list = Json::array();
    for (const auto& b : branches) list.push_back(fmat::to_json(b));
    j["branches"] = std::move(list);
    emit(opt, j.dump(2));
  } else {
    std::string body = "state " + opt.state_text + " measured on " +
                       a.to_text() + " (" + opt.measurement + "): " +
                       std::to_string(branches.size()) + " branches\n";
    for (const auto& b : branches) {
      body += "  branch " + std::to_string(b.index + 1) + ": probability " +
              b.probability.to_text();
      if (b.amplitude) body += " (amplitude " + b.amplitude->to_text() + ")";
      body += "\n";
    }
    body += "probabilities sum to " + total.to_text() +
            (ok ? "\n" : " — INCONSISTENT\n");
    emit(opt, body);
  }
  return ok ? 0 : 1;
}

// --- rel-search ---------------------------------------------------------------

int run_rel_search(const Options& opt) {
  if (!opt.semiring.empty() && opt.semiring != "boolean") {
    throw fmat::UnsupportedSemiringError(
        "the exhaustive base search enumerates boolean matrices; over " +
        opt.semiring + " the candidate space is infinite");
  }
  const fmat::RelSearchResult r = fmat::rel_teleportation_search();
  const bool ok = r.valid_bases == 0 && r.qubit_unitaries == 2;

  if (opt.format == "json") {
    Json j{{"schema", 1},
           {"command", "rel-search"},
           {"semiring", "boolean"},
           {"ok", ok}};
    j["result"] = fmat::to_json(r);
    emit(opt, j.dump(2));
  } else {
    std::string body =
        "searched " + std::to_string(r.candidates) +
        " candidate bases over the boolean semiring: " +
        std::to_string(r.valid_bases) + " valid\n" +
        "unitary 2x2 boolean matrices: " + std::to_string(r.qubit_unitaries) +
        "\n";
    body += ok ? "no boolean teleportation base exists\n"
               : "UNEXPECTED search outcome\n";
    emit(opt, body);
  }
  return ok ? 0 : 1;
}

// --- dim ----------------------------------------------------------------------

template <class S>
int run_dim(const Options& opt) {
  const Shape a = Shape::parse(opt.shape_text);
  const S d = fmat::dim_scalar<S>(a);

  if (opt.format == "json") {
    Json j{{"schema", 1},
           {"command", "dim"},
           {"semiring", S::semiring_name},
           {"shape", a.to_text()},
           {"dimension", fmat::dim_int(a)},
           {"scalar_dimension", d.to_text()}};
    emit(opt, j.dump(2));
  } else {
    emit(opt, "shape " + a.to_text() + ": dimension " +
                  std::to_string(fmat::dim_int(a)) + ", scalar dimension " +
                  d.to_text() + "\n");
  }
  return 0;
}

// --- dispatch -------------------------------------------------------------------

template <class Fn>
int with_semiring(const std::string& semiring, const std::string& fallback,
                  Fn&& fn) {
  const std::string chosen = semiring.empty() ? fallback : semiring;
  if (chosen == "boolean") return fn(BooleanScalar{});
  return fn(ComplexRootTwo{});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact matrix semantics of quantum protocols over involutive semirings"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--semiring", opt.semiring, "scalar semiring")
        ->check(CLI::IsMember({"boolean", "complex-root-two"}));
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", opt.out_path,
                    "also write the report to this file");
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--count", opt.count, "case / base count")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* lemmas = app.add_subcommand(
      "lemmas", "run the equational law suite on random morphisms");
  add_common(lemmas);

  CLI::App* protocol =
      app.add_subcommand("protocol", "verify a protocol, branch by branch");
  protocol
      ->add_option("kind", opt.protocol_kind,
                   "teleport | gate-teleport | cnot-teleport | swap")
      ->required()
      ->check(CLI::IsMember(
          {"teleport", "gate-teleport", "cnot-teleport", "swap"}));
  add_common(protocol);

  CLI::App* born =
      app.add_subcommand("born", "branch probabilities of a measurement");
  born->add_option("--state", opt.state_text,
                   "state expression, e.g. \"s*(1,1)\"")
      ->required();
  born->add_option("--object", opt.object_text, "measured shape (default Q)");
  born->add_option("--measurement", opt.measurement,
                   "measurement basis")
      ->check(CLI::IsMember({"standard", "random"}));
  add_common(born);

  CLI::App* rel = app.add_subcommand(
      "rel-search", "enumerate all boolean teleportation-base candidates");
  add_common(rel);

  CLI::App* dim =
      app.add_subcommand("dim", "dimension and scalar dimension of a shape");
  dim->add_option("shape", opt.shape_text, "shape expression, e.g. \"Q*Q\"")
      ->required();
  add_common(dim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }

  try {
    if (lemmas->parsed()) {
      return with_semiring(opt.semiring, "complex-root-two", [&](auto tag) {
        return run_lemmas<decltype(tag)>(opt);
      });
    }
    if (protocol->parsed()) {
      return with_semiring(opt.semiring, "complex-root-two", [&](auto tag) {
        return run_protocol<decltype(tag)>(opt);
      });
    }
    if (born->parsed()) {
      return with_semiring(opt.semiring, "complex-root-two", [&](auto tag) {
        return run_born<decltype(tag)>(opt);
      });
    }
    if (rel->parsed()) return run_rel_search(opt);
    if (dim->parsed()) {
      return with_semiring(opt.semiring, "complex-root-two", [&](auto tag) {
        return run_dim<decltype(tag)>(opt);
      });
    }
    return 4;  // unreachable: require_subcommand(1)
  } catch (const fmat::UnsupportedSemiringError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const fmat::ShapeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const fmat::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const fmat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
