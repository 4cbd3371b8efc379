#pragma once

// Finite models for the alpha-variable logic, Tarskian satisfaction, the
// meaning map into set algebras and bounded equivalence search.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polylift/formula.hpp"
#include "polylift/relation.hpp"

namespace polylift {

  struct Model {
    int                     base = 1;
    int                     dim  = 1;
    std::map<int, Relation> relations;  // symbol -> alpha-ary relation over base

    SetAlgebraContext ctx() const { return {dim, base}; }
  };

  /// s is a length-alpha sequence over the base.
  bool satisfies(Model const& m, std::span<int const> s, Formula const& f);

  /// { s : m, s |= f }, evaluated sequence by sequence.
  Relation meaning(Model const& m, Formula const& f);

  /// s(i/s_j) satisfies f iff s satisfies monk_subst(i, j, f); returns the
  /// first assignment where that fails.
  std::optional<std::vector<int>> subst_law_failure(Model const& m, Formula const& f, int i, int j);

  inline constexpr std::uint64_t kDefaultModelBudget  = std::uint64_t{1} << 16;
  inline constexpr std::uint64_t kDefaultModelSamples = 1000;

  struct EquivOptions {
    int           max_base = 3;
    std::uint64_t budget   = kDefaultModelBudget;  // models per base before sampling
    std::uint64_t samples  = kDefaultModelSamples;
    std::uint64_t seed     = 0;
  };

  struct EquivCounterexample {
    Model            model;
    std::vector<int> assignment;
    bool             phi_value = false;
    bool             psi_value = false;
  };

  struct EquivResult {
    bool                               equivalent = true;
    int                                up_to_base = 0;  // largest base searched
    std::vector<int>                   sampled_bases;
    std::uint64_t                      models = 0;
    std::optional<EquivCounterexample> counterexample;
  };

  /// Bases 1..max_base in order; within a base, interpretations in code order
  /// (or seeded samples above the budget) and assignments in index order. The
  /// first disagreement is re-verified before it is returned.
  EquivResult equiv_sample(Formula const& phi, Formula const& psi, int alpha,
                           EquivOptions const& opt = {});

  struct DemoReport {
    int         alpha = 2;
    Formula     phi;
    Formula     psi;
    Formula     naive_phi;
    Formula     naive_psi;
    Formula     monk_phi;
    Formula     monk_psi;
    EquivResult pair;
    EquivResult naive;
    EquivResult monk;
    std::uint64_t law_cases    = 0;
    bool          law_verified = false;

    /// The pair agrees, the naive images are separated, the Monk images agree
    /// and the substitution law held everywhere it was tested.
    bool ok() const;
  };

  /// Pair R(v0,...,v0), E v1 R(v0,...,v0) under substitution of v1 for v0.
  DemoReport demo_counterexample(int alpha, EquivOptions const& opt = {});

  // "alpha=2 base=2 R0={(1,1)}; R1=hex:3"
  std::string to_string(Model const& m);
  Model       parse_model(std::string_view text);
  std::string sequence_string(std::span<int const> s);
  std::string to_string(EquivResult const& r);
  std::string to_string(DemoReport const& r);

}  // namespace polylift
