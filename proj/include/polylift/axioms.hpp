#pragma once

// Instances of the FPA axiom schemas F0-F9 and of the derived polyadic
// equations S1-S6 for a fixed finite dimension.

#include <string>
#include <vector>

#include "polylift/term.hpp"

namespace polylift {

  struct LabeledEquation {
    std::string schema;  // "F0" ... "F9", "S1" ... "S6"
    std::string label;   // e.g. "F4[i=0,j=1]", "F0/bool:comm-meet"
    Equation    eq;
  };

  /// Every F0-F9 instance over indices below alpha. The Boolean part of F0 is
  /// Huntington's basis with x + y := -(-x . -y).
  std::vector<LabeledEquation> instantiate_axioms(int alpha);

  /// Every S1-S6 instance with s_sigma written as SubstSigma nodes; alpha <= 4.
  std::vector<LabeledEquation> instantiate_derived(int alpha);

  inline constexpr int kMaxDerivedDim = 4;

  /// Schema names in canonical order, for grouping reports.
  std::vector<std::string> axiom_schemas();
  std::vector<std::string> derived_schemas();

}  // namespace polylift
