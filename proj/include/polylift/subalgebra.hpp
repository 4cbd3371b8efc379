#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "polylift/relation.hpp"

namespace polylift {

  /// p = Boolean + p_ij, cp = p + c_i, csp = cp + s_ij.
  enum class Signature { P, CP, CSP };

  std::string_view to_string(Signature sig);

  inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 20;

  /// Least set of relations containing the generators, the empty and the full
  /// relation, closed under the operations of the signature. Elements come
  /// out in discovery order, starting with empty and full.
  std::vector<Relation> generate_subalgebra(SetAlgebraContext const&     ctx,
                                            std::vector<Relation> const& generators,
                                            Signature                    sig,
                                            std::size_t                  cap = kDefaultClosureCap);

}  // namespace polylift
