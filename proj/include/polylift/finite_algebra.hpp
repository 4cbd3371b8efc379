#pragma once

// Abstract csp-type algebras given by operation tables over {0, ..., size-1}.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polylift/relation.hpp"
#include "polylift/transform.hpp"

namespace polylift {

  struct FiniteAlgebra {
    using Element = int;

    int dim  = 0;
    int size = 0;
    int zero_element = 0;
    int one_element  = 0;

    std::vector<int>              meet_table;        // size * size
    std::vector<int>              complement_table;  // size
    std::vector<std::vector<int>> cyl_tables;        // [i][x]
    std::vector<std::vector<int>> subst_tables;      // [i * dim + j][x]
    std::vector<std::vector<int>> transp_tables;     // [i * dim + j][x]

    /// Throws MalformedTables on wrong shapes, out-of-range entries, or
    /// zero != complement(one).
    void validate() const;

    // Carrier interface.
    int           zero() const noexcept { return zero_element; }
    int           one() const noexcept { return one_element; }
    int           meet(int x, int y) const { return meet_table[idx2(x, y)]; }
    int           complement(int x) const { return complement_table[u(x)]; }
    int           cyl(int i, int x) const { return cyl_tables[u(i)][u(x)]; }
    int           subst(int i, int j, int x) const { return subst_tables[pair(i, j)][u(x)]; }
    int           transp(int i, int j, int x) const { return transp_tables[pair(i, j)][u(x)]; }
    std::uint64_t cardinality() const noexcept { return static_cast<std::uint64_t>(size); }
    int           element(std::uint64_t k) const { return static_cast<int>(k); }
    int           random_element(std::mt19937_64& rng) const {
      return static_cast<int>(rng() % static_cast<std::uint64_t>(size));
    }
    std::string format(int x) const { return std::to_string(x); }
    int         parse_element(std::string_view text) const;

    int join(int x, int y) const { return complement(meet(complement(x), complement(y))); }

   private:
    static std::size_t u(int v) { return static_cast<std::size_t>(v); }
    std::size_t        idx2(int x, int y) const { return u(x) * u(size) + u(y); }
    std::size_t        pair(int i, int j) const { return u(i) * u(dim) + u(j); }
  };

  /// s_sigma on an abstract algebra, tabulated: s_{g1} s_{g2} ... s_{gn} folded
  /// over decompose_mixed(sigma).
  std::vector<int> subst_sigma_table(FiniteAlgebra const& a, Transformation const& sigma);

  /// Tables of the csp set algebra with the given relations as universe; they
  /// must be closed under the operations (throws MalformedTables otherwise).
  FiniteAlgebra tabulate(std::vector<Relation> const& elements);

  /// Every relation over ctx, in code order; needs 2^(|U|^alpha) <= 2^16.
  std::vector<Relation> all_relations(SetAlgebraContext const& ctx);

  /// Direct product; (a, b) is encoded as a * b_size + b.
  FiniteAlgebra product(FiniteAlgebra const& a, FiniteAlgebra const& b);

  /// The two-element algebra {0, 1} with every c_i, s_ij, p_ij the identity.
  FiniteAlgebra two_element_algebra(int dim);

  std::string   to_json(FiniteAlgebra const& a);
  FiniteAlgebra finite_algebra_from_json(std::string const& text);

}  // namespace polylift
