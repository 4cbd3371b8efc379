#pragma once

// Equality-free formulas of the alpha-variable logic: atoms R_k(v_i1, ..., v_ialpha),
// negation, conjunction and existential quantification.
//
// Text form (fully parenthesized prefix):
//
//   formula := (R<k> v<i1> ... v<ialpha>) | (not f) | (and f f) | (E <i> f)
//            | (or f f) | (imp f f) | (A <i> f)
//
// or, imp and A are sugar for the usual combinations of not/and/E; "R" is R0.

#include <string>
#include <string_view>
#include <vector>

namespace polylift {

  class Formula {
   public:
    enum class Kind { Atom, Not, And, Exists };

    static Formula atom(int symbol, std::vector<int> args);
    static Formula neg(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula exists(int i, Formula f);

    static Formula disj(Formula a, Formula b);
    static Formula implies(Formula a, Formula b);
    static Formula forall(int i, Formula f);

    Kind                    kind() const noexcept { return kind_; }
    int                     symbol() const noexcept { return n_; }
    int                     var() const noexcept { return n_; }  // binder of Exists
    std::vector<int> const& args() const noexcept { return args_; }
    Formula const&          child(std::size_t k = 0) const { return kids_[k]; }

    bool operator==(Formula const&) const = default;

   private:
    Formula(Kind kind, int n) : kind_(kind), n_(n) {}

    Kind                 kind_;
    int                  n_ = 0;
    std::vector<int>     args_;
    std::vector<Formula> kids_;
  };

  /// Throws IndexOutOfRange / DimensionMismatch unless every variable is below
  /// alpha and every atom has exactly alpha arguments.
  void check_formula(Formula const& f, int alpha);

  /// 1 + the largest relation symbol index (0 if there are no atoms).
  int num_symbols(Formula const& f);

  int depth(Formula const& f);

  /// Swaps v_i and v_j everywhere, binders included.
  Formula transpose_vars(int i, int j, Formula const& f);

  /// [v_i/v_j]: free v_i become v_j; a quantifier on v_j is renamed to v_i and
  /// its scope has v_i and v_j interchanged, so no new capture happens.
  Formula monk_subst(int i, int j, Formula const& f);

  /// The two-flag left-to-right scan: free v_i -> v_j, bound v_j -> v_i, binders
  /// of v_j renamed. Agrees with monk_subst unless a quantifier on v_i occurs
  /// inside one on v_j; kept for comparison.
  Formula scan_subst(int i, int j, Formula const& f);

  /// Replaces every occurrence of v_i by v_j, binders included.
  Formula naive_subst(int i, int j, Formula const& f);

  /// With sugar, not/and patterns print as or/imp/A where they match.
  std::string to_string(Formula const& f, bool sugar = true);

  /// alpha < 0: accept any atom arity.
  Formula parse_formula(std::string_view text, int alpha = -1);

}  // namespace polylift
