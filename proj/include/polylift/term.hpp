#pragma once

// Terms and equations over the csp signature.
//
// Text grammar (parenthesized prefix; parentheses are optional because every
// operator has fixed arity):
//
//   term := x<n> | 0 | 1
//         | (and term term) | (or term term) | (not term)
//         | (c i term) | (s i j term) | (p i j term) | (ssig "<image>" term)
//   equation := term = term
//
// "or" is read as (not (and (not a) (not b))); x, y, z abbreviate x0, x1, x2.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polylift/transform.hpp"

namespace polylift {

  class Term {
   public:
    enum class Kind { Var, Zero, One, Meet, Compl, Cyl, Subst, Transp, SubstSigma };

    static Term var(int n);
    static Term zero();
    static Term one();
    static Term meet(Term a, Term b);
    static Term complement(Term a);
    static Term cyl(int i, Term a);
    static Term subst(int i, int j, Term a);
    static Term transp(int i, int j, Term a);
    static Term subst_sigma(Transformation sigma, Term a);

    /// x + y := -(-x . -y)
    static Term join(Term a, Term b);

    Kind kind() const noexcept { return kind_; }
    int  var_index() const noexcept { return a_; }
    int  i() const noexcept { return a_; }
    int  j() const noexcept { return b_; }

    Transformation const&    sigma() const { return *sigma_; }
    Term const&              child(std::size_t k = 0) const { return kids_[k]; }
    std::vector<Term> const& children() const noexcept { return kids_; }

    bool operator==(Term const&) const = default;

   private:
    Term(Kind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}

    Kind                          kind_;
    int                           a_ = 0;
    int                           b_ = 0;
    std::optional<Transformation> sigma_;
    std::vector<Term>             kids_;
  };

  struct Equation {
    Term lhs;
    Term rhs;

    bool operator==(Equation const&) const = default;
  };

  /// Number of variables needed to evaluate: 1 + the largest variable index.
  int num_vars(Term const& t);
  int num_vars(Equation const& eq);

  /// Throws IndexOutOfRange / DimensionMismatch if t does not fit dimension dim.
  void check_dimension(Term const& t, int dim);

  /// Replaces every SubstSigma node by its s/p chain from decompose_mixed.
  Term desugar(Term const& t);

  std::string to_string(Term const& t);
  std::string to_string(Equation const& eq);
  Term        parse_term(std::string_view text);
  Equation    parse_equation(std::string_view text);

}  // namespace polylift
