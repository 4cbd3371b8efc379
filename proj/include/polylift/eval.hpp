#pragma once

// Term evaluation in any carrier: the full set algebra over a context, or an
// abstract FiniteAlgebra.

#include <bit>
#include <concepts>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "polylift/error.hpp"
#include "polylift/finite_algebra.hpp"
#include "polylift/relation.hpp"
#include "polylift/term.hpp"

namespace polylift {

  template <class C>
  concept Carrier = requires(C const& c, typename C::Element const& x, std::mt19937_64& rng,
                             std::uint64_t k, int i) {
    { c.zero() } -> std::convertible_to<typename C::Element>;
    { c.one() } -> std::convertible_to<typename C::Element>;
    { c.meet(x, x) } -> std::convertible_to<typename C::Element>;
    { c.complement(x) } -> std::convertible_to<typename C::Element>;
    { c.cyl(i, x) } -> std::convertible_to<typename C::Element>;
    { c.subst(i, i, x) } -> std::convertible_to<typename C::Element>;
    { c.transp(i, i, x) } -> std::convertible_to<typename C::Element>;
    { c.cardinality() } -> std::convertible_to<std::uint64_t>;
    { c.element(k) } -> std::convertible_to<typename C::Element>;
    { c.random_element(rng) } -> std::convertible_to<typename C::Element>;
    { c.format(x) } -> std::convertible_to<std::string>;
  };

  /// The full csp set algebra Sb(^alpha U) viewed as a carrier.
  class SetAlgebraCarrier {
   public:
    using Element = Relation;

    explicit SetAlgebraCarrier(SetAlgebraContext ctx) : ctx_(ctx) {}

    SetAlgebraContext const& ctx() const noexcept { return ctx_; }
    int                      dim() const noexcept { return ctx_.dim(); }

    Relation zero() const { return Relation::empty(ctx_); }
    Relation one() const { return Relation::full(ctx_); }
    Relation meet(Relation const& x, Relation const& y) const { return polylift::meet(x, y); }
    Relation complement(Relation const& x) const { return polylift::complement(x); }
    Relation cyl(int i, Relation const& x) const { return polylift::cyl(i, x); }
    Relation subst(int i, int j, Relation const& x) const { return polylift::subst(i, j, x); }
    Relation transp(int i, int j, Relation const& x) const { return polylift::transp(i, j, x); }

    /// 2^(|U|^alpha), saturated at 2^64 - 1.
    std::uint64_t cardinality() const noexcept {
      auto const n = ctx_.num_sequences();
      return n >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << n;
    }
    Relation element(std::uint64_t k) const { return Relation::from_code(ctx_, k); }
    Relation random_element(std::mt19937_64& rng) const {
      Relation r(ctx_);
      for (auto& w : r.words()) {
        w = rng();
      }
      auto const rem = ctx_.num_sequences() & 63;
      if (rem != 0) {
        r.words().back() &= (std::uint64_t{1} << rem) - 1;
      }
      return r;
    }
    std::string format(Relation const& x) const { return to_string(x); }
    Relation    parse_element(std::string_view text) const { return parse_relation(text, ctx_); }

   private:
    SetAlgebraContext ctx_;
  };

  inline int carrier_dim(SetAlgebraCarrier const& c) {
    return c.dim();
  }
  inline int carrier_dim(FiniteAlgebra const& a) {
    return a.dim;
  }

  /// Structural fold of t; SubstSigma goes through decompose_mixed.
  /// Does not range-check operator indices; see check_dimension.
  template <Carrier C>
  typename C::Element eval_term(Term const& t, std::span<typename C::Element const> assignment,
                                C const& carrier) {
    switch (t.kind()) {
      case Term::Kind::Var: {
        auto const n = static_cast<std::size_t>(t.var_index());
        if (n >= assignment.size()) {
          throw UnboundVariable("x" + std::to_string(n) + " is not assigned");
        }
        return assignment[n];
      }
      case Term::Kind::Zero:
        return carrier.zero();
      case Term::Kind::One:
        return carrier.one();
      case Term::Kind::Meet:
        return carrier.meet(eval_term(t.child(0), assignment, carrier),
                            eval_term(t.child(1), assignment, carrier));
      case Term::Kind::Compl:
        return carrier.complement(eval_term(t.child(0), assignment, carrier));
      case Term::Kind::Cyl:
        return carrier.cyl(t.i(), eval_term(t.child(0), assignment, carrier));
      case Term::Kind::Subst:
        return carrier.subst(t.i(), t.j(), eval_term(t.child(0), assignment, carrier));
      case Term::Kind::Transp:
        return carrier.transp(t.i(), t.j(), eval_term(t.child(0), assignment, carrier));
      case Term::Kind::SubstSigma: {
        auto value = eval_term(t.child(0), assignment, carrier);
        auto word  = decompose_mixed(t.sigma());
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          value = it->kind == Generator::Kind::Replacement ? carrier.subst(it->i, it->j, value)
                                                           : carrier.transp(it->i, it->j, value);
        }
        return value;
      }
    }
    throw Error("unknown term kind");
  }

  template <Carrier C>
  typename C::Element eval_term(Term const& t, std::vector<typename C::Element> const& assignment,
                                C const& carrier) {
    return eval_term<C>(t, std::span<typename C::Element const>(assignment), carrier);
  }

}  // namespace polylift
