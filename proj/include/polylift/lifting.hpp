#pragma once

// Lifting a cp-representation of a finite FPA to a csp-representation on the
// blown-up base V = U x H, together with an executable check of every step.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polylift/finite_algebra.hpp"
#include "polylift/relation.hpp"
#include "polylift/transform.hpp"

namespace polylift {

  class LiftContext {
   public:
    /// colors defaults to dim + 1; must exceed dim.
    LiftContext(int dim, int inner_base, int colors = 0);

    int dim() const noexcept { return dim_; }
    int inner_base() const noexcept { return inner_; }
    int colors() const noexcept { return colors_; }
    int outer_base() const noexcept { return inner_ * colors_; }

    SetAlgebraContext const& u_ctx() const noexcept { return u_ctx_; }
    SetAlgebraContext const& v_ctx() const noexcept { return v_ctx_; }

    /// v = u * |H| + color
    int pair(int u, int color) const noexcept { return u * colors_ + color; }
    int u_of(int v) const noexcept { return v / colors_; }
    int color_of(int v) const noexcept { return v % colors_; }

   private:
    int               dim_;
    int               inner_;
    int               colors_;
    SetAlgebraContext u_ctx_;
    SetAlgebraContext v_ctx_;
  };

  /// Element-indexed images of an abstract algebra in a set algebra.
  struct Representation {
    FiniteAlgebra         source;
    SetAlgebraContext     target;
    std::vector<Relation> images;
  };

  /// The tabulated algebra on `elements` (closed under csp) with f = inclusion.
  Representation inclusion_representation(std::vector<Relation> const& elements);

  /// nullopt if f is an injective homomorphism for the Booleans, c_i and p_ij;
  /// otherwise a description of the first failure.
  std::optional<std::string> verify_cp_representation(Representation const& f);

  /// First components: result_i = u_of(s_i).
  std::vector<int> hat(std::vector<int> const& s, int colors);

  /// W: the repetition-free sequences over V.
  Relation repetition_free(SetAlgebraContext const& v_ctx);

  /// g(x) = { s in W : hat(s) in f(x) }.
  std::vector<Relation> build_g(Representation const& f, LiftContext const& lc);

  /// h(x) = { z o sigma : z in g(s_sigma x), sigma in T }.
  std::vector<Relation> build_h(FiniteAlgebra const& a, std::vector<Relation> const& g,
                                LiftContext const& lc);

  struct Factorization {
    std::vector<int> z;
    Transformation   sigma;
  };

  /// s = z o sigma with z repetition-free. Later duplicates are recolored with
  /// the smallest color (same u) not taken by s or an earlier recoloring, and
  /// sigma points them at the first occurrence. Needs colors >= dim.
  Factorization factor_sequence(std::vector<int> const& s, int inner_base, int colors);

  struct PushforwardViolation {
    int         a = 0;
    int         b = 0;
    int         i = 0;
    int         j = 0;
    std::string reason;
  };

  struct Pushforward {
    std::vector<Relation>               image;     // distinct g-values, first-seen order
    std::vector<int>                    class_of;  // element -> index into image
    std::optional<FiniteAlgebra>        induced;   // s_ij+ tables included
    std::optional<PushforwardViolation> violation;
  };

  /// Projects the s_ij tables of a through g onto the g-image.
  Pushforward kernel_pushforward(FiniteAlgebra const& a, std::vector<Relation> const& g);

  struct LiftCheck {
    std::string   name;
    bool          passed = true;
    std::uint64_t cases  = 0;
    std::string   witness;
  };

  struct LiftReport {
    LiftContext            lc;
    std::vector<LiftCheck> checks;
    std::vector<Relation>  g;
    std::vector<Relation>  h;

    bool passed() const;
  };

  /// Runs the whole construction, stopping at the first failed check.
  LiftReport lift_and_verify(Representation const& f, int colors = 0);

}  // namespace polylift
