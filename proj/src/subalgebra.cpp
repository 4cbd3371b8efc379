#include "polylift/subalgebra.hpp"

#include <unordered_map>

#include "polylift/error.hpp"

namespace polylift {

  std::string_view to_string(Signature sig) {
    switch (sig) {
      case Signature::P:
        return "p";
      case Signature::CP:
        return "cp";
      case Signature::CSP:
        return "csp";
    }
    return "?";
  }

  std::vector<Relation> generate_subalgebra(SetAlgebraContext const&     ctx,
                                            std::vector<Relation> const& generators,
                                            Signature                    sig,
                                            std::size_t                  cap) {
    std::vector<Relation>                                  members;
    std::unordered_map<Relation, std::size_t, RelationHash> seen;

    auto add = [&](Relation r) {
      if (!(r.ctx() == ctx)) {
        throw DimensionMismatch("generator over " + context_header(r.ctx()) + " in "
                                + context_header(ctx));
      }
      if (seen.contains(r)) {
        return;
      }
      if (members.size() >= cap) {
        throw CapExceeded("subalgebra closure exceeded " + std::to_string(cap) + " elements");
      }
      seen.emplace(r, members.size());
      members.push_back(std::move(r));
    };

    add(Relation::empty(ctx));
    add(Relation::full(ctx));
    for (auto const& g : generators) {
      add(g);
    }

    int const n = ctx.dim();
    // Members before `done` have been combined with each other and had every
    // unary operation applied.
    for (std::size_t done = 0; done < members.size(); ++done) {
      Relation const x = members[done];
      add(complement(x));
      for (std::size_t k = 0; k <= done; ++k) {
        add(meet(members[k], x));
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          add(transp(i, j, x));
        }
      }
      if (sig == Signature::CP || sig == Signature::CSP) {
        for (int i = 0; i < n; ++i) {
          add(cyl(i, x));
        }
      }
      if (sig == Signature::CSP) {
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (i != j) {
              add(subst(i, j, x));
            }
          }
        }
      }
    }
    return members;
  }

}  // namespace polylift
