#include "polylift/checker.hpp"

namespace polylift {

  std::vector<FpaViolation> check_is_fpa(FiniteAlgebra const& a, std::uint64_t budget) {
    a.validate();
    CheckOptions opt;
    opt.budget = budget;
    std::vector<FpaViolation> out;
    for (auto const& inst : instantiate_axioms(a.dim)) {
      auto r = check_equation(inst.eq, a, opt);
      if (!r.valid) {
        out.push_back({inst.label, r.witness, *r.lhs_value, *r.rhs_value});
      }
    }
    return out;
  }

}  // namespace polylift
