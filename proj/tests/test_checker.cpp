#include <catch_amalgamated.hpp>

#include <random>

#include "polylift/axioms.hpp"
#include "polylift/checker.hpp"
#include "polylift/error.hpp"
#include "polylift/eval.hpp"
#include "support.hpp"

using namespace polylift;

namespace {

  // Set-of-sequences evaluator; shares no code with eval_term.
  oracle::SeqSet oracle_eval(Term const& t, std::vector<oracle::SeqSet> const& a, int dim, int base) {
    auto all = [&] {
      auto v = oracle::all_sequences(dim, base);
      return oracle::SeqSet(v.begin(), v.end());
    };
    auto kid = [&](std::size_t k) { return oracle_eval(t.child(k), a, dim, base); };
    switch (t.kind()) {
      case Term::Kind::Var:
        return a.at(static_cast<std::size_t>(t.var_index()));
      case Term::Kind::Zero:
        return {};
      case Term::Kind::One:
        return all();
      case Term::Kind::Meet: {
        auto const l = kid(0), r = kid(1);
        oracle::SeqSet out;
        for (auto const& s : l) {
          if (r.count(s)) {
            out.insert(s);
          }
        }
        return out;
      }
      case Term::Kind::Compl: {
        auto const     x = kid(0);
        oracle::SeqSet out;
        for (auto const& s : all()) {
          if (!x.count(s)) {
            out.insert(s);
          }
        }
        return out;
      }
      case Term::Kind::Cyl:
        return oracle::cyl(t.i(), kid(0), dim, base);
      case Term::Kind::Subst:
        return oracle::subst(t.i(), t.j(), kid(0), dim, base);
      case Term::Kind::Transp:
        return oracle::transp(t.i(), t.j(), kid(0), dim, base);
      case Term::Kind::SubstSigma: {
        std::vector<int> img(t.sigma().image().begin(), t.sigma().image().end());
        return oracle::subst_sigma(img, kid(0), dim, base);
      }
    }
    return {};
  }

  FiniteAlgebra full_algebra(int dim, int base) {
    return tabulate(all_relations(SetAlgebraContext(dim, base)));
  }

  bool has_label_prefix(std::vector<FpaViolation> const& v, std::string const& prefix) {
    for (auto const& x : v) {
      if (x.label.rfind(prefix, 0) == 0) {
        return true;
      }
    }
    return false;
  }

}  // namespace

TEST_CASE("refuting non-identities in Sb(2^2)", "[checker]") {
  SetAlgebraCarrier const car(SetAlgebraContext(2, 2));
  auto const              r = check_equation(parse_equation("s 0 1 x0 = x0"), car);
  REQUIRE_FALSE(r.valid);
  CHECK(r.witness_index == 1);
  CHECK(r.tested == 2);
  CHECK(to_string(r.witness.at(0)) == "{(0,0)}");
  CHECK(to_string(*r.lhs_value) == "{(0,0),(1,0)}");

  // the relation {(1,1)} also refutes it
  std::vector<Relation> w{parse_relation("{(1,1)}", car.ctx())};
  auto const            eq = parse_equation("s 0 1 x0 = x0");
  CHECK_FALSE(eval_term(eq.lhs, w, car) == eval_term(eq.rhs, w, car));

  auto const p = check_equation(parse_equation("p 0 1 x0 = x0"), car);
  REQUIRE_FALSE(p.valid);
  CHECK(to_string(p.witness.at(0)) == "{(1,0)}");

  auto const ok = check_equation(parse_equation("c 0 (c 0 x) = c 0 x"), car);
  CHECK(ok.valid);
  CHECK(ok.tested == 16);
  CHECK(ok.witness.empty());

  SetAlgebraCarrier const one(SetAlgebraContext(2, 1));
  CHECK(check_equation(parse_equation("s 0 1 x0 = x0"), one).valid);
  CHECK(check_equation(parse_equation("p 0 1 x0 = x0"), one).valid);
  CHECK(check_equation(parse_equation("0 = 0"), car).tested == 1);
}

TEST_CASE("checker errors", "[checker]") {
  SetAlgebraCarrier const car(SetAlgebraContext(3, 2));
  CHECK_THROWS_AS(check_equation(parse_equation("(and x (and y (and z x3))) = x"), car),
                  BudgetExceeded);
  CheckOptions tiny;
  tiny.budget = 100;
  CHECK_THROWS_AS(check_equation(parse_equation("x = x"), car, tiny), BudgetExceeded);
  CHECK_THROWS_AS(check_equation(parse_equation("c 3 x = x"), car), IndexOutOfRange);
  CHECK_THROWS_AS(check_equation(parse_equation("(ssig \"0 0\" x) = x"), car), DimensionMismatch);
  // sampling never needs the budget
  CheckOptions sampled;
  sampled.strategy = Strategy::sampled(50, 1);
  sampled.budget   = 1;
  CHECK(check_equation(parse_equation("(and x (and y (and z x3))) = (and x3 (and z (and y x)))"),
                       car, sampled)
            .valid);
}

TEST_CASE("checker is sound and complete against a nested-loop oracle", "[checker][property]") {
  int const               dim = 2, base = 2;
  SetAlgebraCarrier const car(SetAlgebraContext(dim, base));
  std::mt19937_64         rng(41);
  int                     valid_seen = 0, invalid_seen = 0;
  for (int k = 0; k < 150; ++k) {
    // shallow pairs of terms in one or two variables are sometimes equal
    Equation const eq{gen::term(dim, 2, 3, rng), gen::term(dim, 2, 3, rng)};
    int const      vars = std::max(1, num_vars(eq));
    bool           expect_valid = true;
    std::uint64_t  first_bad    = 0;
    std::uint64_t const total = vars > 1 ? 256 : 16;
    for (std::uint64_t idx = 0; idx < total && expect_valid; ++idx) {
      std::vector<oracle::SeqSet> asg{oracle::members(Relation::from_code(car.ctx(), idx % 16)),
                                      oracle::members(Relation::from_code(car.ctx(), idx / 16))};
      if (oracle_eval(eq.lhs, asg, dim, base) != oracle_eval(eq.rhs, asg, dim, base)) {
        expect_valid = false;
        first_bad    = idx;
      }
    }
    auto const r = check_equation(eq, car);
    REQUIRE(r.valid == expect_valid);
    if (expect_valid) {
      ++valid_seen;
      continue;
    }
    ++invalid_seen;
    REQUIRE(r.witness_index == first_bad);
    std::vector<oracle::SeqSet> asg;
    for (auto const& w : r.witness) {
      asg.push_back(oracle::members(w));
    }
    REQUIRE(oracle_eval(eq.lhs, asg, dim, base) != oracle_eval(eq.rhs, asg, dim, base));
    REQUIRE(oracle::members(*r.lhs_value) == oracle_eval(eq.lhs, asg, dim, base));
  }
  CHECK(valid_seen > 0);
  CHECK(invalid_seen > 0);
}

TEST_CASE("witness does not depend on jobs", "[checker][property]") {
  SetAlgebraCarrier const car(SetAlgebraContext(2, 3));
  // equal unless x and y meet outside the diagonal
  auto const eq = parse_equation("(and (and x y) (not (s 0 1 (and x y)))) = 0");
  for (auto strat : {Strategy::exhaustive(), Strategy::sampled(5000, 9)}) {
    CheckOptions opt;
    opt.strategy = strat;
    opt.budget   = std::uint64_t{1} << 20;
    CheckResult<Relation> first;
    for (unsigned jobs : {1u, 3u, 4u}) {
      opt.jobs     = jobs;
      auto const r = check_equation(eq, car, opt);
      REQUIRE_FALSE(r.valid);
      if (jobs == 1) {
        first = r;
      } else {
        CHECK(r.witness_index == first.witness_index);
        CHECK(r.witness == first.witness);
        CHECK(r.tested == first.tested);
      }
    }
  }
  CheckOptions opt;
  opt.jobs = 4;
  CHECK(check_equation(parse_equation("(c 0 (c 1 x)) = (c 1 (c 0 x))"), car, opt).valid);
}

TEST_CASE("sampled search is deterministic per seed", "[checker]") {
  SetAlgebraCarrier const car(SetAlgebraContext(3, 3));
  auto const              eq = parse_equation("(c 0 x) = (c 1 x)");
  auto run = [&](std::uint64_t seed) {
    CheckOptions opt;
    opt.strategy = Strategy::sampled(100, seed);
    return check_equation(eq, car, opt);
  };
  auto const a = run(7), b = run(7);
  REQUIRE_FALSE(a.valid);
  CHECK(a.witness == b.witness);
  CHECK(a.witness_index == b.witness_index);
  CHECK(mix_seed(1) != mix_seed(2));
  CHECK(bounded_power(2, 24, kDefaultBudget) == kDefaultBudget);
  CHECK_FALSE(bounded_power(2, 25, kDefaultBudget));
  CHECK(bounded_power(256, 0, 1) == 1);
}

TEST_CASE("axioms and derived equations hold in small set algebras", "[checker][axioms]") {
  for (auto const& [dim, base] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {1, 3}}) {
    SetAlgebraCarrier const car(SetAlgebraContext(dim, base));
    for (auto const& r : check_instances(instantiate_axioms(dim), car)) {
      CAPTURE(dim, base, r.instance.label);
      REQUIRE(r.result.valid);
    }
    for (auto const& r : check_instances(instantiate_derived(dim), car)) {
      CAPTURE(dim, base, r.instance.label);
      REQUIRE(r.result.valid);
    }
  }
}

TEST_CASE("derived equations hold in the tabulated algebra", "[checker][axioms]") {
  auto const a = full_algebra(2, 2);
  for (auto const& r : check_instances(instantiate_derived(2), a)) {
    CAPTURE(r.instance.label);
    REQUIRE(r.result.valid);
  }
  // s_sigma tables agree with the set operation
  auto const rels = all_relations(SetAlgebraContext(2, 2));
  for (auto const& s : enumerate_transformations(2)) {
    auto const t = subst_sigma_table(a, s);
    for (std::size_t x = 0; x < rels.size(); ++x) {
      REQUIRE(rels[static_cast<std::size_t>(t[x])] == subst_sigma(s, rels[x]));
    }
  }
}

TEST_CASE("check_is_fpa", "[checker][fpa]") {
  CHECK(check_is_fpa(full_algebra(2, 2)).empty());
  CHECK(check_is_fpa(full_algebra(1, 3)).empty());
  CHECK(check_is_fpa(two_element_algebra(3)).empty());
  CHECK(check_is_fpa(product(two_element_algebra(2), full_algebra(2, 2))).empty());

  auto tampered = full_algebra(2, 2);
  // p_01 := constant 0
  std::fill(tampered.transp_tables[0 * 2 + 1].begin(), tampered.transp_tables[0 * 2 + 1].end(),
            tampered.zero());
  auto const v = check_is_fpa(tampered);
  REQUIRE_FALSE(v.empty());
  CHECK(has_label_prefix(v, "F6/p-compl[i=0,j=1]"));
  CHECK(has_label_prefix(v, "F7[i=0,j=1]"));
  for (auto const& x : v) {
    CHECK(x.lhs != x.rhs);
  }

  // c_0 := identity breaks F3, not the Boolean part
  auto no_cyl = full_algebra(2, 2);
  for (int x = 0; x < no_cyl.size; ++x) {
    no_cyl.cyl_tables[0][static_cast<std::size_t>(x)] = x;
  }
  auto const w = check_is_fpa(no_cyl);
  CHECK(has_label_prefix(w, "F3[i=0,j=1]"));
  CHECK_FALSE(has_label_prefix(w, "F4"));
  CHECK_FALSE(has_label_prefix(w, "F0/bool"));

  CHECK_THROWS_AS(check_is_fpa(full_algebra(3, 2), 1000), BudgetExceeded);
}

TEST_CASE("finite algebra tables", "[checker][tables]") {
  auto const a = full_algebra(2, 2);
  CHECK(a.size == 16);
  CHECK(a.zero() == 0);
  CHECK(a.one() == 15);
  auto const b = finite_algebra_from_json(to_json(a));
  CHECK(b.dim == a.dim);
  CHECK(b.meet_table == a.meet_table);
  CHECK(b.complement_table == a.complement_table);
  CHECK(b.cyl_tables == a.cyl_tables);
  CHECK(b.subst_tables == a.subst_tables);
  CHECK(b.transp_tables == a.transp_tables);
  CHECK(to_json(b) == to_json(a));

  auto const p = product(two_element_algebra(2), a);
  CHECK(p.size == 32);
  CHECK(p.one() == 1 * 16 + 15);
  CHECK(a.parse_element("7") == 7);
  CHECK_THROWS_AS(a.parse_element("16"), ParseError);
  CHECK_THROWS_AS(a.parse_element("x"), ParseError);

  CHECK_THROWS_AS(finite_algebra_from_json("{"), MalformedTables);
  CHECK_THROWS_AS(finite_algebra_from_json("{\"alpha\": 2}"), MalformedTables);
  auto bad = a;
  bad.complement_table[3] = 99;
  CHECK_THROWS_AS(bad.validate(), MalformedTables);
  bad = a;
  bad.zero_element = 1;
  CHECK_THROWS_AS(bad.validate(), MalformedTables);
  bad = a;
  bad.subst_tables.pop_back();
  CHECK_THROWS_AS(bad.validate(), MalformedTables);
  CHECK_THROWS_AS(finite_algebra_from_json(to_json(bad)), MalformedTables);

  SetAlgebraContext const ctx(2, 2);
  CHECK_THROWS_AS(tabulate({Relation::empty(ctx), Relation::full(ctx), parse_relation("{(0,1)}", ctx)}),
                  MalformedTables);
  CHECK_THROWS_AS(all_relations(SetAlgebraContext(2, 5)), DimTooLarge);
}
