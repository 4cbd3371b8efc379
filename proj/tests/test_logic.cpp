#include <catch_amalgamated.hpp>

#include <random>

#include "polylift/error.hpp"
#include "polylift/formula.hpp"
#include "polylift/logic.hpp"
#include "support.hpp"

using namespace polylift;

namespace {

  // Tarski semantics written out directly on vectors.
  bool tarski(Model const& m, std::vector<int> s, Formula const& f) {
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        std::vector<int> t;
        for (int a : f.args()) {
          t.push_back(s[static_cast<std::size_t>(a)]);
        }
        return oracle::members(m.relations.at(f.symbol())).count(t) > 0;
      }
      case Formula::Kind::Not:
        return !tarski(m, s, f.child());
      case Formula::Kind::And:
        return tarski(m, s, f.child(0)) && tarski(m, s, f.child(1));
      case Formula::Kind::Exists:
        for (int u = 0; u < m.base; ++u) {
          if (tarski(m, oracle::with(s, f.var(), u), f.child())) {
            return true;
          }
        }
        return false;
    }
    return false;
  }

  Model random_model(int dim, int base, int symbols, std::mt19937_64& rng) {
    Model m;
    m.dim  = dim;
    m.base = base;
    for (int k = 0; k < symbols; ++k) {
      m.relations.emplace(k, gen::relation(m.ctx(), rng));
    }
    return m;
  }

  Model model_with(int dim, int base, std::string const& r0) {
    Model m;
    m.dim  = dim;
    m.base = base;
    m.relations.emplace(0, parse_relation(r0, m.ctx()));
    return m;
  }

  int binder_nesting(Formula const& f) {
    switch (f.kind()) {
      case Formula::Kind::Atom:
        return 0;
      case Formula::Kind::Exists:
        return 1 + binder_nesting(f.child());
      case Formula::Kind::And:
        return std::max(binder_nesting(f.child(0)), binder_nesting(f.child(1)));
      default:
        return binder_nesting(f.child());
    }
  }

}  // namespace

TEST_CASE("formula text", "[logic][text]") {
  auto const f = parse_formula("(E 1 (and (R0 v0 v1) (not (R1 v1 v0))))");
  REQUIRE(f.kind() == Formula::Kind::Exists);
  CHECK(f.var() == 1);
  CHECK(num_symbols(f) == 2);
  CHECK(depth(f) == 3);
  CHECK(to_string(f) == "(E 1 (and (R0 v0 v1) (not (R1 v1 v0))))");

  CHECK(parse_formula("(R v0 v0)") == Formula::atom(0, {0, 0}));
  auto const a = Formula::atom(0, {0, 1});
  auto const b = Formula::atom(0, {1, 0});
  CHECK(parse_formula("(or (R0 v0 v1) (R0 v1 v0))") == Formula::disj(a, b));
  CHECK(parse_formula("(imp (R0 v0 v1) (R0 v1 v0))") == Formula::implies(a, b));
  CHECK(parse_formula("(A 0 (R0 v0 v1))") == Formula::forall(0, a));
  CHECK(to_string(Formula::forall(0, a)) == "(A 0 (R0 v0 v1))");
  CHECK(to_string(Formula::forall(0, a), false) == "(not (E 0 (not (R0 v0 v1))))");

  CHECK_THROWS_AS(parse_formula("(R0 v0 v1)", 3), Error);
  CHECK_THROWS_AS(parse_formula("(R0 v0 v3)", 3), Error);
  CHECK_THROWS_AS(parse_formula("(Q v0)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(and (R v0))"), ParseError);
  CHECK_THROWS_AS(parse_formula("R v0"), ParseError);
  CHECK_THROWS_AS(check_formula(Formula::exists(5, a), 2), IndexOutOfRange);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    auto const g = gen::formula(3, 2, 5, rng);
    REQUIRE(parse_formula(to_string(g), 3) == g);
    REQUIRE(parse_formula(to_string(g, false), 3) == g);
  }
}

TEST_CASE("model text", "[logic][text]") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    auto const m  = random_model(2 + k % 2, 1 + k % 3, 1 + k % 2, rng);
    auto const m2 = parse_model(to_string(m));
    REQUIRE(to_string(m2) == to_string(m));
    REQUIRE(m2.relations.size() == m.relations.size());
  }
  auto const m = parse_model("alpha=2 base=2 R0={(1,1)}");
  CHECK(m.relations.at(0) == parse_relation("{(1,1)}", SetAlgebraContext(2, 2)));
  CHECK(sequence_string(std::vector<int>{0, 1}) == "(0,1)");
  CHECK_THROWS_AS(parse_model("alpha=2 R0={}"), ParseError);
}

TEST_CASE("satisfaction and meaning", "[logic]") {
  auto const m = model_with(2, 2, "{(0,1)}");
  auto const r = parse_formula("(R0 v0 v1)");
  CHECK(satisfies(m, std::vector<int>{0, 1}, r));
  CHECK_FALSE(satisfies(m, std::vector<int>{1, 0}, r));
  CHECK(satisfies(m, std::vector<int>{1, 0}, parse_formula("(R0 v1 v0)")));
  CHECK(satisfies(m, std::vector<int>{1, 1}, parse_formula("(E 0 (R0 v0 v1))")));
  CHECK_FALSE(satisfies(m, std::vector<int>{1, 1}, parse_formula("(A 0 (R0 v0 v1))")));
  CHECK(meaning(m, parse_formula("(E 0 (R0 v0 v1))")) == parse_relation("{(0,1),(1,1)}", m.ctx()));
  CHECK(meaning(m, parse_formula("(R0 v1 v1)")).is_empty());

  CHECK_THROWS_AS(satisfies(m, std::vector<int>{0, 1}, parse_formula("(R1 v0 v1)")),
                  UninterpretedSymbol);
  CHECK_THROWS_AS(satisfies(m, std::vector<int>{0, 2}, r), Error);
  CHECK_THROWS_AS(meaning(m, parse_formula("(R0 v0 v1 v0)")), Error);
}

TEST_CASE("satisfaction matches the Tarski oracle", "[logic][property]") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 120; ++k) {
    int const  dim = 2 + k % 2, base = 1 + k % 3;
    auto const m   = random_model(dim, base, 2, rng);
    auto const f   = gen::formula(dim, 2, 4, rng);
    for (auto const& s : oracle::all_sequences(dim, base)) {
      REQUIRE(satisfies(m, s, f) == tarski(m, s, f));
    }
  }
}

TEST_CASE("meaning is a homomorphism", "[logic][property]") {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 150; ++k) {
    int const  dim = 2 + k % 2, base = 2;
    auto const m   = random_model(dim, base, 2, rng);
    auto const f   = gen::formula(dim, 2, 4, rng);
    auto const mf  = meaning(m, f);
    switch (f.kind()) {
      case Formula::Kind::Atom:
        REQUIRE(mf == subst_sigma(Transformation(f.args()), m.relations.at(f.symbol())));
        break;
      case Formula::Kind::Not:
        REQUIRE(mf == complement(meaning(m, f.child())));
        break;
      case Formula::Kind::And:
        REQUIRE(mf == meet(meaning(m, f.child(0)), meaning(m, f.child(1))));
        break;
      case Formula::Kind::Exists:
        REQUIRE(mf == cyl(f.var(), meaning(m, f.child())));
        break;
    }
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        REQUIRE(meaning(m, monk_subst(i, j, f)) == subst(i, j, mf));
        REQUIRE(meaning(m, transpose_vars(i, j, f)) == transp(i, j, mf));
      }
    }
  }
}

TEST_CASE("substitution variants", "[logic]") {
  auto const f = parse_formula("(E 1 (R0 v0 v1))");
  CHECK(transpose_vars(0, 1, f) == parse_formula("(E 0 (R0 v1 v0))"));
  CHECK(naive_subst(0, 1, f) == parse_formula("(E 1 (R0 v1 v1))"));
  // the binder of v1 is renamed so the new v1 stays free
  CHECK(monk_subst(0, 1, f) == parse_formula("(E 0 (R0 v1 v0))"));
  CHECK(monk_subst(0, 1, parse_formula("(E 0 (R0 v0 v1))")) == parse_formula("(E 0 (R0 v0 v1))"));
  CHECK(monk_subst(0, 0, f) == f);
  CHECK(monk_subst(0, 1, parse_formula("(R0 v0 v0)")) == parse_formula("(R0 v1 v1)"));
  CHECK(scan_subst(0, 1, f) == monk_subst(0, 1, f));

  // nested binders: the scan disagrees with Monk and breaks the substitution law
  auto const nested = parse_formula("(E 1 (E 0 (R0 v0 v1)))");
  CHECK_FALSE(scan_subst(0, 1, nested) == monk_subst(0, 1, nested));
  bool broken = false;
  for (std::uint64_t code = 0; code < 16 && !broken; ++code) {
    Model m;
    m.dim  = 2;
    m.base = 2;
    m.relations.emplace(0, Relation::from_code(m.ctx(), code));
    REQUIRE_FALSE(subst_law_failure(m, nested, 0, 1));
    auto const scanned = scan_subst(0, 1, nested);
    for (auto const& s : oracle::all_sequences(2, 2)) {
      if (satisfies(m, oracle::with(s, 0, s[1]), nested) != satisfies(m, s, scanned)) {
        broken = true;
      }
    }
  }
  CHECK(broken);
}

TEST_CASE("scan agrees with Monk without nested binders", "[logic][property]") {
  std::mt19937_64 rng(31);
  int             compared = 0;
  for (int k = 0; k < 400; ++k) {
    auto const f = gen::formula(3, 1, 4, rng);
    if (binder_nesting(f) > 1) {
      continue;
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        INFO(to_string(f));
        REQUIRE(scan_subst(i, j, f) == monk_subst(i, j, f));
        ++compared;
      }
    }
  }
  CHECK(compared > 0);
}

TEST_CASE("substitution law on random formulas", "[logic][property]") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 200; ++k) {
    int const  dim = 2 + k % 2;
    auto const m   = random_model(dim, 2 + k % 2, 2, rng);
    auto const f   = gen::formula(dim, 2, 4, rng);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        auto const fail = subst_law_failure(m, f, i, j);
        INFO(to_string(f) << " i=" << i << " j=" << j);
        REQUIRE_FALSE(fail);
        // and by the oracle
        auto const g = monk_subst(i, j, f);
        for (auto const& s : oracle::all_sequences(dim, m.base)) {
          REQUIRE(tarski(m, oracle::with(s, i, s[static_cast<std::size_t>(j)]), f) == tarski(m, s, g));
        }
      }
    }
  }
}

TEST_CASE("bounded equivalence", "[logic][equiv]") {
  auto const a = parse_formula("(R0 v0 v1)");
  auto const e = equiv_sample(a, parse_formula("(not (not (R0 v0 v1)))"), 2);
  CHECK(e.equivalent);
  CHECK(e.up_to_base == 3);
  CHECK(e.sampled_bases.empty());
  CHECK(to_string(e) == "equivalent-up-to(base 3)");

  auto const n = equiv_sample(parse_formula("(E 0 (R0 v0 v1))"), parse_formula("(E 1 (R0 v0 v1))"), 2);
  REQUIRE_FALSE(n.equivalent);
  auto const& cx = *n.counterexample;
  CHECK(satisfies(cx.model, cx.assignment, parse_formula("(E 0 (R0 v0 v1))")) == cx.phi_value);
  CHECK(cx.phi_value != cx.psi_value);
  CHECK(to_string(n).rfind("counterexample: ", 0) == 0);

  // naive images of the demo pair, refuted by R = {(1,1)} at s = (0,0)
  auto const np = parse_formula("(R0 v1 v1)");
  auto const nq = parse_formula("(E 1 (R0 v1 v1))");
  auto const m  = model_with(2, 2, "{(1,1)}");
  CHECK_FALSE(satisfies(m, std::vector<int>{0, 0}, np));
  CHECK(satisfies(m, std::vector<int>{0, 0}, nq));
  CHECK_FALSE(equiv_sample(np, nq, 2).equivalent);

  // forcing the sampler
  EquivOptions opt;
  opt.budget  = 4;
  opt.samples = 50;
  auto const s = equiv_sample(a, parse_formula("(and (R0 v0 v1) (R0 v0 v1))"), 2, opt);
  CHECK(s.equivalent);
  CHECK_FALSE(s.sampled_bases.empty());
  auto const s2 = equiv_sample(a, parse_formula("(R0 v1 v0)"), 2, opt);
  CHECK_FALSE(s2.equivalent);
}

TEST_CASE("demo counterexample", "[logic][demo]") {
  for (int alpha : {2, 3}) {
    auto const r = demo_counterexample(alpha);
    INFO(to_string(r));
    CHECK(r.ok());
    CHECK(r.pair.equivalent);
    CHECK_FALSE(r.naive.equivalent);
    CHECK(r.monk.equivalent);
    CHECK(r.law_verified);
    CHECK(r.law_cases > 0);
    CHECK(r.monk.up_to_base == 3);
    auto const& cx = *r.naive.counterexample;
    CHECK(satisfies(cx.model, cx.assignment, r.naive_phi) == cx.phi_value);
    CHECK(satisfies(cx.model, cx.assignment, r.naive_psi) == cx.psi_value);
  }
  auto const r2 = demo_counterexample(2);
  CHECK(r2.monk_phi == parse_formula("(R0 v1 v1)"));
  CHECK(r2.monk_psi == parse_formula("(E 0 (R0 v1 v1))"));
}
