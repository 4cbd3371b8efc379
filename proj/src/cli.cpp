#include "polylift/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polylift/axioms.hpp"
#include "polylift/checker.hpp"
#include "polylift/error.hpp"
#include "polylift/eval.hpp"
#include "polylift/finite_algebra.hpp"
#include "polylift/formula.hpp"
#include "polylift/lifting.hpp"
#include "polylift/logic.hpp"
#include "polylift/subalgebra.hpp"
#include "polylift/transform.hpp"

namespace polylift::cli {

  namespace {

    using json = nlohmann::ordered_json;

    // Bad flag values, missing inputs and the like: exit code 2.
    class UsageError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    struct Config {
      int           alpha        = 3;
      int           base         = 2;
      int           h_size       = 0;
      std::uint64_t seed         = 0;
      std::uint64_t budget       = kDefaultBudget;
      unsigned      jobs         = 1;
      bool          json_mode    = false;
      bool          exhaustive   = false;
      std::uint64_t sampled      = 0;
      std::string   algebra_file;
    };

    void add_common(CLI::App* sub, Config& c) {
      sub->add_option("--alpha", c.alpha, "Dimension alpha")->capture_default_str();
      sub->add_option("--base", c.base, "Base size |U|")->capture_default_str();
      sub->add_option("--h-size", c.h_size, "Color count |H| (default alpha+1)");
      sub->add_option("--seed", c.seed, "Seed for sampling and random inputs")->capture_default_str();
      sub->add_option("--budget", c.budget, "Exhaustive assignment budget (env POLYLIFT_BUDGET wins)")
          ->capture_default_str();
      sub->add_option("--jobs", c.jobs, "Worker threads")->capture_default_str();
      sub->add_flag("--json", c.json_mode, "Machine-readable output");
      auto* ex = sub->add_flag("--exhaustive", c.exhaustive, "Enumerate every assignment (default)");
      auto* sa = sub->add_option("--sampled", c.sampled, "Check N seeded random assignments");
      ex->excludes(sa);
    }

    void finalize(Config& c) {
      if (char const* env = std::getenv("POLYLIFT_BUDGET"); env != nullptr && *env != '\0') {
        try {
          std::size_t used = 0;
          c.budget         = std::stoull(env, &used);
          if (env[used] != '\0') {
            throw std::invalid_argument(env);
          }
        } catch (std::exception const&) {
          throw UsageError(std::string("POLYLIFT_BUDGET is not a number: ") + env);
        }
      }
      if (c.alpha < 1) {
        throw UsageError("--alpha must be positive");
      }
      if (c.base < 1) {
        throw UsageError("--base must be positive");
      }
      if (c.jobs < 1) {
        c.jobs = 1;
      }
    }

    CheckOptions check_options(Config const& c) {
      CheckOptions opt;
      opt.budget = c.budget;
      opt.jobs   = c.jobs;
      if (c.sampled > 0) {
        opt.strategy = Strategy::sampled(c.sampled, c.seed);
      }
      return opt;
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw UsageError("cannot read " + path);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    template <Carrier C>
    std::string witness_string(C const& carrier, std::vector<typename C::Element> const& w) {
      std::string out;
      for (std::size_t v = 0; v < w.size(); ++v) {
        out += (v ? "; x" : "x") + std::to_string(v) + "=" + carrier.format(w[v]);
      }
      return out;
    }

    template <Carrier C>
    std::vector<typename C::Element> parse_witness(C const& carrier, std::string_view text,
                                                   int vars) {
      std::map<int, typename C::Element> items;
      std::size_t                        pos = 0;
      while (pos <= text.size()) {
        auto end = text.find(';', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        auto item = text.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') {
          item.remove_prefix(1);
        }
        if (!item.empty()) {
          auto const eq = item.find('=');
          if (eq == std::string_view::npos || item.front() != 'x') {
            throw ParseError("expected 'xN=<element>' in witness", pos);
          }
          auto name = item.substr(1, eq - 1);
          while (!name.empty() && name.back() == ' ') {
            name.remove_suffix(1);
          }
          int n = 0;
          try {
            n = std::stoi(std::string(name));
          } catch (std::exception const&) {
            throw ParseError("bad variable in witness", pos);
          }
          items.insert_or_assign(n, carrier.parse_element(item.substr(eq + 1)));
        }
        pos = end + 1;
      }
      std::vector<typename C::Element> out;
      for (int v = 0; v < vars; ++v) {
        auto it = items.find(v);
        if (it == items.end()) {
          throw ParseError("witness does not assign x" + std::to_string(v), 0);
        }
        out.push_back(it->second);
      }
      return out;
    }

    std::string strategy_line(Config const& c, CheckOptions const& opt) {
      if (opt.strategy.kind == Strategy::Kind::Sampled) {
        return "sampled " + std::to_string(opt.strategy.samples) + ", seed "
               + std::to_string(opt.strategy.seed);
      }
      return "exhaustive, budget " + std::to_string(c.budget);
    }

    json strategy_json(CheckOptions const& opt) {
      json j;
      j["strategy"] = opt.strategy.kind == Strategy::Kind::Sampled ? "sampled" : "exhaustive";
      j["samples"]  = opt.strategy.kind == Strategy::Kind::Sampled ? opt.strategy.samples : 0;
      j["seed"]     = opt.strategy.seed;
      return j;
    }

    ////////////////////////////////////////////////////////////////////////
    // axioms / derived
    ////////////////////////////////////////////////////////////////////////

    template <Carrier C>
    int report_instances(std::string const& command, C const& carrier, std::string const& where,
                         std::vector<LabeledEquation> const& instances,
                         std::vector<std::string> const& schemas, Config const& cfg,
                         bool verbose, std::ostream& out) {
      auto const opt     = check_options(cfg);
      auto const results = check_instances(instances, carrier, opt);
      bool       all_ok  = true;
      for (auto const& r : results) {
        all_ok = all_ok && r.result.valid;
      }
      std::string const status = all_ok ? "valid-up-to(" + where + ")" : "counterexample";

      if (cfg.json_mode) {
        json j;
        j["command"] = command;
        j["carrier"] = where;
        j.update(strategy_json(opt));
        j["results"] = json::array();
        for (auto const& r : results) {
          json e;
          e["label"]  = r.instance.label;
          e["schema"] = r.instance.schema;
          e["status"] = r.result.valid ? "valid" : "counterexample";
          e["tested"] = r.result.tested;
          e["witness"] = r.result.valid ? json(nullptr) : json(witness_string(carrier, r.result.witness));
          j["results"].push_back(e);
        }
        j["instances"] = results.size();
        j["status"]    = status;
        out << j.dump(2) << "\n";
        return all_ok ? 0 : 1;
      }

      out << "carrier: " << where << " (" << strategy_line(cfg, opt) << ")\n";
      for (auto const& schema : schemas) {
        std::size_t   count = 0, failed = 0;
        std::uint64_t tested = 0;
        for (auto const& r : results) {
          if (r.instance.schema != schema) {
            continue;
          }
          ++count;
          tested += r.result.tested;
          failed += r.result.valid ? 0 : 1;
        }
        if (failed == 0) {
          out << schema << ": PASS (" << count << " instances, " << tested << " assignments)\n";
        } else {
          out << schema << ": FAIL (" << failed << " of " << count << " instances)\n";
        }
        for (auto const& r : results) {
          if (r.instance.schema != schema || (r.result.valid && !verbose)) {
            continue;
          }
          out << "  " << r.instance.label << ": ";
          if (r.result.valid) {
            out << "valid (" << r.result.tested << ")\n";
          } else {
            out << "counterexample " << witness_string(carrier, r.result.witness) << "\n"
                << "    " << to_string(r.instance.eq) << "\n";
          }
        }
      }
      out << "result: " << status << "\n";
      return all_ok ? 0 : 1;
    }

    int run_schema_command(std::string const& command, Config& cfg, bool verbose,
                           std::ostream& out) {
      finalize(cfg);
      bool const derived = command == "derived";
      auto       instances_for = [&](int alpha) {
        return derived ? instantiate_derived(alpha) : instantiate_axioms(alpha);
      };
      auto const schemas = derived ? derived_schemas() : axiom_schemas();
      if (!cfg.algebra_file.empty()) {
        auto const a = finite_algebra_from_json(read_file(cfg.algebra_file));
        return report_instances(command, a, "algebra " + cfg.algebra_file, instances_for(a.dim),
                                schemas, cfg, verbose, out);
      }
      SetAlgebraCarrier const carrier(SetAlgebraContext(cfg.alpha, cfg.base));
      return report_instances(command, carrier, context_header(carrier.ctx()),
                              instances_for(cfg.alpha), schemas, cfg, verbose, out);
    }

    ////////////////////////////////////////////////////////////////////////
    // validate
    ////////////////////////////////////////////////////////////////////////

    std::vector<std::string> equation_lines(std::vector<std::string> const& given,
                                            std::string const&              file) {
      std::vector<std::string> eqs(given);
      if (!file.empty()) {
        std::istringstream in(read_file(file));
        std::string        line;
        while (std::getline(in, line)) {
          auto const first = line.find_first_not_of(" \t\r");
          if (first == std::string::npos || line[first] == '#') {
            continue;
          }
          eqs.push_back(line);
        }
      }
      if (eqs.empty()) {
        throw UsageError("no equations given");
      }
      return eqs;
    }

    template <Carrier C>
    int validate_in(C const& carrier, std::string const& where,
                    std::vector<std::string> const& lines, std::string const& check_witness,
                    Config const& cfg, std::ostream& out) {
      std::vector<Equation> eqs;
      for (auto const& l : lines) {
        eqs.push_back(parse_equation(l));
      }
      json j;
      j["command"] = "validate";
      j["carrier"] = where;

      if (!check_witness.empty()) {
        if (eqs.size() != 1) {
          throw UsageError("--check-witness needs exactly one equation");
        }
        auto const& eq = eqs.front();
        check_dimension(eq.lhs, carrier_dim(carrier));
        check_dimension(eq.rhs, carrier_dim(carrier));
        auto const w         = parse_witness(carrier, check_witness, num_vars(eq));
        auto const lhs       = eval_term<C>(eq.lhs, w, carrier);
        auto const rhs       = eval_term<C>(eq.rhs, w, carrier);
        bool const refutes   = !(lhs == rhs);
        if (cfg.json_mode) {
          j["label"]   = lines.front();
          j["status"]  = refutes ? "witness-confirmed" : "witness-rejected";
          j["witness"] = witness_string(carrier, w);
          j["lhs"]     = carrier.format(lhs);
          j["rhs"]     = carrier.format(rhs);
          out << j.dump(2) << "\n";
        } else {
          out << (refutes ? "witness confirmed: " : "witness does not refute: ")
              << witness_string(carrier, w) << "\n"
              << "  lhs = " << carrier.format(lhs) << "\n"
              << "  rhs = " << carrier.format(rhs) << "\n";
        }
        return refutes ? 1 : 0;
      }

      auto const opt    = check_options(cfg);
      bool       all_ok = true;
      j.update(strategy_json(opt));
      j["results"] = json::array();
      if (!cfg.json_mode) {
        out << "carrier: " << where << " (" << strategy_line(cfg, opt) << ")\n";
      }
      for (std::size_t k = 0; k < eqs.size(); ++k) {
        auto const r = check_equation(eqs[k], carrier, opt);
        all_ok       = all_ok && r.valid;
        std::string const status = r.valid ? "valid-up-to(" + where + ")" : "counterexample";
        if (cfg.json_mode) {
          json e;
          e["label"]   = lines[k];
          e["status"]  = status;
          e["tested"]  = r.tested;
          e["witness"] = r.valid ? json(nullptr) : json(witness_string(carrier, r.witness));
          if (!r.valid) {
            e["lhs"] = carrier.format(*r.lhs_value);
            e["rhs"] = carrier.format(*r.rhs_value);
          }
          j["results"].push_back(e);
        } else {
          out << lines[k] << "\n  " << status;
          if (!r.valid) {
            out << " " << witness_string(carrier, r.witness) << "\n"
                << "  lhs = " << carrier.format(*r.lhs_value) << "\n"
                << "  rhs = " << carrier.format(*r.rhs_value);
          }
          out << "\n";
        }
      }
      if (cfg.json_mode) {
        j["status"] = all_ok ? "valid-up-to(" + where + ")" : "counterexample";
        out << j.dump(2) << "\n";
      }
      return all_ok ? 0 : 1;
    }

    ////////////////////////////////////////////////////////////////////////
    // decompose
    ////////////////////////////////////////////////////////////////////////

    int run_decompose(std::string const& text, bool all, Config& cfg, std::ostream& out) {
      finalize(cfg);
      std::vector<Transformation> todo;
      if (all) {
        todo = enumerate_transformations(cfg.alpha);
      } else if (text.empty()) {
        throw UsageError("give a transformation such as \"1 0 0\" or --all");
      } else {
        todo.push_back(parse_transformation(text));
      }
      bool ok = true;
      json rows = json::array();
      for (auto const& sigma : todo) {
        auto const kind   = classify(sigma);
        auto const mixed  = decompose_mixed(sigma);
        bool       row_ok = evaluate(mixed, sigma.dim()) == sigma;
        if (kind == TransformKind::Permutational) {
          for (auto const& g : mixed) {
            row_ok = row_ok && g.kind == Generator::Kind::Transposition;
          }
        }
        std::optional<GeneratorWord> repl;
        if (kind == TransformKind::Singular && sigma.dim() <= kMaxReplacementTableDim) {
          repl = decompose_replacements(sigma);
          row_ok = row_ok && evaluate(*repl, sigma.dim()) == sigma;
        }
        ok = ok && row_ok;
        if (cfg.json_mode) {
          json e;
          e["sigma"]        = to_string(sigma);
          e["kind"]         = kind == TransformKind::Permutational ? "permutational" : "singular";
          e["mixed"]        = to_string(mixed);
          e["replacements"] = repl ? json(to_string(*repl)) : json(nullptr);
          e["status"]       = row_ok ? "ok" : "mismatch";
          rows.push_back(e);
        } else if (!all || !row_ok) {
          out << "sigma: " << to_string(sigma) << " ("
              << (kind == TransformKind::Permutational ? "permutational" : "singular") << ")\n"
              << "  mixed:        " << to_string(mixed) << "\n";
          if (repl) {
            out << "  replacements: " << to_string(*repl) << "\n";
          }
          out << "  round-trip:   " << (row_ok ? "ok" : "MISMATCH") << "\n";
        }
      }
      if (cfg.json_mode) {
        json j;
        j["command"] = "decompose";
        j["results"] = rows;
        j["status"]  = ok ? "ok" : "mismatch";
        out << j.dump(2) << "\n";
      } else if (all) {
        out << todo.size() << " transformations at alpha=" << cfg.alpha << ": "
            << (ok ? "all round-trip" : "MISMATCH") << "\n";
      }
      return ok ? 0 : 1;
    }

    ////////////////////////////////////////////////////////////////////////
    // lift
    ////////////////////////////////////////////////////////////////////////

    int run_lift(std::vector<std::string> const& rel_texts, int count, Config& cfg,
                 std::ostream& out) {
      finalize(cfg);
      SetAlgebraContext const ctx(cfg.alpha, cfg.base);
      std::vector<Relation>   gens;
      for (auto const& t : rel_texts) {
        gens.push_back(parse_relation(t, ctx));
        if (!(gens.back().ctx() == ctx)) {
          throw UsageError("--relation " + t + " is not over " + context_header(ctx));
        }
      }
      if (gens.empty()) {
        std::mt19937_64         rng(cfg.seed);
        SetAlgebraCarrier const carrier(ctx);
        for (int k = 0; k < count; ++k) {
          gens.push_back(carrier.random_element(rng));
        }
      }
      if (cfg.h_size != 0 && cfg.h_size <= cfg.alpha) {
        throw UsageError("--h-size must exceed alpha");
      }
      auto const elements = generate_subalgebra(ctx, gens, Signature::CSP);
      auto const rep      = inclusion_representation(elements);
      auto const report   = lift_and_verify(rep, cfg.h_size);
      bool const ok       = report.passed();

      if (cfg.json_mode) {
        json j;
        j["command"]    = "lift";
        j["carrier"]    = context_header(ctx);
        j["h_size"]     = report.lc.colors();
        j["seed"]       = cfg.seed;
        j["generators"] = json::array();
        for (auto const& g : gens) {
          j["generators"].push_back(to_string(g, RelationFormat::Hex));
        }
        j["elements"] = elements.size();
        j["checks"]   = json::array();
        for (auto const& c : report.checks) {
          json e;
          e["label"]   = c.name;
          e["status"]  = c.passed ? "pass" : "fail";
          e["cases"]   = c.cases;
          e["witness"] = c.passed ? json(nullptr) : json(c.witness);
          j["checks"].push_back(e);
        }
        j["status"] = ok ? "pass" : "fail";
        out << j.dump(2) << "\n";
        return ok ? 0 : 1;
      }
      out << "base U: " << context_header(ctx) << ", |H|=" << report.lc.colors()
          << ", |V|=" << report.lc.outer_base() << ", seed " << cfg.seed << "\n"
          << "generators:";
      for (auto const& g : gens) {
        out << " " << to_string(g, RelationFormat::Hex);
      }
      out << "\nsubalgebra: " << elements.size() << " elements\n";
      for (auto const& c : report.checks) {
        out << c.name << ": " << (c.passed ? "PASS" : "FAIL") << " (" << c.cases << " cases)";
        if (!c.passed) {
          out << " " << c.witness;
        }
        out << "\n";
      }
      out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? 0 : 1;
    }

    ////////////////////////////////////////////////////////////////////////
    // logic
    ////////////////////////////////////////////////////////////////////////

    json model_json(Model const& m) {
      return to_string(m);
    }

    json equiv_json(EquivResult const& r) {
      json j;
      j["status"] = r.equivalent ? "equivalent-up-to(base " + std::to_string(r.up_to_base) + ")"
                                 : "counterexample";
      j["models"]        = r.models;
      j["sampled_bases"] = r.sampled_bases;
      if (r.counterexample) {
        j["witness"] = {{"model", model_json(r.counterexample->model)},
                        {"assignment", sequence_string(r.counterexample->assignment)}};
      } else {
        j["witness"] = nullptr;
      }
      return j;
    }

    std::vector<int> parse_assignment(std::string const& text) {
      std::vector<int>   s;
      std::string        clean(text);
      for (char& ch : clean) {
        if (ch == '(' || ch == ')' || ch == ',') {
          ch = ' ';
        }
      }
      std::istringstream in(clean);
      int                v = 0;
      while (in >> v) {
        s.push_back(v);
      }
      if (!in.eof()) {
        throw ParseError("bad assignment '" + text + "'", 0);
      }
      return s;
    }

    int run_sat(std::string const& ftext, std::string const& mtext, std::string const& stext,
                Config& cfg, std::ostream& out) {
      finalize(cfg);
      auto const m = parse_model(mtext);
      auto const f = parse_formula(ftext, m.dim);
      json       j;
      j["command"] = "sat";
      j["formula"] = to_string(f);
      j["model"]   = to_string(m);
      if (!stext.empty()) {
        auto const s   = parse_assignment(stext);
        bool const val = satisfies(m, s, f);
        if (cfg.json_mode) {
          j["assignment"] = sequence_string(s);
          j["status"]     = val ? "true" : "false";
          out << j.dump(2) << "\n";
        } else {
          out << (val ? "true" : "false") << "\n";
        }
        return 0;
      }
      auto const r = meaning(m, f);
      if (cfg.json_mode) {
        j["meaning"] = to_string(r);
        j["status"]  = "ok";
        out << j.dump(2) << "\n";
      } else {
        out << "meaning: " << to_string(r) << "\n";
      }
      return 0;
    }

    int run_subst(std::string const& ftext, int i, int j_, Config& cfg, std::ostream& out) {
      finalize(cfg);
      auto const f = parse_formula(ftext, cfg.alpha);
      if (i < 0 || j_ < 0 || i >= cfg.alpha || j_ >= cfg.alpha) {
        throw UsageError("--i/--j must be below alpha");
      }
      auto const monk  = monk_subst(i, j_, f);
      auto const naive = naive_subst(i, j_, f);
      if (cfg.json_mode) {
        json j;
        j["command"] = "subst";
        j["formula"] = to_string(f);
        j["monk"]    = to_string(monk);
        j["naive"]   = to_string(naive);
        j["status"]  = "ok";
        out << j.dump(2) << "\n";
      } else {
        out << "formula: " << to_string(f) << "\n"
            << "monk:    " << to_string(monk) << "\n"
            << "naive:   " << to_string(naive) << "\n";
      }
      return 0;
    }

    EquivOptions equiv_options(Config const& cfg, int max_base, std::uint64_t model_budget) {
      EquivOptions opt;
      opt.max_base = max_base;
      opt.budget   = model_budget;
      opt.seed     = cfg.seed;
      if (cfg.sampled > 0) {
        opt.samples = cfg.sampled;
      }
      return opt;
    }

    int run_equiv(std::string const& a, std::string const& b, int max_base,
                  std::uint64_t model_budget, Config& cfg, std::ostream& out) {
      finalize(cfg);
      auto const phi = parse_formula(a, cfg.alpha);
      auto const psi = parse_formula(b, cfg.alpha);
      auto const r   = equiv_sample(phi, psi, cfg.alpha, equiv_options(cfg, max_base, model_budget));
      if (cfg.json_mode) {
        json j;
        j["command"] = "equiv";
        j["phi"]     = to_string(phi);
        j["psi"]     = to_string(psi);
        j["seed"]    = cfg.seed;
        j.update(equiv_json(r));
        out << j.dump(2) << "\n";
      } else {
        out << to_string(phi) << "  vs  " << to_string(psi) << "\n" << to_string(r) << "\n";
        if (!r.sampled_bases.empty()) {
          out << "seed: " << cfg.seed << "\n";
        }
      }
      return r.equivalent ? 0 : 1;
    }

    int run_demo(int max_base, std::uint64_t model_budget, Config& cfg, std::ostream& out) {
      finalize(cfg);
      auto const r = demo_counterexample(cfg.alpha, equiv_options(cfg, max_base, model_budget));
      if (cfg.json_mode) {
        json j;
        j["command"]   = "demo counterexample";
        j["alpha"]     = r.alpha;
        j["phi"]       = to_string(r.phi);
        j["psi"]       = to_string(r.psi);
        j["naive_phi"] = to_string(r.naive_phi);
        j["naive_psi"] = to_string(r.naive_psi);
        j["monk_phi"]  = to_string(r.monk_phi);
        j["monk_psi"]  = to_string(r.monk_psi);
        j["pair"]      = equiv_json(r.pair);
        j["naive"]     = equiv_json(r.naive);
        j["monk"]      = equiv_json(r.monk);
        j["subst_law"]    = {{"cases", r.law_cases}, {"verified", r.law_verified}};
        j["seed"]      = cfg.seed;
        j["status"]    = r.ok() ? "pass" : "fail";
        out << j.dump(2) << "\n";
      } else {
        out << "non-admissible substitution demo, alpha=" << r.alpha << ", substituting v1 for v0\n"
            << to_string(r);
      }
      return r.ok() ? 0 : 1;
    }

  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finitary polyadic set algebras: axiom checking, representation lifting and "
                 "finite-variable substitution"};
    app.name("polylift");
    app.require_subcommand(1);

    Config cfg;
    bool   verbose = false;

    auto* axioms = app.add_subcommand("axioms", "Check every F0-F9 instance");
    auto* derived = app.add_subcommand("derived", "Check every S1-S6 instance");
    for (auto* sub : {axioms, derived}) {
      add_common(sub, cfg);
      sub->add_option("--algebra", cfg.algebra_file, "Check a tabulated algebra (JSON) instead");
      sub->add_flag("--verbose", verbose, "List every instance");
    }

    std::vector<std::string> eq_texts;
    std::string              eq_file, check_witness;
    auto* validate = app.add_subcommand("validate", "Search for counterexamples to equations");
    add_common(validate, cfg);
    validate->add_option("equations", eq_texts, "Equations \"lhs = rhs\"");
    validate->add_option("--file", eq_file, "File with one equation per line");
    validate->add_option("--check-witness", check_witness, "Re-evaluate \"x0=...; x1=...\"");
    validate->add_option("--algebra", cfg.algebra_file, "Tabulated algebra (JSON) as carrier");

    std::string sigma_text;
    bool        all_sigma = false;
    auto* decompose = app.add_subcommand("decompose", "Generator words for a transformation");
    add_common(decompose, cfg);
    decompose->add_option("sigma", sigma_text, "Image vector, e.g. \"1 0 0\"");
    decompose->add_flag("--all", all_sigma, "Every transformation at --alpha");

    std::vector<std::string> lift_rels;
    int                      lift_count = 1;
    auto* lift = app.add_subcommand("lift", "Lift a cp-representation and verify the result");
    add_common(lift, cfg);
    lift->add_option("--relation", lift_rels, "Generator relation (repeatable)");
    lift->add_option("--count", lift_count, "Number of random generators")->capture_default_str();

    std::string formula_text, model_text, assignment_text;
    auto*       sat = app.add_subcommand("sat", "Evaluate a formula in a model");
    add_common(sat, cfg);
    sat->add_option("formula", formula_text, "Formula")->required();
    sat->add_option("--model", model_text, "\"alpha=2 base=2 R0={(1,1)}\"")->required();
    sat->add_option("--assignment", assignment_text, "\"0 1\"; omit to print the meaning");

    int   si = 0, sj = 1;
    auto* subst = app.add_subcommand("subst", "Monk and naive substitution of v_j for v_i");
    add_common(subst, cfg);
    subst->add_option("formula", formula_text, "Formula")->required();
    subst->add_option("--i", si, "Replaced variable")->capture_default_str();
    subst->add_option("--j", sj, "Replacing variable")->capture_default_str();

    std::string   phi_text, psi_text;
    int           max_base     = 3;
    std::uint64_t model_budget = kDefaultModelBudget;
    auto* equiv = app.add_subcommand("equiv", "Bounded equivalence search for two formulas");
    add_common(equiv, cfg);
    equiv->add_option("phi", phi_text, "First formula")->required();
    equiv->add_option("psi", psi_text, "Second formula")->required();
    equiv->add_option("--max-base", max_base, "Largest base searched")->capture_default_str();
    equiv->add_option("--model-budget", model_budget, "Interpretations per base before sampling")
        ->capture_default_str();

    auto* demo = app.add_subcommand("demo", "Demonstrations");
    demo->require_subcommand(1);
    auto* demo_cex = demo->add_subcommand("counterexample", "Naive vs Monk substitution");
    add_common(demo_cex, cfg);
    demo_cex->add_option("--max-base", max_base, "Largest base searched")->capture_default_str();
    demo_cex->add_option("--model-budget", model_budget, "Interpretations per base before sampling")
        ->capture_default_str();

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    try {
      if (*axioms) {
        return run_schema_command("axioms", cfg, verbose, out);
      }
      if (*derived) {
        return run_schema_command("derived", cfg, verbose, out);
      }
      if (*validate) {
        finalize(cfg);
        auto const lines = equation_lines(eq_texts, eq_file);
        if (!cfg.algebra_file.empty()) {
          auto const a = finite_algebra_from_json(read_file(cfg.algebra_file));
          return validate_in(a, "algebra " + cfg.algebra_file, lines, check_witness, cfg, out);
        }
        SetAlgebraCarrier const carrier(SetAlgebraContext(cfg.alpha, cfg.base));
        return validate_in(carrier, context_header(carrier.ctx()), lines, check_witness, cfg, out);
      }
      if (*decompose) {
        return run_decompose(sigma_text, all_sigma, cfg, out);
      }
      if (*lift) {
        return run_lift(lift_rels, lift_count, cfg, out);
      }
      if (*sat) {
        return run_sat(formula_text, model_text, assignment_text, cfg, out);
      }
      if (*subst) {
        return run_subst(formula_text, si, sj, cfg, out);
      }
      if (*equiv) {
        return run_equiv(phi_text, psi_text, max_base, model_budget, cfg, out);
      }
      if (*demo_cex) {
        return run_demo(max_base, model_budget, cfg, out);
      }
    } catch (UsageError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    err << app.help();
    return 2;
  }

}  // namespace polylift::cli
