#include "polylift/logic.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "polylift/checker.hpp"
#include "polylift/detail/tokenizer.hpp"
#include "polylift/error.hpp"

namespace polylift {

  namespace {

    bool sat(Model const& m, std::vector<int>& s, Formula const& f) {
      switch (f.kind()) {
        case Formula::Kind::Atom: {
          auto it = m.relations.find(f.symbol());
          if (it == m.relations.end()) {
            throw UninterpretedSymbol("R" + std::to_string(f.symbol()) + " is not interpreted");
          }
          auto const&  ctx = it->second.ctx();
          std::size_t  idx = 0;
          std::size_t  st  = 1;
          for (int a : f.args()) {
            idx += static_cast<std::size_t>(s[static_cast<std::size_t>(a)]) * st;
            st *= static_cast<std::size_t>(ctx.base_size());
          }
          return it->second.contains(idx);
        }
        case Formula::Kind::Not:
          return !sat(m, s, f.child(0));
        case Formula::Kind::And:
          return sat(m, s, f.child(0)) && sat(m, s, f.child(1));
        case Formula::Kind::Exists: {
          auto const i     = static_cast<std::size_t>(f.var());
          int const  saved = s[i];
          bool       found = false;
          for (int u = 0; u < m.base && !found; ++u) {
            s[i]  = u;
            found = sat(m, s, f.child(0));
          }
          s[i] = saved;
          return found;
        }
      }
      return false;
    }

    void check_model(Model const& m, Formula const& f) {
      check_formula(f, m.dim);
      for (auto const& [k, r] : m.relations) {
        if (!(r.ctx() == m.ctx())) {
          throw DimensionMismatch("R" + std::to_string(k) + " is over " + context_header(r.ctx())
                                  + ", model is " + context_header(m.ctx()));
        }
      }
    }

  }  // namespace

  bool satisfies(Model const& m, std::span<int const> s, Formula const& f) {
    check_model(m, f);
    if (static_cast<int>(s.size()) != m.dim) {
      throw DimensionMismatch("assignment length " + std::to_string(s.size()) + " != alpha");
    }
    for (int v : s) {
      if (v < 0 || v >= m.base) {
        throw IndexOutOfRange("assignment entry " + std::to_string(v) + " outside the base");
      }
    }
    std::vector<int> buf(s.begin(), s.end());
    return sat(m, buf, f);
  }

  Relation meaning(Model const& m, Formula const& f) {
    check_model(m, f);
    auto const ctx = m.ctx();
    Relation   out(ctx);
    for (std::size_t idx = 0; idx < ctx.num_sequences(); ++idx) {
      auto s = ctx.decode(idx);
      if (sat(m, s, f)) {
        out.insert(idx);
      }
    }
    return out;
  }

  std::optional<std::vector<int>> subst_law_failure(Model const& m, Formula const& f, int i, int j) {
    check_model(m, f);
    auto const g   = monk_subst(i, j, f);
    auto const ctx = m.ctx();
    for (std::size_t idx = 0; idx < ctx.num_sequences(); ++idx) {
      auto s       = ctx.decode(idx);
      auto shifted = s;
      shifted[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(j)];
      auto probe   = s;
      if (sat(m, probe, g) != sat(m, shifted, f)) {
        return s;
      }
    }
    return std::nullopt;
  }

  EquivResult equiv_sample(Formula const& phi, Formula const& psi, int alpha,
                           EquivOptions const& opt) {
    check_formula(phi, alpha);
    check_formula(psi, alpha);
    int const   symbols = std::max({num_symbols(phi), num_symbols(psi), 1});
    EquivResult result;

    for (int base = 1; base <= opt.max_base; ++base) {
      SetAlgebraContext const ctx(alpha, base);
      SetAlgebraCarrier const carrier(ctx);
      Model                   m{base, alpha, {}};
      for (int k = 0; k < symbols; ++k) {
        m.relations.emplace(k, Relation(ctx));
      }
      auto const per_symbol = carrier.cardinality();
      auto const total      = ctx.num_sequences() < 64
                                  ? bounded_power(per_symbol, symbols, opt.budget)
                                  : std::nullopt;
      bool const sampled    = !total.has_value();
      std::uint64_t const count = sampled ? opt.samples : *total;
      if (sampled) {
        result.sampled_bases.push_back(base);
      }

      for (std::uint64_t t = 0; t < count; ++t) {
        if (sampled) {
          std::mt19937_64 rng(mix_seed(opt.seed ^ mix_seed((std::uint64_t(base) << 40) ^ t)));
          for (auto& [k, r] : m.relations) {
            r = carrier.random_element(rng);
          }
        } else {
          std::uint64_t code = t;
          for (auto& [k, r] : m.relations) {
            r = carrier.element(code % per_symbol);
            code /= per_symbol;
          }
        }
        ++result.models;
        for (std::size_t idx = 0; idx < ctx.num_sequences(); ++idx) {
          auto       s  = ctx.decode(idx);
          auto       s2 = s;
          bool const a  = sat(m, s, phi);
          bool const b  = sat(m, s2, psi);
          if (a == b) {
            continue;
          }
          // independent re-check through the public entry point
          if (satisfies(m, s, phi) != a || satisfies(m, s, psi) != b) {
            throw Error("counterexample failed to re-verify");
          }
          result.equivalent     = false;
          result.up_to_base     = base;
          result.counterexample = EquivCounterexample{m, s, a, b};
          return result;
        }
      }
      result.up_to_base = base;
    }
    return result;
  }

  bool DemoReport::ok() const {
    return pair.equivalent && !naive.equivalent && monk.equivalent && law_verified;
  }

  DemoReport demo_counterexample(int alpha, EquivOptions const& opt) {
    if (alpha < 2) {
      throw IndexOutOfRange("the demo needs alpha >= 2");
    }
    std::vector<int> const zeros(static_cast<std::size_t>(alpha), 0);
    auto const             phi = Formula::atom(0, zeros);
    auto const             psi = Formula::exists(1, phi);
    DemoReport r{alpha,
                 phi,
                 psi,
                 naive_subst(0, 1, phi),
                 naive_subst(0, 1, psi),
                 monk_subst(0, 1, phi),
                 monk_subst(0, 1, psi),
                 {},
                 {},
                 {},
                 0,
                 true};
    r.pair  = equiv_sample(r.phi, r.psi, alpha, opt);
    r.naive = equiv_sample(r.naive_phi, r.naive_psi, alpha, opt);
    r.monk  = equiv_sample(r.monk_phi, r.monk_psi, alpha, opt);

    // substitution law for both formulas of the pair, every interpretation over base 2
    // when that is enumerable (sampled otherwise).
    SetAlgebraContext const ctx(alpha, 2);
    SetAlgebraCarrier const carrier(ctx);
    Model                   m{2, alpha, {{0, Relation(ctx)}}};
    auto const              exhaustive = bounded_power(carrier.cardinality(), 1, opt.budget);
    std::uint64_t const     count      = exhaustive ? *exhaustive : opt.samples;
    for (std::uint64_t t = 0; t < count && r.law_verified; ++t) {
      if (exhaustive) {
        m.relations.at(0) = carrier.element(t);
      } else {
        std::mt19937_64 rng(mix_seed(opt.seed ^ t));
        m.relations.at(0) = carrier.random_element(rng);
      }
      for (auto const* f : {&r.phi, &r.psi}) {
        ++r.law_cases;
        if (subst_law_failure(m, *f, 0, 1)) {
          r.law_verified = false;
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  std::string sequence_string(std::span<int const> s) {
    std::string out = "(";
    for (std::size_t k = 0; k < s.size(); ++k) {
      out += (k ? "," : "") + std::to_string(s[k]);
    }
    return out + ")";
  }

  std::string to_string(Model const& m) {
    std::string out = context_header(m.ctx());
    bool        first = true;
    for (auto const& [k, r] : m.relations) {
      out += (first ? " " : "; ") + ("R" + std::to_string(k)) + "=" + to_string(r);
      first = false;
    }
    return out;
  }

  Model parse_model(std::string_view text) {
    // header words up to the first "R", then ';'-separated "Rk=<relation>"
    auto const r0 = text.find('R');
    if (r0 == std::string_view::npos) {
      throw ParseError("model needs at least one 'Rk=' entry", text.size());
    }
    auto const header = text.substr(0, r0);
    SetAlgebraContext const ctx = parse_relation(std::string(header) + " {}").ctx();
    Model                   m{ctx.base_size(), ctx.dim(), {}};
    std::size_t             pos = r0;
    while (pos < text.size()) {
      auto end = text.find(';', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto       item = text.substr(pos, end - pos);
      auto const eq   = item.find('=');
      auto       name = item.substr(0, eq);
      while (!name.empty() && name.back() == ' ') {
        name.remove_suffix(1);
      }
      while (!name.empty() && name.front() == ' ') {
        name.remove_prefix(1);
      }
      if (eq == std::string_view::npos || name.empty() || name.front() != 'R') {
        throw ParseError("expected 'Rk=<relation>'", pos);
      }
      int const k = name.size() == 1 ? 0 : detail::suffix_index(name, 1);
      if (k < 0) {
        throw ParseError("bad relation symbol '" + std::string(name) + "'", pos);
      }
      try {
        m.relations.insert_or_assign(k, parse_relation(item.substr(eq + 1), ctx));
      } catch (ParseError const& e) {
        throw ParseError(std::string("R") + std::to_string(k) + ": " + e.what(), pos);
      }
      pos = end + 1;
    }
    return m;
  }

  std::string to_string(EquivResult const& r) {
    std::ostringstream os;
    if (r.equivalent) {
      os << "equivalent-up-to(base " << r.up_to_base << ")";
      if (!r.sampled_bases.empty()) {
        os << " [sampled at base";
        for (int b : r.sampled_bases) {
          os << " " << b;
        }
        os << "]";
      }
    } else {
      auto const& c = *r.counterexample;
      os << "counterexample: " << to_string(c.model) << " s=" << sequence_string(c.assignment)
         << " (" << (c.phi_value ? "true" : "false") << " vs " << (c.psi_value ? "true" : "false")
         << ")";
    }
    return os.str();
  }

  std::string to_string(DemoReport const& r) {
    std::ostringstream os;
    os << "pair:        " << to_string(r.phi) << "  vs  " << to_string(r.psi) << "\n"
       << "  " << to_string(r.pair) << "\n"
       << "naive [v0/v1]: " << to_string(r.naive_phi) << "  vs  " << to_string(r.naive_psi)
       << "\n"
       << "  " << to_string(r.naive) << "\n"
       << "monk  [v0/v1]: " << to_string(r.monk_phi) << "  vs  " << to_string(r.monk_psi) << "\n"
       << "  " << to_string(r.monk) << "\n"
       << "substitution law (base 2, " << r.law_cases << " cases): "
       << (r.law_verified ? "holds" : "FAILS") << "\n"
       << "result: " << (r.ok() ? "PASS" : "FAIL") << "\n";
    return os.str();
  }

}  // namespace polylift
