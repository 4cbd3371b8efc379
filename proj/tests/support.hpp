#pragma once

// Independent oracles and seeded generators shared by the test binaries.
// Oracles work on explicit std::set<std::vector<int>> sequence sets and never
// call the bit-level operations they are compared against.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "polylift/formula.hpp"
#include "polylift/relation.hpp"
#include "polylift/term.hpp"
#include "polylift/transform.hpp"

namespace oracle {

  using Seq    = std::vector<int>;
  using SeqSet = std::set<Seq>;

  inline std::vector<Seq> all_sequences(int dim, int base) {
    std::vector<Seq> out;
    Seq              s(static_cast<std::size_t>(dim), 0);
    while (true) {
      out.push_back(s);
      int k = 0;
      while (k < dim && ++s[static_cast<std::size_t>(k)] == base) {
        s[static_cast<std::size_t>(k)] = 0;
        ++k;
      }
      if (k == dim) {
        return out;
      }
    }
  }

  inline SeqSet members(polylift::Relation const& r) {
    SeqSet out;
    for (auto const& s : all_sequences(r.ctx().dim(), r.ctx().base_size())) {
      std::size_t idx = 0, st = 1;
      for (int v : s) {
        idx += static_cast<std::size_t>(v) * st;
        st *= static_cast<std::size_t>(r.ctx().base_size());
      }
      if (r.contains(idx)) {
        out.insert(s);
      }
    }
    return out;
  }

  inline Seq with(Seq s, int i, int u) {
    s[static_cast<std::size_t>(i)] = u;
    return s;
  }

  inline SeqSet cyl(int i, SeqSet const& x, int dim, int base) {
    SeqSet out;
    for (auto const& s : all_sequences(dim, base)) {
      for (int u = 0; u < base; ++u) {
        if (x.count(with(s, i, u))) {
          out.insert(s);
          break;
        }
      }
    }
    return out;
  }

  inline SeqSet subst(int i, int j, SeqSet const& x, int dim, int base) {
    SeqSet out;
    for (auto const& s : all_sequences(dim, base)) {
      if (x.count(with(s, i, s[static_cast<std::size_t>(j)]))) {
        out.insert(s);
      }
    }
    return out;
  }

  inline SeqSet transp(int i, int j, SeqSet const& x, int dim, int base) {
    SeqSet out;
    for (auto const& s : all_sequences(dim, base)) {
      auto t = with(with(s, i, s[static_cast<std::size_t>(j)]), j, s[static_cast<std::size_t>(i)]);
      if (x.count(t)) {
        out.insert(s);
      }
    }
    return out;
  }

  inline SeqSet subst_sigma(std::vector<int> const& sigma, SeqSet const& x, int dim, int base) {
    SeqSet out;
    for (auto const& s : all_sequences(dim, base)) {
      Seq t(s.size());
      for (std::size_t k = 0; k < s.size(); ++k) {
        t[k] = s[static_cast<std::size_t>(sigma[k])];
      }
      if (x.count(t)) {
        out.insert(s);
      }
    }
    return out;
  }

  /// Pointwise (sigma o tau)(i) = sigma(tau(i)) on raw vectors.
  inline std::vector<int> compose(std::vector<int> const& sigma, std::vector<int> const& tau) {
    std::vector<int> out(tau.size());
    for (std::size_t k = 0; k < tau.size(); ++k) {
      out[k] = sigma[static_cast<std::size_t>(tau[k])];
    }
    return out;
  }

}  // namespace oracle

namespace gen {

  inline polylift::Relation relation(polylift::SetAlgebraContext const& ctx, std::mt19937_64& rng) {
    polylift::Relation r(ctx);
    for (std::size_t idx = 0; idx < ctx.num_sequences(); ++idx) {
      if (rng() & 1u) {
        r.insert(idx);
      }
    }
    return r;
  }

  inline polylift::Transformation transformation(int dim, std::mt19937_64& rng) {
    std::vector<int> img(static_cast<std::size_t>(dim));
    for (int& v : img) {
      v = static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
    }
    return polylift::Transformation(std::move(img));
  }

  /// Random csp term over variables x0..x{vars-1} with operator indices < dim.
  inline polylift::Term term(int dim, int vars, int depth, std::mt19937_64& rng) {
    using polylift::Term;
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
    if (depth == 0 || pick(4) == 0) {
      int const leaf = pick(vars + 2);
      return leaf < vars ? Term::var(leaf) : leaf == vars ? Term::zero() : Term::one();
    }
    switch (pick(7)) {
      case 0:
        return Term::meet(term(dim, vars, depth - 1, rng), term(dim, vars, depth - 1, rng));
      case 1:
        return Term::complement(term(dim, vars, depth - 1, rng));
      case 2:
        return Term::cyl(pick(dim), term(dim, vars, depth - 1, rng));
      case 3:
        return Term::subst(pick(dim), pick(dim), term(dim, vars, depth - 1, rng));
      case 4:
        return Term::transp(pick(dim), pick(dim), term(dim, vars, depth - 1, rng));
      case 5:
        return Term::subst_sigma(transformation(dim, rng), term(dim, vars, depth - 1, rng));
      default:
        return Term::join(term(dim, vars, depth - 1, rng), term(dim, vars, depth - 1, rng));
    }
  }

  /// Random formula with exactly `depth` levels at most, atoms of arity dim.
  inline polylift::Formula formula(int dim, int symbols, int depth, std::mt19937_64& rng) {
    using polylift::Formula;
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
    if (depth == 0 || pick(5) == 0) {
      std::vector<int> args(static_cast<std::size_t>(dim));
      for (int& a : args) {
        a = pick(dim);
      }
      return Formula::atom(pick(symbols), std::move(args));
    }
    switch (pick(4)) {
      case 0:
        return Formula::neg(formula(dim, symbols, depth - 1, rng));
      case 1:
        return Formula::conj(formula(dim, symbols, depth - 1, rng),
                             formula(dim, symbols, depth - 1, rng));
      default:
        return Formula::exists(pick(dim), formula(dim, symbols, depth - 1, rng));
    }
  }

}  // namespace gen
