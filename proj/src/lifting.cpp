#include "polylift/lifting.hpp"

#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "polylift/checker.hpp"
#include "polylift/error.hpp"

namespace polylift {

  LiftContext::LiftContext(int dim, int inner_base, int colors)
      : dim_(dim),
        inner_(inner_base),
        colors_(colors == 0 ? dim + 1 : colors),
        u_ctx_(dim, inner_base),
        v_ctx_(dim, inner_base * (colors == 0 ? dim + 1 : colors)) {
    if (colors_ <= dim_) {
      throw IndexOutOfRange("|H| = " + std::to_string(colors_) + " must exceed alpha = "
                            + std::to_string(dim_));
    }
  }

  Representation inclusion_representation(std::vector<Relation> const& elements) {
    if (elements.empty()) {
      throw MalformedTables("no elements");
    }
    return {tabulate(elements), elements.front().ctx(), elements};
  }

  namespace {

    std::string seq_string(std::vector<int> const& s) {
      std::string out = "(";
      for (std::size_t k = 0; k < s.size(); ++k) {
        out += (k ? "," : "") + std::to_string(s[k]);
      }
      return out + ")";
    }

    /// "" if equal, else the first sequence on which a and b disagree.
    std::string first_difference(Relation const& a, Relation const& b) {
      if (a == b) {
        return "";
      }
      for (std::size_t idx = 0; idx < a.ctx().num_sequences(); ++idx) {
        if (a.contains(idx) != b.contains(idx)) {
          return "sequence " + seq_string(a.ctx().decode(idx))
                 + (a.contains(idx) ? " only on the left" : " only on the right");
        }
      }
      return "relations differ";
    }

  }  // namespace

  std::optional<std::string> verify_cp_representation(Representation const& f) {
    auto const& a = f.source;
    a.validate();
    if (f.images.size() != static_cast<std::size_t>(a.size)) {
      return "image count " + std::to_string(f.images.size()) + " != algebra size "
             + std::to_string(a.size);
    }
    std::unordered_set<Relation, RelationHash> seen;
    for (auto const& r : f.images) {
      if (!(r.ctx() == f.target) || r.ctx().dim() != a.dim) {
        return "image outside the target context";
      }
      if (!seen.insert(r).second) {
        return "not injective: " + to_string(r) + " is hit twice";
      }
    }
    auto const& img = [&](int x) -> Relation const& { return f.images[static_cast<std::size_t>(x)]; };
    if (!img(a.zero()).is_empty()) {
      return "f(0) is not empty";
    }
    if (!(img(a.one()) == Relation::full(f.target))) {
      return "f(1) is not the unit";
    }
    for (int x = 0; x < a.size; ++x) {
      if (!(img(a.complement(x)) == complement(img(x)))) {
        return "f(-x) != -f(x) at x=" + std::to_string(x);
      }
      for (int y = 0; y < a.size; ++y) {
        if (!(img(a.meet(x, y)) == meet(img(x), img(y)))) {
          return "f(x.y) != f(x) & f(y) at x=" + std::to_string(x) + ", y=" + std::to_string(y);
        }
      }
      for (int i = 0; i < a.dim; ++i) {
        if (!(img(a.cyl(i, x)) == cyl(i, img(x)))) {
          return "f(c_i x) != C_i f(x) at x=" + std::to_string(x) + ", i=" + std::to_string(i);
        }
        for (int j = 0; j < a.dim; ++j) {
          if (!(img(a.transp(i, j, x)) == transp(i, j, img(x)))) {
            return "f(p_ij x) != P_ij f(x) at x=" + std::to_string(x) + ", i=" + std::to_string(i)
                   + ", j=" + std::to_string(j);
          }
        }
      }
    }
    return std::nullopt;
  }

  std::vector<int> hat(std::vector<int> const& s, int colors) {
    std::vector<int> out(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      out[k] = s[k] / colors;
    }
    return out;
  }

  Relation repetition_free(SetAlgebraContext const& v_ctx) {
    return Relation::from_predicate(v_ctx, [](std::span<int const> s) {
      for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
          if (s[a] == s[b]) {
            return false;
          }
        }
      }
      return true;
    });
  }

  std::vector<Relation> build_g(Representation const& f, LiftContext const& lc) {
    if (!(f.target == lc.u_ctx())) {
      throw DimensionMismatch("representation target " + context_header(f.target)
                              + " does not match " + context_header(lc.u_ctx()));
    }
    if (auto err = verify_cp_representation(f)) {
      throw VerificationFailure("f is not an injective cp-representation: " + *err);
    }
    auto const& vctx = lc.v_ctx();
    auto const  w    = repetition_free(vctx);
    std::vector<std::size_t> members;
    std::vector<std::size_t> hat_idx;
    for (std::size_t idx = 0; idx < vctx.num_sequences(); ++idx) {
      if (w.contains(idx)) {
        members.push_back(idx);
        hat_idx.push_back(lc.u_ctx().encode(hat(vctx.decode(idx), lc.colors())));
      }
    }
    std::vector<Relation> g;
    g.reserve(f.images.size());
    for (auto const& fx : f.images) {
      Relation gx(vctx);
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (fx.contains(hat_idx[k])) {
          gx.insert(members[k]);
        }
      }
      g.push_back(std::move(gx));
    }
    return g;
  }

  std::vector<Relation> build_h(FiniteAlgebra const& a, std::vector<Relation> const& g,
                                LiftContext const& lc) {
    if (g.size() != static_cast<std::size_t>(a.size)) {
      throw DimensionMismatch("g has " + std::to_string(g.size()) + " images for "
                              + std::to_string(a.size) + " elements");
    }
    auto const& vctx = lc.v_ctx();
    auto const  w    = repetition_free(vctx);
    std::vector<std::vector<int>> zs;
    std::vector<std::size_t>      z_idx;
    for (std::size_t idx = 0; idx < vctx.num_sequences(); ++idx) {
      if (w.contains(idx)) {
        zs.push_back(vctx.decode(idx));
        z_idx.push_back(idx);
      }
    }
    std::vector<Relation> h(g.size(), Relation(vctx));
    for (auto const& sigma : enumerate_transformations(a.dim)) {
      auto const ss = subst_sigma_table(a, sigma);
      std::vector<std::size_t> target(zs.size());
      for (std::size_t k = 0; k < zs.size(); ++k) {
        target[k] = vctx.encode(apply_to_sequence(zs[k], sigma));
      }
      for (std::size_t x = 0; x < g.size(); ++x) {
        auto const& gs = g[static_cast<std::size_t>(ss[x])];
        for (std::size_t k = 0; k < zs.size(); ++k) {
          if (gs.contains(z_idx[k])) {
            h[x].insert(target[k]);
          }
        }
      }
    }
    return h;
  }

  Factorization factor_sequence(std::vector<int> const& s, int inner_base, int colors) {
    int const dim = static_cast<int>(s.size());
    if (colors < dim) {
      throw IndexOutOfRange("factor_sequence needs |H| >= alpha");
    }
    for (int v : s) {
      if (v < 0 || v >= inner_base * colors) {
        throw IndexOutOfRange("sequence entry " + std::to_string(v) + " outside V");
      }
    }
    std::vector<int>  z(s);
    std::vector<int>  sigma(s.size());
    std::vector<bool> used(static_cast<std::size_t>(inner_base * colors), false);
    for (int v : s) {
      used[static_cast<std::size_t>(v)] = true;
    }
    for (int i = 0; i < dim; ++i) {
      auto const ui = static_cast<std::size_t>(i);
      int        first = i;
      for (int p = 0; p < i; ++p) {
        if (s[static_cast<std::size_t>(p)] == s[ui]) {
          first = p;
          break;
        }
      }
      sigma[ui] = first;
      if (first == i) {
        continue;
      }
      int const u     = s[ui] / colors;
      int       fresh = -1;
      for (int c = 0; c < colors; ++c) {
        if (!used[static_cast<std::size_t>(u * colors + c)]) {
          fresh = u * colors + c;
          break;
        }
      }
      if (fresh < 0) {
        throw Error("factor_sequence: no unused color left for " + seq_string(s));
      }
      used[static_cast<std::size_t>(fresh)] = true;
      z[ui]                                 = fresh;
    }
    return {std::move(z), Transformation(std::move(sigma))};
  }

  Pushforward kernel_pushforward(FiniteAlgebra const& a, std::vector<Relation> const& g) {
    if (g.size() != static_cast<std::size_t>(a.size)) {
      throw DimensionMismatch("g must have one image per element");
    }
    Pushforward                                     out;
    std::unordered_map<Relation, int, RelationHash> index;
    out.class_of.resize(g.size());
    std::vector<int> rep;  // a representative element per class
    for (std::size_t x = 0; x < g.size(); ++x) {
      auto [it, fresh] = index.emplace(g[x], static_cast<int>(out.image.size()));
      if (fresh) {
        out.image.push_back(g[x]);
        rep.push_back(static_cast<int>(x));
      }
      out.class_of[x] = it->second;
    }
    auto cls = [&](int x) { return out.class_of[static_cast<std::size_t>(x)]; };

    auto fail = [&](int x, int y, int i, int j, std::string reason) {
      out.violation = PushforwardViolation{x, y, i, j, std::move(reason)};
      return out;
    };

    // Kernel step: g(x) = 0 must force g(s_ij x) = 0.
    for (int x = 0; x < a.size; ++x) {
      if (!g[static_cast<std::size_t>(x)].is_empty()) {
        continue;
      }
      for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < a.dim; ++j) {
          if (!g[static_cast<std::size_t>(a.subst(i, j, x))].is_empty()) {
            return fail(x, a.zero(), i, j, "g(x) = 0 but g(s_ij x) != 0");
          }
        }
      }
    }
    // Well-definedness, pairwise.
    for (int x = 0; x < a.size; ++x) {
      int const r = rep[static_cast<std::size_t>(cls(x))];
      if (r == x) {
        continue;
      }
      for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < a.dim; ++j) {
          if (cls(a.subst(i, j, x)) != cls(a.subst(i, j, r))) {
            return fail(r, x, i, j, "g(a) = g(b) but g(s_ij a) != g(s_ij b)");
          }
        }
      }
    }

    FiniteAlgebra b;
    b.dim          = a.dim;
    b.size         = static_cast<int>(out.image.size());
    b.zero_element = cls(a.zero());
    b.one_element  = cls(a.one());
    auto const n   = static_cast<std::size_t>(b.size);
    auto const d   = static_cast<std::size_t>(b.dim);
    b.meet_table.resize(n * n);
    b.complement_table.resize(n);
    b.cyl_tables.assign(d, std::vector<int>(n));
    b.subst_tables.assign(d * d, std::vector<int>(n));
    b.transp_tables.assign(d * d, std::vector<int>(n));
    for (std::size_t p = 0; p < n; ++p) {
      int const x = rep[p];
      for (std::size_t q = 0; q < n; ++q) {
        int const m = cls(a.meet(x, rep[q]));
        if (!(out.image[static_cast<std::size_t>(m)] == meet(out.image[p], out.image[q]))) {
          return fail(x, rep[q], 0, 0, "g does not preserve meet");
        }
        b.meet_table[p * n + q] = m;
      }
      b.complement_table[p] = cls(a.complement(x));
      if (!(out.image[static_cast<std::size_t>(b.complement_table[p])] == complement(out.image[p]))) {
        return fail(x, x, 0, 0, "g does not preserve complement");
      }
      for (int i = 0; i < a.dim; ++i) {
        auto const ui = static_cast<std::size_t>(i);
        b.cyl_tables[ui][p] = cls(a.cyl(i, x));
        if (!(out.image[static_cast<std::size_t>(b.cyl_tables[ui][p])] == cyl(i, out.image[p]))) {
          return fail(x, x, i, i, "g does not preserve c_i");
        }
        for (int j = 0; j < a.dim; ++j) {
          auto const k        = ui * d + static_cast<std::size_t>(j);
          b.subst_tables[k][p] = cls(a.subst(i, j, x));
          b.transp_tables[k][p] = cls(a.transp(i, j, x));
          if (!(out.image[static_cast<std::size_t>(b.transp_tables[k][p])]
                == transp(i, j, out.image[p]))) {
            return fail(x, x, i, j, "g does not preserve p_ij");
          }
        }
      }
    }
    out.induced = std::move(b);
    return out;
  }

  bool LiftReport::passed() const {
    for (auto const& c : checks) {
      if (!c.passed) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // lift_and_verify
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // A check body returns its case count and sets witness on failure.
    using CheckBody = std::function<std::uint64_t(std::string& witness)>;

    struct Runner {
      LiftReport& report;
      bool        stopped = false;

      bool run(std::string name, CheckBody const& body) {
        if (stopped) {
          return false;
        }
        LiftCheck c;
        c.name  = std::move(name);
        c.cases = body(c.witness);
        c.passed = c.witness.empty();
        stopped  = !c.passed;
        report.checks.push_back(std::move(c));
        return !stopped;
      }
    };

    std::string el(char const* name, int x) {
      return std::string(name) + "=" + std::to_string(x);
    }

    /// C_i relative to W, computed directly from the definition.
    Relation cyl_relative(int i, Relation const& x, Relation const& w) {
      auto const& ctx    = x.ctx();
      auto const  stride = ctx.stride(i);
      auto const  base   = static_cast<std::size_t>(ctx.base_size());
      Relation    out(ctx);
      for (std::size_t idx = 0; idx < ctx.num_sequences(); ++idx) {
        if (!w.contains(idx)) {
          continue;
        }
        std::size_t const cleared = idx - static_cast<std::size_t>(ctx.digit(idx, i)) * stride;
        for (std::size_t v = 0; v < base; ++v) {
          std::size_t const t = cleared + v * stride;
          if (w.contains(t) && x.contains(t)) {
            out.insert(idx);
            break;
          }
        }
      }
      return out;
    }

    std::uint64_t check_fpa(FiniteAlgebra const& a, std::string& witness) {
      std::uint64_t cases = 0;
      for (auto const& inst : instantiate_axioms(a.dim)) {
        CheckOptions opt;
        CheckResult<int> r;
        try {
          r = check_equation(inst.eq, a, opt);
        } catch (BudgetExceeded const&) {
          opt.strategy = Strategy::sampled(std::uint64_t{1} << 20, 0);
          r            = check_equation(inst.eq, a, opt);
        }
        cases += r.tested;
        if (!r.valid) {
          witness = inst.label + " fails at";
          for (std::size_t v = 0; v < r.witness.size(); ++v) {
            witness += " x" + std::to_string(v) + "=" + std::to_string(r.witness[v]);
          }
          break;
        }
      }
      return cases;
    }

  }  // namespace

  LiftReport lift_and_verify(Representation const& f, int colors) {
    auto const& a = f.source;
    LiftReport  report{LiftContext(f.target.dim(), f.target.base_size(), colors), {}, {}, {}};
    auto const& lc   = report.lc;
    auto const& vctx = lc.v_ctx();
    Runner      run{report};
    auto const  n  = a.size;
    auto const  d  = a.dim;
    auto        at = [](std::vector<Relation> const& v, int x) -> Relation const& {
      return v[static_cast<std::size_t>(x)];
    };

    if (!run.run("PRE/fpa", [&](std::string& w) { return check_fpa(a, w); })) {
      return report;
    }
    if (!run.run("PRE/f-representation", [&](std::string& w) {
          if (auto err = verify_cp_representation(f)) {
            w = *err;
          }
          return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
        })) {
      return report;
    }

    report.g      = build_g(f, lc);
    auto const& g = report.g;
    auto const  W = repetition_free(vctx);

    run.run("CLAIM1/meet", [&](std::string& w) {
      std::uint64_t c = 0;
      for (int x = 0; x < n && w.empty(); ++x) {
        for (int y = 0; y < n && w.empty(); ++y, ++c) {
          if (auto diff = first_difference(at(g, a.meet(x, y)), meet(at(g, x), at(g, y)));
              !diff.empty()) {
            w = el("x", x) + " " + el("y", y) + ": " + diff;
          }
        }
      }
      return c;
    });
    run.run("CLAIM1/complement", [&](std::string& w) {
      std::uint64_t c = 0;
      for (int x = 0; x < n && w.empty(); ++x, ++c) {
        if (auto diff = first_difference(at(g, a.complement(x)), difference(W, at(g, x)));
            !diff.empty()) {
          w = el("x", x) + ": " + diff;
        }
      }
      return c;
    });
    run.run("CLAIM1/cyl", [&](std::string& w) {
      std::uint64_t c = 0;
      for (int x = 0; x < n && w.empty(); ++x) {
        for (int i = 0; i < d && w.empty(); ++i, ++c) {
          if (auto diff = first_difference(at(g, a.cyl(i, x)), cyl_relative(i, at(g, x), W));
              !diff.empty()) {
            w = el("x", x) + " " + el("i", i) + ": " + diff;
          }
        }
      }
      return c;
    });
    run.run("CLAIM1/fresh-color", [&](std::string& w) {
      std::uint64_t c = 0;
      for (std::size_t idx = 0; idx < vctx.num_sequences() && w.empty(); ++idx) {
        if (!W.contains(idx)) {
          continue;
        }
        auto const        s = vctx.decode(idx);
        std::vector<bool> taken(static_cast<std::size_t>(lc.colors()), false);
        for (int v : s) {
          taken[static_cast<std::size_t>(lc.color_of(v))] = true;
        }
        for (int i = 0; i < d && w.empty(); ++i) {
          for (int u = 0; u < lc.inner_base(); ++u, ++c) {
            // some color a outside {s_j(1)} gives s(i/(u,a)) in W
            bool found = false;
            for (int col = 0; col < lc.colors() && !found; ++col) {
              if (taken[static_cast<std::size_t>(col)]) {
                continue;
              }
              auto t = s;
              t[static_cast<std::size_t>(i)] = lc.pair(u, col);
              found = W.contains(t);
            }
            if (!found) {
              w = "no fresh color for s=" + seq_string(s) + " " + el("i", i) + " " + el("u", u);
            }
          }
        }
      }
      return c;
    });
    run.run("CLAIM1/transp", [&](std::string& w) {
      std::uint64_t c = 0;
      for (int x = 0; x < n && w.empty(); ++x) {
        for (int i = 0; i < d && w.empty(); ++i) {
          for (int j = 0; j < d && w.empty(); ++j, ++c) {
            if (auto diff = first_difference(at(g, a.transp(i, j, x)), transp(i, j, at(g, x)));
                !diff.empty()) {
              w = el("x", x) + " " + el("i", i) + " " + el("j", j) + ": " + diff;
            }
          }
        }
      }
      return c;
    });
    run.run("W/relativization", [&](std::string& w) {
      std::uint64_t c = 0;
      for (int x = 0; x < n && w.empty(); ++x) {
        auto const& gx = at(g, x);
        ++c;
        if (!is_subset(gx, W)) {
          w = el("x", x) + ": g(x) leaves W";
          break;
        }
        if (auto diff = first_difference(difference(W, gx), meet(W, complement(gx)));
            !diff.empty()) {
          w = el("x", x) + " complement: " + diff;
        }
        for (int i = 0; i < d && w.empty(); ++i, ++c) {
          if (auto diff = first_difference(cyl_relative(i, gx, W), meet(W, cyl(i, gx)));
              !diff.empty()) {
            w = el("x", x) + " " + el("i", i) + ": " + diff;
          }
        }
      }
      return c;
    });
    run.run("G/cyl", [&](std::string& w) {
      std::uint64_t c = 0;
      for (int x = 0; x < n && w.empty(); ++x) {
        for (int i = 0; i < d && w.empty(); ++i, ++c) {
          if (auto diff = first_difference(at(g, a.cyl(i, x)), meet(cyl(i, at(g, x)), W));
              !diff.empty()) {
            w = el("x", x) + " " + el("i", i) + ": " + diff;
          }
        }
      }
      return c;
    });

    auto const all_t = enumerate_transformations(d);
    std::vector<std::vector<int>> ss;
    ss.reserve(all_t.size());
    for (auto const& sigma : all_t) {
      ss.push_back(subst_sigma_table(a, sigma));
    }

    run.run("G/permutations", [&](std::string& w) {
      std::uint64_t c = 0;
      for (std::size_t k = 0; k < all_t.size() && w.empty(); ++k) {
        if (classify(all_t[k]) != TransformKind::Permutational) {
          continue;
        }
        for (int x = 0; x < n && w.empty(); ++x, ++c) {
          auto const& lhs = at(g, ss[k][static_cast<std::size_t>(x)]);
          if (auto diff = first_difference(lhs, meet(W, subst_sigma(all_t[k], at(g, x))));
              !diff.empty()) {
            w = "sigma=(" + to_string(all_t[k]) + ") " + el("x", x) + ": " + diff;
          }
        }
      }
      return c;
    });
    run.run("H/coverage", [&](std::string& w) {
      std::uint64_t c = 0;
      for (std::size_t idx = 0; idx < vctx.num_sequences() && w.empty(); ++idx, ++c) {
        auto const s  = vctx.decode(idx);
        auto const fz = factor_sequence(s, lc.inner_base(), lc.colors());
        if (!W.contains(fz.z) || apply_to_sequence(fz.z, fz.sigma) != s) {
          w = "bad factorization of " + seq_string(s);
        }
      }
      return c;
    });
    run.run("S5/abstract", [&](std::string& w) {
      std::uint64_t c = 0;
      for (std::size_t p = 0; p < all_t.size() && w.empty(); ++p) {
        for (std::size_t q = 0; q < all_t.size() && w.empty(); ++q) {
          auto const& pq = ss[compose(all_t[p], all_t[q]).index()];
          for (int x = 0; x < n && w.empty(); ++x, ++c) {
            auto const ux = static_cast<std::size_t>(x);
            if (ss[p][static_cast<std::size_t>(ss[q][ux])] != pq[ux]) {
              w = "sigma=(" + to_string(all_t[p]) + ") eta=(" + to_string(all_t[q]) + ") "
                  + el("x", x);
            }
          }
        }
      }
      return c;
    });
    if (run.stopped) {
      return report;
    }

    report.h      = build_h(a, g, lc);
    auto const& h = report.h;

    run.run("H/restrict-W", [&](std::string& w) {
      std::uint64_t c = 0;
      for (int x = 0; x < n && w.empty(); ++x, ++c) {
        if (auto diff = first_difference(meet(at(h, x), W), at(g, x)); !diff.empty()) {
          w = el("x", x) + ": " + diff;
        }
      }
      return c;
    });
    run.run("H/forms", [&](std::string& w) {
      // h(x) = g(x) u { z o sigma : z in g(s_sigma x), sigma singular }
      std::vector<Relation> alt(g);
      std::vector<std::size_t> zi;
      for (std::size_t idx = 0; idx < vctx.num_sequences(); ++idx) {
        if (W.contains(idx)) {
          zi.push_back(idx);
        }
      }
      for (std::size_t k = 0; k < all_t.size(); ++k) {
        if (classify(all_t[k]) != TransformKind::Singular) {
          continue;
        }
        for (std::size_t zk : zi) {
          auto const t = vctx.encode(apply_to_sequence(vctx.decode(zk), all_t[k]));
          for (int x = 0; x < n; ++x) {
            if (at(g, ss[k][static_cast<std::size_t>(x)]).contains(zk)) {
              alt[static_cast<std::size_t>(x)].insert(t);
            }
          }
        }
      }
      std::uint64_t c = 0;
      for (int x = 0; x < n && w.empty(); ++x, ++c) {
        if (auto diff = first_difference(at(h, x), at(alt, x)); !diff.empty()) {
          w = el("x", x) + ": " + diff;
        }
      }
      return c;
    });
    run.run("BOOL", [&](std::string& w) {
      std::uint64_t c = 2;
      if (!at(h, a.zero()).is_empty()) {
        w = "h(0) is not empty";
      } else if (!(at(h, a.one()) == Relation::full(vctx))) {
        w = "h(1) is not the unit: " + first_difference(at(h, a.one()), Relation::full(vctx));
      }
      for (int x = 0; x < n && w.empty(); ++x) {
        ++c;
        if (auto diff = first_difference(at(h, a.complement(x)), complement(at(h, x)));
            !diff.empty()) {
          w = "complement " + el("x", x) + ": " + diff;
        }
        for (int y = 0; y < n && w.empty(); ++y, ++c) {
          if (auto diff = first_difference(at(h, a.meet(x, y)), meet(at(h, x), at(h, y)));
              !diff.empty()) {
            w = "meet " + el("x", x) + " " + el("y", y) + ": " + diff;
          }
        }
      }
      return c;
    });
    run.run("CLAIM2", [&](std::string& w) {
      std::uint64_t c = 0;
      for (int x = 0; x < n && w.empty(); ++x) {
        for (int i = 0; i < d && w.empty(); ++i, ++c) {
          if (auto diff = first_difference(at(h, a.cyl(i, x)), cyl(i, at(h, x))); !diff.empty()) {
            w = el("x", x) + " " + el("i", i) + ": " + diff;
          }
        }
      }
      return c;
    });
    run.run("CLAIM3", [&](std::string& w) {
      std::uint64_t c = 0;
      for (std::size_t k = 0; k < all_t.size() && w.empty(); ++k) {
        for (int x = 0; x < n && w.empty(); ++x, ++c) {
          auto const& lhs = at(h, ss[k][static_cast<std::size_t>(x)]);
          if (auto diff = first_difference(lhs, subst_sigma(all_t[k], at(h, x))); !diff.empty()) {
            w = "eta=(" + to_string(all_t[k]) + ") " + el("x", x) + ": " + diff;
          }
        }
      }
      return c;
    });
    run.run("CLAIM3/generators", [&](std::string& w) {
      std::uint64_t c = 0;
      for (int x = 0; x < n && w.empty(); ++x) {
        for (int i = 0; i < d && w.empty(); ++i) {
          for (int j = 0; j < d && w.empty(); ++j, c += 2) {
            if (auto diff = first_difference(at(h, a.subst(i, j, x)), subst(i, j, at(h, x)));
                !diff.empty()) {
              w = "s " + el("x", x) + " " + el("i", i) + " " + el("j", j) + ": " + diff;
            } else if (auto diff2
                       = first_difference(at(h, a.transp(i, j, x)), transp(i, j, at(h, x)));
                       !diff2.empty()) {
              w = "p " + el("x", x) + " " + el("i", i) + " " + el("j", j) + ": " + diff2;
            }
          }
        }
      }
      return c;
    });
    run.run("INJECTIVE", [&](std::string& w) {
      std::unordered_map<Relation, int, RelationHash> seen;
      for (int x = 0; x < n && w.empty(); ++x) {
        auto [it, fresh] = seen.emplace(at(h, x), x);
        if (!fresh) {
          w = "h(" + std::to_string(it->second) + ") = h(" + std::to_string(x) + ")";
        }
      }
      return static_cast<std::uint64_t>(n);
    });
    return report;
  }

}  // namespace polylift
