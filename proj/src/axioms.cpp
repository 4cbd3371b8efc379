#include "polylift/axioms.hpp"

#include <algorithm>

#include "polylift/error.hpp"

namespace polylift {

  namespace {

    using T = Term;

    T x() { return T::var(0); }
    T y() { return T::var(1); }
    T z() { return T::var(2); }

    std::string ij(int i, int j) {
      return "[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]";
    }

    std::string sig(Transformation const& s) {
      return "(" + to_string(s) + ")";
    }

    void boolean_basis(std::vector<LabeledEquation>& out) {
      auto add = [&](char const* name, T lhs, T rhs) {
        out.push_back({"F0", std::string("F0/bool:") + name, {std::move(lhs), std::move(rhs)}});
      };
      add("comm-join", T::join(x(), y()), T::join(y(), x()));
      add("comm-meet", T::meet(x(), y()), T::meet(y(), x()));
      add("ident-join", T::join(x(), T::zero()), x());
      add("ident-meet", T::meet(x(), T::one()), x());
      add("dist-join", T::join(x(), T::meet(y(), z())), T::meet(T::join(x(), y()), T::join(x(), z())));
      add("dist-meet", T::meet(x(), T::join(y(), z())), T::join(T::meet(x(), y()), T::meet(x(), z())));
      add("compl-join", T::join(x(), T::complement(x())), T::one());
      add("compl-meet", T::meet(x(), T::complement(x())), T::zero());
    }

  }  // namespace

  std::vector<std::string> axiom_schemas() {
    return {"F0", "F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9"};
  }

  std::vector<std::string> derived_schemas() {
    return {"S1", "S2", "S3", "S4", "S5", "S6"};
  }

  std::vector<LabeledEquation> instantiate_axioms(int alpha) {
    if (alpha < 1) {
      throw IndexOutOfRange("alpha must be positive");
    }
    std::vector<LabeledEquation> out;
    auto add = [&](std::string schema, std::string label, T lhs, T rhs) {
      out.push_back({std::move(schema), std::move(label), {std::move(lhs), std::move(rhs)}});
    };

    boolean_basis(out);
    for (int i = 0; i < alpha; ++i) {
      auto const l = "[i=" + std::to_string(i) + "]";
      add("F0", "F0/s-id" + l, T::subst(i, i, x()), x());
      add("F0", "F0/p-id" + l, T::transp(i, i, x()), x());
    }
    for (int i = 0; i < alpha; ++i) {
      for (int j = 0; j < alpha; ++j) {
        if (i != j) {
          add("F0", "F0/p-sym" + ij(i, j), T::transp(i, j, x()), T::transp(j, i, x()));
        }
      }
    }

    for (int i = 0; i < alpha; ++i) {
      auto const l = "[i=" + std::to_string(i) + "]";
      // x <= c_i x, as an equation
      add("F1", "F1" + l, T::meet(x(), T::cyl(i, x())), x());
    }
    for (int i = 0; i < alpha; ++i) {
      add("F2", "F2[i=" + std::to_string(i) + "]", T::cyl(i, T::join(x(), y())),
          T::join(T::cyl(i, x()), T::cyl(i, y())));
    }
    for (int i = 0; i < alpha; ++i) {
      for (int j = 0; j < alpha; ++j) {
        add("F3", "F3" + ij(i, j), T::subst(i, j, T::cyl(i, x())), T::cyl(i, x()));
      }
    }
    for (int i = 0; i < alpha; ++i) {
      for (int j = 0; j < alpha; ++j) {
        if (i != j) {
          add("F4", "F4" + ij(i, j), T::cyl(i, T::subst(i, j, x())), T::subst(i, j, x()));
        }
      }
    }
    for (int i = 0; i < alpha; ++i) {
      for (int j = 0; j < alpha; ++j) {
        for (int k = 0; k < alpha; ++k) {
          if (k == i || k == j) {
            continue;
          }
          add("F5",
              "F5[i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",k=" + std::to_string(k)
                  + "]",
              T::subst(i, j, T::cyl(k, x())), T::cyl(k, T::subst(i, j, x())));
        }
      }
    }
    for (int i = 0; i < alpha; ++i) {
      for (int j = 0; j < alpha; ++j) {
        auto const l = ij(i, j);
        add("F6", "F6/s-meet" + l, T::subst(i, j, T::meet(x(), y())),
            T::meet(T::subst(i, j, x()), T::subst(i, j, y())));
        add("F6", "F6/s-compl" + l, T::subst(i, j, T::complement(x())),
            T::complement(T::subst(i, j, x())));
        add("F6", "F6/p-meet" + l, T::transp(i, j, T::meet(x(), y())),
            T::meet(T::transp(i, j, x()), T::transp(i, j, y())));
        add("F6", "F6/p-compl" + l, T::transp(i, j, T::complement(x())),
            T::complement(T::transp(i, j, x())));
      }
    }
    for (int i = 0; i < alpha; ++i) {
      for (int j = 0; j < alpha; ++j) {
        add("F7", "F7" + ij(i, j), T::transp(i, j, T::transp(i, j, x())), x());
      }
    }
    for (int i = 0; i < alpha; ++i) {
      for (int j = 0; j < alpha; ++j) {
        for (int k = 0; k < alpha; ++k) {
          if (i == j || j == k || i == k) {
            continue;
          }
          add("F8",
              "F8[i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",k=" + std::to_string(k)
                  + "]",
              T::transp(i, j, T::transp(i, k, x())), T::transp(j, k, T::transp(i, j, x())));
        }
      }
    }
    for (int i = 0; i < alpha; ++i) {
      for (int j = 0; j < alpha; ++j) {
        add("F9", "F9" + ij(i, j), T::transp(i, j, T::subst(j, i, x())), T::subst(i, j, x()));
      }
    }
    return out;
  }

  std::vector<LabeledEquation> instantiate_derived(int alpha) {
    if (alpha > kMaxDerivedDim) {
      throw DimTooLarge("derived instances need alpha <= " + std::to_string(kMaxDerivedDim));
    }
    if (alpha < 1) {
      throw IndexOutOfRange("alpha must be positive");
    }
    auto const                   all = enumerate_transformations(alpha);
    std::vector<LabeledEquation> out;
    auto add = [&](std::string schema, std::string label, T lhs, T rhs) {
      out.push_back({std::move(schema), std::move(label), {std::move(lhs), std::move(rhs)}});
    };
    auto ss = [](Transformation const& s, T t) { return T::subst_sigma(s, std::move(t)); };

    for (auto const& s : all) {
      auto const img = s.image();
      for (int k = 0; k < alpha; ++k) {
        if (std::find(img.begin(), img.end(), k) == img.end()) {
          add("S1", "S1[sigma=" + sig(s) + ",k=" + std::to_string(k) + "]", ss(s, x()),
              T::cyl(k, ss(s, x())));
        }
      }
    }
    for (auto const& s : all) {
      for (int i = 0; i < alpha; ++i) {
        for (int v = 0; v < alpha; ++v) {
          if (v == s(i)) {
            continue;
          }
          std::vector<int> d(s.image().begin(), s.image().end());
          d[static_cast<std::size_t>(i)] = v;
          Transformation const delta(std::move(d));
          add("S2",
              "S2[sigma=" + sig(s) + ",delta=" + sig(delta) + ",i=" + std::to_string(i) + "]",
              ss(s, T::cyl(i, x())), ss(delta, T::cyl(i, x())));
        }
      }
    }
    for (auto const& s : all) {
      for (int i = 0; i < alpha; ++i) {
        int const k     = s(i);
        auto const img  = s.image();
        auto const hits = std::count(img.begin(), img.end(), k);
        if (hits == 1) {
          add("S3",
              "S3[sigma=" + sig(s) + ",i=" + std::to_string(i) + ",k=" + std::to_string(k) + "]",
              ss(s, T::cyl(i, x())), T::cyl(k, ss(s, x())));
        }
      }
    }
    for (auto const& s : all) {
      add("S4", "S4/meet[sigma=" + sig(s) + "]", ss(s, T::meet(x(), y())),
          T::meet(ss(s, x()), ss(s, y())));
      add("S4", "S4/compl[sigma=" + sig(s) + "]", ss(s, T::complement(x())),
          T::complement(ss(s, x())));
    }
    for (auto const& s : all) {
      for (auto const& e : all) {
        add("S5", "S5[sigma=" + sig(s) + ",eta=" + sig(e) + "]", ss(s, ss(e, x())),
            ss(compose(s, e), x()));
      }
    }
    for (int i = 0; i < alpha; ++i) {
      for (int j = 0; j < alpha; ++j) {
        if (i != j) {
          add("S6", "S6" + ij(i, j), T::subst(i, j, x()), T::cyl(i, T::subst(i, j, x())));
        }
      }
    }
    return out;
  }

}  // namespace polylift
