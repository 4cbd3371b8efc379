#include "polylift/finite_algebra.hpp"

#include <charconv>
#include <unordered_map>

#include <json.hpp>

#include "polylift/error.hpp"

namespace polylift {

  namespace {

    void check_table(std::vector<int> const& table, std::size_t expected_len, int size,
                     std::string const& name) {
      if (table.size() != expected_len) {
        throw MalformedTables(name + " has " + std::to_string(table.size()) + " entries, expected "
                              + std::to_string(expected_len));
      }
      for (std::size_t k = 0; k < table.size(); ++k) {
        if (table[k] < 0 || table[k] >= size) {
          throw MalformedTables(name + "[" + std::to_string(k) + "] = " + std::to_string(table[k])
                                + " is not an element");
        }
      }
    }

  }  // namespace

  void FiniteAlgebra::validate() const {
    if (dim < 1) {
      throw MalformedTables("dimension must be positive");
    }
    if (size < 1) {
      throw MalformedTables("universe must be non-empty");
    }
    auto const n = static_cast<std::size_t>(size);
    auto const d = static_cast<std::size_t>(dim);
    if (zero_element < 0 || zero_element >= size || one_element < 0 || one_element >= size) {
      throw MalformedTables("designated 0/1 outside the universe");
    }
    check_table(meet_table, n * n, size, "meet");
    check_table(complement_table, n, size, "complement");
    if (cyl_tables.size() != d || subst_tables.size() != d * d || transp_tables.size() != d * d) {
      throw MalformedTables("wrong number of c/s/p tables for alpha=" + std::to_string(dim));
    }
    for (std::size_t i = 0; i < d; ++i) {
      check_table(cyl_tables[i], n, size, "c_" + std::to_string(i));
      for (std::size_t j = 0; j < d; ++j) {
        auto const suffix = std::to_string(i) + std::to_string(j);
        check_table(subst_tables[i * d + j], n, size, "s_" + suffix);
        check_table(transp_tables[i * d + j], n, size, "p_" + suffix);
      }
    }
    if (complement(one_element) != zero_element) {
      throw MalformedTables("designated 0 is not the complement of designated 1");
    }
  }

  int FiniteAlgebra::parse_element(std::string_view text) const {
    int  value     = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0 || value >= size) {
      throw ParseError("expected element index below " + std::to_string(size) + ", got '"
                           + std::string(text) + "'",
                       0);
    }
    return value;
  }

  std::vector<int> subst_sigma_table(FiniteAlgebra const& a, Transformation const& sigma) {
    if (sigma.dim() != a.dim) {
      throw DimensionMismatch("s_sigma of dim " + std::to_string(sigma.dim()) + " on alpha="
                              + std::to_string(a.dim));
    }
    auto const       word = decompose_mixed(sigma);
    std::vector<int> table(static_cast<std::size_t>(a.size));
    for (int x = 0; x < a.size; ++x) {
      int v = x;
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        v = it->kind == Generator::Kind::Replacement ? a.subst(it->i, it->j, v)
                                                     : a.transp(it->i, it->j, v);
      }
      table[static_cast<std::size_t>(x)] = v;
    }
    return table;
  }

  FiniteAlgebra tabulate(std::vector<Relation> const& elements) {
    if (elements.empty()) {
      throw MalformedTables("no elements to tabulate");
    }
    auto const&                                             ctx = elements.front().ctx();
    std::unordered_map<Relation, int, RelationHash>         index;
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if (!(elements[k].ctx() == ctx)) {
        throw DimensionMismatch("tabulate: mixed contexts");
      }
      index.emplace(elements[k], static_cast<int>(k));
    }
    if (index.size() != elements.size()) {
      throw MalformedTables("tabulate: duplicate elements");
    }
    auto lookup = [&](Relation const& r, char const* op) {
      auto it = index.find(r);
      if (it == index.end()) {
        throw MalformedTables(std::string("element set not closed under ") + op);
      }
      return it->second;
    };

    FiniteAlgebra a;
    a.dim          = ctx.dim();
    a.size         = static_cast<int>(elements.size());
    a.zero_element = lookup(Relation::empty(ctx), "0");
    a.one_element  = lookup(Relation::full(ctx), "1");
    auto const n   = elements.size();
    auto const d   = static_cast<std::size_t>(a.dim);
    a.meet_table.resize(n * n);
    a.complement_table.resize(n);
    a.cyl_tables.assign(d, std::vector<int>(n));
    a.subst_tables.assign(d * d, std::vector<int>(n));
    a.transp_tables.assign(d * d, std::vector<int>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        a.meet_table[x * n + y] = lookup(meet(elements[x], elements[y]), "meet");
      }
      a.complement_table[x] = lookup(complement(elements[x]), "complement");
      for (int i = 0; i < a.dim; ++i) {
        auto const ui        = static_cast<std::size_t>(i);
        a.cyl_tables[ui][x] = lookup(cyl(i, elements[x]), "c_i");
        for (int j = 0; j < a.dim; ++j) {
          auto const uj                  = static_cast<std::size_t>(j);
          a.subst_tables[ui * d + uj][x]  = lookup(subst(i, j, elements[x]), "s_ij");
          a.transp_tables[ui * d + uj][x] = lookup(transp(i, j, elements[x]), "p_ij");
        }
      }
    }
    return a;
  }

  std::vector<Relation> all_relations(SetAlgebraContext const& ctx) {
    if (ctx.num_sequences() > 16) {
      throw DimTooLarge("all_relations needs |U|^alpha <= 16");
    }
    std::uint64_t const   total = std::uint64_t{1} << ctx.num_sequences();
    std::vector<Relation> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
      out.push_back(Relation::from_code(ctx, code));
    }
    return out;
  }

  FiniteAlgebra product(FiniteAlgebra const& a, FiniteAlgebra const& b) {
    if (a.dim != b.dim) {
      throw DimensionMismatch("product of algebras of different dimension");
    }
    FiniteAlgebra p;
    p.dim          = a.dim;
    p.size         = a.size * b.size;
    auto enc       = [&](int x, int y) { return x * b.size + y; };
    auto fst       = [&](int z) { return z / b.size; };
    auto snd       = [&](int z) { return z % b.size; };
    p.zero_element = enc(a.zero(), b.zero());
    p.one_element  = enc(a.one(), b.one());
    auto const n   = static_cast<std::size_t>(p.size);
    auto const d   = static_cast<std::size_t>(p.dim);
    p.meet_table.resize(n * n);
    p.complement_table.resize(n);
    p.cyl_tables.assign(d, std::vector<int>(n));
    p.subst_tables.assign(d * d, std::vector<int>(n));
    p.transp_tables.assign(d * d, std::vector<int>(n));
    for (int z = 0; z < p.size; ++z) {
      auto const uz = static_cast<std::size_t>(z);
      for (int w = 0; w < p.size; ++w) {
        p.meet_table[uz * n + static_cast<std::size_t>(w)]
            = enc(a.meet(fst(z), fst(w)), b.meet(snd(z), snd(w)));
      }
      p.complement_table[uz] = enc(a.complement(fst(z)), b.complement(snd(z)));
      for (int i = 0; i < p.dim; ++i) {
        auto const ui        = static_cast<std::size_t>(i);
        p.cyl_tables[ui][uz] = enc(a.cyl(i, fst(z)), b.cyl(i, snd(z)));
        for (int j = 0; j < p.dim; ++j) {
          auto const uj = static_cast<std::size_t>(j);
          p.subst_tables[ui * d + uj][uz]  = enc(a.subst(i, j, fst(z)), b.subst(i, j, snd(z)));
          p.transp_tables[ui * d + uj][uz] = enc(a.transp(i, j, fst(z)), b.transp(i, j, snd(z)));
        }
      }
    }
    return p;
  }

  FiniteAlgebra two_element_algebra(int dim) {
    FiniteAlgebra a;
    a.dim              = dim;
    a.size             = 2;
    a.zero_element     = 0;
    a.one_element      = 1;
    a.meet_table       = {0, 0, 0, 1};
    a.complement_table = {1, 0};
    auto const d       = static_cast<std::size_t>(dim);
    a.cyl_tables.assign(d, {0, 1});
    a.subst_tables.assign(d * d, {0, 1});
    a.transp_tables.assign(d * d, {0, 1});
    return a;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  std::string to_json(FiniteAlgebra const& a) {
    nlohmann::ordered_json j;
    j["alpha"]      = a.dim;
    j["size"]       = a.size;
    j["zero"]       = a.zero_element;
    j["one"]        = a.one_element;
    auto const n    = static_cast<std::size_t>(a.size);
    auto       rows = nlohmann::json::array();
    for (std::size_t x = 0; x < n; ++x) {
      rows.push_back(std::vector<int>(a.meet_table.begin() + static_cast<std::ptrdiff_t>(x * n),
                                      a.meet_table.begin() + static_cast<std::ptrdiff_t>((x + 1) * n)));
    }
    j["meet"]       = rows;
    j["complement"] = a.complement_table;
    j["cyl"]        = a.cyl_tables;
    auto square     = [&](std::vector<std::vector<int>> const& flat) {
      auto       out = nlohmann::json::array();
      auto const d   = static_cast<std::size_t>(a.dim);
      for (std::size_t i = 0; i < d; ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t k = 0; k < d; ++k) {
          row.push_back(flat[i * d + k]);
        }
        out.push_back(row);
      }
      return out;
    };
    j["subst"]  = square(a.subst_tables);
    j["transp"] = square(a.transp_tables);
    return j.dump();
  }

  FiniteAlgebra finite_algebra_from_json(std::string const& text) {
    FiniteAlgebra a;
    try {
      auto const j   = nlohmann::json::parse(text);
      a.dim          = j.at("alpha").get<int>();
      a.size         = j.at("size").get<int>();
      a.zero_element = j.at("zero").get<int>();
      a.one_element  = j.at("one").get<int>();
      for (auto const& row : j.at("meet")) {
        auto r = row.get<std::vector<int>>();
        a.meet_table.insert(a.meet_table.end(), r.begin(), r.end());
      }
      a.complement_table = j.at("complement").get<std::vector<int>>();
      a.cyl_tables       = j.at("cyl").get<std::vector<std::vector<int>>>();
      for (auto const& row : j.at("subst")) {
        for (auto const& t : row) {
          a.subst_tables.push_back(t.get<std::vector<int>>());
        }
      }
      for (auto const& row : j.at("transp")) {
        for (auto const& t : row) {
          a.transp_tables.push_back(t.get<std::vector<int>>());
        }
      }
    } catch (nlohmann::json::exception const& e) {
      throw MalformedTables(std::string("algebra JSON: ") + e.what());
    }
    a.validate();
    return a;
  }

}  // namespace polylift
