#include "polylift/transform.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <deque>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>

#include "polylift/error.hpp"

namespace polylift {

  namespace {

    void check_index(int dim, int i, char const* what) {
      if (i < 0 || i >= dim) {
        throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i)
                              + " out of range for dimension " + std::to_string(dim));
      }
    }

    std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r\n");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r\n");
      return s.substr(first, last - first + 1);
    }

    int parse_int(std::string_view s, std::size_t pos) {
      s = trim(s);
      int value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError("expected integer, got '" + std::string(s) + "'", pos);
      }
      return value;
    }

    // Breadth-first closure of the monoid generated by the replacements.
    // parent[t] / letter[t] reconstruct a shortest word for t.
    struct ReplacementTable {
      std::vector<std::optional<std::size_t>> parent;
      std::vector<Generator>                  letter;
      std::vector<bool>                       reached;
    };

    ReplacementTable build_replacement_table(int dim) {
      std::size_t total = 1;
      for (int k = 0; k < dim; ++k) {
        total *= static_cast<std::size_t>(dim);
      }
      ReplacementTable table;
      table.parent.assign(total, std::nullopt);
      table.letter.assign(total, Generator{Generator::Kind::Replacement, 0, 0});
      table.reached.assign(total, false);

      std::vector<Generator> gens;
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          if (i != j) {
            gens.push_back(Generator::replacement(i, j));
          }
        }
      }

      auto const                   id = Transformation::identity(dim);
      std::deque<Transformation>   queue{id};
      table.reached[id.index()] = true;
      while (!queue.empty()) {
        auto const t = queue.front();
        queue.pop_front();
        for (auto const& g : gens) {
          auto next = compose(t, g.as_transformation(dim));
          auto idx  = next.index();
          if (!table.reached[idx]) {
            table.reached[idx] = true;
            table.parent[idx]  = t.index();
            table.letter[idx]  = g;
            queue.push_back(std::move(next));
          }
        }
      }
      return table;
    }

    ReplacementTable const& replacement_table(int dim) {
      static std::mutex                                                    mtx;
      static std::array<std::optional<ReplacementTable>, kMaxReplacementTableDim + 1> cache;
      std::lock_guard lock(mtx);
      auto&           slot = cache[static_cast<std::size_t>(dim)];
      if (!slot) {
        slot = build_replacement_table(dim);
      }
      return *slot;
    }

    void append_cycle_transpositions(Transformation const& perm, GeneratorWord& out) {
      // A cycle a1 -> a2 -> ... -> ak equals [a1,ak] o ... o [a1,a3] o [a1,a2].
      int const         n = perm.dim();
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)] || perm(start) == start) {
          continue;
        }
        std::vector<int> cycle;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = perm(x)) {
          seen[static_cast<std::size_t>(x)] = true;
          cycle.push_back(x);
        }
        for (std::size_t k = cycle.size() - 1; k >= 1; --k) {
          out.push_back(Generator::transposition(cycle[0], cycle[k]));
        }
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  Transformation::Transformation(std::vector<int> image) : image_(std::move(image)) {
    int const n = dim();
    for (int v : image_) {
      check_index(n, v, "image");
    }
  }

  Transformation Transformation::identity(int dim) {
    std::vector<int> img(static_cast<std::size_t>(dim));
    std::iota(img.begin(), img.end(), 0);
    return Transformation(std::move(img));
  }

  Transformation Transformation::transposition(int dim, int i, int j) {
    check_index(dim, i, "transposition");
    check_index(dim, j, "transposition");
    auto t = identity(dim);
    std::swap(t.image_[static_cast<std::size_t>(i)], t.image_[static_cast<std::size_t>(j)]);
    return t;
  }

  Transformation Transformation::replacement(int dim, int i, int j) {
    check_index(dim, i, "replacement");
    check_index(dim, j, "replacement");
    auto t                                = identity(dim);
    t.image_[static_cast<std::size_t>(i)] = j;
    return t;
  }

  bool Transformation::is_identity() const {
    for (int i = 0; i < dim(); ++i) {
      if ((*this)(i) != i) {
        return false;
      }
    }
    return true;
  }

  std::size_t Transformation::index() const {
    std::size_t idx = 0;
    for (auto it = image_.rbegin(); it != image_.rend(); ++it) {
      idx = idx * image_.size() + static_cast<std::size_t>(*it);
    }
    return idx;
  }

  Transformation Transformation::from_index(int dim, std::size_t index) {
    std::vector<int> img(static_cast<std::size_t>(dim));
    for (auto& v : img) {
      v = static_cast<int>(index % static_cast<std::size_t>(dim));
      index /= static_cast<std::size_t>(dim);
    }
    return Transformation(std::move(img));
  }

  Transformation compose(Transformation const& sigma, Transformation const& tau) {
    if (sigma.dim() != tau.dim()) {
      throw DimensionMismatch("compose: dimensions " + std::to_string(sigma.dim()) + " and "
                              + std::to_string(tau.dim()));
    }
    std::vector<int> img(static_cast<std::size_t>(sigma.dim()));
    for (int i = 0; i < sigma.dim(); ++i) {
      img[static_cast<std::size_t>(i)] = sigma(tau(i));
    }
    return Transformation(std::move(img));
  }

  TransformKind classify(Transformation const& sigma) {
    std::vector<bool> hit(static_cast<std::size_t>(sigma.dim()), false);
    for (int v : sigma.image()) {
      hit[static_cast<std::size_t>(v)] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })
               ? TransformKind::Permutational
               : TransformKind::Singular;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generators and words
  ////////////////////////////////////////////////////////////////////////

  Generator Generator::transposition(int i, int j) {
    if (i == j || i < 0 || j < 0) {
      throw IndexOutOfRange("transposition [" + std::to_string(i) + "," + std::to_string(j)
                            + "] needs distinct non-negative indices");
    }
    return {Kind::Transposition, i, j};
  }

  Generator Generator::replacement(int i, int j) {
    if (i == j || i < 0 || j < 0) {
      throw IndexOutOfRange("replacement [" + std::to_string(i) + "/" + std::to_string(j)
                            + "] needs distinct non-negative indices");
    }
    return {Kind::Replacement, i, j};
  }

  Transformation Generator::as_transformation(int dim) const {
    return kind == Kind::Transposition ? Transformation::transposition(dim, i, j)
                                       : Transformation::replacement(dim, i, j);
  }

  Transformation evaluate(GeneratorWord const& word, int dim) {
    auto result = Transformation::identity(dim);
    for (auto const& g : word) {
      result = compose(result, g.as_transformation(dim));
    }
    return result;
  }

  GeneratorWord decompose_mixed(Transformation const& sigma) {
    int const n = sigma.dim();
    // sigma = tau o kappa: kappa sends each index to the least member of its
    // kernel class, tau is a bijection agreeing with sigma on those members.
    std::vector<int> rep(static_cast<std::size_t>(n));
    std::vector<int> first_with_value(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
      auto& f = first_with_value[static_cast<std::size_t>(sigma(i))];
      if (f < 0) {
        f = i;
      }
      rep[static_cast<std::size_t>(i)] = f;
    }

    std::vector<int>  tau(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
      if (rep[static_cast<std::size_t>(i)] == i) {
        tau[static_cast<std::size_t>(i)]        = sigma(i);
        used[static_cast<std::size_t>(sigma(i))] = true;
      }
    }
    int free_value = 0;
    for (int i = 0; i < n; ++i) {
      if (tau[static_cast<std::size_t>(i)] < 0) {
        while (used[static_cast<std::size_t>(free_value)]) {
          ++free_value;
        }
        tau[static_cast<std::size_t>(i)]          = free_value;
        used[static_cast<std::size_t>(free_value)] = true;
      }
    }

    GeneratorWord word;
    append_cycle_transpositions(Transformation(std::move(tau)), word);
    for (int i = 0; i < n; ++i) {
      if (rep[static_cast<std::size_t>(i)] != i) {
        word.push_back(Generator::replacement(i, rep[static_cast<std::size_t>(i)]));
      }
    }
    return word;
  }

  GeneratorWord decompose_replacements(Transformation const& sigma) {
    if (sigma.dim() > kMaxReplacementTableDim) {
      throw DimTooLarge("decompose_replacements supports dim <= "
                        + std::to_string(kMaxReplacementTableDim));
    }
    if (classify(sigma) == TransformKind::Permutational) {
      throw PermutationalInput("a bijection is not a composition of replacements: "
                               + to_string(sigma));
    }
    auto const& table = replacement_table(sigma.dim());
    auto        idx   = sigma.index();
    if (!table.reached[idx]) {
      throw Error("replacement closure does not contain " + to_string(sigma));
    }
    GeneratorWord word;
    while (table.parent[idx]) {
      word.push_back(table.letter[idx]);
      idx = *table.parent[idx];
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  std::vector<int> apply_to_sequence(std::span<int const> s, Transformation const& sigma) {
    if (static_cast<int>(s.size()) != sigma.dim()) {
      throw DimensionMismatch("apply_to_sequence: sequence length " + std::to_string(s.size())
                              + " vs dimension " + std::to_string(sigma.dim()));
    }
    std::vector<int> out(s.size());
    for (int i = 0; i < sigma.dim(); ++i) {
      out[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(sigma(i))];
    }
    return out;
  }

  std::vector<Transformation> enumerate_transformations(int dim) {
    if (dim > kMaxEnumerationDim) {
      throw DimTooLarge("enumerate_transformations supports dim <= "
                        + std::to_string(kMaxEnumerationDim));
    }
    if (dim < 1) {
      throw IndexOutOfRange("dimension must be positive");
    }
    std::size_t total = 1;
    for (int k = 0; k < dim; ++k) {
      total *= static_cast<std::size_t>(dim);
    }
    std::vector<Transformation> out;
    out.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      out.push_back(Transformation::from_index(dim, idx));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Transformation const& sigma) {
    std::string out;
    for (int i = 0; i < sigma.dim(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += std::to_string(sigma(i));
    }
    return out;
  }

  Transformation parse_transformation(std::string_view text) {
    std::vector<int> img;
    std::size_t      pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos == text.size()) {
        break;
      }
      auto end = pos;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      img.push_back(parse_int(text.substr(pos, end - pos), pos));
      pos = end;
    }
    if (img.empty()) {
      throw ParseError("empty transformation", 0);
    }
    for (std::size_t k = 0; k < img.size(); ++k) {
      if (img[k] < 0 || img[k] >= static_cast<int>(img.size())) {
        throw ParseError("image entry " + std::to_string(img[k]) + " out of range", k);
      }
    }
    return Transformation(std::move(img));
  }

  std::string to_string(Generator const& g) {
    char const sep = g.kind == Generator::Kind::Transposition ? ',' : '/';
    return "[" + std::to_string(g.i) + sep + std::to_string(g.j) + "]";
  }

  Generator parse_generator(std::string_view text) {
    auto const t = trim(text);
    if (t.size() < 5 || t.front() != '[' || t.back() != ']') {
      throw ParseError("expected [i,j] or [i/j], got '" + std::string(t) + "'", 0);
    }
    auto const body = t.substr(1, t.size() - 2);
    auto const sep  = body.find_first_of(",/");
    if (sep == std::string_view::npos) {
      throw ParseError("generator needs ',' or '/'", 1);
    }
    int const i = parse_int(body.substr(0, sep), 1);
    int const j = parse_int(body.substr(sep + 1), sep + 2);
    try {
      return body[sep] == ',' ? Generator::transposition(i, j) : Generator::replacement(i, j);
    } catch (IndexOutOfRange const& e) {
      throw ParseError(e.what(), 1);
    }
  }

  std::string to_string(GeneratorWord const& word) {
    if (word.empty()) {
      return "ε";
    }
    std::string out;
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (k > 0) {
        out += " ∘ ";
      }
      out += to_string(word[k]);
    }
    return out;
  }

  GeneratorWord parse_word(std::string_view text) {
    static constexpr std::string_view kCirc = "∘";
    GeneratorWord                     word;
    auto const                        t = trim(text);
    if (t.empty() || t == "ε") {
      return word;
    }
    std::size_t pos = 0;
    while (pos <= t.size()) {
      auto next_semi = t.find(';', pos);
      auto next_circ = t.find(kCirc, pos);
      auto end       = std::min(next_semi, next_circ);
      auto piece     = t.substr(pos, end == std::string_view::npos ? t.npos : end - pos);
      try {
        word.push_back(parse_generator(piece));
      } catch (ParseError const& e) {
        throw ParseError(std::string("bad word letter: ") + e.what(), pos);
      }
      if (end == std::string_view::npos) {
        break;
      }
      pos = end + (end == next_semi ? 1 : kCirc.size());
    }
    return word;
  }

}  // namespace polylift
