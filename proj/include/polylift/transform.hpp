#pragma once

// Finite transformations of {0, ..., dim-1}, their generators [i,j] and
// [i/j], and decompositions into words over those generators.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polylift {

  class Transformation {
   public:
    /// Throws IndexOutOfRange unless every entry lies in [0, image.size()).
    explicit Transformation(std::vector<int> image);

    static Transformation identity(int dim);
    /// [i,j]: exchanges i and j.
    static Transformation transposition(int dim, int i, int j);
    /// [i/j]: sends i to j, fixes everything else.
    static Transformation replacement(int dim, int i, int j);

    int dim() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
    std::span<int const> image() const noexcept { return image_; }

    bool is_identity() const;

    /// Position in the little-endian base-dim enumeration of all dim^dim maps.
    std::size_t index() const;
    static Transformation from_index(int dim, std::size_t index);

    auto operator<=>(Transformation const&) const = default;

   private:
    std::vector<int> image_;
  };

  enum class TransformKind { Permutational, Singular };

  /// (sigma o tau)(i) = sigma(tau(i)).
  Transformation compose(Transformation const& sigma, Transformation const& tau);

  TransformKind classify(Transformation const& sigma);

  struct Generator {
    enum class Kind { Transposition, Replacement };

    Kind kind;
    int  i;
    int  j;

    static Generator transposition(int i, int j);
    static Generator replacement(int i, int j);

    Transformation as_transformation(int dim) const;

    bool operator==(Generator const&) const = default;
  };

  /// Leftmost letter is the leftmost (outermost) factor: g1 o g2 o ... o gn.
  using GeneratorWord = std::vector<Generator>;

  Transformation evaluate(GeneratorWord const& word, int dim);

  /// Any transformation as a word; bijections get transpositions only.
  /// Word length is at most 2*dim - 2.
  GeneratorWord decompose_mixed(Transformation const& sigma);

  /// A shortest replacement-only word for a singular map (dim <= 5).
  GeneratorWord decompose_replacements(Transformation const& sigma);

  inline constexpr int kMaxReplacementTableDim = 5;
  inline constexpr int kMaxEnumerationDim      = 5;

  /// result[i] = s[sigma(i)], i.e. the sequence s o sigma.
  std::vector<int> apply_to_sequence(std::span<int const> s, Transformation const& sigma);

  /// All dim^dim transformations in index order.
  std::vector<Transformation> enumerate_transformations(int dim);

  // Text forms: "1 0 0", "[0,1]", "[0/1]", words joined by ";" or "∘".
  std::string     to_string(Transformation const& sigma);
  Transformation  parse_transformation(std::string_view text);
  std::string     to_string(Generator const& g);
  Generator       parse_generator(std::string_view text);
  std::string     to_string(GeneratorWord const& word);
  GeneratorWord   parse_word(std::string_view text);

}  // namespace polylift
