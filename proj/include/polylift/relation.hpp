#pragma once

// alpha-ary relations over a finite base {0, ..., |U|-1}, stored as bit
// vectors indexed by idx(s) = sum_i s_i * |U|^i, together with the
// operations of the full finitary polyadic set algebra.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polylift/transform.hpp"

namespace polylift {

  class SetAlgebraContext {
   public:
    /// Largest supported |U|^alpha.
    static constexpr std::size_t kMaxSequences = std::size_t{1} << 26;

    SetAlgebraContext(int dim, int base_size);

    int         dim() const noexcept { return dim_; }
    int         base_size() const noexcept { return base_; }
    std::size_t num_sequences() const noexcept { return n_; }
    std::size_t stride(int pos) const noexcept {
      std::size_t st = 1;
      for (int k = 0; k < pos; ++k) {
        st *= static_cast<std::size_t>(base_);
      }
      return st;
    }

    std::size_t      encode(std::span<int const> s) const;
    std::vector<int> decode(std::size_t idx) const;
    int              digit(std::size_t idx, int pos) const {
      return static_cast<int>((idx / stride(pos)) % static_cast<std::size_t>(base_));
    }

    bool operator==(SetAlgebraContext const& o) const noexcept {
      return dim_ == o.dim_ && base_ == o.base_;
    }

   private:
    int         dim_;
    int         base_;
    std::size_t n_;
  };

  namespace detail {

    // Fixed-length bit vector; up to 128 bits live inline.
    class Bits {
     public:
      Bits() = default;
      explicit Bits(std::size_t nbits);

      std::size_t size() const noexcept { return nbits_; }
      bool        test(std::size_t k) const noexcept {
        return (words()[k >> 6] >> (k & 63)) & 1u;
      }
      void set(std::size_t k) noexcept { words()[k >> 6] |= std::uint64_t{1} << (k & 63); }
      void reset(std::size_t k) noexcept { words()[k >> 6] &= ~(std::uint64_t{1} << (k & 63)); }

      std::span<std::uint64_t>       words() noexcept;
      std::span<std::uint64_t const> words() const noexcept;

      /// Clears bits past size() in the last word.
      void mask_tail() noexcept;

      bool operator==(Bits const& o) const noexcept;

     private:
      std::size_t                nbits_  = 0;
      std::size_t                nwords_ = 0;
      std::array<std::uint64_t, 2> inline_{};
      std::vector<std::uint64_t> heap_;
    };

  }  // namespace detail

  class Relation {
   public:
    explicit Relation(SetAlgebraContext ctx);

    static Relation empty(SetAlgebraContext const& ctx) { return Relation(ctx); }
    static Relation full(SetAlgebraContext const& ctx);
    /// Bit k of code is membership of sequence k; needs num_sequences() <= 64.
    static Relation from_code(SetAlgebraContext const& ctx, std::uint64_t code);
    static Relation from_predicate(SetAlgebraContext const&                   ctx,
                                   std::function<bool(std::span<int const>)> pred);

    SetAlgebraContext const& ctx() const noexcept { return ctx_; }

    bool contains(std::size_t idx) const noexcept { return bits_.test(idx); }
    bool contains(std::span<int const> s) const { return contains(ctx_.encode(s)); }
    void insert(std::size_t idx) noexcept { bits_.set(idx); }
    void insert(std::span<int const> s) { insert(ctx_.encode(s)); }
    void erase(std::size_t idx) noexcept { bits_.reset(idx); }

    std::size_t count() const noexcept;
    bool        is_empty() const noexcept;
    std::uint64_t code() const;

    std::span<std::uint64_t const> words() const noexcept { return bits_.words(); }
    std::span<std::uint64_t>       words() noexcept { return bits_.words(); }

    bool operator==(Relation const& o) const noexcept {
      return ctx_ == o.ctx_ && bits_ == o.bits_;
    }

    std::size_t hash() const noexcept;

   private:
    SetAlgebraContext ctx_;
    detail::Bits      bits_;
  };

  struct RelationHash {
    std::size_t operator()(Relation const& r) const noexcept { return r.hash(); }
  };

  // Boolean operations; operands must share a context.
  Relation meet(Relation const& x, Relation const& y);
  Relation join(Relation const& x, Relation const& y);
  Relation complement(Relation const& x);
  Relation difference(Relation const& x, Relation const& y);
  Relation symmetric_difference(Relation const& x, Relation const& y);
  bool     is_subset(Relation const& x, Relation const& y);

  /// C_i: s in result iff s(i/u) in R for some u.
  Relation cyl(int i, Relation const& r);
  /// S_ij: s in result iff s(i/s_j) in R.
  Relation subst(int i, int j, Relation const& r);
  /// P_ij: s in result iff s(i/s_j)(j/s_i) in R.
  Relation transp(int i, int j, Relation const& r);
  /// S_sigma: s in result iff s o sigma in R.
  Relation subst_sigma(Transformation const& sigma, Relation const& r);

  enum class RelationFormat { Tuples, Hex };

  /// "{(0,1),(1,1)}" or "hex:0a", optionally prefixed by "alpha=2 base=2 ".
  std::string to_string(Relation const& r, RelationFormat fmt = RelationFormat::Tuples,
                         bool with_header = false);
  std::string context_header(SetAlgebraContext const& ctx);

  /// A header in the text wins over ctx; one of the two must be present.
  Relation parse_relation(std::string_view text,
                          std::optional<SetAlgebraContext> ctx = std::nullopt);

}  // namespace polylift
