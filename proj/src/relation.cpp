#include "polylift/relation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "polylift/error.hpp"

namespace polylift {

  ////////////////////////////////////////////////////////////////////////
  // SetAlgebraContext
  ////////////////////////////////////////////////////////////////////////

  SetAlgebraContext::SetAlgebraContext(int dim, int base_size)
      : dim_(dim), base_(base_size), n_(1) {
    if (dim < 1) {
      throw IndexOutOfRange("dimension must be at least 1");
    }
    if (base_size < 1) {
      throw IndexOutOfRange("base must have at least one element");
    }
    for (int i = 0; i < dim; ++i) {
      if (n_ > kMaxSequences / static_cast<std::size_t>(base_size)) {
        throw DimTooLarge("|U|^alpha = " + std::to_string(base_size) + "^" + std::to_string(dim)
                          + " exceeds the supported sequence space");
      }
      n_ *= static_cast<std::size_t>(base_size);
    }
  }

  std::size_t SetAlgebraContext::encode(std::span<int const> s) const {
    if (static_cast<int>(s.size()) != dim_) {
      throw DimensionMismatch("sequence of length " + std::to_string(s.size())
                              + " in dimension " + std::to_string(dim_));
    }
    std::size_t idx = 0;
    for (int i = 0; i < dim_; ++i) {
      int const v = s[static_cast<std::size_t>(i)];
      if (v < 0 || v >= base_) {
        throw IndexOutOfRange("sequence entry " + std::to_string(v) + " outside base of size "
                              + std::to_string(base_));
      }
      idx += static_cast<std::size_t>(v) * stride(i);
    }
    return idx;
  }

  std::vector<int> SetAlgebraContext::decode(std::size_t idx) const {
    std::vector<int> s(static_cast<std::size_t>(dim_));
    for (auto& v : s) {
      v = static_cast<int>(idx % static_cast<std::size_t>(base_));
      idx /= static_cast<std::size_t>(base_);
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bits
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    Bits::Bits(std::size_t nbits) : nbits_(nbits), nwords_((nbits + 63) / 64) {
      if (nwords_ > inline_.size()) {
        heap_.assign(nwords_, 0);
      }
    }

    std::span<std::uint64_t> Bits::words() noexcept {
      if (nwords_ > inline_.size()) {
        return heap_;
      }
      return std::span<std::uint64_t>(inline_.data(), nwords_);
    }

    std::span<std::uint64_t const> Bits::words() const noexcept {
      if (nwords_ > inline_.size()) {
        return heap_;
      }
      return std::span<std::uint64_t const>(inline_.data(), nwords_);
    }

    void Bits::mask_tail() noexcept {
      auto const rem = nbits_ & 63;
      if (rem != 0) {
        words().back() &= (std::uint64_t{1} << rem) - 1;
      }
    }

    bool Bits::operator==(Bits const& o) const noexcept {
      if (nbits_ != o.nbits_) {
        return false;
      }
      auto a = words();
      auto b = o.words();
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k]) {
          return false;
        }
      }
      return true;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Relation
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void require_same_ctx(Relation const& x, Relation const& y) {
      if (!(x.ctx() == y.ctx())) {
        throw DimensionMismatch("relations over different contexts: " + context_header(x.ctx())
                                + " vs " + context_header(y.ctx()));
      }
    }

    void check_position(SetAlgebraContext const& ctx, int i) {
      if (i < 0 || i >= ctx.dim()) {
        throw IndexOutOfRange("index " + std::to_string(i) + " out of range for alpha="
                              + std::to_string(ctx.dim()));
      }
    }

    template <class F>
    Relation combine(Relation const& x, Relation const& y, F f) {
      require_same_ctx(x, y);
      Relation out(x.ctx());
      auto     a = x.words();
      auto     b = y.words();
      auto     o = out.words();
      for (std::size_t k = 0; k < o.size(); ++k) {
        o[k] = f(a[k], b[k]);
      }
      return out;
    }

    // s in result iff target(s) in r, where target maps sequence indices.
    template <class F>
    Relation pullback(Relation const& r, F target) {
      Relation    out(r.ctx());
      std::size_t n = r.ctx().num_sequences();
      for (std::size_t idx = 0; idx < n; ++idx) {
        if (r.contains(target(idx))) {
          out.insert(idx);
        }
      }
      return out;
    }

  }  // namespace

  Relation::Relation(SetAlgebraContext ctx)
      : ctx_(std::move(ctx)), bits_(ctx_.num_sequences()) {}

  Relation Relation::full(SetAlgebraContext const& ctx) {
    Relation r(ctx);
    for (auto& w : r.bits_.words()) {
      w = ~std::uint64_t{0};
    }
    r.bits_.mask_tail();
    return r;
  }

  Relation Relation::from_code(SetAlgebraContext const& ctx, std::uint64_t code) {
    if (ctx.num_sequences() > 64) {
      throw DimTooLarge("from_code needs at most 64 sequences");
    }
    Relation r(ctx);
    r.bits_.words()[0] = code;
    r.bits_.mask_tail();
    return r;
  }

  Relation Relation::from_predicate(SetAlgebraContext const&                   ctx,
                                    std::function<bool(std::span<int const>)> pred) {
    Relation r(ctx);
    for (std::size_t idx = 0; idx < ctx.num_sequences(); ++idx) {
      if (pred(ctx.decode(idx))) {
        r.insert(idx);
      }
    }
    return r;
  }

  std::size_t Relation::count() const noexcept {
    std::size_t c = 0;
    for (auto w : bits_.words()) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  bool Relation::is_empty() const noexcept {
    for (auto w : bits_.words()) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  std::uint64_t Relation::code() const {
    if (ctx_.num_sequences() > 64) {
      throw DimTooLarge("code() needs at most 64 sequences");
    }
    return bits_.words()[0];
  }

  std::size_t Relation::hash() const noexcept {
    std::size_t h = std::hash<int>{}(ctx_.dim()) * 31 + std::hash<int>{}(ctx_.base_size());
    for (auto w : bits_.words()) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  Relation meet(Relation const& x, Relation const& y) {
    return combine(x, y, [](auto a, auto b) { return a & b; });
  }

  Relation join(Relation const& x, Relation const& y) {
    return combine(x, y, [](auto a, auto b) { return a | b; });
  }

  Relation difference(Relation const& x, Relation const& y) {
    return combine(x, y, [](auto a, auto b) { return a & ~b; });
  }

  Relation symmetric_difference(Relation const& x, Relation const& y) {
    return combine(x, y, [](auto a, auto b) { return a ^ b; });
  }

  Relation complement(Relation const& x) {
    Relation out = Relation::full(x.ctx());
    auto     a   = x.words();
    auto     o   = out.words();
    for (std::size_t k = 0; k < o.size(); ++k) {
      o[k] &= ~a[k];
    }
    return out;
  }

  bool is_subset(Relation const& x, Relation const& y) {
    require_same_ctx(x, y);
    auto a = x.words();
    auto b = y.words();
    for (std::size_t k = 0; k < a.size(); ++k) {
      if ((a[k] & ~b[k]) != 0) {
        return false;
      }
    }
    return true;
  }

  Relation cyl(int i, Relation const& r) {
    auto const& ctx = r.ctx();
    check_position(ctx, i);
    Relation          out(ctx);
    std::size_t const stride = ctx.stride(i);
    std::size_t const base   = static_cast<std::size_t>(ctx.base_size());
    for (std::size_t idx = 0; idx < ctx.num_sequences(); ++idx) {
      if (ctx.digit(idx, i) != 0) {
        continue;
      }
      bool any = false;
      for (std::size_t u = 0; u < base && !any; ++u) {
        any = r.contains(idx + u * stride);
      }
      if (any) {
        for (std::size_t u = 0; u < base; ++u) {
          out.insert(idx + u * stride);
        }
      }
    }
    return out;
  }

  Relation subst(int i, int j, Relation const& r) {
    auto const& ctx = r.ctx();
    check_position(ctx, i);
    check_position(ctx, j);
    if (i == j) {
      return r;
    }
    std::size_t const si = ctx.stride(i);
    return pullback(r, [&](std::size_t idx) {
      auto const di = static_cast<std::size_t>(ctx.digit(idx, i));
      auto const dj = static_cast<std::size_t>(ctx.digit(idx, j));
      return idx - di * si + dj * si;
    });
  }

  Relation transp(int i, int j, Relation const& r) {
    auto const& ctx = r.ctx();
    check_position(ctx, i);
    check_position(ctx, j);
    if (i == j) {
      return r;
    }
    std::size_t const si = ctx.stride(i);
    std::size_t const sj = ctx.stride(j);
    return pullback(r, [&](std::size_t idx) {
      auto const di = static_cast<std::size_t>(ctx.digit(idx, i));
      auto const dj = static_cast<std::size_t>(ctx.digit(idx, j));
      return idx - di * si - dj * sj + dj * si + di * sj;
    });
  }

  Relation subst_sigma(Transformation const& sigma, Relation const& r) {
    auto const& ctx = r.ctx();
    if (sigma.dim() != ctx.dim()) {
      throw DimensionMismatch("subst_sigma: transformation of dim " + std::to_string(sigma.dim())
                              + " on alpha=" + std::to_string(ctx.dim()));
    }
    std::vector<std::size_t> strides(static_cast<std::size_t>(ctx.dim()));
    for (int k = 0; k < ctx.dim(); ++k) {
      strides[static_cast<std::size_t>(k)] = ctx.stride(k);
    }
    auto const base = static_cast<std::size_t>(ctx.base_size());
    return pullback(r, [&](std::size_t idx) {
      std::size_t target = 0;
      for (int k = 0; k < ctx.dim(); ++k) {
        auto const from = strides[static_cast<std::size_t>(sigma(k))];
        target += (idx / from) % base * strides[static_cast<std::size_t>(k)];
      }
      return target;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  std::string context_header(SetAlgebraContext const& ctx) {
    return "alpha=" + std::to_string(ctx.dim()) + " base=" + std::to_string(ctx.base_size());
  }

  std::string to_string(Relation const& r, RelationFormat fmt, bool with_header) {
    std::string out;
    if (with_header) {
      out = context_header(r.ctx()) + " ";
    }
    auto const& ctx = r.ctx();
    if (fmt == RelationFormat::Hex) {
      static constexpr char kDigits[] = "0123456789abcdef";
      std::size_t const     ndigits   = std::max<std::size_t>(1, (ctx.num_sequences() + 3) / 4);
      std::string           hex(ndigits, '0');
      for (std::size_t d = 0; d < ndigits; ++d) {
        unsigned nibble = 0;
        for (std::size_t b = 0; b < 4; ++b) {
          std::size_t const k = d * 4 + b;
          if (k < ctx.num_sequences() && r.contains(k)) {
            nibble |= 1u << b;
          }
        }
        hex[ndigits - 1 - d] = kDigits[nibble];
      }
      return out + "hex:" + hex;
    }
    out += '{';
    bool first = true;
    for (std::size_t idx = 0; idx < ctx.num_sequences(); ++idx) {
      if (!r.contains(idx)) {
        continue;
      }
      if (!first) {
        out += ',';
      }
      first = false;
      out += '(';
      auto s = ctx.decode(idx);
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k > 0) {
          out += ',';
        }
        out += std::to_string(s[k]);
      }
      out += ')';
    }
    return out + '}';
  }

  namespace {

    class RelationParser {
     public:
      explicit RelationParser(std::string_view text) : text_(text) {}

      Relation parse(std::optional<SetAlgebraContext> ctx) {
        skip_ws();
        if (lookahead("alpha=")) {
          pos_ += 6;
          int const dim = number();
          skip_ws();
          expect("base=");
          int const base = number();
          ctx.emplace(dim, base);
        }
        if (!ctx) {
          throw ParseError("relation text needs an 'alpha=.. base=..' header", pos_);
        }
        skip_ws();
        Relation r(*ctx);
        if (lookahead("hex:")) {
          pos_ += 4;
          parse_hex(r);
        } else {
          parse_tuples(r);
        }
        skip_ws();
        if (pos_ != text_.size()) {
          throw ParseError("trailing characters in relation", pos_);
        }
        return r;
      }

     private:
      void parse_hex(Relation& r) {
        auto const start = pos_;
        while (pos_ < text_.size() && std::isxdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        auto const digits = text_.substr(start, pos_ - start);
        if (digits.empty()) {
          throw ParseError("expected hex digits", pos_);
        }
        std::size_t const n = r.ctx().num_sequences();
        for (std::size_t d = 0; d < digits.size(); ++d) {
          char const     c = static_cast<char>(std::tolower(static_cast<unsigned char>(digits[digits.size() - 1 - d])));
          unsigned const nibble
              = static_cast<unsigned>(c >= 'a' ? c - 'a' + 10 : c - '0');
          for (std::size_t b = 0; b < 4; ++b) {
            if ((nibble >> b) & 1u) {
              std::size_t const k = d * 4 + b;
              if (k >= n) {
                throw ParseError("hex bit " + std::to_string(k) + " beyond " + std::to_string(n)
                                     + " sequences",
                                 start);
              }
              r.insert(k);
            }
          }
        }
      }

      void parse_tuples(Relation& r) {
        expect("{");
        skip_ws();
        if (try_consume('}')) {
          return;
        }
        do {
          skip_ws();
          auto const at = pos_;
          expect("(");
          std::vector<int> s;
          do {
            skip_ws();
            s.push_back(number());
            skip_ws();
          } while (try_consume(','));
          expect(")");
          if (static_cast<int>(s.size()) != r.ctx().dim()) {
            throw ParseError("tuple of length " + std::to_string(s.size()) + " in dimension "
                                 + std::to_string(r.ctx().dim()),
                             at);
          }
          for (int v : s) {
            if (v < 0 || v >= r.ctx().base_size()) {
              throw ParseError("tuple entry " + std::to_string(v) + " outside base", at);
            }
          }
          r.insert(s);
          skip_ws();
        } while (try_consume(','));
        expect("}");
      }

      int number() {
        int         value = 0;
        auto const* begin = text_.data() + pos_;
        auto [ptr, ec]    = std::from_chars(begin, text_.data() + text_.size(), value);
        if (ec != std::errc{} || ptr == begin) {
          throw ParseError("expected number", pos_);
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
      }

      bool lookahead(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

      void expect(std::string_view s) {
        if (!lookahead(s)) {
          throw ParseError("expected '" + std::string(s) + "'", pos_);
        }
        pos_ += s.size();
      }

      bool try_consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
          ++pos_;
          return true;
        }
        return false;
      }

      void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  Relation parse_relation(std::string_view text, std::optional<SetAlgebraContext> ctx) {
    try {
      return RelationParser(text).parse(std::move(ctx));
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(e.what(), 0);
    }
  }

}  // namespace polylift
