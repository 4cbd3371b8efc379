#include "polylift/formula.hpp"

#include <algorithm>

#include "polylift/detail/tokenizer.hpp"
#include "polylift/error.hpp"

namespace polylift {

  Formula Formula::atom(int symbol, std::vector<int> args) {
    if (symbol < 0) {
      throw IndexOutOfRange("negative relation symbol");
    }
    for (int a : args) {
      if (a < 0) {
        throw IndexOutOfRange("negative variable index");
      }
    }
    Formula f(Kind::Atom, symbol);
    f.args_ = std::move(args);
    return f;
  }

  Formula Formula::neg(Formula a) {
    Formula f(Kind::Not, 0);
    f.kids_.push_back(std::move(a));
    return f;
  }

  Formula Formula::conj(Formula a, Formula b) {
    Formula f(Kind::And, 0);
    f.kids_.reserve(2);
    f.kids_.push_back(std::move(a));
    f.kids_.push_back(std::move(b));
    return f;
  }

  Formula Formula::exists(int i, Formula a) {
    if (i < 0) {
      throw IndexOutOfRange("negative variable index");
    }
    Formula f(Kind::Exists, i);
    f.kids_.push_back(std::move(a));
    return f;
  }

  Formula Formula::disj(Formula a, Formula b) {
    return neg(conj(neg(std::move(a)), neg(std::move(b))));
  }

  Formula Formula::implies(Formula a, Formula b) {
    return neg(conj(std::move(a), neg(std::move(b))));
  }

  Formula Formula::forall(int i, Formula a) {
    return neg(exists(i, neg(std::move(a))));
  }

  void check_formula(Formula const& f, int alpha) {
    auto var = [alpha](int v) {
      if (v >= alpha) {
        throw IndexOutOfRange("variable v" + std::to_string(v) + " out of range for alpha="
                              + std::to_string(alpha));
      }
    };
    switch (f.kind()) {
      case Formula::Kind::Atom:
        if (static_cast<int>(f.args().size()) != alpha) {
          throw DimensionMismatch("atom R" + std::to_string(f.symbol()) + " has "
                                  + std::to_string(f.args().size()) + " arguments, alpha="
                                  + std::to_string(alpha));
        }
        std::for_each(f.args().begin(), f.args().end(), var);
        return;
      case Formula::Kind::Not:
        check_formula(f.child(0), alpha);
        return;
      case Formula::Kind::And:
        check_formula(f.child(0), alpha);
        check_formula(f.child(1), alpha);
        return;
      case Formula::Kind::Exists:
        var(f.var());
        check_formula(f.child(0), alpha);
        return;
    }
  }

  int num_symbols(Formula const& f) {
    switch (f.kind()) {
      case Formula::Kind::Atom:
        return f.symbol() + 1;
      case Formula::Kind::And:
        return std::max(num_symbols(f.child(0)), num_symbols(f.child(1)));
      default:
        return num_symbols(f.child(0));
    }
  }

  int depth(Formula const& f) {
    switch (f.kind()) {
      case Formula::Kind::Atom:
        return 0;
      case Formula::Kind::And:
        return 1 + std::max(depth(f.child(0)), depth(f.child(1)));
      default:
        return 1 + depth(f.child(0));
    }
  }

  namespace {

    template <class VarMap>
    Formula rename_all(Formula const& f, VarMap const& m) {
      switch (f.kind()) {
        case Formula::Kind::Atom: {
          std::vector<int> args(f.args());
          for (int& a : args) {
            a = m(a);
          }
          return Formula::atom(f.symbol(), std::move(args));
        }
        case Formula::Kind::Not:
          return Formula::neg(rename_all(f.child(0), m));
        case Formula::Kind::And:
          return Formula::conj(rename_all(f.child(0), m), rename_all(f.child(1), m));
        case Formula::Kind::Exists:
          return Formula::exists(m(f.var()), rename_all(f.child(0), m));
      }
      return f;
    }

    Formula scan(int i, int j, Formula const& f, bool i_bound, bool j_bound) {
      switch (f.kind()) {
        case Formula::Kind::Atom: {
          std::vector<int> args(f.args());
          for (int& a : args) {
            if (a == i && !i_bound) {
              a = j;
            } else if (a == j && j_bound) {
              a = i;
            }
          }
          return Formula::atom(f.symbol(), std::move(args));
        }
        case Formula::Kind::Not:
          return Formula::neg(scan(i, j, f.child(0), i_bound, j_bound));
        case Formula::Kind::And:
          return Formula::conj(scan(i, j, f.child(0), i_bound, j_bound),
                               scan(i, j, f.child(1), i_bound, j_bound));
        case Formula::Kind::Exists:
          if (f.var() == j) {
            return Formula::exists(i, scan(i, j, f.child(0), i_bound, true));
          }
          if (f.var() == i) {
            return Formula::exists(i, scan(i, j, f.child(0), true, j_bound));
          }
          return Formula::exists(f.var(), scan(i, j, f.child(0), i_bound, j_bound));
      }
      return f;
    }

  }  // namespace

  Formula transpose_vars(int i, int j, Formula const& f) {
    return rename_all(f, [i, j](int v) { return v == i ? j : v == j ? i : v; });
  }

  Formula naive_subst(int i, int j, Formula const& f) {
    return rename_all(f, [i, j](int v) { return v == i ? j : v; });
  }

  Formula monk_subst(int i, int j, Formula const& f) {
    if (i == j) {
      return f;
    }
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        std::vector<int> args(f.args());
        std::replace(args.begin(), args.end(), i, j);
        return Formula::atom(f.symbol(), std::move(args));
      }
      case Formula::Kind::Not:
        return Formula::neg(monk_subst(i, j, f.child(0)));
      case Formula::Kind::And:
        return Formula::conj(monk_subst(i, j, f.child(0)), monk_subst(i, j, f.child(1)));
      case Formula::Kind::Exists:
        if (f.var() == i) {
          return f;  // no free v_i inside
        }
        if (f.var() == j) {
          return Formula::exists(i, transpose_vars(i, j, f.child(0)));
        }
        return Formula::exists(f.var(), monk_subst(i, j, f.child(0)));
    }
    return f;
  }

  Formula scan_subst(int i, int j, Formula const& f) {
    return i == j ? f : scan(i, j, f, false, false);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Formula const& f, bool sugar) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Atom: {
        std::string out = "(R" + std::to_string(f.symbol());
        for (int a : f.args()) {
          out += " v" + std::to_string(a);
        }
        return out + ")";
      }
      case K::Not: {
        auto const& c = f.child(0);
        if (sugar && c.kind() == K::And) {
          auto const& l = c.child(0);
          auto const& r = c.child(1);
          if (l.kind() == K::Not && r.kind() == K::Not) {
            return "(or " + to_string(l.child(0), sugar) + " " + to_string(r.child(0), sugar) + ")";
          }
          if (r.kind() == K::Not) {
            return "(imp " + to_string(l, sugar) + " " + to_string(r.child(0), sugar) + ")";
          }
        }
        if (sugar && c.kind() == K::Exists && c.child(0).kind() == K::Not) {
          return "(A " + std::to_string(c.var()) + " " + to_string(c.child(0).child(0), sugar)
                 + ")";
        }
        return "(not " + to_string(c, sugar) + ")";
      }
      case K::And:
        return "(and " + to_string(f.child(0), sugar) + " " + to_string(f.child(1), sugar) + ")";
      case K::Exists:
        return "(E " + std::to_string(f.var()) + " " + to_string(f.child(0), sugar) + ")";
    }
    return "?";
  }

  namespace {

    using detail::Token;
    using detail::TokenStream;

    Formula parse_at(TokenStream& ts, int alpha) {
      ts.expect(Token::Kind::LParen, "'('");
      auto const& head = ts.next();
      if (head.kind != Token::Kind::Word) {
        throw ParseError("expected connective or relation symbol", head.pos);
      }
      auto const op = head.text;
      Formula    result = [&]() -> Formula {
        if (op == "not") {
          return Formula::neg(parse_at(ts, alpha));
        }
        if (op == "and" || op == "or" || op == "imp") {
          Formula a = parse_at(ts, alpha);
          Formula b = parse_at(ts, alpha);
          if (op == "and") {
            return Formula::conj(std::move(a), std::move(b));
          }
          return op == "or" ? Formula::disj(std::move(a), std::move(b))
                            : Formula::implies(std::move(a), std::move(b));
        }
        if (op == "E" || op == "A") {
          int const i = ts.number();
          if (alpha >= 0 && i >= alpha) {
            throw ParseError("variable index " + std::to_string(i) + " out of range", head.pos);
          }
          Formula body = parse_at(ts, alpha);
          return op == "E" ? Formula::exists(i, std::move(body))
                           : Formula::forall(i, std::move(body));
        }
        if (op.front() == 'R') {
          int const k = op.size() == 1 ? 0 : detail::suffix_index(op, 1);
          if (k < 0) {
            throw ParseError("bad relation symbol '" + std::string(op) + "'", head.pos);
          }
          std::vector<int> args;
          while (ts.peek().kind == Token::Kind::Word) {
            auto const& v = ts.next();
            int const   n = v.text.front() == 'v' ? detail::suffix_index(v.text, 1) : -1;
            if (n < 0 || (alpha >= 0 && n >= alpha)) {
              throw ParseError("bad variable '" + std::string(v.text) + "'", v.pos);
            }
            args.push_back(n);
          }
          if (alpha >= 0 && static_cast<int>(args.size()) != alpha) {
            throw ParseError("atom needs " + std::to_string(alpha) + " arguments", head.pos);
          }
          return Formula::atom(k, std::move(args));
        }
        throw ParseError("unknown connective '" + std::string(op) + "'", head.pos);
      }();
      ts.expect(Token::Kind::RParen, "')'");
      return result;
    }

  }  // namespace

  Formula parse_formula(std::string_view text, int alpha) {
    TokenStream ts(text);
    Formula     f = parse_at(ts, alpha);
    if (!ts.at_end()) {
      throw ParseError("trailing input '" + std::string(ts.peek().text) + "'", ts.peek().pos);
    }
    return f;
  }

}  // namespace polylift
