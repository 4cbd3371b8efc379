#include "polylift/term.hpp"

#include <algorithm>

#include "polylift/detail/tokenizer.hpp"
#include "polylift/error.hpp"

namespace polylift {

  Term Term::var(int n) {
    if (n < 0) {
      throw IndexOutOfRange("negative variable index");
    }
    return Term(Kind::Var, n, 0);
  }

  Term Term::zero() {
    return Term(Kind::Zero, 0, 0);
  }

  Term Term::one() {
    return Term(Kind::One, 0, 0);
  }

  Term Term::meet(Term a, Term b) {
    Term t(Kind::Meet, 0, 0);
    t.kids_.reserve(2);
    t.kids_.push_back(std::move(a));
    t.kids_.push_back(std::move(b));
    return t;
  }

  Term Term::complement(Term a) {
    Term t(Kind::Compl, 0, 0);
    t.kids_.push_back(std::move(a));
    return t;
  }

  Term Term::cyl(int i, Term a) {
    Term t(Kind::Cyl, i, 0);
    t.kids_.push_back(std::move(a));
    return t;
  }

  Term Term::subst(int i, int j, Term a) {
    Term t(Kind::Subst, i, j);
    t.kids_.push_back(std::move(a));
    return t;
  }

  Term Term::transp(int i, int j, Term a) {
    Term t(Kind::Transp, i, j);
    t.kids_.push_back(std::move(a));
    return t;
  }

  Term Term::subst_sigma(Transformation sigma, Term a) {
    Term t(Kind::SubstSigma, 0, 0);
    t.sigma_ = std::move(sigma);
    t.kids_.push_back(std::move(a));
    return t;
  }

  Term Term::join(Term a, Term b) {
    return complement(meet(complement(std::move(a)), complement(std::move(b))));
  }

  int num_vars(Term const& t) {
    if (t.kind() == Term::Kind::Var) {
      return t.var_index() + 1;
    }
    int n = 0;
    for (auto const& c : t.children()) {
      n = std::max(n, num_vars(c));
    }
    return n;
  }

  int num_vars(Equation const& eq) {
    return std::max(num_vars(eq.lhs), num_vars(eq.rhs));
  }

  void check_dimension(Term const& t, int dim) {
    auto check = [dim](int i) {
      if (i < 0 || i >= dim) {
        throw IndexOutOfRange("operator index " + std::to_string(i) + " out of range for alpha="
                              + std::to_string(dim));
      }
    };
    switch (t.kind()) {
      case Term::Kind::Cyl:
        check(t.i());
        break;
      case Term::Kind::Subst:
      case Term::Kind::Transp:
        check(t.i());
        check(t.j());
        break;
      case Term::Kind::SubstSigma:
        if (t.sigma().dim() != dim) {
          throw DimensionMismatch("ssig transformation of dim " + std::to_string(t.sigma().dim())
                                  + " in alpha=" + std::to_string(dim));
        }
        break;
      default:
        break;
    }
    for (auto const& c : t.children()) {
      check_dimension(c, dim);
    }
  }

  Term desugar(Term const& t) {
    switch (t.kind()) {
      case Term::Kind::Var:
      case Term::Kind::Zero:
      case Term::Kind::One:
        return t;
      case Term::Kind::Meet:
        return Term::meet(desugar(t.child(0)), desugar(t.child(1)));
      case Term::Kind::Compl:
        return Term::complement(desugar(t.child(0)));
      case Term::Kind::Cyl:
        return Term::cyl(t.i(), desugar(t.child(0)));
      case Term::Kind::Subst:
        return Term::subst(t.i(), t.j(), desugar(t.child(0)));
      case Term::Kind::Transp:
        return Term::transp(t.i(), t.j(), desugar(t.child(0)));
      case Term::Kind::SubstSigma: {
        // s_sigma = op(g1) op(g2) ... op(gn), gn innermost.
        auto       word = decompose_mixed(t.sigma());
        Term       body = desugar(t.child(0));
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          body = it->kind == Generator::Kind::Replacement ? Term::subst(it->i, it->j, std::move(body))
                                                          : Term::transp(it->i, it->j, std::move(body));
        }
        return body;
      }
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Term const& t) {
    auto un = [&](std::string head) { return "(" + head + " " + to_string(t.child(0)) + ")"; };
    switch (t.kind()) {
      case Term::Kind::Var:
        return "x" + std::to_string(t.var_index());
      case Term::Kind::Zero:
        return "0";
      case Term::Kind::One:
        return "1";
      case Term::Kind::Meet:
        return "(and " + to_string(t.child(0)) + " " + to_string(t.child(1)) + ")";
      case Term::Kind::Compl:
        return un("not");
      case Term::Kind::Cyl:
        return un("c " + std::to_string(t.i()));
      case Term::Kind::Subst:
        return un("s " + std::to_string(t.i()) + " " + std::to_string(t.j()));
      case Term::Kind::Transp:
        return un("p " + std::to_string(t.i()) + " " + std::to_string(t.j()));
      case Term::Kind::SubstSigma:
        return un("ssig \"" + to_string(t.sigma()) + "\"");
    }
    return "?";
  }

  std::string to_string(Equation const& eq) {
    return to_string(eq.lhs) + " = " + to_string(eq.rhs);
  }

  namespace {

    using detail::Token;
    using detail::TokenStream;

    bool is_operator(std::string_view w) {
      return w == "and" || w == "or" || w == "not" || w == "c" || w == "s" || w == "p"
             || w == "ssig";
    }

    Term parse_term_at(TokenStream& ts);

    Term parse_application(TokenStream& ts, Token const& head) {
      auto const op = head.text;
      if (op == "and" || op == "or") {
        Term a = parse_term_at(ts);
        Term b = parse_term_at(ts);
        return op == "and" ? Term::meet(std::move(a), std::move(b))
                           : Term::join(std::move(a), std::move(b));
      }
      if (op == "not") {
        return Term::complement(parse_term_at(ts));
      }
      if (op == "c") {
        int const i = ts.number();
        return Term::cyl(i, parse_term_at(ts));
      }
      if (op == "s" || op == "p") {
        int const i = ts.number();
        int const j = ts.number();
        Term      a = parse_term_at(ts);
        return op == "s" ? Term::subst(i, j, std::move(a)) : Term::transp(i, j, std::move(a));
      }
      if (op == "ssig") {
        auto const& img = ts.next();
        if (img.kind != Token::Kind::String) {
          throw ParseError("ssig expects a quoted image vector", img.pos);
        }
        Transformation sigma = [&] {
          try {
            return parse_transformation(img.text);
          } catch (ParseError const& e) {
            throw ParseError(std::string("bad ssig image: ") + e.what(), img.pos);
          }
        }();
        return Term::subst_sigma(std::move(sigma), parse_term_at(ts));
      }
      throw ParseError("unknown operator '" + std::string(op) + "'", head.pos);
    }

    Term parse_term_at(TokenStream& ts) {
      auto const& t = ts.next();
      switch (t.kind) {
        case Token::Kind::LParen: {
          auto const& head = ts.next();
          if (head.kind != Token::Kind::Word || !is_operator(head.text)) {
            throw ParseError("expected operator after '(', got '" + std::string(head.text) + "'",
                             head.pos);
          }
          Term result = parse_application(ts, head);
          ts.expect(Token::Kind::RParen, "')'");
          return result;
        }
        case Token::Kind::Word: {
          if (is_operator(t.text)) {
            return parse_application(ts, t);
          }
          if (t.text == "0") {
            return Term::zero();
          }
          if (t.text == "1") {
            return Term::one();
          }
          if (t.text == "x") {
            return Term::var(0);
          }
          if (t.text == "y") {
            return Term::var(1);
          }
          if (t.text == "z") {
            return Term::var(2);
          }
          if (t.text.front() == 'x') {
            if (int const n = detail::suffix_index(t.text, 1); n >= 0) {
              return Term::var(n);
            }
          }
          throw ParseError("unexpected word '" + std::string(t.text) + "'", t.pos);
        }
        case Token::Kind::End:
          throw ParseError("unexpected end of input", t.pos);
        default:
          throw ParseError("unexpected '" + std::string(t.text) + "'", t.pos);
      }
    }

  }  // namespace

  Term parse_term(std::string_view text) {
    TokenStream ts(text);
    Term        t = parse_term_at(ts);
    if (!ts.at_end()) {
      throw ParseError("trailing input '" + std::string(ts.peek().text) + "'", ts.peek().pos);
    }
    return t;
  }

  Equation parse_equation(std::string_view text) {
    TokenStream ts(text);
    Term        lhs = parse_term_at(ts);
    ts.expect(Token::Kind::Equals, "'='");
    Term rhs = parse_term_at(ts);
    if (!ts.at_end()) {
      throw ParseError("trailing input '" + std::string(ts.peek().text) + "'", ts.peek().pos);
    }
    return {std::move(lhs), std::move(rhs)};
  }

}  // namespace polylift
