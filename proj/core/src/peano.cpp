#include "prover/peano.hpp"

#include <stdexcept>

namespace prover::peano {

Term zero() { return Term{Term::Kind::Zero, {}}; }

Term succ(Term t) {
  Term s{Term::Kind::Succ, {}};
  s.kids.push_back(std::move(t));
  return s;
}

Term add(Term a, Term b) {
  Term s{Term::Kind::Add, {}};
  s.kids.push_back(std::move(a));
  s.kids.push_back(std::move(b));
  return s;
}

static void print_term(const Term& t, std::string& out) {
  switch (t.kind) {
    case Term::Kind::Zero:
      out += 'Z';
      break;
    case Term::Kind::Succ:
      out += "S(";
      print_term(t.kids[0], out);
      out += ')';
      break;
    case Term::Kind::Add:
      out += "add(";
      print_term(t.kids[0], out);
      out += ',';
      print_term(t.kids[1], out);
      out += ')';
      break;
  }
}

std::string to_string(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string to_string(const Goal& g) {
  return to_string(g.lhs) + " = " + to_string(g.rhs);
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("malformed term at offset " + std::to_string(pos) + ": " + what +
                                " in \"" + std::string(text) + "\"");
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  bool consume(std::string_view word) {
    skip_ws();
    if (text.substr(pos, word.size()) == word) {
      pos += word.size();
      return true;
    }
    return false;
  }

  Term term() {
    skip_ws();
    if (consume("add")) {
      expect('(');
      Term a = term();
      expect(',');
      Term b = term();
      expect(')');
      return add(std::move(a), std::move(b));
    }
    if (consume("S")) {
      expect('(');
      Term t = term();
      expect(')');
      return succ(std::move(t));
    }
    if (consume("Z")) return zero();
    fail("expected Z, S or add");
  }
};

}  // namespace

Term parse_term(std::string_view text) {
  Parser p{text};
  Term t = p.term();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return t;
}

Goal parse_goal(std::string_view text) {
  Parser p{text};
  Goal g;
  g.lhs = p.term();
  p.expect('=');
  g.rhs = p.term();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return g;
}

// Matches `rule` at the root of `t` only.
static std::optional<Term> match_here(const Term& t, Rule rule) {
  if (t.kind != Term::Kind::Add) return std::nullopt;
  const Term& x = t.kids[0];
  const Term& y = t.kids[1];
  if (rule == Rule::AddZero && x.kind == Term::Kind::Zero) return y;
  if (rule == Rule::AddSucc && x.kind == Term::Kind::Succ) return succ(add(x.kids[0], y));
  return std::nullopt;
}

// Preorder: the node itself, then children left to right. The first match
// is the leftmost-outermost redex.
std::optional<Term> rewrite_once(const Term& t, Rule rule) {
  if (auto r = match_here(t, rule)) return r;
  for (size_t i = 0; i < t.kids.size(); ++i) {
    if (auto r = rewrite_once(t.kids[i], rule)) {
      Term out = t;
      out.kids[i] = std::move(*r);
      return out;
    }
  }
  return std::nullopt;
}

const std::vector<std::string>& vocabulary() {
  static const std::vector<std::string> kVocab = {
      "refl", "rw_l add_zero", "rw_l add_succ", "rw_r add_zero", "rw_r add_succ",
  };
  return kVocab;
}

}  // namespace prover::peano
