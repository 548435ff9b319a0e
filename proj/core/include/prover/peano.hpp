#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prover::peano {

// Ground terms over the grammar  T ::= Z | S(T) | add(T,T).
struct Term {
  enum class Kind : uint8_t { Zero, Succ, Add };
  Kind kind = Kind::Zero;
  std::vector<Term> kids;

  bool operator==(const Term&) const = default;
};

Term zero();
Term succ(Term t);
Term add(Term a, Term b);

// A goal is an equation between two terms.
struct Goal {
  Term lhs;
  Term rhs;
  bool operator==(const Goal&) const = default;
};

// Canonical serialization: prefix form with no whitespace inside terms and
// a single " = " separator, e.g. "add(S(Z),Z) = S(Z)". State-id hashing
// relies on this text being canonical.
std::string to_string(const Term& t);
std::string to_string(const Goal& g);

// Parsers accept optional whitespace and throw std::invalid_argument on
// malformed input. Round-trip through to_string yields canonical text.
Term parse_term(std::string_view text);
Goal parse_goal(std::string_view text);

enum class Rule { AddZero, AddSucc };

// One leftmost-outermost application of the rule:
//   add_zero: add(Z,y)   -> y
//   add_succ: add(S(x),y) -> S(add(x,y))
// nullopt when the term contains no redex for the rule.
std::optional<Term> rewrite_once(const Term& t, Rule rule);

// The full tactic alphabet, exactly these 5 strings.
const std::vector<std::string>& vocabulary();

// Stable error message strings; dataset extraction and golden tests key on
// these.
inline constexpr const char* kErrReflFailed = "refl failed";
inline constexpr const char* kErrNotApplicable = "rule not applicable";
inline constexpr const char* kErrUnknownTactic = "unknown tactic";

}  // namespace prover::peano
