#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace conatus {

/// Valid names for atoms, actions and ids: [A-Za-z][A-Za-z0-9_]*,
/// excluding the reserved words "true" and "false".
bool is_valid_identifier(std::string_view name);

/// Immutable propositional formula over named atoms.
///
/// Value type: copies share structure, comparison is structural, and every
/// instance is safe to read from any number of threads. The implication
/// connective here is material implication; it is unrelated to the
/// condition->action pairing of a tendency, which is a separate structure.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Implies };

  /// Default-constructed formula is the constant true.
  Formula();

  static Formula constant(bool value);
  static Formula atom(std::string name);  // ValidationError on bad name
  static Formula negate(Formula f);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);

  Kind kind() const;
  const std::string& atom_name() const;  // Kind::Atom only
  const Formula& child() const;          // Kind::Not only
  const Formula& lhs() const;            // binary kinds only
  const Formula& rhs() const;            // binary kinds only

  /// Distinct atom names, lexicographically ordered.
  std::set<std::string> atoms() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  /// Canonical text form with minimal parentheses. parse_formula is an
  /// exact inverse on the result.
  std::string to_string() const;

  struct Node;  // implementation detail; defined in formula.cpp

 private:
  explicit Formula(std::shared_ptr<const Node> node);
  static Formula null_formula();  // absent child slot of a leaf node
  std::shared_ptr<const Node> node_;
};

}  // namespace conatus
