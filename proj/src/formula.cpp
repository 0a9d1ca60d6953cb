#include "conatus/formula.hpp"

#include <cctype>
#include <utility>

#include "conatus/errors.hpp"

namespace conatus {

bool is_valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "true" && name != "false";
}

// Children are Formula values so the accessors can hand out references
// without touching the shared_ptr control blocks; leaves carry two null
// slots that are never exposed.
struct Formula::Node {
  Kind kind;
  std::string name;  // Atom
  Formula a;
  Formula b;
};

Formula::Formula() : node_(constant(true).node_) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::null_formula() { return Formula(std::shared_ptr<const Node>()); }

Formula Formula::constant(bool value) {
  static const auto true_node = std::make_shared<const Node>(
      Node{Kind::True, {}, null_formula(), null_formula()});
  static const auto false_node = std::make_shared<const Node>(
      Node{Kind::False, {}, null_formula(), null_formula()});
  return Formula(value ? true_node : false_node);
}

Formula Formula::atom(std::string name) {
  if (!is_valid_identifier(name)) {
    throw ValidationError("invalid atom name '" + name + "'");
  }
  return Formula(std::make_shared<const Node>(
      Node{Kind::Atom, std::move(name), null_formula(), null_formula()}));
}

Formula Formula::negate(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Not, {}, std::move(f), null_formula()}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::And, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Or, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Implies, {}, std::move(lhs), std::move(rhs)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::atom_name() const { return node_->name; }

const Formula& Formula::child() const { return node_->a; }

const Formula& Formula::lhs() const { return node_->a; }

const Formula& Formula::rhs() const { return node_->b; }

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.insert(f.atom_name());
      return;
    case Formula::Kind::Not:
      collect_atoms(f.child(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
    default:
      return;
  }
}

// Binding strength; higher binds tighter. "->" is right-associative,
// "&" and "|" are left-associative.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies:
      return 1;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::And:
      return 3;
    case Formula::Kind::Not:
      return 4;
    default:
      return 5;
  }
}

void print_formula(const Formula& f, int parent_prec, std::string& out) {
  const int prec = precedence(f.kind());
  const bool parens = prec < parent_prec;
  if (parens) out.push_back('(');
  switch (f.kind()) {
    case Formula::Kind::True:
      out += "true";
      break;
    case Formula::Kind::False:
      out += "false";
      break;
    case Formula::Kind::Atom:
      out += f.atom_name();
      break;
    case Formula::Kind::Not:
      out.push_back('!');
      print_formula(f.child(), prec, out);
      break;
    case Formula::Kind::And:
      print_formula(f.lhs(), prec, out);
      out += " & ";
      print_formula(f.rhs(), prec + 1, out);
      break;
    case Formula::Kind::Or:
      print_formula(f.lhs(), prec, out);
      out += " | ";
      print_formula(f.rhs(), prec + 1, out);
      break;
    case Formula::Kind::Implies:
      print_formula(f.lhs(), prec + 1, out);
      out += " -> ";
      print_formula(f.rhs(), prec, out);
      break;
  }
  if (parens) out.push_back(')');
}

bool equal_rec(const Formula& x, const Formula& y) {
  if (&x == &y) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return true;
    case Formula::Kind::Atom:
      return x.atom_name() == y.atom_name();
    case Formula::Kind::Not:
      return equal_rec(x.child(), y.child());
    default:
      return equal_rec(x.lhs(), y.lhs()) && equal_rec(x.rhs(), y.rhs());
  }
}

}  // namespace

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(*this, out);
  return out;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  return equal_rec(*this, other);
}

std::string Formula::to_string() const {
  std::string out;
  print_formula(*this, 0, out);
  return out;
}

}  // namespace conatus
