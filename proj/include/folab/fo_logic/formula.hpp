#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace folab {

enum class FormulaKind { Adjacent, Equal, Not, And, Or, Implies, Exists, Forall };

class Formula;

struct FormulaNode {
  FormulaKind kind;
  // Atoms: the two variables. Quantifiers: first holds the bound variable.
  std::string first;
  std::string second;
  std::vector<Formula> children;
};

// Immutable shared handle; subtrees may be shared between formulas.
class Formula {
 public:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  FormulaKind kind() const noexcept { return node_->kind; }
  const std::string& variable() const noexcept { return node_->first; }
  const std::string& left() const noexcept { return node_->first; }
  const std::string& right() const noexcept { return node_->second; }
  const std::vector<Formula>& children() const noexcept { return node_->children; }
  const Formula& child(std::size_t i = 0) const { return node_->children.at(i); }
  const FormulaNode* id() const noexcept { return node_.get(); }

 private:
  std::shared_ptr<const FormulaNode> node_;
};

Formula adj(std::string x, std::string y);
Formula eq(std::string x, std::string y);
Formula neg(Formula f);
// Single-element lists collapse to the element; empty lists are a DomainError.
Formula conj(std::vector<Formula> parts);
Formula disj(std::vector<Formula> parts);
Formula implies(Formula premise, Formula conclusion);
Formula exists(std::string var, Formula body);
Formula forall(std::string var, Formula body);

bool is_quantifier(FormulaKind kind);
bool structurally_equal(const Formula& a, const Formula& b);

std::size_t depth(const Formula& f);
std::set<std::string> free_variables(const Formula& f);
// Node count of the fully expanded tree.
std::size_t tree_size(const Formula& f);
bool is_closed(const Formula& f);

// Prints in the parser's grammar.
std::string to_string(const Formula& f);

}  // namespace folab
