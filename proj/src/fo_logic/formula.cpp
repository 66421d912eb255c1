#include "folab/fo_logic/formula.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "folab/graph_core/errors.hpp"

namespace folab {

namespace {

Formula make(FormulaKind kind, std::string first, std::string second, std::vector<Formula> children) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{kind, std::move(first), std::move(second), std::move(children)}));
}

Formula make_list(FormulaKind kind, std::vector<Formula> parts) {
  if (parts.empty()) throw DomainError("conjunction/disjunction needs at least one part");
  if (parts.size() == 1) return parts.front();
  return make(kind, {}, {}, std::move(parts));
}

// Memoized fold over the DAG of shared subformulas.
template <typename T>
class DagFold {
 public:
  explicit DagFold(std::function<T(const Formula&, DagFold&)> step) : step_(std::move(step)) {}
  T operator()(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    T value = step_(f, *this);
    memo_.emplace(f.id(), value);
    return value;
  }

 private:
  std::function<T(const Formula&, DagFold&)> step_;
  std::unordered_map<const FormulaNode*, T> memo_;
};

}  // namespace

Formula adj(std::string x, std::string y) {
  return make(FormulaKind::Adjacent, std::move(x), std::move(y), {});
}
Formula eq(std::string x, std::string y) {
  return make(FormulaKind::Equal, std::move(x), std::move(y), {});
}
Formula neg(Formula f) { return make(FormulaKind::Not, {}, {}, {std::move(f)}); }
Formula conj(std::vector<Formula> parts) { return make_list(FormulaKind::And, std::move(parts)); }
Formula disj(std::vector<Formula> parts) { return make_list(FormulaKind::Or, std::move(parts)); }
Formula implies(Formula premise, Formula conclusion) {
  return make(FormulaKind::Implies, {}, {}, {std::move(premise), std::move(conclusion)});
}
Formula exists(std::string var, Formula body) {
  return make(FormulaKind::Exists, std::move(var), {}, {std::move(body)});
}
Formula forall(std::string var, Formula body) {
  return make(FormulaKind::Forall, std::move(var), {}, {std::move(body)});
}

bool is_quantifier(FormulaKind kind) {
  return kind == FormulaKind::Exists || kind == FormulaKind::Forall;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.id() == b.id()) return true;
  if (a.kind() != b.kind() || a.left() != b.left() || a.right() != b.right() ||
      a.children().size() != b.children().size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!structurally_equal(a.children()[i], b.children()[i])) return false;
  return true;
}

std::size_t depth(const Formula& f) {
  DagFold<std::size_t> fold([](const Formula& g, DagFold<std::size_t>& self) {
    std::size_t best = 0;
    for (const auto& c : g.children()) best = std::max(best, self(c));
    return best + (is_quantifier(g.kind()) ? 1 : 0);
  });
  return fold(f);
}

std::set<std::string> free_variables(const Formula& f) {
  DagFold<std::set<std::string>> fold([](const Formula& g, DagFold<std::set<std::string>>& self) {
    std::set<std::string> out;
    if (g.kind() == FormulaKind::Adjacent || g.kind() == FormulaKind::Equal) {
      out = {g.left(), g.right()};
      return out;
    }
    for (const auto& c : g.children()) {
      auto sub = self(c);
      out.insert(sub.begin(), sub.end());
    }
    if (is_quantifier(g.kind())) out.erase(g.variable());
    return out;
  });
  return fold(f);
}

std::size_t tree_size(const Formula& f) {
  DagFold<std::size_t> fold([](const Formula& g, DagFold<std::size_t>& self) {
    std::size_t total = 1;
    for (const auto& c : g.children()) total += self(c);
    return total;
  });
  return fold(f);
}

bool is_closed(const Formula& f) { return free_variables(f).empty(); }

namespace {

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Adjacent:
      out += "adj(" + f.left() + "," + f.right() + ")";
      return;
    case FormulaKind::Equal:
      out += f.left() + "=" + f.right();
      return;
    case FormulaKind::Not:
      out += "!";
      print(f.child(), out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or: {
      const char* sep = f.kind() == FormulaKind::And ? " & " : " | ";
      out += "(";
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) out += sep;
        print(f.children()[i], out);
      }
      out += ")";
      return;
    }
    case FormulaKind::Implies:
      out += "(";
      print(f.child(0), out);
      out += " -> ";
      print(f.child(1), out);
      out += ")";
      return;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      out += f.kind() == FormulaKind::Exists ? "E " : "A ";
      out += f.variable() + " . ";
      print(f.child(), out);
      return;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace folab
