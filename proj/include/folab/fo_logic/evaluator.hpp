#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "folab/fo_logic/formula.hpp"
#include "folab/graph_core/graph.hpp"

namespace folab {

using Assignment = std::map<std::string, Vertex>;

inline constexpr std::uint64_t kDefaultVisitBudget = 1'000'000'000;

// A formula flattened for repeated evaluation: shared subformulas become one node,
// variables become slots.
class CompiledFormula {
 public:
  explicit CompiledFormula(const Formula& f);

  struct Node {
    FormulaKind kind;
    int a = -1;  // atom operands or bound variable slot
    int b = -1;
    std::vector<std::uint32_t> children;
    std::vector<int> free_slots;
    bool cached = false;
  };

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::uint32_t root() const noexcept { return root_; }
  const std::vector<std::string>& slot_names() const noexcept { return slot_names_; }
  const std::vector<int>& root_free_slots() const { return nodes_[root_].free_slots; }

 private:
  std::vector<Node> nodes_;
  std::vector<std::string> slot_names_;
  std::uint32_t root_ = 0;
};

// Tarskian semantics over V(g). Quantifier nodes with at most four free variables
// are memoized on the values of those variables, so the work is bounded by the
// number of distinct (node, free values) states rather than v(g)^depth. Throws
// DomainError for an unassigned free variable and CapacityError once more than
// visit_budget quantifier iterations have run.
bool evaluate(const Graph& g, const CompiledFormula& f, const Assignment& sigma = {},
              std::uint64_t visit_budget = kDefaultVisitBudget);
bool evaluate(const Graph& g, const Formula& f, const Assignment& sigma = {},
              std::uint64_t visit_budget = kDefaultVisitBudget);

}  // namespace folab
