#include "folab/fo_logic/evaluator.hpp"

#include <algorithm>
#include <unordered_map>

#include "folab/graph_core/errors.hpp"

namespace folab {

namespace {

constexpr std::size_t kMaxCachedFree = 4;

class Compiler {
 public:
  Compiler(std::vector<CompiledFormula::Node>& nodes, std::vector<std::string>& names)
      : nodes_(nodes), names_(names) {}

  std::uint32_t visit(const Formula& f) {
    if (auto it = ids_.find(f.id()); it != ids_.end()) return it->second;
    CompiledFormula::Node node;
    node.kind = f.kind();
    std::vector<int> free;
    switch (f.kind()) {
      case FormulaKind::Adjacent:
      case FormulaKind::Equal:
        node.a = slot(f.left());
        node.b = slot(f.right());
        free = {node.a, node.b};
        break;
      default:
        for (const auto& c : f.children()) {
          const auto id = visit(c);
          node.children.push_back(id);
          const auto& sub = nodes_[id].free_slots;
          free.insert(free.end(), sub.begin(), sub.end());
        }
        if (is_quantifier(f.kind())) {
          node.a = slot(f.variable());
          free.erase(std::remove(free.begin(), free.end(), node.a), free.end());
        }
    }
    std::sort(free.begin(), free.end());
    free.erase(std::unique(free.begin(), free.end()), free.end());
    node.free_slots = std::move(free);
    node.cached = is_quantifier(node.kind) && node.free_slots.size() <= kMaxCachedFree;
    nodes_.push_back(std::move(node));
    const auto id = static_cast<std::uint32_t>(nodes_.size() - 1);
    ids_.emplace(f.id(), id);
    return id;
  }

 private:
  int slot(const std::string& name) {
    auto [it, inserted] = slots_.emplace(name, static_cast<int>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }

  std::vector<CompiledFormula::Node>& nodes_;
  std::vector<std::string>& names_;
  std::unordered_map<const FormulaNode*, std::uint32_t> ids_;
  std::unordered_map<std::string, int> slots_;
};

class Run {
 public:
  Run(const Graph& g, const CompiledFormula& f, std::uint64_t budget)
      : g_(g), nodes_(f.nodes()), values_(f.slot_names().size(), -1), memo_(nodes_.size()),
        budget_(budget), cache_ok_(g.vertex_count() < (1U << 16)) {}

  std::vector<std::int64_t>& values() { return values_; }

  bool eval(std::uint32_t id) {
    const auto& node = nodes_[id];
    switch (node.kind) {
      case FormulaKind::Adjacent:
        return g_.adjacent(static_cast<Vertex>(values_[node.a]), static_cast<Vertex>(values_[node.b]));
      case FormulaKind::Equal:
        return values_[node.a] == values_[node.b];
      case FormulaKind::Not:
        return !eval(node.children[0]);
      case FormulaKind::And:
        for (auto c : node.children)
          if (!eval(c)) return false;
        return true;
      case FormulaKind::Or:
        for (auto c : node.children)
          if (eval(c)) return true;
        return false;
      case FormulaKind::Implies:
        return !eval(node.children[0]) || eval(node.children[1]);
      case FormulaKind::Exists:
      case FormulaKind::Forall:
        return quantify(id, node);
    }
    return false;
  }

 private:
  bool quantify(std::uint32_t id, const CompiledFormula::Node& node) {
    std::uint64_t key = 0;
    const bool use_cache = node.cached && cache_ok_;
    if (use_cache) {
      for (int s : node.free_slots) key = (key << 16) | static_cast<std::uint64_t>(values_[s]);
      if (auto it = memo_[id].find(key); it != memo_[id].end()) return it->second;
    }
    const bool want = node.kind == FormulaKind::Exists;
    const auto saved = values_[node.a];
    bool result = !want;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (++visits_ > budget_) {
        throw CapacityError("formula evaluation exceeded the visit budget of " + std::to_string(budget_));
      }
      values_[node.a] = v;
      if (eval(node.children[0]) == want) {
        result = want;
        break;
      }
    }
    values_[node.a] = saved;
    if (use_cache) memo_[id].emplace(key, result);
    return result;
  }

  const Graph& g_;
  const std::vector<CompiledFormula::Node>& nodes_;
  std::vector<std::int64_t> values_;
  std::vector<std::unordered_map<std::uint64_t, bool>> memo_;
  std::uint64_t budget_;
  std::uint64_t visits_ = 0;
  bool cache_ok_;
};

}  // namespace

CompiledFormula::CompiledFormula(const Formula& f) {
  Compiler compiler(nodes_, slot_names_);
  root_ = compiler.visit(f);
}

bool evaluate(const Graph& g, const CompiledFormula& f, const Assignment& sigma,
              std::uint64_t visit_budget) {
  Run run(g, f, visit_budget);
  const auto& names = f.slot_names();
  for (int s : f.root_free_slots()) {
    auto it = sigma.find(names[s]);
    if (it == sigma.end()) throw DomainError("free variable '" + names[s] + "' is unassigned");
    require_vertex(g, it->second);
    run.values()[s] = it->second;
  }
  return run.eval(f.root());
}

bool evaluate(const Graph& g, const Formula& f, const Assignment& sigma, std::uint64_t visit_budget) {
  return evaluate(g, CompiledFormula(f), sigma, visit_budget);
}

}  // namespace folab
