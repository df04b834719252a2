#include "anaphora/isa_graph.hpp"

#include <algorithm>
#include <deque>

#include "anaphora/errors.hpp"

namespace anaphora {

void IsaGraph::declare(std::string name, std::vector<std::string> parents) {
  auto it = index_.find(name);
  if (it == index_.end()) {
    index_.emplace(name, names_.size());
    names_.push_back(std::move(name));
    parents_.push_back(std::move(parents));
    return;
  }
  auto& existing = parents_[it->second];
  for (auto& p : parents)
    if (std::find(existing.begin(), existing.end(), p) == existing.end()) existing.push_back(std::move(p));
}

void IsaGraph::finalize(std::string_view kind) {
  const std::size_t n = names_.size();
  std::vector<std::vector<std::size_t>> up(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : parents_[i]) {
      auto it = index_.find(p);
      if (it == index_.end())
        throw LoadError(std::string(kind) + " '" + names_[i] + "' has unknown parent '" + p + "'");
      up[i].push_back(it->second);
    }
  }

  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> mark(n, 0);
  std::vector<std::size_t> order;
  auto visit = [&](auto&& self, std::size_t v) -> void {
    mark[v] = 1;
    for (std::size_t p : up[v]) {
      if (mark[p] == 1)
        throw LoadError("cycle in " + std::string(kind) + " hierarchy through '" + names_[p] + "'");
      if (mark[p] == 0) self(self, p);
    }
    mark[v] = 2;
    order.push_back(v);
  };
  for (std::size_t v = 0; v < n; ++v)
    if (mark[v] == 0) visit(visit, v);

  // order is parents-before-children
  closure_.assign(n, std::vector<bool>(n, false));
  for (std::size_t v : order) {
    closure_[v][v] = true;
    for (std::size_t p : up[v])
      for (std::size_t a = 0; a < n; ++a)
        if (closure_[p][a]) closure_[v][a] = true;
  }
}

bool IsaGraph::contains(std::string_view name) const { return index_.count(std::string(name)) != 0; }

std::size_t IsaGraph::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw LookupError("unknown identifier '" + std::string(name) + "'");
  return it->second;
}

bool IsaGraph::reaches(std::string_view sub, std::string_view super) const {
  std::size_t s = index_of(sub), t = index_of(super);
  if (closure_.size() != names_.size()) throw PreconditionError("isa graph used before finalize()");
  return closure_[s][t];
}

const std::vector<std::string>& IsaGraph::parents_of(std::string_view name) const {
  return parents_[index_of(name)];
}

std::vector<std::string> IsaGraph::ancestors(std::string_view name) const {
  std::vector<std::string> out;
  std::vector<bool> seen(names_.size(), false);
  std::deque<std::size_t> queue{index_of(name)};
  seen[queue.front()] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    out.push_back(names_[v]);
    for (const auto& p : parents_[v]) {
      std::size_t pi = index_of(p);
      if (!seen[pi]) {
        seen[pi] = true;
        queue.push_back(pi);
      }
    }
  }
  return out;
}

}  // namespace anaphora
