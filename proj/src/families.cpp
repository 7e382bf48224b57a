#include "hlc/families.hpp"

#include <algorithm>

namespace hlc {

namespace {

// Multisets of types (indices non-decreasing into `pool`) with total size `target`.
void label_multisets(const std::vector<Type>& pool, std::size_t target, std::size_t max_count, std::size_t from,
                     std::vector<Type>& cur, const std::function<void(const std::vector<Type>&)>& out) {
  if (target == 0) {
    out(cur);
    return;
  }
  if (cur.size() == max_count) return;
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (pool[i].size() > target) continue;
    cur.push_back(pool[i]);
    label_multisets(pool, target - pool[i].size(), max_count, i, cur, out);
    cur.pop_back();
  }
}

std::size_t max_label_arity(const std::vector<Type>& labels) {
  std::size_t m = 0;
  for (const auto& l : labels) m = std::max(m, l.arity());
  return m;
}

}  // namespace

std::vector<std::vector<Type>> enumerate_types(const TypeBounds& b) {
  std::vector<std::vector<Type>> by_size(b.max_size + 1);
  std::set<std::uint32_t> seen;
  auto add = [&](const Type& t) {
    if (t.size() <= b.max_size && seen.insert(t.id()).second) by_size[t.size()].push_back(t);
  };
  for (const auto& p : b.primitives) add(p);
  for (std::size_t s = 2; s <= b.max_size; ++s) {
    std::vector<Type> pool;
    for (std::size_t k = 1; k < s; ++k) pool.insert(pool.end(), by_size[k].begin(), by_size[k].end());
    std::vector<Type> cur;
    if (b.product) {
      label_multisets(pool, s - 1, b.max_edges, 0, cur, [&](const std::vector<Type>& labels) {
        for (std::size_t n = max_label_arity(labels); n <= b.max_nodes; ++n)
          for (std::size_t k = 0; k <= std::min(n, b.max_arity); ++k)
            enumerate_graphs<Type>(labels, n, k, b.max_isolated,
                                   [&](const TypedGraph& g) { add(Type::times(g)); });
      });
    }
    if (b.division) {
      for (const auto& num : pool) {
        if (num.size() > s - 1) continue;
        std::size_t rest = s - 1 - num.size();
        auto emit = [&](const std::vector<Type>& labels) {
          for (std::size_t k = 0; k <= b.max_arity; ++k) {
            std::vector<Type> all = labels;
            all.push_back(Type::dollar(k));
            for (std::size_t n = std::max(max_label_arity(all), num.arity()); n <= b.max_nodes; ++n)
              enumerate_graphs<Type>(all, n, num.arity(), b.max_isolated,
                                     [&](const TypedGraph& g) { add(Type::div(num, g)); });
          }
        };
        if (rest == 0) {
          emit({});
        } else {
          label_multisets(pool, rest, b.max_edges, 0, cur, emit);
        }
      }
    }
  }
  return by_size;
}

void enumerate_sequents(const SequentBounds& b, const std::function<void(const Sequent&)>& out) {
  std::vector<Type> labels = b.labels;
  std::sort(labels.begin(), labels.end(), TypeIdLess());
  for (const auto& a : b.succedents) {
    if (a.size() >= b.max_size) continue;
    std::vector<Type> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t budget) {
      for (std::size_t n = std::max(max_label_arity(cur), a.arity()); n <= b.max_nodes; ++n)
        enumerate_graphs<Type>(cur, n, a.arity(), b.max_isolated,
                               [&](const TypedGraph& g) { out(Sequent{g, a}); });
      if (cur.size() == b.max_edges) return;
      for (std::size_t i = from; i < labels.size(); ++i) {
        if (labels[i].size() > budget) continue;
        cur.push_back(labels[i]);
        rec(i, budget - labels[i].size());
        cur.pop_back();
      }
    };
    rec(0, b.max_size - a.size());
  }
}

}  // namespace hlc
