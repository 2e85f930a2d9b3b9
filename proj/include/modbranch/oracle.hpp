#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "modbranch/digraph.hpp"
#include "modbranch/wreath.hpp"

namespace modbranch {

/// Estimated workload exceeds the configured guard.
class CostGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A restriction carried an irreducible with multiplicity >= 2, so the
/// branching data cannot be drawn as a plain graph.
class MultiplicityError : public std::runtime_error {
 public:
  MultiplicityError(Multipartition from_label, Multipartition to_label, int d)
      : std::runtime_error("Hom dimension " + std::to_string(d) +
                           " between \"" + from_label.text() + "\" and \"" +
                           to_label.text() + "\"; restriction socle is not "
                           "multiplicity-free"),
        from(std::move(from_label)),
        to(std::move(to_label)),
        dim(d) {}

  Multipartition from, to;
  int dim;
};

/// All alpha-tuples of p-regular partitions with the given total size,
/// in label order.
inline std::vector<Multipartition> regular_multipartitions(int level, int alpha,
                                                           long long p) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  std::vector<Multipartition> out;
  std::vector<Partition> acc(alpha);
  const auto rec = [&](auto&& self, int b, int remaining) -> void {
    if (b == alpha - 1) {
      for (const auto& lam : l_regular_partitions_of(remaining, p)) {
        acc[b] = lam;
        out.push_back(Multipartition(acc));
      }
      return;
    }
    for (int s = 0; s <= remaining; ++s)
      for (const auto& lam : l_regular_partitions_of(s, p)) {
        acc[b] = lam;
        self(self, b + 1, remaining - s);
      }
  };
  rec(rec, 0, level);
  std::sort(out.begin(), out.end());
  return out;
}

struct HomTableEntry {
  Multipartition from, to;
  int dim = 0;
};

namespace detail {

/// Degree of the induced module for a label, without building it.
inline long long estimated_degree(const Multipartition& mp) {
  std::vector<int> sizes;
  long long inner = 1;
  for (const auto& c : mp.comps) {
    sizes.push_back(c.size());
    inner *= standard_tableau_count(c);
  }
  return multinomial(mp.level(), sizes) * inner;
}

template <class F>
std::vector<std::vector<Multipartition>> guarded_levels(const GroupSpec& group,
                                                        const F& field,
                                                        int max_n,
                                                        long long guard) {
  if (max_n < 0) throw std::invalid_argument("max_n must be >= 0");
  const long long alpha = characters(group, field).alpha;
  std::vector<std::vector<Multipartition>> levels;
  for (int n = 0; n <= max_n; ++n) {
    auto labels =
        regular_multipartitions(n, static_cast<int>(alpha), field.characteristic());
    long long total = 0;
    for (const auto& mp : labels) total += estimated_degree(mp);
    if (total > guard)
      throw CostGuardError("estimated total degree " + std::to_string(total) +
                           " at level " + std::to_string(n) +
                           " exceeds the guard " + std::to_string(guard));
    levels.push_back(std::move(labels));
  }
  return levels;
}

}  // namespace detail

/// Hom dimensions between every pair of irreducibles on consecutive levels
/// up to max_n, computed from the matrix modules. Entries are ordered by
/// source label, then target label.
template <class F>
std::vector<HomTableEntry> oracle_hom_table(const GroupSpec& group,
                                            const F& field, int max_n,
                                            long long guard = 200) {
  const auto levels = detail::guarded_levels(group, field, max_n, guard);
  const auto table = characters(group, field);
  IrreducibleCache<F> cache(field);

  std::vector<HomTableEntry> out;
  std::vector<MatrixRep<F>> prev;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<MatrixRep<F>> cur;
    for (const auto& mp : levels[n]) cur.push_back(c_module(mp, table, &cache));
    if (n > 0) {
      for (std::size_t vi = 0; vi < cur.size(); ++vi) {
        const auto res = restrict_rep(cur[vi]);
        for (std::size_t wi = 0; wi < prev.size(); ++wi)
          out.push_back({levels[n - 1][wi], levels[n][vi],
                         hom_dim(prev[wi], res)});
      }
    }
    prev = std::move(cur);
  }
  std::sort(out.begin(), out.end(), [](const HomTableEntry& a, const HomTableEntry& b) {
    if (a.from != b.from) return a.from < b.from;
    return a.to < b.to;
  });
  return out;
}

/// Branching graph computed from the modules alone: vertices are the
/// p-regular labels per level, edges the pairs with Hom dimension exactly
/// one. Any dimension >= 2 aborts with MultiplicityError.
template <class F>
LeveledDigraph oracle_branching_graph(const GroupSpec& group, const F& field,
                                      int max_n, long long guard = 200) {
  const auto levels = detail::guarded_levels(group, field, max_n, guard);
  const auto entries = oracle_hom_table(group, field, max_n, guard);

  // level 0 always holds exactly the all-empty label
  LeveledDigraph g(levels[0][0].alpha(), max_n);
  for (const auto& level : levels)
    for (const auto& mp : level) g.add_vertex(mp);
  for (const auto& e : entries) {
    if (e.dim >= 2) throw MultiplicityError(e.from, e.to, e.dim);
    if (e.dim == 1) g.add_edge(e.from, e.to);
  }
  return g;
}

}  // namespace modbranch
