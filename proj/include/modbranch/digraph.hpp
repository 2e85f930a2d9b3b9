#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modbranch/crystal.hpp"
#include "modbranch/partition.hpp"

namespace modbranch {

/// Tuple of partitions. Vertices of leveled digraphs carry one of these;
/// the level is the total number of boxes.
struct Multipartition {
  std::vector<Partition> comps;

  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> c) : comps(std::move(c)) {
    if (comps.empty())
      throw std::invalid_argument("multipartition needs at least one component");
  }

  int alpha() const { return static_cast<int>(comps.size()); }

  int level() const {
    int n = 0;
    for (const auto& p : comps) n += p.size();
    return n;
  }

  /// One component: the plain partition text. Several: each component
  /// parenthesized, joined by '|', e.g. "(3,1)|(2)".
  std::string text() const {
    if (comps.size() == 1) return comps[0].text();
    std::string s;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (i) s += '|';
      s += '(' + comps[i].text() + ')';
    }
    return s;
  }

  /// Ordered by level first, then lexicographically on the component lists.
  friend std::strong_ordering operator<=>(const Multipartition& a,
                                          const Multipartition& b) {
    if (auto c = a.level() <=> b.level(); c != 0) return c;
    return a.comps <=> b.comps;
  }
  friend bool operator==(const Multipartition& a, const Multipartition& b) {
    return a.comps == b.comps;
  }
};

/// Directed graph whose vertices are multipartitions graded by level; every
/// edge goes from level n to level n+1.
class LeveledDigraph {
 public:
  using Edge = std::pair<Multipartition, Multipartition>;

  LeveledDigraph(int alpha, int max_level) : alpha_(alpha), max_level_(max_level) {
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    if (max_level < 0) throw std::invalid_argument("max_level must be >= 0");
  }

  int alpha() const { return alpha_; }
  int max_level() const { return max_level_; }

  void add_vertex(const Multipartition& v) {
    check_vertex(v);
    vertices_.insert(v);
  }

  void add_edge(const Multipartition& from, const Multipartition& to) {
    if (!has_vertex(from) || !has_vertex(to))
      throw std::invalid_argument("edge endpoints must be vertices");
    if (to.level() != from.level() + 1)
      throw std::invalid_argument("edges must raise the level by one");
    edges_.insert({from, to});
  }

  bool has_vertex(const Multipartition& v) const { return vertices_.count(v) > 0; }
  bool has_edge(const Multipartition& from, const Multipartition& to) const {
    return edges_.count({from, to}) > 0;
  }

  const std::set<Multipartition>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::vector<Multipartition> out_neighbors(const Multipartition& v) const {
    std::vector<Multipartition> out;
    for (const auto& e : edges_)
      if (e.first == v) out.push_back(e.second);
    return out;
  }

  /// Vertex counts indexed by level, 0..max_level.
  std::vector<std::size_t> level_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(max_level_) + 1, 0);
    for (const auto& v : vertices_) counts[static_cast<std::size_t>(v.level())]++;
    return counts;
  }

 private:
  void check_vertex(const Multipartition& v) const {
    if (v.alpha() != alpha_)
      throw std::invalid_argument("vertex has wrong number of components");
    if (v.level() > max_level_)
      throw std::invalid_argument("vertex level exceeds max_level");
  }

  int alpha_;
  int max_level_;
  std::set<Multipartition> vertices_;
  std::set<Edge> edges_;
};

/// Young's lattice up to level max_n: all partitions, with an edge for each
/// single-box addition.
inline LeveledDigraph young_lattice(int max_n) {
  LeveledDigraph g(1, max_n);
  for (int n = 0; n <= max_n; ++n)
    for (const auto& lam : partitions_of(n))
      g.add_vertex(Multipartition({lam}));
  for (int n = 0; n < max_n; ++n)
    for (const auto& lam : partitions_of(n))
      for (Node a : addable_nodes(lam))
        g.add_edge(Multipartition({lam}), Multipartition({lam.with_added(a)}));
  return g;
}

/// Crystal graph on p-regular partitions up to level max_n: an edge
/// lam -> f_tilde_i(lam) for every residue i with phi_i(lam) > 0.
/// p = 0 gives all partitions with integer residues and recovers
/// young_lattice(max_n).
inline LeveledDigraph crystal_graph(long long p, int max_n) {
  require_modulus(p);
  LeveledDigraph g(1, max_n);
  for (int n = 0; n <= max_n; ++n)
    for (const auto& lam : l_regular_partitions_of(n, p))
      g.add_vertex(Multipartition({lam}));
  for (int n = 0; n < max_n; ++n) {
    for (const auto& lam : l_regular_partitions_of(n, p)) {
      std::vector<Residue> residues;
      if (p > 0) {
        for (long long i = 0; i < p; ++i) residues.push_back(Residue(p, i));
      } else {
        for (Node a : addable_nodes(lam)) residues.push_back(node_residue(a, 0));
      }
      for (const Residue& i : residues) {
        auto mu = f_tilde(lam, i);
        if (!mu) continue;
        if (!is_l_regular(*mu, p))
          throw std::logic_error("crystal operator left the regular partitions");
        g.add_edge(Multipartition({lam}), Multipartition({*mu}));
      }
    }
  }
  return g;
}

namespace detail {
inline void product_vertices_rec(const std::vector<LeveledDigraph>& factors,
                                 std::size_t idx, int total, int max_total,
                                 std::vector<Partition>& acc,
                                 LeveledDigraph& out) {
  if (idx == factors.size()) {
    out.add_vertex(Multipartition(acc));
    return;
  }
  for (const auto& v : factors[idx].vertices()) {
    if (total + v.level() > max_total) continue;
    for (const auto& c : v.comps) acc.push_back(c);
    product_vertices_rec(factors, idx + 1, total + v.level(), max_total, acc, out);
    acc.resize(acc.size() - v.comps.size());
  }
}
}  // namespace detail

/// Star product: vertices are tuples of factor vertices with total level at
/// most max_total; each edge moves exactly one coordinate along a factor
/// edge and keeps the others fixed.
inline LeveledDigraph star_product(const std::vector<LeveledDigraph>& factors,
                                   int max_total) {
  if (factors.empty())
    throw std::invalid_argument("star product needs at least one factor");
  int alpha = 0;
  for (const auto& f : factors) alpha += f.alpha();

  LeveledDigraph g(alpha, max_total);
  std::vector<Partition> acc;
  detail::product_vertices_rec(factors, 0, 0, max_total, acc, g);

  for (const auto& v : g.vertices()) {
    if (v.level() >= max_total) continue;
    std::size_t offset = 0;
    for (const auto& f : factors) {
      const auto width = static_cast<std::size_t>(f.alpha());
      Multipartition coord(std::vector<Partition>(
          v.comps.begin() + offset, v.comps.begin() + offset + width));
      for (const auto& target : f.out_neighbors(coord)) {
        Multipartition moved = v;
        std::copy(target.comps.begin(), target.comps.end(),
                  moved.comps.begin() + offset);
        g.add_edge(v, moved);
      }
      offset += width;
    }
  }
  return g;
}

/// Star product of alpha copies of the crystal graph, truncated at total
/// level max_n.
inline LeveledDigraph predicted_branching_graph(long long p, int alpha, int max_n) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  std::vector<LeveledDigraph> factors(
      static_cast<std::size_t>(alpha), crystal_graph(p, max_n));
  return star_product(factors, max_n);
}

/// Difference of two leveled digraphs, compared on vertex and edge labels.
struct GraphDiff {
  bool equal = true;
  std::vector<Multipartition> missing_vertices;  // in first, not second
  std::vector<Multipartition> extra_vertices;    // in second, not first
  std::vector<LeveledDigraph::Edge> missing_edges;
  std::vector<LeveledDigraph::Edge> extra_edges;

  std::string report() const {
    std::string s;
    for (const auto& v : missing_vertices)
      s += "vertex \"" + v.text() + "\" missing in second\n";
    for (const auto& v : extra_vertices)
      s += "vertex \"" + v.text() + "\" extra in second\n";
    for (const auto& e : missing_edges)
      s += "edge \"" + e.first.text() + "\" -> \"" + e.second.text() +
           "\" missing in second\n";
    for (const auto& e : extra_edges)
      s += "edge \"" + e.first.text() + "\" -> \"" + e.second.text() +
           "\" extra in second\n";
    return s;
  }
};

inline GraphDiff graphs_equal_on_labels(const LeveledDigraph& a,
                                        const LeveledDigraph& b) {
  if (a.alpha() != b.alpha() || a.max_level() != b.max_level())
    throw std::invalid_argument("graphs have different alpha or max_level");
  GraphDiff d;
  std::set_difference(a.vertices().begin(), a.vertices().end(),
                      b.vertices().begin(), b.vertices().end(),
                      std::back_inserter(d.missing_vertices));
  std::set_difference(b.vertices().begin(), b.vertices().end(),
                      a.vertices().begin(), a.vertices().end(),
                      std::back_inserter(d.extra_vertices));
  std::set_difference(a.edges().begin(), a.edges().end(),
                      b.edges().begin(), b.edges().end(),
                      std::back_inserter(d.missing_edges));
  std::set_difference(b.edges().begin(), b.edges().end(),
                      a.edges().begin(), a.edges().end(),
                      std::back_inserter(d.extra_edges));
  d.equal = d.missing_vertices.empty() && d.extra_vertices.empty() &&
            d.missing_edges.empty() && d.extra_edges.empty();
  return d;
}

}  // namespace modbranch
