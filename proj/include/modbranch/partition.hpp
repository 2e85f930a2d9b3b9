#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace modbranch {

/// A box of a Young diagram, 1-indexed: row counted from the top,
/// column from the left.
struct Node {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Node&, const Node&) = default;
};

/// Integer partition: weakly decreasing positive parts, stored without
/// trailing zeros. The empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i - 1] < parts_[i])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Number of boxes.
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// r-th part, 1-indexed; 0 beyond the last row.
  int part(int r) const {
    return (r >= 1 && r <= rows()) ? parts_[r - 1] : 0;
  }

  bool has_node(Node a) const {
    return a.row >= 1 && a.col >= 1 && a.col <= part(a.row);
  }

  /// Column lengths of the diagram.
  Partition conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
      cols.resize(parts_[0]);
      for (int c = 1; c <= parts_[0]; ++c) {
        int len = 0;
        while (len < rows() && parts_[len] >= c) ++len;
        cols[c - 1] = len;
      }
    }
    return Partition(std::move(cols));
  }

  /// New partition with node a added; a must be addable.
  Partition with_added(Node a) const {
    std::vector<int> np = parts_;
    if (a.row == rows() + 1) {
      if (a.col != 1) throw std::invalid_argument("node not addable");
      np.push_back(1);
    } else if (a.row >= 1 && a.row <= rows() && a.col == parts_[a.row - 1] + 1) {
      np[a.row - 1] += 1;
    } else {
      throw std::invalid_argument("node not addable");
    }
    return Partition(std::move(np));
  }

  /// Comma-separated parts; the empty partition prints as "0".
  std::string text() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  /// Accepts the text() form; "" and "0" both denote the empty partition.
  static Partition parse(const std::string& s) {
    if (s.empty() || s == "0") return Partition();
    if (s.back() == ',') throw std::invalid_argument("malformed partition: " + s);
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      const std::string tok = s.substr(pos, next - pos);
      if (tok.empty()) throw std::invalid_argument("malformed partition: " + s);
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed partition: " + s);
      }
      if (used != tok.size()) throw std::invalid_argument("malformed partition: " + s);
      parts.push_back(v);
      pos = next + 1;
    }
    return Partition(std::move(parts));
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline void require_modulus(long long l) {
  if (l < 0 || l == 1)
    throw std::invalid_argument("modulus must be 0 or >= 2");
}

/// l-restricted: successive part differences (with a trailing zero part)
/// are < l. Every partition is 0-restricted.
inline bool is_l_restricted(const Partition& lam, long long l) {
  require_modulus(l);
  if (l == 0) return true;
  for (int r = 1; r <= lam.rows(); ++r)
    if (lam.part(r) - lam.part(r + 1) >= l) return false;
  return true;
}

/// l-regular: the conjugate is l-restricted; equivalently no part is
/// repeated l or more times.
inline bool is_l_regular(const Partition& lam, long long l) {
  require_modulus(l);
  if (l == 0) return true;
  return is_l_restricted(lam.conjugate(), l);
}

/// Addable nodes in rim order, bottom left to top right (rows decreasing).
inline std::vector<Node> addable_nodes(const Partition& lam) {
  std::vector<Node> out;
  const int k = lam.rows();
  out.push_back({k + 1, 1});
  for (int r = k; r >= 1; --r)
    if (r == 1 || lam.part(r - 1) > lam.part(r))
      out.push_back({r, lam.part(r) + 1});
  return out;
}

/// Removable nodes in rim order, bottom left to top right (rows decreasing).
inline std::vector<Node> removable_nodes(const Partition& lam) {
  std::vector<Node> out;
  const int k = lam.rows();
  for (int r = k; r >= 1; --r)
    if (lam.part(r) > lam.part(r + 1))
      out.push_back({r, lam.part(r)});
  return out;
}

namespace detail {
inline void partitions_rec(int n, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(n - part, part, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// All partitions of n, in descending lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partition size must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(n, n == 0 ? 1 : n, cur, out);
  return out;
}

/// All l-regular partitions of n, in descending lexicographic order.
inline std::vector<Partition> l_regular_partitions_of(int n, long long l) {
  require_modulus(l);
  std::vector<Partition> out;
  for (auto& lam : partitions_of(n))
    if (is_l_regular(lam, l)) out.push_back(std::move(lam));
  return out;
}

}  // namespace modbranch
