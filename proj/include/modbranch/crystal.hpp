#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modbranch/partition.hpp"

namespace modbranch {

/// Residue class mod l; modulus 0 means a plain integer.
struct Residue {
  long long modulus = 0;
  long long value = 0;

  Residue(long long mod, long long val) : modulus(mod) {
    require_modulus(mod);
    value = mod == 0 ? val : ((val % mod) + mod) % mod;
  }

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Residue of a node: column minus row, taken mod l.
inline Residue node_residue(Node a, long long l) {
  return Residue(l, static_cast<long long>(a.col) - a.row);
}

enum class Sign { plus, minus };

struct SignatureEntry {
  Sign sign;
  Node node;
  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

/// Sequence of signs read along the rim, bottom left to top right.
using Signature = std::vector<SignatureEntry>;

inline std::string signature_text(const Signature& sig) {
  std::string s;
  for (const auto& e : sig) s += (e.sign == Sign::plus ? '+' : '-');
  return s;
}

/// The i-signature of lam: a plus for each addable node of residue i and a
/// minus for each removable node of residue i, in rim order (rows strictly
/// decreasing along the sequence).
inline Signature i_signature(const Partition& lam, const Residue& i) {
  Signature sig;
  for (Node a : addable_nodes(lam))
    if (node_residue(a, i.modulus) == i) sig.push_back({Sign::plus, a});
  for (Node a : removable_nodes(lam))
    if (node_residue(a, i.modulus) == i) sig.push_back({Sign::minus, a});
  std::stable_sort(sig.begin(), sig.end(), [](const auto& x, const auto& y) {
    return x.node.row > y.node.row;
  });
  return sig;
}

/// Erases adjacent "-+" pairs until none remain. The order of erasures does
/// not affect the result, which always has the shape "+...+-...-".
inline Signature reduce_signature(const Signature& sig) {
  Signature stack;
  for (const auto& e : sig) {
    if (e.sign == Sign::plus && !stack.empty() && stack.back().sign == Sign::minus)
      stack.pop_back();
    else
      stack.push_back(e);
  }
  return stack;
}

inline Signature reduced_i_signature(const Partition& lam, const Residue& i) {
  return reduce_signature(i_signature(lam, i));
}

/// Number of conormal nodes: plus entries of the reduced i-signature.
inline int phi(const Partition& lam, const Residue& i) {
  int count = 0;
  for (const auto& e : reduced_i_signature(lam, i))
    if (e.sign == Sign::plus) ++count;
  return count;
}

/// The cogood node: rightmost plus of the reduced i-signature (the last
/// plus entry), if any.
inline std::optional<Node> cogood_node(const Partition& lam, const Residue& i) {
  std::optional<Node> best;
  for (const auto& e : reduced_i_signature(lam, i))
    if (e.sign == Sign::plus) best = e.node;
  return best;
}

/// Crystal operator: adds the cogood node of residue i, when one exists.
inline std::optional<Partition> f_tilde(const Partition& lam, const Residue& i) {
  auto node = cogood_node(lam, i);
  if (!node) return std::nullopt;
  return lam.with_added(*node);
}

}  // namespace modbranch
