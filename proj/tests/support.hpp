#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "modbranch/crystal.hpp"
#include "modbranch/partition.hpp"

// Independent reference computations for cross-checking library results.
// Everything here deliberately avoids the library's own enumeration and
// reduction routines.
namespace testsupport {

inline long long partition_count(int n, int max_part) {
  if (n == 0) return 1;
  long long total = 0;
  for (int part = 1; part <= std::min(n, max_part); ++part)
    total += partition_count(n - part, part);
  return total;
}

inline long long partition_count(int n) { return partition_count(n, n); }

/// Partitions of n counted by distinct part value with bounded
/// multiplicity; bound 0 means unbounded.
inline long long bounded_multiplicity_count(int n, int value, long long bound) {
  if (n == 0) return 1;
  if (value == 0) return 0;
  long long total = 0;
  const long long max_mult =
      bound == 0 ? n / value : std::min<long long>(bound - 1, n / value);
  for (long long mult = 0; mult <= max_mult; ++mult)
    total += bounded_multiplicity_count(n - static_cast<int>(mult) * value,
                                        value - 1, bound);
  return total;
}

inline long long l_regular_count(int n, long long l) {
  return bounded_multiplicity_count(n, n, l);
}

/// Regularity straight from the definition: no part value occurs l or
/// more times.
inline bool no_part_repeated(const modbranch::Partition& lam, long long l) {
  if (l == 0) return true;
  const auto& parts = lam.parts();
  long long run = 1;
  for (std::size_t i = 1; i <= parts.size(); ++i) {
    if (i < parts.size() && parts[i] == parts[i - 1]) {
      if (++run >= l) return false;
    } else {
      run = 1;
    }
  }
  return true;
}

inline modbranch::Partition random_partition(std::mt19937& rng, int size) {
  modbranch::Partition lam;
  for (int i = 0; i < size; ++i) {
    const auto adds = modbranch::addable_nodes(lam);
    lam = lam.with_added(adds[rng() % adds.size()]);
  }
  return lam;
}

/// Erases "-+" pairs one at a time at randomly chosen sites.
inline modbranch::Signature reduce_random_order(modbranch::Signature sig,
                                                std::mt19937& rng) {
  for (;;) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i + 1 < sig.size(); ++i)
      if (sig[i].sign == modbranch::Sign::minus &&
          sig[i + 1].sign == modbranch::Sign::plus)
        sites.push_back(i);
    if (sites.empty()) return sig;
    const std::size_t at = sites[rng() % sites.size()];
    sig.erase(sig.begin() + static_cast<std::ptrdiff_t>(at),
              sig.begin() + static_cast<std::ptrdiff_t>(at) + 2);
  }
}

}  // namespace testsupport
