#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modbranch/digraph.hpp"
#include "modbranch/field.hpp"
#include "modbranch/matrix.hpp"
#include "modbranch/rep.hpp"
#include "modbranch/specht.hpp"

namespace modbranch {

namespace detail {

using Perm = std::vector<int>;  // one-line form, 0-indexed: p[i] = image of i

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

/// Writes p as a product of adjacent transpositions,
/// p = s_{w[0]} s_{w[1]} ... (s_j swaps positions j and j+1, 0-indexed).
/// Bubble sorting the one-line form right-multiplies by one adjacent
/// transposition per swap, so the reversed swap list is such a word.
inline std::vector<int> adjacent_word(Perm p) {
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j + 1 < static_cast<int>(p.size()); ++j)
      if (p[j] > p[j + 1]) {
        std::swap(p[j], p[j + 1]);
        swaps.push_back(j);
        changed = true;
      }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  const F& f = a.field();
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      if (f.is_zero(a.at(ia, ja))) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb)
          k.at(ia * b.rows() + ib, ja * b.cols() + jb) =
              f.mul(a.at(ia, ja), b.at(ib, jb));
    }
  return k;
}

}  // namespace detail

inline long long multinomial(int n, const std::vector<int>& parts) {
  long long result = 1;
  int used = 0;
  for (int a : parts)
    for (int i = 1; i <= a; ++i) {
      ++used;
      result = result * used / i;  // running binomial, always integral
    }
  if (used != n) throw std::invalid_argument("multinomial parts must sum to n");
  return result;
}

/// Irreducible characters of an abelian group over F, restricted to the
/// part of the group order prime to the characteristic. Character b sends
/// generator g_i to roots[i] raised to exponents[b][i]; the exponent
/// tuples run in lexicographic order with the first generator most
/// significant, so character 0 is trivial.
template <class F>
struct CharacterTable {
  F field;
  GroupSpec group;
  long long alpha = 1;
  std::vector<long long> reduced_orders;  // factor orders with char part removed
  std::vector<typename F::Elem> roots;
  std::vector<std::vector<long long>> exponents;
  std::vector<std::vector<typename F::Elem>> values;
};

template <class F>
typename F::Elem elem_pow(const F& f, typename F::Elem a, long long e) {
  if (e < 0) throw std::invalid_argument("exponent must be >= 0");
  auto r = f.one();
  while (e > 0) {
    if (e & 1) r = f.mul(r, a);
    a = f.mul(a, a);
    e >>= 1;
  }
  return r;
}

template <class F>
CharacterTable<F> characters(const GroupSpec& group, const F& field) {
  const long long p = field.characteristic();
  CharacterTable<F> table{field, group};

  for (long long m : group.factors()) {
    if (p > 0)
      while (m % p == 0) m /= p;
    table.reduced_orders.push_back(m);
  }

  try {
    for (long long m : table.reduced_orders)
      table.roots.push_back(field.root_of_unity(m));
  } catch (const FieldError&) {
    if (p == 0)
      throw FieldError(
          "the rationals do not split this group; use a finite field");
    long long k = 1;
    for (long long m : table.reduced_orders)
      k = std::lcm(k, detail::multiplicative_order(p, m));
    throw FieldError("the field does not split the group; minimal extension "
                     "degree is " + std::to_string(k),
                     k);
  }

  table.alpha = 1;
  for (long long m : table.reduced_orders) table.alpha *= m;

  const int r = group.rank();
  for (long long b = 0; b < table.alpha; ++b) {
    std::vector<long long> e(r);
    long long t = b;
    for (int i = r - 1; i >= 0; --i) {
      e[i] = t % table.reduced_orders[i];
      t /= table.reduced_orders[i];
    }
    std::vector<typename F::Elem> row;
    for (int i = 0; i < r; ++i)
      row.push_back(elem_pow(field, table.roots[i], e[i]));
    table.exponents.push_back(std::move(e));
    table.values.push_back(std::move(row));
  }
  return table;
}

/// Index permutation sending each character to its inverse (the character
/// of the dual module). An involution.
template <class F>
std::vector<long long> dual_involution(const CharacterTable<F>& table) {
  std::vector<long long> tau(table.alpha);
  for (long long b = 0; b < table.alpha; ++b) {
    long long idx = 0;
    for (int i = 0; i < table.group.rank(); ++i) {
      const long long m = table.reduced_orders[i];
      idx = idx * m + (m - table.exponents[b][i]) % m;
    }
    tau[b] = idx;
  }
  return tau;
}

/// Memoized simple modules of symmetric groups over a fixed field.
template <class F>
class IrreducibleCache {
 public:
  explicit IrreducibleCache(F field) : field_(std::move(field)) {}

  const MatrixRep<F>& get(const Partition& lam) {
    auto it = cache_.find(lam);
    if (it == cache_.end())
      it = cache_.emplace(lam, irreducible_D(lam, field_)).first;
    return it->second;
  }

 private:
  F field_;
  std::map<Partition, MatrixRep<F>> cache_;
};

/// Irreducible module of G wr S_n labeled by one p-regular partition per
/// character of G: the tensor product of the characters (on base
/// coordinates grouped in blocks) with the matching simple symmetric group
/// modules, induced from the block stabilizer up to the full wreath
/// product. Basis: minimal coset representatives (permutations increasing
/// on each block) tensor the product basis of the block modules.
template <class F>
MatrixRep<F> c_module(const Multipartition& mp, const CharacterTable<F>& table,
                      IrreducibleCache<F>* cache = nullptr) {
  const F& field = table.field;
  if (static_cast<long long>(mp.alpha()) != table.alpha)
    throw std::invalid_argument(
        "label needs one partition per character of the group");
  const int alpha = mp.alpha();
  const int n = mp.level();
  const int r = table.group.rank();

  std::vector<int> sizes(alpha), offsets(alpha);
  for (int b = 0; b < alpha; ++b) {
    sizes[b] = mp.comps[b].size();
    offsets[b] = b ? offsets[b - 1] + sizes[b - 1] : 0;
  }
  std::vector<int> block_of(n);
  for (int b = 0; b < alpha; ++b)
    for (int i = 0; i < sizes[b]; ++i) block_of[offsets[b] + i] = b;

  std::vector<MatrixRep<F>> parts;
  for (int b = 0; b < alpha; ++b)
    parts.push_back(cache ? cache->get(mp.comps[b])
                          : irreducible_D(mp.comps[b], field));

  int dim_u = 1;
  for (const auto& part : parts) dim_u *= part.degree;

  // cosets as block assignments: assign[v] = block receiving value v+1
  std::vector<int> assign;
  for (int b = 0; b < alpha; ++b)
    assign.insert(assign.end(), static_cast<std::size_t>(sizes[b]), b);
  std::vector<detail::Perm> cosets;
  std::map<std::vector<int>, int> coset_index;
  std::sort(assign.begin(), assign.end());
  if (n > 0) {
    do {
      detail::Perm d(n);
      std::vector<int> next = offsets;
      for (int v = 0; v < n; ++v) d[next[assign[v]]++] = v;
      coset_index[assign] = static_cast<int>(cosets.size());
      cosets.push_back(std::move(d));
    } while (std::next_permutation(assign.begin(), assign.end()));
  } else {
    coset_index[{}] = 0;
    cosets.push_back({});
  }
  if (static_cast<long long>(cosets.size()) != multinomial(n, sizes))
    throw std::logic_error("coset enumeration miscounted");

  const int ncosets = static_cast<int>(cosets.size());
  const int degree = ncosets * dim_u;
  MatrixRep<F> rep{field, table.group, n, degree, {}, {}};
  if (n == 0) {
    check_relations(rep);
    return rep;
  }

  for (int i = 0; i < r; ++i) {
    Matrix<F> m(field, degree, degree);
    for (int c = 0; c < ncosets; ++c) {
      const auto dinv = detail::perm_inverse(cosets[c]);
      const auto scalar = table.values[block_of[dinv[0]]][i];
      for (int u = 0; u < dim_u; ++u)
        m.at(c * dim_u + u, c * dim_u + u) = scalar;
    }
    rep.base_gens.push_back(std::move(m));
  }

  for (int j = 0; j < n - 1; ++j) {
    Matrix<F> m(field, degree, degree);
    for (int c = 0; c < ncosets; ++c) {
      // s_j d = d' pi with d' a minimal representative and pi block-preserving
      detail::Perm w = cosets[c];
      for (auto& v : w) {
        if (v == j)
          v = j + 1;
        else if (v == j + 1)
          v = j;
      }
      detail::Perm dprime = w;
      for (int b = 0; b < alpha; ++b)
        std::sort(dprime.begin() + offsets[b],
                  dprime.begin() + offsets[b] + sizes[b]);
      std::vector<int> target_assign(n);
      for (int pos = 0; pos < n; ++pos)
        target_assign[dprime[pos]] = block_of[pos];
      const int cprime = coset_index.at(target_assign);
      const auto pi = detail::compose(detail::perm_inverse(dprime), w);

      Matrix<F> block = Matrix<F>::identity(field, 1);
      for (int b = 0; b < alpha; ++b) {
        Matrix<F> local = Matrix<F>::identity(field, parts[b].degree);
        detail::Perm pi_local(sizes[b]);
        for (int q = 0; q < sizes[b]; ++q) {
          pi_local[q] = pi[offsets[b] + q] - offsets[b];
          if (pi_local[q] < 0 || pi_local[q] >= sizes[b])
            throw std::logic_error("coset factor is not block-preserving");
        }
        for (int adj : detail::adjacent_word(pi_local))
          local = local * parts[b].sym_gens[adj];
        block = detail::kron(block, local);
      }

      for (int u = 0; u < dim_u; ++u)
        for (int v = 0; v < dim_u; ++v)
          if (!field.is_zero(block.at(u, v)))
            m.at(cprime * dim_u + u, c * dim_u + v) = block.at(u, v);
    }
    rep.sym_gens.push_back(std::move(m));
  }

  check_relations(rep);
  return rep;
}

}  // namespace modbranch
