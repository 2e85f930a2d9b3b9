#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modbranch/matrix.hpp"
#include "modbranch/partition.hpp"
#include "modbranch/rep.hpp"

namespace modbranch {

/// Standard tableaux of shape lam (rows increasing rightwards, columns
/// increasing downwards), as lists of rows holding the values 1..n.
/// Built by peeling the largest value off a removable node, nodes taken
/// bottom left to top right.
inline std::vector<std::vector<std::vector<int>>> standard_tableaux(
    const Partition& lam) {
  const int n = lam.size();
  if (n == 0) return {{}};
  std::vector<std::vector<std::vector<int>>> out;
  for (Node a : removable_nodes(lam)) {
    std::vector<int> smaller = lam.parts();
    if (--smaller[a.row - 1] == 0) smaller.pop_back();
    for (auto sub : standard_tableaux(Partition(std::move(smaller)))) {
      if (static_cast<int>(sub.size()) < a.row) sub.push_back({});
      sub[a.row - 1].push_back(n);
      out.push_back(std::move(sub));
    }
  }
  return out;
}

/// Number of standard tableaux by the hook length formula.
inline long long standard_tableau_count(const Partition& lam) {
  const int n = lam.size();
  if (n > 20)
    throw std::invalid_argument("partition too large for an exact tableau count");
  const Partition conj = lam.conjugate();
  long long fact = 1;
  for (int v = 2; v <= n; ++v) fact *= v;
  long long hooks = 1;
  for (int r = 1; r <= lam.rows(); ++r)
    for (int c = 1; c <= lam.part(r); ++c)
      hooks *= lam.part(r) - c + conj.part(c) - r + 1;
  return fact / hooks;
}

template <class F>
struct SpechtData {
  Partition lambda;
  MatrixRep<F> rep;  // action of s_1..s_{n-1} on the standard polytabloids
  Matrix<F> gram;    // invariant bilinear form on the same basis
  std::vector<std::vector<std::vector<int>>> tableaux;
};

namespace detail {

/// All permutations of the values in vals, paired with their signs.
inline std::vector<std::pair<std::vector<int>, int>> signed_permutations(
    std::vector<int> vals) {
  std::sort(vals.begin(), vals.end());
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < vals.size(); ++i)
      for (std::size_t j = i + 1; j < vals.size(); ++j)
        if (vals[i] > vals[j]) ++inversions;
    out.push_back({vals, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(vals.begin(), vals.end()));
  return out;
}

}  // namespace detail

/// Specht module of shape lam over F on its standard polytabloid basis.
/// Polytabloids are expanded in the tabloid space; generator matrices are
/// recovered by solving back against the basis expansion.
template <class F>
SpechtData<F> specht_module(const Partition& lam, const F& field) {
  const int n = lam.size();
  const int rows = lam.rows();

  // tabloids: value -> row maps with the right row multiplicities
  std::vector<int> row_of;
  for (int r = 0; r < rows; ++r)
    row_of.insert(row_of.end(), static_cast<std::size_t>(lam.parts()[r]), r);
  std::sort(row_of.begin(), row_of.end());
  std::vector<std::vector<int>> tabloids;
  std::map<std::vector<int>, int> tabloid_index;
  do {
    tabloid_index[row_of] = static_cast<int>(tabloids.size());
    tabloids.push_back(row_of);
  } while (std::next_permutation(row_of.begin(), row_of.end()));

  const auto tableaux = standard_tableaux(lam);
  const int dim = static_cast<int>(tableaux.size());
  const int tcount = static_cast<int>(tabloids.size());

  // per-column signed permutations, shared across tableaux of equal columns
  const Partition conj = lam.conjugate();

  Matrix<F> expansion(field, tcount, dim);
  for (int k = 0; k < dim; ++k) {
    const auto& t = tableaux[k];
    std::vector<int> t_row_of(n);
    for (std::size_t r = 0; r < t.size(); ++r)
      for (int v : t[r]) t_row_of[v - 1] = static_cast<int>(r);

    std::vector<std::vector<std::pair<std::vector<int>, int>>> column_perms;
    std::vector<std::vector<int>> column_vals;
    for (int c = 1; c <= lam.part(1); ++c) {
      std::vector<int> vals;
      for (int r = 1; r <= conj.part(c); ++r) vals.push_back(t[r - 1][c - 1]);
      column_perms.push_back(detail::signed_permutations(vals));
      std::sort(vals.begin(), vals.end());
      column_vals.push_back(std::move(vals));
    }

    // odometer over the column group
    std::vector<std::size_t> pick(column_perms.size(), 0);
    for (;;) {
      std::vector<int> sigma(n);
      for (int v = 0; v < n; ++v) sigma[v] = v;
      int sign = 1;
      for (std::size_t c = 0; c < column_perms.size(); ++c) {
        const auto& [perm, s] = column_perms[c][pick[c]];
        sign *= s;
        for (std::size_t i = 0; i < perm.size(); ++i)
          sigma[column_vals[c][i] - 1] = perm[i] - 1;
      }
      std::vector<int> image(n);
      for (int v = 0; v < n; ++v) image[sigma[v]] = t_row_of[v];
      const int idx = tabloid_index.at(image);
      auto& cell = expansion.at(idx, k);
      cell = sign > 0 ? field.add(cell, field.one())
                      : field.sub(cell, field.one());

      std::size_t c = 0;
      while (c < pick.size() && ++pick[c] == column_perms[c].size())
        pick[c++] = 0;
      if (c == pick.size()) break;
    }
  }

  SpechtData<F> data{lam,
                     MatrixRep<F>{field, GroupSpec(), n, dim, {}, {}},
                     expansion.transpose() * expansion,
                     tableaux};

  for (int j = 1; j <= n - 1; ++j) {
    // s_j swaps the values j and j+1 in every tabloid
    Matrix<F> moved(field, tcount, dim);
    for (int i = 0; i < tcount; ++i) {
      std::vector<int> swapped = tabloids[i];
      std::swap(swapped[j - 1], swapped[j]);
      const int target = tabloid_index.at(swapped);
      for (int k = 0; k < dim; ++k) moved.at(target, k) = expansion.at(i, k);
    }
    auto coords = solve(expansion, moved);
    if (!coords)
      throw std::logic_error("polytabloid expansion failed to solve back");
    data.rep.sym_gens.push_back(std::move(*coords));
  }

  check_relations(data.rep);
  return data;
}

/// Simple head of the Specht module: quotient by the radical of the
/// bilinear form. Defined for p-regular lam; over characteristic 0 the
/// form is nondegenerate and the Specht module is returned unchanged.
template <class F>
MatrixRep<F> irreducible_D(const Partition& lam, const F& field) {
  if (!is_l_regular(lam, field.characteristic()))
    throw std::invalid_argument("partition " + lam.text() + " is not " +
                                std::to_string(field.characteristic()) +
                                "-regular");
  auto data = specht_module(lam, field);
  const auto radical = nullspace(data.gram);
  if (radical.empty()) return data.rep;

  const int dim = data.rep.degree;
  Matrix<F> rad_rows(field, static_cast<int>(radical.size()), dim);
  for (std::size_t r = 0; r < radical.size(); ++r)
    for (int j = 0; j < dim; ++j) rad_rows.at(static_cast<int>(r), j) = radical[r][j];
  const auto pivots = detail::reduced_row_echelon(rad_rows);

  std::vector<bool> is_pivot(dim, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> kept;
  for (int j = 0; j < dim; ++j)
    if (!is_pivot[j]) kept.push_back(j);
  const int qdim = static_cast<int>(kept.size());

  // reduction maps a pivot coordinate to minus the rest of its radical row;
  // injection includes the kept coordinates
  Matrix<F> reduction(field, qdim, dim);
  Matrix<F> injection(field, dim, qdim);
  for (int c = 0; c < qdim; ++c) {
    reduction.at(c, kept[c]) = field.one();
    injection.at(kept[c], c) = field.one();
  }
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (int c = 0; c < qdim; ++c)
      reduction.at(c, pivots[r]) =
          field.neg(rad_rows.at(static_cast<int>(r), kept[c]));

  MatrixRep<F> rep{field, GroupSpec(), data.rep.n, qdim, {}, {}};
  for (const auto& g : data.rep.sym_gens)
    rep.sym_gens.push_back(reduction * g * injection);
  check_relations(rep);
  return rep;
}

}  // namespace modbranch
