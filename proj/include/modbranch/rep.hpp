#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "modbranch/matrix.hpp"

namespace modbranch {

/// Finite abelian group given by invariant factors m_1 | m_2 | ... | m_r,
/// each >= 2. The empty list is the trivial group.
class GroupSpec {
 public:
  GroupSpec() = default;

  explicit GroupSpec(std::vector<long long> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] < 2)
        throw std::invalid_argument("invariant factors must be >= 2");
      if (i > 0 && factors_[i] % factors_[i - 1] != 0)
        throw std::invalid_argument("each invariant factor must divide the next");
    }
  }

  const std::vector<long long>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }

  long long order() const {
    long long o = 1;
    for (long long m : factors_) o *= m;
    return o;
  }

  /// "1" is the trivial group; otherwise comma-separated factors, e.g. "2,4".
  std::string text() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(factors_[i]);
    }
    return s;
  }

  static GroupSpec parse(const std::string& s) {
    if (s.empty() || s == "1") return GroupSpec();
    if (s.back() == ',') throw std::invalid_argument("malformed group: " + s);
    std::vector<long long> factors;
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      const std::string tok = s.substr(pos, next - pos);
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed group: " + s);
      }
      if (tok.empty() || used != tok.size())
        throw std::invalid_argument("malformed group: " + s);
      factors.push_back(v);
      pos = next + 1;
    }
    return GroupSpec(std::move(factors));
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<long long> factors_;
};

/// Matrix representation of the wreath product of an abelian group G with
/// the symmetric group S_n, recorded on the standard generators: t_i acts
/// as the i-th generator of G in the first coordinate (absent when n = 0),
/// s_j swaps coordinates j and j+1.
template <class F>
struct MatrixRep {
  F field;
  GroupSpec group;
  int n = 0;
  int degree = 0;
  std::vector<Matrix<F>> base_gens;  // t_1 .. t_r, only when n >= 1
  std::vector<Matrix<F>> sym_gens;   // s_1 .. s_{n-1}

  std::vector<Matrix<F>> all_gens() const {
    std::vector<Matrix<F>> gens = base_gens;
    gens.insert(gens.end(), sym_gens.begin(), sym_gens.end());
    return gens;
  }
};

/// Verifies the defining relations of G wr S_n on the generator matrices;
/// throws std::logic_error naming the first violated relation.
template <class F>
void check_relations(const MatrixRep<F>& rep) {
  const int expected_base = rep.n >= 1 ? rep.group.rank() : 0;
  if (static_cast<int>(rep.base_gens.size()) != expected_base)
    throw std::logic_error("wrong number of base group generators");
  if (static_cast<int>(rep.sym_gens.size()) != std::max(0, rep.n - 1))
    throw std::logic_error("wrong number of symmetric group generators");
  for (const auto& g : rep.all_gens())
    if (g.rows() != rep.degree || g.cols() != rep.degree)
      throw std::logic_error("generator degree mismatch");

  const auto& t = rep.base_gens;
  const auto& s = rep.sym_gens;

  for (std::size_t i = 0; i < t.size(); ++i)
    if (!t[i].pow(rep.group.factors()[i]).is_identity())
      throw std::logic_error("base generator order relation fails");
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i] * t[j] != t[j] * t[i])
        throw std::logic_error("base generators do not commute");

  for (std::size_t j = 0; j < s.size(); ++j)
    if (!(s[j] * s[j]).is_identity())
      throw std::logic_error("transposition is not an involution");
  for (std::size_t j = 0; j + 1 < s.size(); ++j)
    if (s[j] * s[j + 1] * s[j] != s[j + 1] * s[j] * s[j + 1])
      throw std::logic_error("braid relation fails");
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t l = j + 2; l < s.size(); ++l)
      if (s[j] * s[l] != s[l] * s[j])
        throw std::logic_error("distant transpositions do not commute");

  // s_j moves coordinates j, j+1; for j >= 2 it fixes coordinate 1
  for (std::size_t j = 1; j < s.size(); ++j)
    for (const auto& ti : t)
      if (s[j] * ti != ti * s[j])
        throw std::logic_error("transposition fails to fix the first coordinate");
  // s_1 t_i s_1 acts in coordinate 2, so it commutes with every t_i'
  if (!s.empty())
    for (const auto& ti : t)
      for (const auto& tj : t) {
        const auto conj = s[0] * ti * s[0];
        if (conj * tj != tj * conj)
          throw std::logic_error("conjugated base generator fails to commute");
      }
}

/// Forgets the last coordinate: drops s_{n-1}, and for n = 1 the base
/// generators as well (the target group is trivial).
template <class F>
MatrixRep<F> restrict_rep(const MatrixRep<F>& rep) {
  if (rep.n < 1) throw std::invalid_argument("cannot restrict below n = 0");
  MatrixRep<F> out = rep;
  out.n = rep.n - 1;
  if (out.n == 0) {
    out.base_gens.clear();
    out.sym_gens.clear();
  } else {
    out.sym_gens.pop_back();
  }
  return out;
}

/// Contragredient: every generator g goes to the transpose of g^{-1}.
template <class F>
MatrixRep<F> dual(const MatrixRep<F>& rep) {
  MatrixRep<F> out = rep;
  for (auto& g : out.base_gens) g = inverse(g).transpose();
  for (auto& g : out.sym_gens) g = inverse(g).transpose();
  return out;
}

/// dim Hom(W, V): dimension of {X : X W(g) = V(g) X} over the shared
/// generator set. Representations of the trivial group (n = 0) have no
/// generators and every matrix intertwines.
template <class F>
int hom_dim(const MatrixRep<F>& w, const MatrixRep<F>& v) {
  if (!(w.field == v.field))
    throw std::invalid_argument("hom_dim requires a common field");
  if (w.group != v.group || w.n != v.n)
    throw std::invalid_argument("hom_dim requires a common group");
  const auto wg = w.all_gens();
  const auto vg = v.all_gens();
  if (wg.empty()) return w.degree * v.degree;
  std::vector<std::pair<Matrix<F>, Matrix<F>>> pairs;
  pairs.reserve(wg.size());
  for (std::size_t i = 0; i < wg.size(); ++i) pairs.emplace_back(wg[i], vg[i]);
  return intertwiner_dim(pairs);
}

}  // namespace modbranch
