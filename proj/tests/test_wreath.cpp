#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "modbranch/oracle.hpp"
#include "modbranch/wreath.hpp"

using namespace modbranch;

namespace {

Multipartition mp(std::vector<std::vector<int>> comps) {
  std::vector<Partition> parts;
  for (auto& c : comps) parts.emplace_back(std::move(c));
  return Multipartition(std::move(parts));
}

int inversions(const detail::Perm& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

detail::Perm adjacent(int n, int j) {
  detail::Perm s(n);
  std::iota(s.begin(), s.end(), 0);
  std::swap(s[j], s[j + 1]);
  return s;
}

}  // namespace

TEST_CASE("multinomial coefficients") {
  CHECK(multinomial(3, {2, 1}) == 3);
  CHECK(multinomial(0, {}) == 1);
  CHECK(multinomial(4, {2, 2}) == 6);
  CHECK(multinomial(4, {0, 4, 0}) == 1);
  CHECK(multinomial(6, {1, 2, 3}) == 60);
  CHECK_THROWS_AS(multinomial(5, {2, 2}), std::invalid_argument);
}

TEST_CASE("adjacent transposition words reconstruct every permutation") {
  detail::Perm p(4);
  std::iota(p.begin(), p.end(), 0);
  do {
    const auto word = detail::adjacent_word(p);
    detail::Perm q(4);
    std::iota(q.begin(), q.end(), 0);
    for (int j : word) q = detail::compose(q, adjacent(4, j));
    CHECK(q == p);
    CHECK(static_cast<int>(word.size()) % 2 == inversions(p) % 2);
    CHECK(detail::compose(p, detail::perm_inverse(p)) ==
          detail::Perm{0, 1, 2, 3});
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("character tables over various fields") {
  const auto trivial = characters(GroupSpec(), PrimePowerField(2, 1));
  CHECK(trivial.alpha == 1);
  CHECK(trivial.exponents == std::vector<std::vector<long long>>{{}});

  const PrimePowerField f3(3, 1);
  const auto z2f3 = characters(GroupSpec({2}), f3);
  CHECK(z2f3.alpha == 2);
  CHECK(z2f3.values[0][0] == f3.one());
  CHECK(z2f3.values[1][0] == f3.from_int(2));

  // the order 2 part dies in characteristic 2
  CHECK(characters(GroupSpec({2}), PrimePowerField(2, 1)).alpha == 1);
  CHECK(characters(GroupSpec({3}), f3).alpha == 1);
  CHECK(characters(GroupSpec({6}), f3).alpha == 2);

  const PrimePowerField f4(2, 2);
  const auto z3f4 = characters(GroupSpec({3}), f4);
  CHECK(z3f4.alpha == 3);
  CHECK(f4.to_text(z3f4.values[0][0]) == "[1,0]");
  CHECK(f4.to_text(z3f4.values[1][0]) == "[0,1]");
  CHECK(f4.to_text(z3f4.values[2][0]) == "[1,1]");

  const PrimePowerField f5(5, 1);
  const auto big = characters(GroupSpec({2, 4}), f5);
  CHECK(big.alpha == 8);
  CHECK(big.reduced_orders == std::vector<long long>{2, 4});
  CHECK(big.exponents[1] == std::vector<long long>{0, 1});
  CHECK(big.values[1][0] == f5.one());
  CHECK(big.values[1][1] == f5.from_int(2));
  CHECK(big.exponents[4] == std::vector<long long>{1, 0});

  const RationalField q;
  const auto z2q = characters(GroupSpec({2}), q);
  CHECK(z2q.values[0][0] == q.one());
  CHECK(z2q.values[1][0] == q.from_int(-1));
}

TEST_CASE("character rows are pairwise distinct") {
  auto all_distinct = [](const auto& table) {
    std::set<std::vector<std::string>> seen;
    for (const auto& row : table.values) {
      std::vector<std::string> texts;
      for (const auto& v : row) texts.push_back(table.field.to_text(v));
      seen.insert(texts);
    }
    return seen.size() == static_cast<std::size_t>(table.alpha);
  };
  CHECK(all_distinct(characters(GroupSpec({2, 4}), PrimePowerField(5, 1))));
  CHECK(all_distinct(characters(GroupSpec({3}), PrimePowerField(2, 2))));
  CHECK(all_distinct(characters(GroupSpec({7}), PrimePowerField(2, 3))));
}

TEST_CASE("non split situations raise field errors") {
  CHECK_THROWS_AS(characters(GroupSpec({3}), RationalField()), FieldError);
  try {
    characters(GroupSpec({6}), PrimePowerField(5, 1));
    FAIL("expected a field error");
  } catch (const FieldError& e) {
    CHECK(e.suggested_degree == 2);
  }
  CHECK(characters(GroupSpec({6}), PrimePowerField(5, 2)).alpha == 6);
}

TEST_CASE("dual involution on character indices") {
  const auto z2f3 = characters(GroupSpec({2}), PrimePowerField(3, 1));
  CHECK(dual_involution(z2f3) == std::vector<long long>{0, 1});

  const auto z3f4 = characters(GroupSpec({3}), PrimePowerField(2, 2));
  CHECK(dual_involution(z3f4) == std::vector<long long>{0, 2, 1});

  const auto big = characters(GroupSpec({2, 4}), PrimePowerField(5, 1));
  const auto tau = dual_involution(big);
  for (long long b = 0; b < big.alpha; ++b) {
    CHECK(tau[tau[b]] == b);
    for (int i = 0; i < big.group.rank(); ++i)
      CHECK(big.field.is_zero(big.field.sub(
          big.field.mul(big.values[b][i], big.values[tau[b]][i]),
          big.field.one())));
  }
}

TEST_CASE("wreath modules over the trivial group reduce to symmetric groups") {
  const PrimePowerField f2(2, 1);
  const auto table = characters(GroupSpec(), f2);
  const auto c = c_module(mp({{2, 1}}), table);
  const auto d = irreducible_D(Partition({2, 1}), f2);
  REQUIRE(c.degree == d.degree);
  CHECK(c.base_gens.empty());
  REQUIRE(c.sym_gens.size() == d.sym_gens.size());
  for (std::size_t j = 0; j < d.sym_gens.size(); ++j)
    CHECK(c.sym_gens[j] == d.sym_gens[j]);
}

TEST_CASE("frozen generator matrices for the order two group") {
  const PrimePowerField f3(3, 1);
  const auto table = characters(GroupSpec({2}), f3);

  const auto both = c_module(mp({{1}, {1}}), table);
  REQUIRE(both.degree == 2);
  REQUIRE(both.base_gens.size() == 1);
  const auto& t1 = both.base_gens[0];
  CHECK(t1.at(0, 0) == f3.one());
  CHECK(t1.at(1, 1) == f3.from_int(2));
  CHECK(f3.is_zero(t1.at(0, 1)));
  CHECK(f3.is_zero(t1.at(1, 0)));
  const auto& s1 = both.sym_gens[0];
  CHECK(f3.is_zero(s1.at(0, 0)));
  CHECK(s1.at(0, 1) == f3.one());
  CHECK(s1.at(1, 0) == f3.one());
  CHECK(f3.is_zero(s1.at(1, 1)));

  const auto trivial2 = c_module(mp({{2}, {}}), table);
  REQUIRE(trivial2.degree == 1);
  CHECK(trivial2.base_gens[0].at(0, 0) == f3.one());
  CHECK(trivial2.sym_gens[0].at(0, 0) == f3.one());

  const auto sign2 = c_module(mp({{1, 1}, {}}), table);
  CHECK(sign2.sym_gens[0].at(0, 0) == f3.from_int(2));

  const auto twisted = c_module(mp({{}, {2}}), table);
  CHECK(twisted.base_gens[0].at(0, 0) == f3.from_int(2));
  CHECK(twisted.sym_gens[0].at(0, 0) == f3.one());
}

TEST_CASE("wreath module degrees factor through the block sizes") {
  const PrimePowerField f5(5, 1);
  const auto table = characters(GroupSpec({2}), f5);
  IrreducibleCache<PrimePowerField> cache(f5);
  for (int n = 0; n <= 3; ++n)
    for (const auto& label : regular_multipartitions(n, 2, 5)) {
      const auto c = c_module(label, table, &cache);
      std::vector<int> sizes;
      long long prod = 1;
      for (const auto& comp : label.comps) {
        sizes.push_back(comp.size());
        prod *= irreducible_D(comp, f5).degree;
      }
      CHECK(c.degree == multinomial(n, sizes) * prod);
      CHECK(c.n == n);
    }
}

TEST_CASE("squared degrees account for the whole group algebra") {
  auto square_sum = [](const GroupSpec& g, const auto& field, int n) {
    const auto table = characters(g, field);
    IrreducibleCache<std::decay_t<decltype(field)>> cache(field);
    long long total = 0;
    for (const auto& label : regular_multipartitions(
             n, static_cast<int>(table.alpha),
             static_cast<int>(field.characteristic()))) {
      const long long deg = c_module(label, table, &cache).degree;
      total += deg * deg;
    }
    return total;
  };
  CHECK(square_sum(GroupSpec({2}), PrimePowerField(3, 1), 2) == 8);
  CHECK(square_sum(GroupSpec({2}), PrimePowerField(5, 1), 2) == 8);
  CHECK(square_sum(GroupSpec({3}), PrimePowerField(7, 1), 2) == 18);
  CHECK(square_sum(GroupSpec(), RationalField(), 3) == 6);
}

TEST_CASE("label mismatches are rejected") {
  const PrimePowerField f3(3, 1);
  const auto table = characters(GroupSpec({2}), f3);
  CHECK_THROWS_AS(c_module(mp({{1}}), table), std::invalid_argument);
  CHECK_THROWS_AS(c_module(mp({{1}, {1}, {}}), table), std::invalid_argument);
}

TEST_CASE("duality permutes the labels by inverted characters") {
  const PrimePowerField f4(2, 2);
  const auto table = characters(GroupSpec({3}), f4);
  const auto v = c_module(mp({{}, {1}, {}}), table);
  const auto w = c_module(mp({{}, {}, {1}}), table);
  CHECK(hom_dim(dual(v), w) == 1);
  CHECK(hom_dim(dual(v), v) == 0);

  const PrimePowerField f3(3, 1);
  const auto z2 = characters(GroupSpec({2}), f3);
  const auto self = c_module(mp({{1}, {1}}), z2);
  CHECK(hom_dim(dual(self), self) == 1);
}

TEST_CASE("restriction pairs with duality") {
  const PrimePowerField f3(3, 1);
  const auto table = characters(GroupSpec({2}), f3);
  IrreducibleCache<PrimePowerField> cache(f3);
  for (const auto& big : regular_multipartitions(2, 2, 3)) {
    const auto v = c_module(big, table, &cache);
    for (const auto& small : regular_multipartitions(1, 2, 3)) {
      const auto w = c_module(small, table, &cache);
      CHECK(hom_dim(w, restrict_rep(v)) ==
            hom_dim(restrict_rep(dual(v)), dual(w)));
    }
  }
}

TEST_CASE("every wreath module passes the relation check") {
  const PrimePowerField f4(2, 2);
  const auto table = characters(GroupSpec({3}), f4);
  IrreducibleCache<PrimePowerField> cache(f4);
  for (int n = 0; n <= 3; ++n)
    for (const auto& label : regular_multipartitions(n, 3, 2))
      CHECK_NOTHROW(check_relations(c_module(label, table, &cache)));
}
