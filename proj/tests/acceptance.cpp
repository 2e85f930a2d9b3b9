// End-to-end acceptance checks. Takes the path of the command line tool as
// its only argument, prints one PASS/FAIL line per check, and exits nonzero
// if any check fails.

#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "modbranch/oracle.hpp"
#include "support.hpp"

using namespace modbranch;

namespace {

std::string cli_path;

int run_cli(const std::string& args) {
  const std::string cmd = "\"" + cli_path + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

bool check(bool& all_good, const std::string& name,
           const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::cout << (ok ? "PASS" : "FAIL") << ": " << name << note << "\n";
  if (!ok) all_good = false;
  return ok;
}

bool verify_characteristic_zero() {
  return run_cli("verify --group 1 --p 0 --max-n 4") == 0;
}

bool verify_symmetric_groups() {
  return run_cli("verify --group 1 --p 2 --max-n 5") == 0 &&
         run_cli("verify --group 1 --p 3 --max-n 5") == 0;
}

bool verify_wreath_products() {
  return run_cli("verify --group 2 --p 3 --max-n 3") == 0 &&
         run_cli("verify --group 3 --p 2 --max-n 3") == 0;
}

bool prediction_matches_crystal() {
  for (const long long p : {0LL, 2LL, 3LL, 5LL})
    for (int n = 0; n <= 6; ++n) {
      const auto diff =
          graphs_equal_on_labels(predicted_branching_graph(p, 1, n),
                                 crystal_graph(p, n));
      if (!diff.equal) return false;
    }
  return true;
}

bool signature_reduction_is_canonical(long long l, const Partition& lam,
                                      std::mt19937& rng) {
  std::vector<Residue> residues;
  if (l == 0)
    for (Node a : addable_nodes(lam)) residues.push_back(node_residue(a, 0));
  else
    for (long long i = 0; i < l; ++i) residues.emplace_back(l, i);
  for (const Residue& i : residues) {
    const auto sig = i_signature(lam, i);
    const auto red = reduce_signature(sig);
    bool seen_minus = false;
    for (const auto& e : red) {
      if (e.sign == Sign::minus) seen_minus = true;
      if (seen_minus && e.sign == Sign::plus) return false;
    }
    for (int run = 0; run < 3; ++run)
      if (testsupport::reduce_random_order(sig, rng) != red) return false;
  }
  return true;
}

bool combinatorial_invariants() {
  std::mt19937 rng(46291);

  for (const long long l : {0LL, 2LL, 3LL, 5LL})
    for (int n = 0; n <= 7; ++n)
      for (const auto& lam : partitions_of(n))
        if (!signature_reduction_is_canonical(l, lam, rng)) return false;

  // adding a conormal node preserves regularity
  for (const long long p : {2LL, 3LL, 5LL})
    for (int n = 0; n <= 8; ++n)
      for (const auto& lam : l_regular_partitions_of(n, p))
        for (long long i = 0; i < p; ++i)
          if (const auto next = f_tilde(lam, Residue(p, i)))
            if (!is_l_regular(*next, p)) return false;

  // levels of the convolution count tuples of regular partitions
  for (const long long p : {2LL, 3LL})
    for (const int alpha : {2, 3}) {
      const auto graph = predicted_branching_graph(p, alpha, 4);
      const auto counts = graph.level_counts();
      for (int n = 0; n <= 4; ++n) {
        long long expected = 0;
        std::vector<int> split(static_cast<std::size_t>(alpha), 0);
        const auto rec = [&](auto&& self, int b, int left) -> void {
          if (b == alpha - 1) {
            long long prod = testsupport::l_regular_count(left, p);
            for (int c = 0; c < alpha - 1; ++c)
              prod *= testsupport::l_regular_count(split[c], p);
            expected += prod;
            return;
          }
          for (int s = 0; s <= left; ++s) {
            split[b] = s;
            self(self, b + 1, left - s);
          }
        };
        rec(rec, 0, n);
        if (counts[n] != expected) return false;
      }
    }

  // crystal levels match the independent regular partition count
  for (const long long p : {2LL, 3LL, 5LL}) {
    const auto counts = crystal_graph(p, 6).level_counts();
    for (int n = 0; n <= 6; ++n)
      if (counts[n] != testsupport::l_regular_count(n, p)) return false;
  }
  return true;
}

bool duality_and_restriction_pairings() {
  for (const long long p : {2LL, 3LL}) {
    const PrimePowerField f(p, 1);
    for (int n = 1; n <= 5; ++n)
      for (const auto& lam : l_regular_partitions_of(n, p)) {
        const auto d = irreducible_D(lam, f);
        if (hom_dim(d, dual(d)) != 1) return false;
      }
  }

  auto wreath_checks = [](const GroupSpec& group, const auto& field) {
    const auto table = characters(group, field);
    IrreducibleCache<std::decay_t<decltype(field)>> cache(field);
    const auto p = field.characteristic();
    const int alpha = static_cast<int>(table.alpha);
    std::vector<MatrixRep<std::decay_t<decltype(field)>>> prev;
    for (int n = 0; n <= 3; ++n) {
      std::vector<MatrixRep<std::decay_t<decltype(field)>>> cur;
      for (const auto& label : regular_multipartitions(n, alpha, p)) {
        cur.push_back(c_module(label, table, &cache));
        if (hom_dim(cur.back(), cur.back()) != 1) return false;
      }
      for (const auto& v : cur)
        for (const auto& w : prev) {
          const auto lhs = hom_dim(w, restrict_rep(v));
          const auto rhs = hom_dim(restrict_rep(dual(v)), dual(w));
          if (lhs != rhs) return false;
        }
      prev = std::move(cur);
    }
    return true;
  };
  return wreath_checks(GroupSpec({2}), PrimePowerField(3, 1)) &&
         wreath_checks(GroupSpec({3}), PrimePowerField(2, 2));
}

template <class F>
bool hook_dimension_is(const F& field, int expected) {
  const Partition hook({2, 1});
  return rank(specht_module(hook, field).gram) == expected &&
         irreducible_D(hook, field).degree == expected;
}

bool hook_dimensions() {
  return hook_dimension_is(PrimePowerField(2, 1), 2) &&
         hook_dimension_is(PrimePowerField(3, 1), 1) &&
         hook_dimension_is(RationalField(), 2);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  cli_path = argv[1];

  bool all_good = true;
  check(all_good, "verified branching for symmetric groups over the rationals",
        verify_characteristic_zero);
  check(all_good, "verified branching for symmetric groups at p = 2 and p = 3",
        verify_symmetric_groups);
  check(all_good, "verified branching for wreath products of orders 2 and 3",
        verify_wreath_products);
  check(all_good, "one component prediction equals the crystal construction",
        prediction_matches_crystal);
  check(all_good, "combinatorial invariants of signatures and level counts",
        combinatorial_invariants);
  check(all_good, "duality and restriction pairings",
        duality_and_restriction_pairings);
  check(all_good, "dimensions of the simple module for the hook of size three",
        hook_dimensions);
  return all_good ? 0 : 1;
}
