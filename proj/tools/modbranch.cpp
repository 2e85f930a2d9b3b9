#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "modbranch/graph_io.hpp"
#include "modbranch/oracle.hpp"
#include "modbranch/specht.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kField = 3;
constexpr int kGuard = 4;

using namespace modbranch;

/// Minimal extension degree over GF(p) containing all needed roots of
/// unity for the group; 1 for the rationals (splitting is checked later).
long long resolve_degree(const GroupSpec& group, long long p,
                         const std::string& k_text) {
  if (k_text != "auto") {
    std::size_t used = 0;
    long long k = 0;
    try {
      k = std::stoll(k_text, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("k must be \"auto\" or a positive integer");
    }
    if (used != k_text.size() || k < 1)
      throw std::invalid_argument("k must be \"auto\" or a positive integer");
    return k;
  }
  if (p == 0) return 1;
  long long k = 1;
  for (long long m : group.factors()) {
    while (m % p == 0) m /= p;
    k = std::lcm(k, detail::multiplicative_order(p, m));
  }
  return k;
}

std::string joined_counts(const std::vector<std::size_t>& counts) {
  std::string s;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(counts[i]);
  }
  return s;
}

void print_graph_table(const std::string& title, const LeveledDigraph& g) {
  std::cout << title << "\n";
  std::cout << "vertices by level: " << joined_counts(g.level_counts()) << "\n";
  std::cout << "vertices = " << g.vertex_count() << "\n";
  std::cout << "edges = " << g.edge_count() << "\n";
  for (int n = 0; n <= g.max_level(); ++n) {
    std::cout << "level " << n << ":";
    for (const auto& v : g.vertices())
      if (v.level() == n) std::cout << ' ' << v.text();
    std::cout << "\n";
  }
  std::size_t width = 0;
  for (const auto& e : g.edges()) width = std::max(width, e.first.text().size());
  for (const auto& e : g.edges()) {
    const std::string from = e.first.text();
    std::cout << "  " << from << std::string(width - from.size(), ' ')
              << " -> " << e.second.text() << "\n";
  }
}

int run_crystal(long long p, int alpha, int levels, const std::string& format) {
  const auto g = predicted_branching_graph(p, alpha, levels);
  if (format == "table") {
    print_graph_table("predicted branching graph: p=" + std::to_string(p) +
                          ", alpha=" + std::to_string(alpha) + ", levels 0.." +
                          std::to_string(levels),
                      g);
  } else {
    std::cout << export_graph(g, format);
  }
  return kOk;
}

template <class F>
int run_specht_field(const Partition& lam, const F& field) {
  const auto data = specht_module(lam, field);
  std::cout << "lambda = " << lam.text() << "\n";
  std::cout << "field = " << field.name() << "\n";
  std::cout << "dim S = " << data.rep.degree << "\n";
  std::cout << "gram rank = " << rank(data.gram) << "\n";
  if (is_l_regular(lam, field.characteristic()))
    std::cout << "dim D = " << rank(data.gram) << "\n";
  else
    std::cout << "dim D = not " << field.characteristic() << "-regular\n";
  return kOk;
}

template <class F>
int run_oracle_field(const GroupSpec& group, const F& field, int max_n,
                     long long guard, const std::string& format) {
  if (format == "table") {
    const auto entries = oracle_hom_table(group, field, max_n, guard);
    const auto alpha = characters(group, field).alpha;
    std::cout << "oracle Hom table: group=" << group.text()
              << ", field=" << field.name() << ", alpha=" << alpha
              << ", levels 0.." << max_n << "\n";
    std::size_t wf = 0, wt = 0;
    for (const auto& e : entries) {
      wf = std::max(wf, e.from.text().size());
      wt = std::max(wt, e.to.text().size());
    }
    for (const auto& e : entries) {
      const std::string from = e.from.text(), to = e.to.text();
      std::cout << "  " << from << std::string(wf - from.size(), ' ')
                << " -> " << to << std::string(wt - to.size(), ' ')
                << " : " << e.dim << "\n";
    }
    return kOk;
  }
  const auto g = oracle_branching_graph(group, field, max_n, guard);
  std::cout << export_graph(g, format);
  return kOk;
}

template <class F>
int run_verify_field(const GroupSpec& group, const F& field, int max_n,
                     long long guard) {
  const auto table = characters(group, field);
  const auto predicted = predicted_branching_graph(
      field.characteristic(), static_cast<int>(table.alpha), max_n);
  const auto computed = oracle_branching_graph(group, field, max_n, guard);

  std::cout << "field = " << field.name() << ", group = " << group.text()
            << ", alpha = " << table.alpha << ", levels 0.." << max_n << "\n";
  std::cout << "predicted: " << predicted.vertex_count() << " vertices, "
            << predicted.edge_count() << " edges\n";
  std::cout << "oracle:    " << computed.vertex_count() << " vertices, "
            << computed.edge_count() << " edges\n";

  const auto diff = graphs_equal_on_labels(predicted, computed);
  if (diff.equal) {
    std::cout << "verified: oracle branching graph matches the prediction\n";
    return kOk;
  }
  std::cout << diff.report();
  std::cout << "MISMATCH: oracle branching graph differs from the prediction\n";
  return kMismatch;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const FieldError& e) {
    std::cerr << "field error: " << e.what() << "\n";
    if (e.suggested_degree > 0)
      std::cerr << "use --k " << e.suggested_degree << "\n";
    return kField;
  } catch (const CostGuardError& e) {
    std::cerr << "cost guard: " << e.what() << " (raise --guard to proceed)\n";
    return kGuard;
  } catch (const MultiplicityError& e) {
    std::cout << "MISMATCH: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "predicted and computed modular branching graphs for symmetric groups "
      "and wreath products"};
  app.require_subcommand(1);

  long long p = 0;
  int alpha = 1;
  int levels = 0;
  long long guard = 200;
  std::string k_text = "auto";
  std::string format = "table";
  std::string group_text = "1";
  std::string lambda_text;
  int result = kOk;

  auto* crystal = app.add_subcommand(
      "crystal", "emit the predicted branching graph from the crystal rule");
  crystal->add_option("--p", p, "characteristic / residue modulus (0 or >= 2)")
      ->required();
  crystal->add_option("--alpha", alpha, "number of components")
      ->default_val(1);
  crystal->add_option("--levels,--max-n", levels, "largest level")->required();
  crystal->add_option("--format", format, "table, dot, or json")
      ->default_val("table");
  crystal->callback([&] {
    result = guarded([&] { return run_crystal(p, alpha, levels, format); });
  });

  auto* specht = app.add_subcommand(
      "specht", "dimensions of a Specht module and its simple quotient");
  specht->add_option("--lambda", lambda_text, "partition, e.g. 3,1 (0 = empty)")
      ->required();
  specht->add_option("--p", p, "field characteristic (0 or a prime)")
      ->required();
  specht->add_option("--k", k_text, "field extension degree or \"auto\"")
      ->default_val("auto");
  specht->callback([&] {
    result = guarded([&] {
      const Partition lam = Partition::parse(lambda_text);
      const auto field =
          make_field(p, static_cast<int>(resolve_degree(GroupSpec(), p, k_text)));
      return std::visit(
          [&](const auto& f) { return run_specht_field(lam, f); }, field);
    });
  });

  auto* oracle = app.add_subcommand(
      "branch-oracle",
      "Hom dimensions between consecutive levels, computed from the modules");
  oracle->add_option("--group", group_text,
                     "invariant factors of the base group (1 = trivial)")
      ->default_val("1");
  oracle->add_option("--p", p, "field characteristic (0 or a prime)")
      ->required();
  oracle->add_option("--k", k_text, "field extension degree or \"auto\"")
      ->default_val("auto");
  oracle->add_option("--levels,--max-n", levels, "largest level")->required();
  oracle->add_option("--format", format, "table, dot, or json")
      ->default_val("table");
  oracle->add_option("--guard", guard, "per-level total degree bound")
      ->default_val(200);
  oracle->callback([&] {
    result = guarded([&] {
      const GroupSpec group = GroupSpec::parse(group_text);
      const auto field =
          make_field(p, static_cast<int>(resolve_degree(group, p, k_text)));
      return std::visit(
          [&](const auto& f) {
            return run_oracle_field(group, f, levels, guard, format);
          },
          field);
    });
  });

  auto* verify = app.add_subcommand(
      "verify", "compare the oracle branching graph against the prediction");
  verify->add_option("--group", group_text,
                     "invariant factors of the base group (1 = trivial)")
      ->default_val("1");
  verify->add_option("--p", p, "field characteristic (0 or a prime)")
      ->required();
  verify->add_option("--k", k_text, "field extension degree or \"auto\"")
      ->default_val("auto");
  verify->add_option("--levels,--max-n", levels, "largest level")->required();
  verify->add_option("--guard", guard, "per-level total degree bound")
      ->default_val(200);
  verify->callback([&] {
    result = guarded([&] {
      const GroupSpec group = GroupSpec::parse(group_text);
      const auto field =
          make_field(p, static_cast<int>(resolve_degree(group, p, k_text)));
      return std::visit(
          [&](const auto& f) { return run_verify_field(group, f, levels, guard); },
          field);
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return result;
}
