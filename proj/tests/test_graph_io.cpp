#include <catch2/catch_amalgamated.hpp>

#include "json.hpp"
#include "modbranch/graph_io.hpp"

using namespace modbranch;

TEST_CASE("json export of an empty graph") {
  const LeveledDigraph g(1, 0);
  CHECK(export_json(g) ==
        "{\"alpha\":1,\"max_level\":0,\"vertices\":[],\"edges\":[]}");
}

TEST_CASE("json export lists labels as part arrays and edges as text") {
  CHECK(export_json(young_lattice(1)) ==
        "{\"alpha\":1,\"max_level\":1,"
        "\"vertices\":[{\"label\":[[]],\"level\":0},"
        "{\"label\":[[1]],\"level\":1}],"
        "\"edges\":[[\"0\",\"1\"]]}");
}

TEST_CASE("json export round trips through a parser") {
  const auto g = predicted_branching_graph(2, 2, 3);
  const auto j = nlohmann::json::parse(export_json(g));
  CHECK(j["alpha"] == 2);
  CHECK(j["max_level"] == 3);
  CHECK(j["vertices"].size() == g.vertex_count());
  CHECK(j["edges"].size() == g.edge_count());
  for (const auto& v : j["vertices"]) {
    CHECK(v["label"].size() == 2);
    int total = 0;
    for (const auto& comp : v["label"])
      for (const auto& part : comp) total += part.get<int>();
    CHECK(total == v["level"].get<int>());
  }
}

TEST_CASE("dot export of a single vertex graph") {
  CHECK(export_dot(young_lattice(0)) ==
        "digraph branching {\n"
        "  rankdir=BT;\n"
        "  \"0\";\n"
        "}\n");
}

TEST_CASE("dot export quotes multipartition labels") {
  const auto dot = export_dot(predicted_branching_graph(2, 2, 1));
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("\"(0)|(0)\";") != std::string::npos);
  CHECK(dot.find("\"(1)|(0)\";") != std::string::npos);
  CHECK(dot.find("\"(0)|(0)\" -> \"(0)|(1)\";") != std::string::npos);
}

TEST_CASE("exports are deterministic and reject unknown formats") {
  const auto g = crystal_graph(3, 4);
  CHECK(export_graph(g, "json") == export_graph(g, "json"));
  CHECK(export_graph(g, "dot") == export_graph(g, "dot"));
  CHECK(export_graph(g, "json") == export_json(g));
  CHECK_THROWS_AS(export_graph(g, "svg"), std::invalid_argument);
}
