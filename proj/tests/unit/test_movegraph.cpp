#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "catmoves/graph_io.hpp"
#include "catmoves/movegraph.hpp"
#include "doctest.h"

using namespace catmoves;

namespace {

ErrorCode code_of(const std::function<void()>& call) {
  try {
    call();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

std::set<std::pair<std::uint32_t, std::uint32_t>> edge_pairs(const MoveGraph& graph) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t u = 0; u < graph.vertex_count(); ++u) {
    for (const GraphEdge& edge : graph.neighbors(u)) {
      if (edge.to > u) pairs.emplace(u, edge.to);
    }
  }
  return pairs;
}

}  // namespace

TEST_CASE("the n=2 graphs reproduce the two-vertex picture") {
  const MoveGraph type_a = build_graph(GraphKind::TypeA, 2);
  CHECK(type_a.vertex_count() == 2);
  CHECK(type_a.edge_count() == 1);
  CHECK(type_a.neighbors(0).size() == 1);
  CHECK(type_a.neighbors(0)[0].gen.label() == "s2");
  CHECK(vertex_text(type_a, 0) == "2;(1,4)(2,3)");
  CHECK(vertex_text(type_a, 1) == "2;(1,2)(3,4)");

  const MoveGraph all = build_graph(GraphKind::AllLocalMoves, 2);
  CHECK(all.vertex_count() == 2);
  CHECK(all.edge_count() == 1);
  CHECK(all.neighbors(1)[0].gen.label() == "local");
}

TEST_CASE("adjacency is symmetric with opposite deltas") {
  for (auto kind : {GraphKind::TypeA, GraphKind::TypeC, GraphKind::AllLocalMoves}) {
    const MoveGraph graph = build_graph(kind, 5);
    for (std::uint32_t u = 0; u < graph.vertex_count(); ++u) {
      for (const GraphEdge& edge : graph.neighbors(u)) {
        const GraphEdge reverse{u, edge.gen, -edge.delta};
        const auto back = graph.neighbors(edge.to);
        CHECK(std::find(back.begin(), back.end(), reverse) != back.end());
        CHECK(edge.delta == graph.rank[edge.to] - graph.rank[u]);
      }
    }
  }
}

TEST_CASE("type A edges are unit steps; all-move graphs also carry longer steps") {
  const MoveGraph type_a = build_graph(GraphKind::TypeA, 6);
  CHECK(grading_report(type_a).all_edges_unit_step);

  const MoveGraph all = build_graph(GraphKind::AllLocalMoves, 3);
  const GradingReport report = grading_report(all);
  CHECK_FALSE(report.all_edges_unit_step);  // the star-path move steps by 3
  CHECK(edge_pairs(all).size() == 6);
  CHECK(edge_pairs(build_graph(GraphKind::TypeA, 3)).size() == 5);
}

TEST_CASE("graph construction respects caps and kind checks") {
  BuildOptions options;
  options.caps.max_tree_n = 5;
  CHECK(code_of([&] { build_graph(GraphKind::TypeA, 6, options); }) == ErrorCode::SizeExceedsCap);
  CHECK(code_of([] { build_graph(GraphKind::TableauShape, 3); }) == ErrorCode::WrongGraphKind);
  CHECK(code_of([] { grading_report(build_graph(GraphKind::TypeC, 3)); }) ==
        ErrorCode::WrongGraphKind);
}

TEST_CASE("components of the type A graph and the type C graph") {
  const ComponentReport type_a = connected_components(build_graph(GraphKind::TypeA, 6));
  CHECK(type_a.component_count == 1);
  CHECK(type_a.components[0].size == 132);

  const ComponentReport type_c3 = connected_components(build_graph(GraphKind::TypeC, 3));
  REQUIRE(type_c3.component_count == 2);
  std::set<std::uint64_t> sizes{type_c3.components[0].size, type_c3.components[1].size};
  CHECK(sizes == std::set<std::uint64_t>{2, 3});
  for (const ComponentInfo& info : type_c3.components) {
    CHECK(info.all_symmetric == (info.size == 3));
    CHECK(info.all_asymmetric == (info.size == 2));
  }

  const ComponentReport type_c2 = connected_components(build_graph(GraphKind::TypeC, 2));
  CHECK(type_c2.component_count == 1);
}

TEST_CASE("grading report for n=3 shows the 1,2,1,1 ranks") {
  const GradingReport report = grading_report(build_graph(GraphKind::TypeA, 3));
  CHECK(report.min_rank == 3);
  CHECK(report.max_rank == 6);
  CHECK(report.rank_counts == std::vector<std::uint64_t>{1, 2, 1, 1});
  CHECK_FALSE(report.is_unimodal);
  REQUIRE(report.min_elements.size() == 1);
  REQUIRE(report.max_elements.size() == 1);
  CHECK(unrank_tree(TreeIndex{3, report.min_elements[0]}) == star_tree(3));
  CHECK(unrank_tree(TreeIndex{3, report.max_elements[0]}) == path_tree(3));

  const GradingReport two = grading_report(build_graph(GraphKind::TypeA, 2));
  CHECK(two.rank_counts == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("rank counts follow the closed formula for n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    const GradingReport report = grading_report(build_graph(GraphKind::TypeA, n));
    CHECK(static_cast<int>(report.rank_counts.size()) == n * (n + 1) / 2 - n + 1);
    std::uint64_t total = 0;
    for (std::uint64_t count : report.rank_counts) total += count;
    CHECK(total == count_trees(n));
  }
}

TEST_CASE("unimodality flag: weak climb, strict descent") {
  CHECK(is_unimodal_sequence({1}));
  CHECK(is_unimodal_sequence({1, 1}));
  CHECK(is_unimodal_sequence({1, 2, 1}));
  CHECK_FALSE(is_unimodal_sequence({1, 2, 1, 1}));
  CHECK_FALSE(is_unimodal_sequence({2, 1, 2}));
}

TEST_CASE("connecting words replay to the target") {
  const YoungTableau from = make_tableau(Partition{{2, 2}}, {{1, 2}, {3, 4}});
  const YoungTableau to = make_tableau(Partition{{2, 2}}, {{1, 3}, {2, 4}});
  CHECK(connecting_word(from, from).empty());
  CHECK(connecting_word(from, to) == std::vector<int>{2});

  for (int n = 2; n <= 4; ++n) {
    const std::vector<YoungTableau> tableaux = all_syt(Partition{{n, n}});
    for (const YoungTableau& a : tableaux) {
      for (const YoungTableau& b : tableaux) {
        CHECK(apply_word(a, connecting_word(a, b)) == b);
      }
    }
  }

  CHECK(code_of([&] {
          connecting_word(from, make_tableau(Partition{{3, 3}},
                                             {{1, 2, 3}, {4, 5, 6}}));
        }) == ErrorCode::ShapeMismatch);
  CHECK(code_of([] {
          connecting_word(make_tableau(Partition{{2, 1}}, {{1, 2}, {3}}),
                          make_tableau(Partition{{2, 1}}, {{1, 3}, {2}}));
        }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("witness paths in the type C graph at n=3") {
  const MoveGraph graph = build_graph(GraphKind::TypeC, 3);
  const auto star = static_cast<std::uint32_t>(rank_tree(star_tree(3)).rank);
  const auto path = static_cast<std::uint32_t>(rank_tree(path_tree(3)).rank);

  const auto route = witness_path(graph, star, path);
  REQUIRE(route.has_value());
  REQUIRE(route->size() == 2);
  CHECK((*route)[0].gen.label() == "s2C");
  CHECK((*route)[1].gen.label() == "s3C");
  CHECK((*route)[0].from == star);
  CHECK((*route)[1].to == path);

  // symmetric to asymmetric: no route
  const auto asym = static_cast<std::uint32_t>(rank_tree(make_tree(3, {{1, 4}, {2, 3}, {5, 6}})).rank);
  CHECK_FALSE(witness_path(graph, star, asym).has_value());

  const auto trivial = witness_path(graph, star, star);
  REQUIRE(trivial.has_value());
  CHECK(trivial->empty());

  CHECK(code_of([&] { witness_path(graph, 0, 99); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("coverage report separates moves from s_i moves") {
  const CoverageReport one = si_move_coverage(1);
  CHECK(one.move_records == 0);
  CHECK(one.label_moves == 0);

  const CoverageReport two = si_move_coverage(2);
  CHECK(two.move_records == 2);      // one per tree
  CHECK(two.si_move_records == 2);   // both rewrites realize s_2
  CHECK(two.label_moves == 4);       // the path tree carries slots for i=1,2,3
  CHECK(two.si_label_moves == 2);
  CHECK(two.strict_label_gap);
  CHECK_FALSE(two.strict_record_gap);
  CHECK(two.trees_with_non_si_label == 1);

  const CoverageReport three = si_move_coverage(3);
  CHECK(three.strict_label_gap);
  CHECK(three.strict_record_gap);
  CHECK(three.move_records > three.si_move_records);
}

TEST_CASE("tableau-shape graphs mirror the type A graph through phi") {
  const MoveGraph tableau_graph = build_tableau_graph(Partition{{3, 3}});
  const MoveGraph tree_graph = build_graph(GraphKind::TypeA, 3);
  CHECK(tableau_graph.vertex_count() == tree_graph.vertex_count());
  CHECK(tableau_graph.edge_count() == tree_graph.edge_count());

  const MoveGraph hook_graph = build_tableau_graph(Partition{{2, 1}});
  CHECK(hook_graph.vertex_count() == 2);
  CHECK(hook_graph.edge_count() == 1);
}

TEST_CASE("graph construction is identical for any worker count") {
  BuildOptions serial;
  BuildOptions parallel;
  parallel.workers = 4;
  for (auto kind : {GraphKind::TypeA, GraphKind::TypeC, GraphKind::AllLocalMoves}) {
    CHECK(build_graph(kind, 6, serial) == build_graph(kind, 6, parallel));
  }
  CHECK(build_tableau_graph(Partition{{4, 4}}, serial) ==
        build_tableau_graph(Partition{{4, 4}}, parallel));
}

TEST_CASE("self loops appear only behind the flag and stay out of analysis") {
  BuildOptions with_loops;
  with_loops.keep_self_loops = true;
  const MoveGraph plain = build_graph(GraphKind::TypeA, 3);
  const MoveGraph looped = build_graph(GraphKind::TypeA, 3, with_loops);
  CHECK(looped.edge_count() > plain.edge_count());
  CHECK(connected_components(looped).component_count == 1);
  CHECK(grading_report(looped).all_edges_unit_step);

  std::uint64_t loops = 0;
  for (std::uint32_t v = 0; v < looped.vertex_count(); ++v) {
    for (const GraphEdge& edge : looped.neighbors(v)) loops += edge.to == v;
  }
  // fixed points per vertex: 2n-1 generators minus the moving ones
  CHECK(loops == (2 * 3 - 1) * count_trees(3) - 2 * plain.edge_count());
}

TEST_CASE("exports are deterministic and JSON round trips") {
  const MoveGraph graph = build_graph(GraphKind::TypeC, 4);

  std::ostringstream first, second;
  export_graph(graph, ExportFormat::Json, first);
  export_graph(graph, ExportFormat::Json, second);
  CHECK(first.str() == second.str());

  std::istringstream input(first.str());
  CHECK(read_graph_json(input) == graph);

  const MoveGraph tableau_graph = build_tableau_graph(Partition{{3, 2}});
  std::ostringstream tably;
  export_graph(tableau_graph, ExportFormat::Json, tably);
  std::istringstream tably_in(tably.str());
  CHECK(read_graph_json(tably_in) == tableau_graph);
}

TEST_CASE("DOT export of the n=2 type A graph") {
  std::ostringstream out;
  export_graph(build_graph(GraphKind::TypeA, 2), ExportFormat::Dot, out);
  const std::string dot = out.str();
  CHECK(dot.find("graph catmoves {") == 0);
  CHECK(dot.find("0 [label=\"2;(1,4)(2,3)\"]") != std::string::npos);
  CHECK(dot.find("1 [label=\"2;(1,2)(3,4)\"]") != std::string::npos);
  CHECK(dot.find("0 -- 1 [label=\"s2\"]") != std::string::npos);
}

TEST_CASE("CSV export count matches the adjacency half sum") {
  const MoveGraph graph = build_graph(GraphKind::TypeC, 3);
  std::ostringstream out;
  export_graph(graph, ExportFormat::Csv, out);
  std::istringstream lines(out.str());
  std::string line;
  std::uint64_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == graph.edge_count() + 1);  // header line
}

TEST_CASE("local move record serializes to JSON") {
  const PlaneTree tree = make_tree(2, {{1, 4}, {2, 3}});
  const LocalMoveRecord record = enumerate_local_moves(tree)[0];
  CHECK(local_move_to_json(record) ==
        R"({"added":[[1,2],[3,4]],"delta":-1,"removed":[[1,4],[2,3]],"type":1})");
}
