#include "catmoves/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "json.hpp"

namespace catmoves {

namespace {

using nlohmann::json;

// Vertex labels for export; tableau graphs need the enumeration materialized.
std::vector<std::string> vertex_labels(const MoveGraph& graph) {
  std::vector<std::string> labels;
  labels.reserve(graph.vertex_count());
  if (graph.is_tree_graph()) {
    TreeStream stream(graph.n);
    while (auto tree = stream.next()) labels.push_back(to_text(*tree));
  } else {
    Caps caps;
    caps.max_syt_n = std::max(caps.max_syt_n, graph.shape.total());
    for (const YoungTableau& tableau : all_syt(graph.shape, caps)) {
      labels.push_back(to_text(tableau));
    }
  }
  return labels;
}

template <typename Fn>
void for_each_undirected_edge(const MoveGraph& graph, Fn&& fn) {
  for (std::uint32_t u = 0; u < graph.vertex_count(); ++u) {
    for (const GraphEdge& edge : graph.neighbors(u)) {
      if (edge.to >= u) fn(u, edge);
    }
  }
}

void write_dot(const MoveGraph& graph, std::ostream& out) {
  const std::vector<std::string> labels = vertex_labels(graph);
  out << "graph catmoves {\n";
  out << "  // kind=" << graph_kind_name(graph.kind);
  if (graph.is_tree_graph()) {
    out << " n=" << graph.n;
  } else {
    out << " shape=";
    for (size_t r = 0; r < graph.shape.parts.size(); ++r) {
      out << (r ? "," : "") << graph.shape.parts[r];
    }
  }
  out << "\n";
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << labels[v] << "\"];\n";
  }
  for_each_undirected_edge(graph, [&](std::uint32_t u, const GraphEdge& edge) {
    out << "  " << u << " -- " << edge.to << " [label=\"" << edge.gen.label() << "\"];\n";
  });
  out << "}\n";
}

void write_csv(const MoveGraph& graph, std::ostream& out) {
  out << "u,v,gen,delta\n";
  for_each_undirected_edge(graph, [&](std::uint32_t u, const GraphEdge& edge) {
    out << u << ',' << edge.to << ',' << edge.gen.label() << ',' << edge.delta << '\n';
  });
}

void write_json(const MoveGraph& graph, std::ostream& out) {
  const std::vector<std::string> labels = vertex_labels(graph);
  json doc;
  doc["kind"] = graph_kind_name(graph.kind);
  if (graph.is_tree_graph()) {
    doc["n"] = graph.n;
  } else {
    doc["shape"] = graph.shape.parts;
  }
  json vertices = json::array();
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    vertices.push_back({{"id", v},
                        {"tree", labels[v]},
                        {"rank", graph.rank[v]},
                        {"symmetric", graph.symmetric[v] != 0}});
  }
  doc["vertices"] = std::move(vertices);
  json edges = json::array();
  for_each_undirected_edge(graph, [&](std::uint32_t u, const GraphEdge& edge) {
    edges.push_back(
        {{"u", u}, {"v", edge.to}, {"gen", edge.gen.label()}, {"delta", edge.delta}});
  });
  doc["edges"] = std::move(edges);
  out << doc.dump(2) << '\n';
}

}  // namespace

ExportFormat parse_export_format(const std::string& name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "json") return ExportFormat::Json;
  if (name == "csv") return ExportFormat::Csv;
  throw Error(ErrorCode::ParseError, "unknown export format \"" + name + "\"");
}

void export_graph(const MoveGraph& graph, ExportFormat format, std::ostream& out) {
  switch (format) {
    case ExportFormat::Dot: write_dot(graph, out); break;
    case ExportFormat::Json: write_json(graph, out); break;
    case ExportFormat::Csv: write_csv(graph, out); break;
  }
  if (!out) throw Error(ErrorCode::IoFailure, "stream write failed");
}

void export_graph_file(const MoveGraph& graph, ExportFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open \"" + path + "\" for writing");
  export_graph(graph, format, out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write to \"" + path + "\" failed");
}

MoveGraph read_graph_json(std::istream& in) {
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& err) {
    throw Error(ErrorCode::ParseError, std::string("bad graph JSON: ") + err.what());
  }

  try {
    MoveGraph graph;
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "typeA") {
      graph.kind = GraphKind::TypeA;
    } else if (kind == "typeC") {
      graph.kind = GraphKind::TypeC;
    } else if (kind == "all") {
      graph.kind = GraphKind::AllLocalMoves;
    } else if (kind == "tableau") {
      graph.kind = GraphKind::TableauShape;
    } else {
      throw Error(ErrorCode::ParseError, "unknown graph kind \"" + kind + "\"");
    }
    if (graph.is_tree_graph()) {
      graph.n = doc.at("n").get<int>();
    } else {
      graph.shape.parts = doc.at("shape").get<std::vector<int>>();
    }

    const auto& vertices = doc.at("vertices");
    graph.rank.resize(vertices.size());
    graph.symmetric.resize(vertices.size());
    for (const auto& vertex : vertices) {
      const auto id = vertex.at("id").get<std::uint32_t>();
      if (id >= graph.rank.size()) {
        throw Error(ErrorCode::ParseError, "vertex id out of range in graph JSON");
      }
      graph.rank[id] = vertex.at("rank").get<std::int32_t>();
      graph.symmetric[id] = vertex.at("symmetric").get<bool>() ? 1 : 0;
    }

    std::vector<std::vector<GraphEdge>> adjacency(graph.rank.size());
    for (const auto& edge : doc.at("edges")) {
      const auto u = edge.at("u").get<std::uint32_t>();
      const auto v = edge.at("v").get<std::uint32_t>();
      if (u >= adjacency.size() || v >= adjacency.size()) {
        throw Error(ErrorCode::ParseError, "edge endpoint out of range in graph JSON");
      }
      const Generator gen = parse_generator(edge.at("gen").get<std::string>());
      const auto delta = edge.at("delta").get<std::int32_t>();
      adjacency[u].push_back(GraphEdge{v, gen, delta});
      if (u != v) adjacency[v].push_back(GraphEdge{u, gen, -delta});
    }
    graph.offsets.assign(adjacency.size() + 1, 0);
    for (size_t v = 0; v < adjacency.size(); ++v) {
      std::sort(adjacency[v].begin(), adjacency[v].end());
      graph.offsets[v + 1] = graph.offsets[v] + adjacency[v].size();
    }
    graph.edges.reserve(graph.offsets.back());
    for (const auto& list : adjacency) {
      graph.edges.insert(graph.edges.end(), list.begin(), list.end());
    }
    return graph;
  } catch (const json::exception& err) {
    throw Error(ErrorCode::ParseError, std::string("bad graph JSON: ") + err.what());
  }
}

std::string local_move_to_json(const LocalMoveRecord& record) {
  json doc;
  doc["removed"] = {{record.removed[0].first, record.removed[0].second},
                    {record.removed[1].first, record.removed[1].second}};
  doc["added"] = {{record.added[0].first, record.added[0].second},
                  {record.added[1].first, record.added[1].second}};
  doc["type"] = record.move_type;
  doc["delta"] = record.rank_delta;
  return doc.dump();
}

}  // namespace catmoves
