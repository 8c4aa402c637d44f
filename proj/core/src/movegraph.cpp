#include "catmoves/movegraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <thread>
#include <unordered_map>

namespace catmoves {

const char* graph_kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::TypeA: return "typeA";
    case GraphKind::TypeC: return "typeC";
    case GraphKind::AllLocalMoves: return "all";
    case GraphKind::TableauShape: return "tableau";
  }
  return "unknown";
}

std::string Generator::label() const {
  switch (kind) {
    case SI: return "s" + std::to_string(index);
    case SIC: return "s" + std::to_string(index) + "C";
    case LOCAL: return "local";
  }
  return "local";
}

Generator parse_generator(const std::string& label) {
  if (label == "local") return Generator{Generator::LOCAL, 0};
  if (label.size() < 2 || label[0] != 's') {
    throw Error(ErrorCode::ParseError, "bad generator label \"" + label + "\"");
  }
  const bool type_c = label.back() == 'C';
  const std::string digits = label.substr(1, label.size() - 1 - (type_c ? 1 : 0));
  try {
    const int index = std::stoi(digits);
    return Generator{type_c ? Generator::SIC : Generator::SI, static_cast<std::int16_t>(index)};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad generator label \"" + label + "\"");
  }
}

std::uint64_t MoveGraph::edge_count() const {
  std::uint64_t count = 0;
  for (std::uint32_t v = 0; v < vertex_count(); ++v) {
    for (const GraphEdge& edge : neighbors(v)) {
      if (edge.to >= v) ++count;  // count each undirected edge once, loops included
    }
  }
  return count;
}

namespace {

// Per-vertex out-edges, sorted and deduplicated.
using EdgeFn = std::function<std::vector<GraphEdge>(std::uint32_t)>;

void finish_edges(std::vector<GraphEdge>& out) {
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

void assemble_edges(MoveGraph& graph, int workers, const EdgeFn& edges_of) {
  const std::uint32_t vertices = graph.vertex_count();
  std::vector<std::vector<GraphEdge>> per_vertex(vertices);
  workers = std::max(1, workers);

  const auto run_range = [&](std::uint32_t lo, std::uint32_t hi) {
    for (std::uint32_t v = lo; v < hi; ++v) {
      per_vertex[v] = edges_of(v);
      finish_edges(per_vertex[v]);
    }
  };

  if (workers == 1 || vertices < 2) {
    run_range(0, vertices);
  } else {
    std::vector<std::thread> pool;
    const std::uint32_t chunk = (vertices + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint32_t lo = std::min<std::uint64_t>(static_cast<std::uint64_t>(w) * chunk, vertices);
      const std::uint32_t hi = std::min<std::uint64_t>(lo + chunk, vertices);
      if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& thread : pool) thread.join();
  }

  graph.offsets.assign(vertices + 1, 0);
  for (std::uint32_t v = 0; v < vertices; ++v) {
    graph.offsets[v + 1] = graph.offsets[v] + per_vertex[v].size();
  }
  graph.edges.reserve(graph.offsets[vertices]);
  for (std::uint32_t v = 0; v < vertices; ++v) {
    graph.edges.insert(graph.edges.end(), per_vertex[v].begin(), per_vertex[v].end());
  }
}

}  // namespace

MoveGraph build_graph(GraphKind kind, int n, const BuildOptions& options) {
  if (kind == GraphKind::TableauShape) {
    throw Error(ErrorCode::WrongGraphKind, "tableau graphs take a shape, not n");
  }
  if (n < 1) {
    throw Error(ErrorCode::LabelOutOfRange, "n must be positive, got " + std::to_string(n));
  }
  if (n > options.caps.max_tree_n) {
    throw Error(ErrorCode::SizeExceedsCap, "n = " + std::to_string(n) + " exceeds cap " +
                                               std::to_string(options.caps.max_tree_n));
  }

  const std::uint64_t vertices64 = count_trees(n);
  if (vertices64 > 0xffffffffull) {
    throw Error(ErrorCode::SizeExceedsCap,
                "Catalan(" + std::to_string(n) + ") exceeds the vertex id width");
  }
  const auto vertices = static_cast<std::uint32_t>(vertices64);

  MoveGraph graph;
  graph.kind = kind;
  graph.n = n;
  graph.rank.resize(vertices);
  graph.symmetric.resize(vertices);
  for (std::uint32_t v = 0; v < vertices; ++v) {
    const PlaneTree tree = unrank_tree(TreeIndex{n, v});
    graph.rank[v] = static_cast<std::int32_t>(total_distance(tree));
    graph.symmetric[v] = is_symmetric(tree) ? 1 : 0;
  }

  const bool loops = options.keep_self_loops;
  const auto edges_of = [kind, n, loops, &graph](std::uint32_t v) {
    const PlaneTree tree = unrank_tree(TreeIndex{n, v});
    std::vector<GraphEdge> out;
    const auto push_image = [&](const PlaneTree& image, Generator gen) {
      if (image == tree) {
        if (loops) out.push_back(GraphEdge{v, gen, 0});
        return;
      }
      const auto to = static_cast<std::uint32_t>(rank_tree(image).rank);
      out.push_back(GraphEdge{to, gen, graph.rank[to] - graph.rank[v]});
    };

    switch (kind) {
      case GraphKind::TypeA:
        for (int i = 1; i < 2 * n; ++i) {
          push_image(s_i_tree(tree, i), Generator{Generator::SI, static_cast<std::int16_t>(i)});
        }
        break;
      case GraphKind::TypeC:
        for (int i = 1; i <= n; ++i) {
          push_image(s_i_c(tree, i), Generator{Generator::SIC, static_cast<std::int16_t>(i)});
        }
        break;
      case GraphKind::AllLocalMoves:
        for (const LocalMoveRecord& record : enumerate_local_moves(tree)) {
          push_image(apply_move(tree, record), Generator{Generator::LOCAL, 0});
        }
        break;
      case GraphKind::TableauShape:
        break;
    }
    return out;
  };

  assemble_edges(graph, options.workers, edges_of);
  return graph;
}

MoveGraph build_tableau_graph(const Partition& shape, const BuildOptions& options) {
  if (shape.total() > options.caps.max_syt_n) {
    throw Error(ErrorCode::SizeExceedsCap, "shape size " + std::to_string(shape.total()) +
                                               " exceeds cap " +
                                               std::to_string(options.caps.max_syt_n));
  }
  const std::vector<YoungTableau> tableaux = all_syt(shape, options.caps);
  const auto vertices = static_cast<std::uint32_t>(tableaux.size());

  std::unordered_map<std::string, std::uint32_t> index;
  index.reserve(vertices * 2);
  for (std::uint32_t v = 0; v < vertices; ++v) index.emplace(to_text(tableaux[v]), v);

  MoveGraph graph;
  graph.kind = GraphKind::TableauShape;
  graph.shape = shape;
  graph.rank.assign(vertices, 0);
  graph.symmetric.assign(vertices, 0);

  const int total = shape.total();
  const bool loops = options.keep_self_loops;
  const auto edges_of = [total, loops, &tableaux, &index](std::uint32_t v) {
    std::vector<GraphEdge> out;
    for (int i = 1; i < total; ++i) {
      const YoungTableau image = s_i_tableau(tableaux[v], i);
      const auto gen = Generator{Generator::SI, static_cast<std::int16_t>(i)};
      if (image == tableaux[v]) {
        if (loops) out.push_back(GraphEdge{v, gen, 0});
        continue;
      }
      out.push_back(GraphEdge{index.at(to_text(image)), gen, 0});
    }
    return out;
  };

  assemble_edges(graph, options.workers, edges_of);
  return graph;
}

std::string vertex_text(const MoveGraph& graph, std::uint32_t vertex) {
  if (vertex >= graph.vertex_count()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(vertex) + " >= " +
                                                 std::to_string(graph.vertex_count()));
  }
  if (graph.is_tree_graph()) {
    return to_text(unrank_tree(TreeIndex{graph.n, vertex}));
  }
  Caps caps;
  caps.max_syt_n = std::max(caps.max_syt_n, graph.shape.total());
  const std::vector<YoungTableau> tableaux = all_syt(graph.shape, caps);
  return to_text(tableaux[vertex]);
}

ComponentReport connected_components(const MoveGraph& graph) {
  const std::uint32_t vertices = graph.vertex_count();
  constexpr std::uint32_t kUnseen = 0xffffffffu;

  ComponentReport report;
  report.component_of.assign(vertices, kUnseen);

  for (std::uint32_t start = 0; start < vertices; ++start) {
    if (report.component_of[start] != kUnseen) continue;
    const auto comp = static_cast<std::uint32_t>(report.components.size());

    ComponentInfo info;
    info.representative = start;
    bool any_symmetric = false;
    bool any_asymmetric = false;

    std::deque<std::uint32_t> queue{start};
    report.component_of[start] = comp;
    while (!queue.empty()) {
      const std::uint32_t v = queue.front();
      queue.pop_front();
      ++info.size;
      (graph.symmetric[v] ? any_symmetric : any_asymmetric) = true;
      for (const GraphEdge& edge : graph.neighbors(v)) {
        if (report.component_of[edge.to] == kUnseen) {
          report.component_of[edge.to] = comp;
          queue.push_back(edge.to);
        }
      }
    }

    if (graph.is_tree_graph()) {
      info.all_symmetric = !any_asymmetric;
      info.all_asymmetric = !any_symmetric;
    }
    report.components.push_back(info);
  }
  report.component_count = report.components.size();
  return report;
}

bool is_unimodal_sequence(const std::vector<std::uint64_t>& counts) {
  if (counts.empty()) return false;
  size_t peak = 0;
  while (peak + 1 < counts.size() && counts[peak] <= counts[peak + 1]) ++peak;
  for (size_t k = peak; k + 1 < counts.size(); ++k) {
    if (counts[k] <= counts[k + 1]) return false;
  }
  return true;
}

GradingReport grading_report(const MoveGraph& graph) {
  if (graph.kind != GraphKind::TypeA && graph.kind != GraphKind::AllLocalMoves) {
    throw Error(ErrorCode::WrongGraphKind,
                std::string("grading is defined for typeA and all, got ") +
                    graph_kind_name(graph.kind));
  }

  GradingReport report;
  const auto [lo, hi] = std::minmax_element(graph.rank.begin(), graph.rank.end());
  report.min_rank = *lo;
  report.max_rank = *hi;
  report.rank_counts.assign(static_cast<size_t>(report.max_rank - report.min_rank) + 1, 0);
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    ++report.rank_counts[graph.rank[v] - report.min_rank];
    if (graph.rank[v] == report.min_rank) report.min_elements.push_back(v);
    if (graph.rank[v] == report.max_rank) report.max_elements.push_back(v);
  }

  report.all_edges_unit_step = true;
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    for (const GraphEdge& edge : graph.neighbors(v)) {
      if (edge.to == v) continue;
      if (edge.delta != 1 && edge.delta != -1) {
        report.all_edges_unit_step = false;
        break;
      }
    }
    if (!report.all_edges_unit_step) break;
  }
  report.is_unimodal = is_unimodal_sequence(report.rank_counts);
  return report;
}

std::vector<int> connecting_word(const YoungTableau& from, const YoungTableau& to) {
  const bool two_row_rect =
      from.rows.size() == 2 && from.shape.parts[0] == from.shape.parts[1];
  if (!two_row_rect || from.shape != to.shape) {
    throw Error(ErrorCode::ShapeMismatch,
                "connecting_word needs two tableaux of one shape (n,n)");
  }

  std::vector<std::vector<int>> chunks;
  YoungTableau current = from;
  const int total = from.size();
  int guard = 0;

  while (!(current == to)) {
    if (++guard > total * total + 8) {
      throw Error(ErrorCode::ShapeMismatch, "connecting word failed to converge");
    }
    const std::vector<Cell> cur_cells = cell_index(current);
    const std::vector<Cell> to_cells = cell_index(to);

    int value = 0;
    for (int candidate = 1; candidate <= total; ++candidate) {
      if (cur_cells[candidate].row != to_cells[candidate].row) {
        value = candidate;
        break;
      }
    }

    int run = 0;  // value..value+run share the row in current; value+run+1 sits opposite
    while (value + run + 1 <= total &&
           cur_cells[value + run + 1].row == cur_cells[value].row) {
      ++run;
    }

    std::vector<int> chunk;
    for (int label = value; label <= value + run; ++label) chunk.push_back(label);
    for (int label = value + run; label >= value; --label) {
      const YoungTableau next = s_i_tableau(current, label);
      if (next == current) {
        throw Error(ErrorCode::ShapeMismatch, "connecting word hit a fixed point");
      }
      current = next;
    }
    chunks.push_back(std::move(chunk));
  }

  std::vector<int> word;
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) {
    word.insert(word.end(), it->begin(), it->end());
  }
  return word;
}

std::optional<std::vector<PathStep>> witness_path(const MoveGraph& graph, std::uint32_t u,
                                                  std::uint32_t v) {
  const std::uint32_t vertices = graph.vertex_count();
  if (u >= vertices || v >= vertices) {
    throw Error(ErrorCode::VertexOutOfRange, "path endpoints must be vertex ids below " +
                                                 std::to_string(vertices));
  }
  if (u == v) return std::vector<PathStep>{};

  constexpr std::uint32_t kUnseen = 0xffffffffu;
  std::vector<std::uint32_t> parent(vertices, kUnseen);
  std::vector<Generator> via(vertices);

  std::deque<std::uint32_t> queue{u};
  parent[u] = u;
  while (!queue.empty()) {
    const std::uint32_t at = queue.front();
    queue.pop_front();
    for (const GraphEdge& edge : graph.neighbors(at)) {
      if (edge.to == at || parent[edge.to] != kUnseen) continue;
      parent[edge.to] = at;
      via[edge.to] = edge.gen;
      if (edge.to == v) {
        std::vector<PathStep> path;
        for (std::uint32_t cursor = v; cursor != u; cursor = parent[cursor]) {
          path.push_back(PathStep{parent[cursor], cursor, via[cursor]});
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(edge.to);
    }
  }
  return std::nullopt;
}

CoverageReport si_move_coverage(int n, const Caps& caps) {
  if (n < 1) {
    throw Error(ErrorCode::LabelOutOfRange, "n must be positive, got " + std::to_string(n));
  }
  if (n > caps.max_tree_n) {
    throw Error(ErrorCode::SizeExceedsCap,
                "n = " + std::to_string(n) + " exceeds cap " + std::to_string(caps.max_tree_n));
  }

  CoverageReport report;
  report.n = n;
  TreeStream stream(n);
  while (auto tree = stream.next()) {
    const std::vector<LocalMoveRecord> records = enumerate_local_moves(*tree);
    std::uint64_t si_records = 0;
    for (const LocalMoveRecord& record : records) {
      if (is_si_local_move(*tree, record)) ++si_records;
    }
    report.move_records += records.size();
    report.si_move_records += si_records;
    if (si_records < records.size()) ++report.trees_with_non_si_record;

    std::uint64_t slots = 0, si_slots = 0;
    for (int i = 1; i < 2 * n; ++i) {
      switch (classify_pair(*tree, i).tag) {
        case MoveKind::LEAF:
        case MoveKind::PEAK:
          ++slots;
          ++si_slots;
          break;
        case MoveKind::SAME_ROW_TOP:
        case MoveKind::SAME_ROW_BOTTOM:
          ++slots;  // a move exists on the two edges carrying i and i+1,
                    // but it realizes no s_i
          break;
        case MoveKind::SAME_COLUMN_ROOT_LEAF:
          break;  // single root edge, nothing to move
      }
    }
    report.label_moves += slots;
    report.si_label_moves += si_slots;
    if (si_slots < slots) ++report.trees_with_non_si_label;
  }

  report.strict_label_gap = report.si_label_moves < report.label_moves;
  report.strict_record_gap = report.si_move_records < report.move_records;
  return report;
}

}  // namespace catmoves
