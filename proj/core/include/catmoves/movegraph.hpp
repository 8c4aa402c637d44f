#ifndef CATMOVES_MOVEGRAPH_HPP
#define CATMOVES_MOVEGRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catmoves/enumeration.hpp"
#include "catmoves/moves.hpp"
#include "catmoves/plane_tree.hpp"
#include "catmoves/young_tableau.hpp"

namespace catmoves {

enum class GraphKind { TypeA, TypeC, AllLocalMoves, TableauShape };

const char* graph_kind_name(GraphKind kind);

/// Edge label: which generator produced the edge.
struct Generator {
  enum Kind : std::uint8_t { SI, SIC, LOCAL };

  Kind kind = LOCAL;
  std::int16_t index = 0;  // i for SI and SIC, 0 for LOCAL

  std::string label() const;  // "s3", "s3C", "local"
  auto operator<=>(const Generator&) const = default;
};

Generator parse_generator(const std::string& label);

struct GraphEdge {
  std::uint32_t to = 0;
  Generator gen;
  std::int32_t delta = 0;  // rank(to) - rank(from); 0 where rank is undefined

  auto operator<=>(const GraphEdge&) const = default;
};

/// Undirected multigraph over a canonical enumeration. Vertices are implicit
/// enumeration ranks; adjacency is CSR so that graphs up to the enumeration
/// caps stay compact. Fixed points contribute edges only when the build asked
/// for self loops.
struct MoveGraph {
  GraphKind kind = GraphKind::TypeA;
  int n = 0;            // tree graphs; 0 for TableauShape
  Partition shape;      // TableauShape only; empty otherwise

  std::vector<std::int32_t> rank;       // total_distance per vertex (tree graphs; 0 otherwise)
  std::vector<std::uint8_t> symmetric;  // 1 iff mirror-fixed (tree graphs; 0 otherwise)
  std::vector<std::uint64_t> offsets;   // CSR offsets, size vertex_count()+1
  std::vector<GraphEdge> edges;         // out-edges, sorted per vertex

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(rank.size()); }
  std::uint64_t edge_count() const;  // undirected count; self loops counted once

  std::span<const GraphEdge> neighbors(std::uint32_t v) const {
    return {edges.data() + offsets[v], edges.data() + offsets[v + 1]};
  }

  bool is_tree_graph() const { return kind != GraphKind::TableauShape; }
  bool operator==(const MoveGraph&) const = default;
};

struct BuildOptions {
  int workers = 1;
  bool keep_self_loops = false;
  Caps caps{};
};

/// Builds the graph for a tree-vertex kind (TypeA, TypeC, AllLocalMoves).
/// Vertices are ballot ranks; every generator is applied to every vertex and
/// non-fixed images become labeled edges. Deterministic for any worker count.
MoveGraph build_graph(GraphKind kind, int n, const BuildOptions& options = {});

/// Graph on the standard Young tableaux of a shape under every s_i.
MoveGraph build_tableau_graph(const Partition& shape, const BuildOptions& options = {});

/// Canonical text of a vertex (tree or tableau encoding).
std::string vertex_text(const MoveGraph& graph, std::uint32_t vertex);

struct ComponentInfo {
  std::uint64_t size = 0;
  bool all_symmetric = false;
  bool all_asymmetric = false;
  std::uint32_t representative = 0;  // smallest vertex id in the component
};

struct ComponentReport {
  std::uint64_t component_count = 0;
  std::vector<ComponentInfo> components;   // ordered by representative
  std::vector<std::uint32_t> component_of; // per-vertex component index
};

ComponentReport connected_components(const MoveGraph& graph);

struct GradingReport {
  std::int64_t min_rank = 0;
  std::int64_t max_rank = 0;
  std::vector<std::uint64_t> rank_counts;    // indexed from min_rank
  std::vector<std::uint32_t> min_elements;
  std::vector<std::uint32_t> max_elements;
  bool all_edges_unit_step = false;
  bool is_unimodal = false;
};

/// Rank histogram and step check for graphs ranked by total_distance.
/// Only TypeA and AllLocalMoves qualify; anything else is WrongGraphKind.
GradingReport grading_report(const MoveGraph& graph);

/// True when the sequence climbs (weakly) to its peak and then falls
/// strictly; a plateau after the peak disqualifies.
bool is_unimodal_sequence(const std::vector<std::uint64_t>& counts);

/// A word w with apply_word(from, w) == to, built the way the connectivity
/// proof walks: fix the smallest value on the wrong row, recurse. Both
/// tableaux must share a two-row rectangular shape.
std::vector<int> connecting_word(const YoungTableau& from, const YoungTableau& to);

struct PathStep {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  Generator gen;
};

/// Shortest path between two vertices, or nullopt when they sit in different
/// components. u == v yields an engaged empty path.
std::optional<std::vector<PathStep>> witness_path(const MoveGraph& graph, std::uint32_t u,
                                                  std::uint32_t v);

/// Per-tree bookkeeping of how many local moves exist versus how many are
/// s_i-local moves. Moves are counted two ways: as rewrite records (unordered
/// adjacent edge pairs) and as label slots (each i whose configuration
/// attaches a move, the accounting behind "not every local move corresponds
/// to a permutation" -- same-row slots carry a move that no s_i realizes).
struct CoverageReport {
  int n = 0;
  std::uint64_t move_records = 0;
  std::uint64_t si_move_records = 0;
  std::uint64_t label_moves = 0;
  std::uint64_t si_label_moves = 0;
  std::uint64_t trees_with_non_si_record = 0;
  std::uint64_t trees_with_non_si_label = 0;
  bool strict_label_gap = false;   // si_label_moves < label_moves; holds for every n >= 2
  bool strict_record_gap = false;  // si_move_records < move_records; holds for n >= 3
};

CoverageReport si_move_coverage(int n, const Caps& caps = Caps{});

}  // namespace catmoves

#endif  // CATMOVES_MOVEGRAPH_HPP
