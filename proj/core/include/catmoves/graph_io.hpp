#ifndef CATMOVES_GRAPH_IO_HPP
#define CATMOVES_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "catmoves/movegraph.hpp"
#include "catmoves/moves.hpp"

namespace catmoves {

enum class ExportFormat { Dot, Json, Csv };

ExportFormat parse_export_format(const std::string& name);  // "dot" | "json" | "csv"

/// Writes the graph in the requested format. Output is byte deterministic:
/// vertices by id, edges by (u, v, generator) with u <= v, no timestamps.
void export_graph(const MoveGraph& graph, ExportFormat format, std::ostream& out);

/// Same, into a file. Throws IoFailure when the file cannot be written.
void export_graph_file(const MoveGraph& graph, ExportFormat format, const std::string& path);

/// Reads back the JSON produced by export_graph. Inverse of the writer:
/// the reconstructed graph compares equal to the original.
MoveGraph read_graph_json(std::istream& in);

/// JSON object {"removed": [[a,b],[c,d]], "added": ..., "type": t, "delta": d}.
std::string local_move_to_json(const LocalMoveRecord& record);

}  // namespace catmoves

#endif  // CATMOVES_GRAPH_IO_HPP
