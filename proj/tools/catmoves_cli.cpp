// Command line front end: enumeration, graph construction and export,
// invariant verification, rank sequences, witness paths and connecting words.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "catmoves/enumeration.hpp"
#include "catmoves/graph_io.hpp"
#include "catmoves/movegraph.hpp"
#include "catmoves/verify.hpp"

namespace {

using namespace catmoves;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // cap violations, failed claims, io errors
constexpr int kExitUsage = 2;    // bad flags or malformed argument values

struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw Error(ErrorCode::IoFailure, "cannot open \"" + path + "\" for writing");
    stream = &file;
  }
};

Partition parse_shape_flag(const std::string& raw) {
  Partition shape;
  std::istringstream in(raw);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      shape.parts.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--shape", "expected comma separated parts, got \"" + raw + "\"");
    }
  }
  if (shape.parts.empty()) {
    throw CLI::ValidationError("--shape", "expected comma separated parts");
  }
  for (size_t r = 0; r < shape.parts.size(); ++r) {
    if (shape.parts[r] < 1 || (r > 0 && shape.parts[r] > shape.parts[r - 1])) {
      throw CLI::ValidationError("--shape", "parts must be positive and weakly decreasing");
    }
  }
  return shape;
}

GraphKind parse_moves_flag(const std::string& raw) {
  if (raw == "typeA") return GraphKind::TypeA;
  if (raw == "typeC") return GraphKind::TypeC;
  if (raw == "all") return GraphKind::AllLocalMoves;
  if (raw == "tableau") return GraphKind::TableauShape;
  throw CLI::ValidationError("--moves", "expected typeA, typeC, all or tableau");
}

int cmd_trees_enumerate(int n, const std::string& format, const std::string& out_path,
                        const Caps& caps) {
  if (n > caps.max_tree_n) {
    throw Error(ErrorCode::SizeExceedsCap,
                "n = " + std::to_string(n) + " exceeds cap " + std::to_string(caps.max_tree_n));
  }
  OutputTarget out;
  out.open(out_path);
  TreeStream stream(n);
  std::uint64_t id = 0;
  while (auto tree = stream.next()) {
    if (format == "jsonl") {
      *out.stream << "{\"id\":" << id++ << ",\"tree\":\"" << to_text(*tree) << "\"}\n";
    } else {
      *out.stream << to_text(*tree) << '\n';
    }
  }
  return kExitOk;
}

int cmd_syt_enumerate(const Partition& shape, const std::string& format,
                      const std::string& out_path, const Caps& caps) {
  OutputTarget out;
  out.open(out_path);
  SytStream stream(shape, caps);
  std::uint64_t id = 0;
  while (auto tableau = stream.next()) {
    if (format == "jsonl") {
      *out.stream << "{\"id\":" << id++ << ",\"tableau\":\"" << to_text(*tableau) << "\"}\n";
    } else {
      *out.stream << to_text(*tableau) << '\n';
    }
  }
  return kExitOk;
}

MoveGraph build_from_flags(GraphKind kind, int n, const std::optional<Partition>& shape,
                           int workers, bool self_loops, const Caps& caps) {
  BuildOptions options;
  options.workers = workers;
  options.keep_self_loops = self_loops;
  options.caps = caps;
  if (kind == GraphKind::TableauShape) {
    if (!shape) throw CLI::ValidationError("--shape", "tableau graphs need --shape");
    return build_tableau_graph(*shape, options);
  }
  if (n < 1) throw CLI::ValidationError("--n", "tree graphs need --n");
  return build_graph(kind, n, options);
}

int cmd_graph(GraphKind kind, int n, const std::optional<Partition>& shape,
              const std::string& format, const std::string& out_path, int workers,
              bool self_loops, const Caps& caps) {
  const MoveGraph graph = build_from_flags(kind, n, shape, workers, self_loops, caps);

  std::ostringstream summary;
  summary << "graph " << graph_kind_name(graph.kind);
  if (graph.is_tree_graph()) {
    summary << " n=" << graph.n;
  } else {
    summary << " shape=";
    for (size_t r = 0; r < graph.shape.parts.size(); ++r) {
      summary << (r ? "," : "") << graph.shape.parts[r];
    }
  }
  summary << ": " << graph.vertex_count() << " vertices, " << graph.edge_count() << " edges\n";
  const ComponentReport components = connected_components(graph);
  summary << "components: " << components.component_count << " (sizes";
  for (size_t c = 0; c < components.components.size(); ++c) {
    summary << (c ? ", " : " ") << components.components[c].size;
  }
  summary << ")\n";

  if (format.empty()) {
    std::cout << summary.str();
    return kExitOk;
  }

  const ExportFormat export_format = parse_export_format(format);
  if (out_path.empty()) {
    export_graph(graph, export_format, std::cout);
    std::cerr << summary.str();
  } else {
    export_graph_file(graph, export_format, out_path);
    std::cout << summary.str();
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, int max_n, int workers, const Caps& caps) {
  VerifyOptions options;
  options.max_n = max_n;
  options.workers = workers;
  options.caps = caps;
  const std::vector<CheckResult> results = run_verify_suite(suite, options);
  bool all_passed = true;
  for (const CheckResult& result : results) {
    std::cout << (result.passed ? "PASS  " : "FAIL  ") << result.name << "  " << result.detail
              << '\n';
    all_passed = all_passed && result.passed;
  }
  std::cout << (all_passed ? "PASS" : "FAIL") << "  suite=" << suite << " checks="
            << results.size() << '\n';
  return all_passed ? kExitOk : kExitFailure;
}

std::string rank_line(int n, const Caps& caps) {
  if (n > caps.max_tree_n) {
    throw Error(ErrorCode::SizeExceedsCap,
                "n = " + std::to_string(n) + " exceeds cap " + std::to_string(caps.max_tree_n));
  }
  std::map<std::int64_t, std::uint64_t> histogram;
  TreeStream stream(n);
  while (auto tree = stream.next()) ++histogram[total_distance(*tree)];

  std::vector<std::uint64_t> counts;
  std::string line;
  for (const auto& [rank, count] : histogram) {
    if (!line.empty()) line += ' ';
    line += std::to_string(rank) + ":" + std::to_string(count);
    counts.push_back(count);
  }
  line += ", unimodal=";
  line += is_unimodal_sequence(counts) ? "true" : "false";
  return line;
}

int cmd_ranks(int n, int max_n, const std::string& format, const std::string& out_path,
              const Caps& caps) {
  OutputTarget out;
  out.open(out_path);
  const int lo = n > 0 ? n : 1;
  const int hi = n > 0 ? n : max_n;
  if (format == "csv") {
    *out.stream << "n,rank,count\n";
    for (int k = lo; k <= hi; ++k) {
      if (k > caps.max_tree_n) {
        throw Error(ErrorCode::SizeExceedsCap, "n = " + std::to_string(k) + " exceeds cap " +
                                                   std::to_string(caps.max_tree_n));
      }
      std::map<std::int64_t, std::uint64_t> histogram;
      TreeStream stream(k);
      while (auto tree = stream.next()) ++histogram[total_distance(*tree)];
      for (const auto& [rank, count] : histogram) {
        *out.stream << k << ',' << rank << ',' << count << '\n';
      }
    }
    return kExitOk;
  }
  for (int k = lo; k <= hi; ++k) {
    if (n > 0) {
      *out.stream << rank_line(k, caps) << '\n';
    } else {
      *out.stream << "n=" << k << ": " << rank_line(k, caps) << '\n';
    }
  }
  return kExitOk;
}

int cmd_path(GraphKind kind, int n, const std::optional<Partition>& shape,
             const std::string& from_text, const std::string& to_text_arg, int workers,
             const Caps& caps) {
  std::uint32_t from = 0, to = 0;
  if (kind == GraphKind::TableauShape) {
    throw CLI::ValidationError("--moves", "path endpoints are trees; use typeA, typeC or all");
  }
  PlaneTree from_tree = parse_tree(from_text);
  PlaneTree to_tree = parse_tree(to_text_arg);
  if (n > 0 && (from_tree.n != n || to_tree.n != n)) {
    throw CLI::ValidationError("--n", "endpoint trees must have n edges");
  }
  if (from_tree.n != to_tree.n) {
    throw CLI::ValidationError("path", "endpoint trees must have the same size");
  }
  const MoveGraph graph = build_from_flags(kind, from_tree.n, shape, workers, false, caps);
  from = static_cast<std::uint32_t>(rank_tree(from_tree).rank);
  to = static_cast<std::uint32_t>(rank_tree(to_tree).rank);

  const auto route = witness_path(graph, from, to);
  if (!route) {
    std::cerr << "no path: the endpoints lie in different components\n";
    return kExitFailure;
  }
  for (const PathStep& step : *route) {
    std::cout << step.gen.label() << "  " << vertex_text(graph, step.from) << " -> "
              << vertex_text(graph, step.to) << '\n';
  }
  return kExitOk;
}

int cmd_word(const std::string& from_text, const std::string& to_text_arg) {
  const YoungTableau from = parse_tableau(from_text);
  const YoungTableau to = parse_tableau(to_text_arg);
  const std::vector<int> word = connecting_word(from, to);
  for (size_t k = 0; k < word.size(); ++k) {
    std::cout << (k ? " " : "") << word[k];
  }
  if (!word.empty()) std::cout << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catmoves: plane tree and Young tableau move graphs"};
  app.require_subcommand(1);

  Caps caps = Caps::from_env();
  app.add_option("--cap-n", [&caps](const std::vector<std::string>& values) {
    try {
      const int value = std::stoi(values[0]);
      if (value < 1) return false;
      caps.max_tree_n = value;
      caps.max_syt_n = value;
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }, "Override the enumeration caps (also: CATMOVES_MAX_N)");

  int n = 0;
  int max_n = 7;
  int workers = 1;
  bool self_loops = false;
  std::string shape_raw, format, out_path, moves_raw = "typeA", suite = "all";
  std::string from_arg, to_arg;

  CLI::App* trees = app.add_subcommand("trees", "Plane tree enumeration");
  CLI::App* trees_enum = trees->add_subcommand("enumerate", "Stream all trees with n edges");
  trees_enum->add_option("--n", n, "Edge count")->required()->check(CLI::PositiveNumber);
  trees_enum->add_option("--format", format, "text or jsonl")
      ->check(CLI::IsMember({"text", "jsonl"}));
  trees_enum->add_option("--out", out_path, "Write to a file instead of stdout");

  CLI::App* syt = app.add_subcommand("syt", "Standard Young tableau enumeration");
  CLI::App* syt_enum = syt->add_subcommand("enumerate", "Stream all tableaux of a shape");
  syt_enum->add_option("--shape", shape_raw, "Comma separated parts, e.g. 2,2")->required();
  syt_enum->add_option("--format", format, "text or jsonl")
      ->check(CLI::IsMember({"text", "jsonl"}));
  syt_enum->add_option("--out", out_path, "Write to a file instead of stdout");

  CLI::App* graph = app.add_subcommand("graph", "Build a move graph and export it");
  graph->add_option("--moves", moves_raw, "typeA, typeC, all or tableau")
      ->check(CLI::IsMember({"typeA", "typeC", "all", "tableau"}));
  graph->add_option("--n", n, "Edge count for tree graphs")->check(CLI::PositiveNumber);
  graph->add_option("--shape", shape_raw, "Shape for tableau graphs");
  graph->add_option("--format", format, "dot, json or csv")
      ->check(CLI::IsMember({"dot", "json", "csv"}));
  graph->add_option("--out", out_path, "Write the export to a file");
  graph->add_option("--workers", workers, "Worker threads for construction")
      ->check(CLI::PositiveNumber);
  graph->add_flag("--self-loops", self_loops, "Record fixed points as self loops");

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "Suite name or all")
      ->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--max-n", max_n, "Exhaustive bound")->check(CLI::PositiveNumber);
  verify->add_option("--workers", workers, "Worker threads for graph builds")
      ->check(CLI::PositiveNumber);

  CLI::App* ranks = app.add_subcommand("ranks", "Rank sequences of the graded type A graph");
  ranks->add_option("--n", n, "Single n")->check(CLI::PositiveNumber);
  ranks->add_option("--max-n", max_n, "Range 1..max-n when --n is absent")
      ->check(CLI::PositiveNumber);
  ranks->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  ranks->add_option("--out", out_path, "Write to a file instead of stdout");

  CLI::App* path = app.add_subcommand("path", "Shortest generator path between two trees");
  path->add_option("--moves", moves_raw, "typeA, typeC or all")
      ->check(CLI::IsMember({"typeA", "typeC", "all"}));
  path->add_option("--n", n, "Edge count (checked against the endpoints)")
      ->check(CLI::PositiveNumber);
  path->add_option("--workers", workers, "Worker threads for construction")
      ->check(CLI::PositiveNumber);
  path->add_option("from", from_arg, "Start tree, canonical text")->required();
  path->add_option("to", to_arg, "Target tree, canonical text")->required();

  CLI::App* word = app.add_subcommand("word", "Connecting word between two (n,n) tableaux");
  word->add_option("from", from_arg, "Start tableau, e.g. 1,2/3,4")->required();
  word->add_option("to", to_arg, "Target tableau")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (trees_enum->parsed()) return cmd_trees_enumerate(n, format, out_path, caps);
    if (syt_enum->parsed()) return cmd_syt_enumerate(parse_shape_flag(shape_raw), format, out_path, caps);
    if (graph->parsed()) {
      std::optional<Partition> shape;
      if (!shape_raw.empty()) shape = parse_shape_flag(shape_raw);
      return cmd_graph(parse_moves_flag(moves_raw), n, shape, format, out_path, workers,
                       self_loops, caps);
    }
    if (verify->parsed()) return cmd_verify(suite, max_n, workers, caps);
    if (ranks->parsed()) return cmd_ranks(n, max_n, format, out_path, caps);
    if (path->parsed()) {
      std::optional<Partition> shape;
      if (!shape_raw.empty()) shape = parse_shape_flag(shape_raw);
      return cmd_path(parse_moves_flag(moves_raw), n, shape, from_arg, to_arg, workers, caps);
    }
    if (word->parsed()) return cmd_word(from_arg, to_arg);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const CLI::ValidationError& err) {
    std::cerr << err.what() << '\n';
    return kExitUsage;
  } catch (const Error& err) {
    std::cerr << err.what() << '\n';
    return err.code() == ErrorCode::ParseError ? kExitUsage : kExitFailure;
  } catch (const std::exception& err) {
    std::cerr << err.what() << '\n';
    return kExitFailure;
  }
}
