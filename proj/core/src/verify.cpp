#include "catmoves/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "catmoves/movegraph.hpp"

namespace catmoves {

namespace {

using Checks = std::vector<CheckResult>;

void pass(Checks& out, const std::string& name, const std::string& detail) {
  out.push_back(CheckResult{name, true, detail});
}

void fail(Checks& out, const std::string& name, const std::string& detail) {
  out.push_back(CheckResult{name, false, detail});
}

std::string rank_sequence_text(const GradingReport& report) {
  std::string text;
  for (size_t k = 0; k < report.rank_counts.size(); ++k) {
    if (k) text += ' ';
    text += std::to_string(report.min_rank + static_cast<std::int64_t>(k)) + ":" +
            std::to_string(report.rank_counts[k]);
  }
  return text;
}

BuildOptions build_options(const VerifyOptions& options) {
  BuildOptions build;
  build.workers = options.workers;
  build.caps = options.caps;
  build.caps.max_tree_n = std::max(build.caps.max_tree_n, options.max_n);
  build.caps.max_syt_n = std::max(build.caps.max_syt_n, 2 * options.max_n);
  return build;
}

void suite_involution(const VerifyOptions& options, Checks& out) {
  const int max_cells = options.max_n + 1;
  std::uint64_t tableau_count = 0;
  for (int total = 1; total <= max_cells; ++total) {
    for (const Partition& shape : partitions_of(total)) {
      for (const YoungTableau& tableau : all_syt(shape, build_options(options).caps)) {
        ++tableau_count;
        for (int i = 1; i < total; ++i) {
          if (!(s_i_tableau(s_i_tableau(tableau, i), i) == tableau)) {
            fail(out, "involution/tableau",
                 "s_" + std::to_string(i) + " twice moved " + to_text(tableau));
            return;
          }
        }
      }
    }
  }
  pass(out, "involution/tableau",
       "s_i twice fixes all " + std::to_string(tableau_count) + " tableaux with N <= " +
           std::to_string(max_cells));

  for (int n = 1; n <= options.max_n; ++n) {
    TreeStream stream(n);
    while (auto tree = stream.next()) {
      for (int i = 1; i < 2 * n; ++i) {
        if (!(s_i_tree(s_i_tree(*tree, i), i) == *tree)) {
          fail(out, "involution/tree", "s_" + std::to_string(i) + " twice moved " + to_text(*tree));
          return;
        }
      }
      for (int i = 1; i <= n; ++i) {
        if (!(s_i_c(s_i_c(*tree, i), i) == *tree)) {
          fail(out, "involution/typeC",
               "s_" + std::to_string(i) + "^C twice moved " + to_text(*tree));
          return;
        }
      }
    }
  }
  pass(out, "involution/tree",
       "s_i and s_i^C twice fix every tree with n <= " + std::to_string(options.max_n));
}

void suite_bijection(const VerifyOptions& options, Checks& out) {
  for (int n = 1; n <= options.max_n; ++n) {
    std::set<std::string> images;
    TreeStream stream(n);
    while (auto tree = stream.next()) {
      const YoungTableau image = phi(*tree);
      if (!(phi_inverse(image) == *tree)) {
        fail(out, "bijection/roundtrip", "phi_inverse(phi(T)) != T for " + to_text(*tree));
        return;
      }
      images.insert(to_text(image));
    }
    std::uint64_t syt_count = 0;
    for (const YoungTableau& tableau : all_syt(Partition{{n, n}}, build_options(options).caps)) {
      ++syt_count;
      if (!images.count(to_text(tableau))) {
        fail(out, "bijection/onto", "tableau " + to_text(tableau) + " missed by phi at n=" +
                                        std::to_string(n));
        return;
      }
      if (!(phi(phi_inverse(tableau)) == tableau)) {
        fail(out, "bijection/roundtrip", "phi(phi_inverse(Y)) != Y for " + to_text(tableau));
        return;
      }
    }
    if (images.size() != syt_count || syt_count != count_trees(n)) {
      fail(out, "bijection/cardinality",
           "n=" + std::to_string(n) + ": " + std::to_string(images.size()) + " images vs " +
               std::to_string(syt_count) + " tableaux");
      return;
    }
  }
  pass(out, "bijection/phi",
       "phi is a bijection onto the (n,n) tableaux for n <= " + std::to_string(options.max_n));
}

void suite_classification(const VerifyOptions& options, Checks& out) {
  for (int n = 1; n <= options.max_n; ++n) {
    TreeStream stream(n);
    while (auto tree = stream.next()) {
      const YoungTableau image = phi(*tree);
      const std::vector<Cell> cells = cell_index(image);
      for (int i = 1; i < 2 * n; ++i) {
        const MoveKind kind = classify_pair(*tree, i);
        const bool same_row = cells[i].row == cells[i + 1].row;
        const bool same_col = cells[i].col == cells[i + 1].col;
        bool ok = false;
        switch (kind.tag) {
          case MoveKind::SAME_ROW_TOP: ok = same_row && cells[i].row == 0; break;
          case MoveKind::SAME_ROW_BOTTOM: ok = same_row && cells[i].row == 1; break;
          case MoveKind::SAME_COLUMN_ROOT_LEAF: ok = same_col; break;
          case MoveKind::LEAF:
          case MoveKind::PEAK: ok = !same_row && !same_col; break;
        }
        if (ok && kind.partner) {
          ok = kind.partner->first < i && i + 1 < kind.partner->second;
        }
        if (!ok) {
          fail(out, "classification/tableau-agreement",
               "tag mismatch for i=" + std::to_string(i) + " on " + to_text(*tree));
          return;
        }
      }
    }
  }
  pass(out, "classification/tableau-agreement",
       "tags match tableau row/column relations for n <= " + std::to_string(options.max_n));
}

void suite_conjugation(const VerifyOptions& options, Checks& out) {
  for (int n = 1; n <= options.max_n; ++n) {
    TreeStream stream(n);
    while (auto tree = stream.next()) {
      for (int i = 1; i < 2 * n; ++i) {
        if (!(s_i_tree(*tree, i) == phi_inverse(s_i_tableau(phi(*tree), i)))) {
          fail(out, "conjugation/tree-vs-tableau",
               "direct and conjugated s_" + std::to_string(i) + " differ on " + to_text(*tree));
          return;
        }
      }
    }
  }
  pass(out, "conjugation/tree-vs-tableau",
       "s_i_tree equals phi^-1 . s_i . phi for n <= " + std::to_string(options.max_n));
}

void suite_rank_step(const VerifyOptions& options, Checks& out) {
  std::uint64_t moves = 0, unit_moves = 0;
  for (int n = 1; n <= options.max_n; ++n) {
    TreeStream stream(n);
    while (auto tree = stream.next()) {
      for (const LocalMoveRecord& record : enumerate_local_moves(*tree)) {
        ++moves;
        const std::int64_t measured =
            total_distance(apply_move(*tree, record)) - total_distance(*tree);
        if (measured != record.rank_delta || measured % 2 == 0 ||
            (record.move_type == 1 ? measured >= 0 : measured <= 0)) {
          fail(out, "rank-step/sign",
               "type " + std::to_string(record.move_type) + " move on " + to_text(*tree) +
                   " changed d by " + std::to_string(measured));
          return;
        }
        if (measured == 1 || measured == -1) ++unit_moves;
        if (is_si_local_move(*tree, record) && measured != 1 && measured != -1) {
          fail(out, "rank-step/si-unit",
               "an s_i move on " + to_text(*tree) + " changed d by " + std::to_string(measured));
          return;
        }
      }
    }
  }
  pass(out, "rank-step/measured",
       std::to_string(moves) + " moves, all odd steps with type sign; " +
           std::to_string(unit_moves) + " unit steps; every s_i move is a unit step");
}

void suite_descendants(const VerifyOptions& options, Checks& out) {
  for (int n = 1; n <= options.max_n; ++n) {
    TreeStream stream(n);
    while (auto tree = stream.next()) {
      if (total_distance(*tree) != total_descendants(*tree)) {
        fail(out, "descendants/equality", "d != des for " + to_text(*tree));
        return;
      }
    }
  }
  pass(out, "descendants/equality",
       "total distance equals total descendants for n <= " + std::to_string(options.max_n));
}

void suite_grading(const VerifyOptions& options, Checks& out) {
  const BuildOptions build = build_options(options);
  for (int n = 1; n <= options.max_n; ++n) {
    const MoveGraph graph = build_graph(GraphKind::TypeA, n, build);
    const GradingReport report = grading_report(graph);
    const std::string tag = "n=" + std::to_string(n);

    if (!report.all_edges_unit_step) {
      fail(out, "grading/unit-step", tag + ": some edge is not a unit step");
      return;
    }
    const std::int64_t expected_ranks =
        static_cast<std::int64_t>(n) * (n + 1) / 2 - n + 1;
    if (static_cast<std::int64_t>(report.rank_counts.size()) != expected_ranks) {
      fail(out, "grading/rank-count",
           tag + ": " + std::to_string(report.rank_counts.size()) + " ranks, expected " +
               std::to_string(expected_ranks));
      return;
    }
    const std::uint64_t star = rank_tree(star_tree(n)).rank;
    const std::uint64_t path = rank_tree(path_tree(n)).rank;
    if (report.min_rank != n || report.min_elements.size() != 1 ||
        report.min_elements[0] != star) {
      fail(out, "grading/minimum", tag + ": minimum is not uniquely the star at rank n");
      return;
    }
    if (report.max_rank != static_cast<std::int64_t>(n) * (n + 1) / 2 ||
        report.max_elements.size() != 1 || report.max_elements[0] != path) {
      fail(out, "grading/maximum", tag + ": maximum is not uniquely the path at rank n(n+1)/2");
      return;
    }
    pass(out, "grading/" + tag,
         rank_sequence_text(report) + ", unimodal=" + (report.is_unimodal ? "true" : "false") +
             " (minimum rank n, not n-1)");
  }
}

void suite_connectivity(const VerifyOptions& options, Checks& out) {
  const BuildOptions build = build_options(options);
  for (int n = 1; n <= options.max_n; ++n) {
    const MoveGraph graph = build_graph(GraphKind::TypeA, n, build);
    const ComponentReport report = connected_components(graph);
    if (report.component_count != 1) {
      fail(out, "connectivity/typeA",
           "n=" + std::to_string(n) + ": " + std::to_string(report.component_count) +
               " components");
      return;
    }
  }
  pass(out, "connectivity/typeA", "G^A connected for n <= " + std::to_string(options.max_n));

  const int word_max = std::min(options.max_n, 5);
  std::uint64_t pairs = 0;
  for (int n = 1; n <= word_max; ++n) {
    const std::vector<YoungTableau> tableaux = all_syt(Partition{{n, n}}, build.caps);
    for (const YoungTableau& from : tableaux) {
      for (const YoungTableau& to : tableaux) {
        ++pairs;
        if (!(apply_word(from, connecting_word(from, to)) == to)) {
          fail(out, "connectivity/word",
               "replay failed from " + to_text(from) + " to " + to_text(to));
          return;
        }
      }
    }
  }
  pass(out, "connectivity/word",
       "connecting_word replay reaches the target for all " + std::to_string(pairs) +
           " pairs with n <= " + std::to_string(word_max));
}

void suite_type_c_components(const VerifyOptions& options, Checks& out) {
  const BuildOptions build = build_options(options);
  for (int n = 1; n <= options.max_n; ++n) {
    const MoveGraph graph = build_graph(GraphKind::TypeC, n, build);
    const ComponentReport report = connected_components(graph);
    const std::string tag = "n=" + std::to_string(n);
    if (n <= 2) {
      if (report.component_count != 1) {
        fail(out, "typeC-components/small",
             tag + ": expected one component, got " + std::to_string(report.component_count));
        return;
      }
      continue;
    }
    if (report.component_count != 2) {
      fail(out, "typeC-components/count",
           tag + ": " + std::to_string(report.component_count) + " components");
      return;
    }
    std::uint64_t symmetric_total = 0;
    for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
      symmetric_total += graph.symmetric[v];
    }
    std::map<bool, std::uint64_t> sizes;
    for (const ComponentInfo& info : report.components) {
      if (!info.all_symmetric && !info.all_asymmetric) {
        fail(out, "typeC-components/purity", tag + ": a component mixes symmetry classes");
        return;
      }
      sizes[info.all_symmetric] = info.size;
    }
    if (sizes[true] != symmetric_total ||
        sizes[false] != graph.vertex_count() - symmetric_total) {
      fail(out, "typeC-components/split", tag + ": component sizes do not match symmetry counts");
      return;
    }
    pass(out, "typeC-components/" + tag,
         "2 components: " + std::to_string(sizes[true]) + " symmetric, " +
             std::to_string(sizes[false]) + " asymmetric");
  }
}

void suite_symmetry(const VerifyOptions& options, Checks& out) {
  for (int n = 1; n <= options.max_n; ++n) {
    TreeStream stream(n);
    while (auto tree = stream.next()) {
      const PlaneTree reflected = mirror(*tree);
      if (!(mirror(reflected) == *tree) || total_distance(reflected) != total_distance(*tree)) {
        fail(out, "symmetry/mirror", "mirror misbehaves on " + to_text(*tree));
        return;
      }
      if (is_symmetric(*tree) != (reflected == *tree)) {
        fail(out, "symmetry/predicate", "is_symmetric mismatch on " + to_text(*tree));
        return;
      }
      if (is_symmetric(*tree)) {
        for (int i = 1; i <= n; ++i) {
          if (!is_symmetric(s_i_c(*tree, i))) {
            fail(out, "symmetry/preservation",
                 "s_" + std::to_string(i) + "^C broke symmetry of " + to_text(*tree));
            return;
          }
        }
      }
    }
  }
  pass(out, "symmetry/preservation",
       "mirror is a d-preserving involution and s_i^C preserves symmetry for n <= " +
           std::to_string(options.max_n));

  for (int n = 2; n <= options.max_n; ++n) {
    for (const YoungTableau& tableau : all_syt(Partition{{n, n}}, build_options(options).caps)) {
      for (int i = 1; i < n; ++i) {
        const int partner = 2 * n - i;
        if (!(s_i_tableau(s_i_tableau(tableau, i), partner) ==
              s_i_tableau(s_i_tableau(tableau, partner), i))) {
          fail(out, "symmetry/commutation",
               "s_" + std::to_string(i) + " and s_" + std::to_string(partner) +
                   " do not commute on " + to_text(tableau));
          return;
        }
      }
    }
  }
  pass(out, "symmetry/commutation",
       "s_i and s_{2n-i} commute on every (n,n) tableau for n <= " + std::to_string(options.max_n));
}

void suite_containment(const VerifyOptions& options, Checks& out) {
  const BuildOptions build = build_options(options);
  for (int n = 2; n <= options.max_n; ++n) {
    const MoveGraph type_a = build_graph(GraphKind::TypeA, n, build);
    const MoveGraph all = build_graph(GraphKind::AllLocalMoves, n, build);
    const std::string tag = "n=" + std::to_string(n);

    std::set<std::pair<std::uint32_t, std::uint32_t>> a_edges, all_edges;
    for (std::uint32_t u = 0; u < type_a.vertex_count(); ++u) {
      for (const GraphEdge& edge : type_a.neighbors(u)) {
        if (edge.to > u) a_edges.emplace(u, edge.to);
      }
    }
    for (std::uint32_t u = 0; u < all.vertex_count(); ++u) {
      for (const GraphEdge& edge : all.neighbors(u)) {
        if (edge.to > u) all_edges.emplace(u, edge.to);
      }
    }
    if (!std::includes(all_edges.begin(), all_edges.end(), a_edges.begin(), a_edges.end())) {
      fail(out, "containment/subset", tag + ": a type A edge is not a local move edge");
      return;
    }
    if (n >= 3 && all_edges.size() <= a_edges.size()) {
      fail(out, "containment/strict-edges",
           tag + ": expected strictly more local move edges than s_i edges");
      return;
    }
    const CoverageReport coverage = si_move_coverage(n, build.caps);
    if (!coverage.strict_label_gap) {
      fail(out, "containment/strict-moves",
           tag + ": no label slot carries a move that fails to realize its s_i");
      return;
    }
    pass(out, "containment/" + tag,
         std::to_string(a_edges.size()) + " s_i edges vs " + std::to_string(all_edges.size()) +
             " local move edges; label slots " + std::to_string(coverage.si_label_moves) + "/" +
             std::to_string(coverage.label_moves) + " realize an s_i");
  }
}

void suite_type_c_deltas(const VerifyOptions& options, Checks& out) {
  const BuildOptions build = build_options(options);
  std::map<std::pair<bool, std::int32_t>, std::uint64_t> histogram;  // (i == n, |delta|)
  for (int n = 1; n <= options.max_n; ++n) {
    const MoveGraph graph = build_graph(GraphKind::TypeC, n, build);
    for (std::uint32_t u = 0; u < graph.vertex_count(); ++u) {
      for (const GraphEdge& edge : graph.neighbors(u)) {
        const bool last = edge.gen.index == n;
        const std::int32_t magnitude = edge.delta < 0 ? -edge.delta : edge.delta;
        if (edge.to > u) ++histogram[{last, magnitude}];
        if (last && magnitude != 1) {
          fail(out, "typeC-deltas/last",
               "n=" + std::to_string(n) + ": s_n^C edge with delta " +
                   std::to_string(edge.delta));
          return;
        }
        if (!last && magnitude > 2) {
          fail(out, "typeC-deltas/pairs",
               "n=" + std::to_string(n) + ": s_" + std::to_string(edge.gen.index) +
                   "^C edge with delta " + std::to_string(edge.delta));
          return;
        }
      }
    }
  }
  std::ostringstream detail;
  detail << "measured |delta| counts:";
  for (const auto& [key, count] : histogram) {
    detail << ' ' << (key.first ? "s_n" : "s_i<n") << ":|" << key.second << "|x" << count;
  }
  detail << " (i<n composites reach 0, 1 and 2; 1 when exactly one factor moves)";
  pass(out, "typeC-deltas/measured", detail.str());
}

void suite_non_group_action(const VerifyOptions&, Checks& out) {
  const YoungTableau base = make_tableau(Partition{{2, 2}}, {{1, 2}, {3, 4}});
  const YoungTableau opposite = make_tableau(Partition{{2, 2}}, {{1, 3}, {2, 4}});
  if (!(apply_word(base, {2, 3, 2}) == base)) {
    fail(out, "non-group-action/identity", "s2 s3 s2 does not fix 1,2/3,4");
    return;
  }
  if (!(apply_word(base, {3, 2, 3}) == opposite)) {
    fail(out, "non-group-action/opposite", "s3 s2 s3 does not map 1,2/3,4 to 1,3/2,4");
    return;
  }
  pass(out, "non-group-action/witness",
       "s2s3s2 fixes 1,2/3,4 while s3s2s3 yields 1,3/2,4");
}

void suite_enumeration(const VerifyOptions& options, Checks& out) {
  // Catalan convolution as the independent counting oracle.
  std::vector<std::uint64_t> convolution{1};
  for (int n = 1; n <= std::max(options.max_n, 10); ++n) {
    std::uint64_t next = 0;
    for (int k = 0; k < n; ++k) next += convolution[k] * convolution[n - 1 - k];
    convolution.push_back(next);
    if (count_trees(n) != next) {
      fail(out, "enumeration/catalan",
           "count_trees(" + std::to_string(n) + ") != convolution value " + std::to_string(next));
      return;
    }
  }
  pass(out, "enumeration/catalan",
       "count_trees matches the convolution recurrence up to n=" +
           std::to_string(std::max(options.max_n, 10)));

  for (int n = 1; n <= options.max_n; ++n) {
    std::set<std::string> seen;
    TreeStream stream(n);
    std::uint64_t expected_rank = 0;
    while (auto tree = stream.next()) {
      const TreeIndex index = rank_tree(*tree);
      if (index.rank != expected_rank || !(unrank_tree(index) == *tree)) {
        fail(out, "enumeration/rank", "rank/unrank mismatch at n=" + std::to_string(n));
        return;
      }
      ++expected_rank;
      seen.insert(to_text(*tree));
    }
    if (seen.size() != count_trees(n)) {
      fail(out, "enumeration/distinct", "duplicates in enumerate_trees(" + std::to_string(n) + ")");
      return;
    }
  }
  pass(out, "enumeration/trees",
       "streams are duplicate free and rank order for n <= " + std::to_string(options.max_n));

  for (int total = 1; total <= options.max_n + 1; ++total) {
    for (const Partition& shape : partitions_of(total)) {
      if (all_syt(shape, build_options(options).caps).size() != hook_length_count(shape)) {
        fail(out, "enumeration/hook", "SYT count mismatch for a shape of " + std::to_string(total));
        return;
      }
    }
  }
  pass(out, "enumeration/hook",
       "SYT streams match the hook length formula for N <= " + std::to_string(options.max_n + 1));
}

const std::vector<std::pair<std::string, void (*)(const VerifyOptions&, Checks&)>>& suites() {
  static const std::vector<std::pair<std::string, void (*)(const VerifyOptions&, Checks&)>> table{
      {"involution", suite_involution},
      {"bijection", suite_bijection},
      {"classification", suite_classification},
      {"conjugation", suite_conjugation},
      {"rank-step", suite_rank_step},
      {"descendants", suite_descendants},
      {"grading", suite_grading},
      {"connectivity", suite_connectivity},
      {"typeC-components", suite_type_c_components},
      {"symmetry", suite_symmetry},
      {"containment", suite_containment},
      {"typeC-deltas", suite_type_c_deltas},
      {"non-group-action", suite_non_group_action},
      {"enumeration", suite_enumeration},
  };
  return table;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suites()) names.push_back(name);
  names.push_back("all");
  return names;
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& options) {
  Checks results;
  if (suite == "all") {
    for (const auto& [name, fn] : suites()) fn(options, results);
    return results;
  }
  for (const auto& [name, fn] : suites()) {
    if (name == suite) {
      fn(options, results);
      return results;
    }
  }
  throw Error(ErrorCode::ParseError, "unknown verify suite \"" + suite + "\"");
}

}  // namespace catmoves
