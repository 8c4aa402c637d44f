#include "catmoves/moves.hpp"

#include <algorithm>
#include <cassert>

namespace catmoves {

namespace {

// owner[label] = index of the pair containing label
std::vector<int> owner_index(const PlaneTree& tree) {
  std::vector<int> owner(2 * tree.n + 1, -1);
  for (int e = 0; e < tree.n; ++e) {
    owner[tree.pairs[e].first] = e;
    owner[tree.pairs[e].second] = e;
  }
  return owner;
}

std::string pair_text(const Pair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

PlaneTree rewrite(const PlaneTree& tree, const std::array<Pair, 2>& removed,
                  const std::array<Pair, 2>& added) {
  std::vector<Pair> pairs;
  pairs.reserve(tree.pairs.size());
  for (const Pair& p : tree.pairs) {
    if (p != removed[0] && p != removed[1]) pairs.push_back(p);
  }
  pairs.push_back(added[0]);
  pairs.push_back(added[1]);
  return make_tree(tree.n, std::move(pairs));
}

}  // namespace

MoveKind classify_pair(const PlaneTree& tree, int i) {
  if (i < 1 || i >= 2 * tree.n) {
    throw Error(ErrorCode::LabelOutOfRange,
                "label " + std::to_string(i) + " not in 1.." + std::to_string(2 * tree.n - 1));
  }
  const std::vector<int> owner = owner_index(tree);
  const Pair& low = tree.pairs[owner[i]];
  const Pair& high = tree.pairs[owner[i + 1]];
  const bool i_opens = low.first == i;
  const bool next_opens = high.first == i + 1;

  if (i_opens && next_opens) return MoveKind{MoveKind::SAME_ROW_TOP, std::nullopt};
  if (!i_opens && !next_opens) return MoveKind{MoveKind::SAME_ROW_BOTTOM, std::nullopt};
  if (!i_opens && next_opens) {
    // i closes (j,i), i+1 opens the next sibling (i+1,j')
    return MoveKind{MoveKind::PEAK, Pair{low.first, high.second}};
  }

  // i opens and i+1 closes; in a noncrossing matching they must be mates.
  assert(low == high && low == Pair(i, i + 1));
  const RootedTreeView view = tree_view(tree);
  const int parent = view.parent[owner[i]];
  if (parent == RootedTreeView::kRoot) {
    return MoveKind{MoveKind::SAME_COLUMN_ROOT_LEAF, std::nullopt};
  }
  return MoveKind{MoveKind::LEAF, tree.pairs[parent]};
}

std::pair<LocalMoveRecord, PlaneTree> local_move(const PlaneTree& tree, Pair e1, Pair e2) {
  const auto in_tree = [&](const Pair& p) {
    return std::binary_search(tree.pairs.begin(), tree.pairs.end(), p);
  };
  if (!in_tree(e1) || !in_tree(e2)) {
    throw Error(ErrorCode::NotEdgesOfTree,
                pair_text(e1) + " and " + pair_text(e2) + " must both be edges of the tree");
  }
  if (e2 < e1) std::swap(e1, e2);
  if (e1 == e2) {
    throw Error(ErrorCode::NotAdjacent, "need two distinct edges");
  }

  const RootedTreeView view = tree_view(tree);
  const int a = static_cast<int>(std::lower_bound(tree.pairs.begin(), tree.pairs.end(), e1) -
                                 tree.pairs.begin());
  const int b = static_cast<int>(std::lower_bound(tree.pairs.begin(), tree.pairs.end(), e2) -
                                 tree.pairs.begin());

  LocalMoveRecord record;
  record.removed = {e1, e2};
  if (e2.second < e1.second) {
    // e2 nested inside e1: adjacent only when e1 is its minimal enclosing pair
    if (view.parent[b] != a) {
      throw Error(ErrorCode::NotAdjacent,
                  pair_text(e1) + " and " + pair_text(e2) + " do not share a vertex");
    }
    record.move_type = 1;
    record.added = {Pair{e1.first, e2.first}, Pair{e2.second, e1.second}};
  } else {
    // disjoint intervals: adjacent only as children of a common vertex
    if (view.parent[a] != view.parent[b]) {
      throw Error(ErrorCode::NotAdjacent,
                  pair_text(e1) + " and " + pair_text(e2) + " do not share a vertex");
    }
    record.move_type = 2;
    record.added = {Pair{e1.first, e2.second}, Pair{e1.second, e2.first}};
  }
  std::sort(record.added.begin(), record.added.end());

  PlaneTree result = rewrite(tree, record.removed, record.added);
  record.rank_delta = total_distance(result) - total_distance(tree);
  return {record, std::move(result)};
}

std::vector<LocalMoveRecord> enumerate_local_moves(const PlaneTree& tree) {
  const RootedTreeView view = tree_view(tree);
  std::vector<LocalMoveRecord> records;
  for (int e = 0; e < tree.n; ++e) {
    if (view.parent[e] != RootedTreeView::kRoot) {
      records.push_back(local_move(tree, tree.pairs[view.parent[e]], tree.pairs[e]).first);
    }
  }
  for (int v = RootedTreeView::kRoot; v < tree.n; ++v) {
    const std::vector<int>& kids = view.children_of(v);
    for (size_t x = 0; x < kids.size(); ++x) {
      for (size_t y = x + 1; y < kids.size(); ++y) {
        records.push_back(local_move(tree, tree.pairs[kids[x]], tree.pairs[kids[y]]).first);
      }
    }
  }
  std::sort(records.begin(), records.end(), [](const LocalMoveRecord& lhs, const LocalMoveRecord& rhs) {
    return lhs.removed < rhs.removed;
  });
  return records;
}

PlaneTree apply_move(const PlaneTree& tree, const LocalMoveRecord& record) {
  const auto in_tree = [&](const Pair& p) {
    return std::binary_search(tree.pairs.begin(), tree.pairs.end(), p);
  };
  if (!in_tree(record.removed[0]) || !in_tree(record.removed[1])) {
    throw Error(ErrorCode::NotEdgesOfTree, "record does not apply to this tree");
  }
  return rewrite(tree, record.removed, record.added);
}

std::optional<int> is_si_local_move(const PlaneTree& tree, const LocalMoveRecord& record) {
  const PlaneTree result = apply_move(tree, record);
  int labels[4] = {record.removed[0].first, record.removed[0].second,
                   record.removed[1].first, record.removed[1].second};
  std::sort(std::begin(labels), std::end(labels));
  for (int k = 0; k < 3; ++k) {
    const int i = labels[k];
    if (labels[k + 1] != i + 1) continue;
    const MoveKind kind = classify_pair(tree, i);
    if (kind.tag != MoveKind::LEAF && kind.tag != MoveKind::PEAK) continue;
    if (s_i_tree(tree, i) == result) return i;
  }
  return std::nullopt;
}

YoungTableau s_i_tableau(const YoungTableau& tableau, int i) {
  const int total = tableau.size();
  if (i < 1 || i >= total) {
    throw Error(ErrorCode::LabelOutOfRange,
                "label " + std::to_string(i) + " not in 1.." + std::to_string(total - 1));
  }
  const std::vector<Cell> cells = cell_index(tableau);
  const Cell lo = cells[i];
  const Cell hi = cells[i + 1];
  if (lo.row == hi.row || lo.col == hi.col) return tableau;

  YoungTableau swapped = tableau;
  swapped.rows[lo.row][lo.col] = i + 1;
  swapped.rows[hi.row][hi.col] = i;
  return swapped;
}

PlaneTree s_i_tree(const PlaneTree& tree, int i) {
  const MoveKind kind = classify_pair(tree, i);
  if (kind.tag == MoveKind::LEAF) {
    const auto [j, jp] = *kind.partner;
    return rewrite(tree, {Pair{j, jp}, Pair{i, i + 1}}, {Pair{j, i}, Pair{i + 1, jp}});
  }
  if (kind.tag == MoveKind::PEAK) {
    const auto [j, jp] = *kind.partner;
    return rewrite(tree, {Pair{j, i}, Pair{i + 1, jp}}, {Pair{j, jp}, Pair{i, i + 1}});
  }
  return tree;
}

PlaneTree s_i_c(const PlaneTree& tree, int i) {
  if (i < 1 || i > tree.n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "type C index " + std::to_string(i) + " not in 1.." + std::to_string(tree.n));
  }
  if (i == tree.n) return s_i_tree(tree, i);
  return s_i_tree(s_i_tree(tree, i), 2 * tree.n - i);
}

YoungTableau apply_word(const YoungTableau& tableau, const std::vector<int>& word) {
  YoungTableau current = tableau;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    current = s_i_tableau(current, *it);
  }
  return current;
}

}  // namespace catmoves
