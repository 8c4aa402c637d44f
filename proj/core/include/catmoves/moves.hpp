#ifndef CATMOVES_MOVES_HPP
#define CATMOVES_MOVES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "catmoves/plane_tree.hpp"
#include "catmoves/young_tableau.hpp"

namespace catmoves {

/// Relative configuration of the half-edges i and i+1 inside a tree.
/// The tags mirror the row/column relation of i, i+1 in phi(T):
///   SAME_ROW_TOP        both openers
///   SAME_ROW_BOTTOM     both closers
///   SAME_COLUMN_ROOT_LEAF  (i,i+1) is a pair with no enclosing pair
///   LEAF                (i,i+1) is a pair whose minimal enclosing pair is (j,j')
///   PEAK                i closes (j,i) and i+1 opens a sibling (i+1,j')
struct MoveKind {
  enum Tag { SAME_ROW_TOP, SAME_ROW_BOTTOM, SAME_COLUMN_ROOT_LEAF, LEAF, PEAK };

  Tag tag = SAME_ROW_TOP;
  std::optional<Pair> partner;  // (j, j') with j < i < i+1 < j'; LEAF and PEAK only

  bool operator==(const MoveKind&) const = default;
};

MoveKind classify_pair(const PlaneTree& tree, int i);

/// One local move: two pairs out, two pairs in, over the same four labels.
/// Type 1 rewrites a nested pair to a sequential one and lowers the tree;
/// type 2 is the inverse. rank_delta is the measured total_distance change:
/// -1/+1 whenever the interior labels are consecutive (every s_i move), and
/// -(1+2m)/+(1+2m) in general, m counting the edges passed over.
struct LocalMoveRecord {
  std::array<Pair, 2> removed;
  std::array<Pair, 2> added;
  int move_type = 1;  // 1 or 2
  std::int64_t rank_delta = 0;

  bool operator==(const LocalMoveRecord&) const = default;
};

/// Applies the move defined by the two edges, which must belong to the tree
/// and share a vertex (parent and child, or siblings at a common vertex).
/// Throws NotEdgesOfTree or NotAdjacent.
std::pair<LocalMoveRecord, PlaneTree> local_move(const PlaneTree& tree, Pair e1, Pair e2);

/// Every local move of the tree: one record per unordered adjacent pair of
/// edges, ordered by the labels involved.
std::vector<LocalMoveRecord> enumerate_local_moves(const PlaneTree& tree);

PlaneTree apply_move(const PlaneTree& tree, const LocalMoveRecord& record);

/// The label i such that the record realizes s_i on the tree, if any.
std::optional<int> is_si_local_move(const PlaneTree& tree, const LocalMoveRecord& record);

/// Swaps i and i+1 when they sit in different rows and different columns;
/// identity otherwise. An involution for every i.
YoungTableau s_i_tableau(const YoungTableau& tableau, int i);

/// Tree-side s_i: the LEAF configuration {(j,j'),(i,i+1)} becomes
/// {(j,i),(i+1,j')} and the PEAK configuration goes back; all other
/// configurations fix the tree. Equals phi_inverse(s_i_tableau(phi(T), i)).
PlaneTree s_i_tree(const PlaneTree& tree, int i);

/// Type C generator: s_i followed by s_{2n-i} for i < n (the two touch
/// disjoint labels and commute), s_n alone for i = n. An involution.
PlaneTree s_i_c(const PlaneTree& tree, int i);

/// Right-to-left composition: apply_word(Y, [a,b,c]) = s_a(s_b(s_c(Y))).
YoungTableau apply_word(const YoungTableau& tableau, const std::vector<int>& word);

}  // namespace catmoves

#endif  // CATMOVES_MOVES_HPP
