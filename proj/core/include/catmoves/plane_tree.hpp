#ifndef CATMOVES_PLANE_TREE_HPP
#define CATMOVES_PLANE_TREE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "catmoves/errors.hpp"

namespace catmoves {

using Pair = std::pair<int, int>;

/// A plane tree with n edges, stored as the noncrossing perfect matching of
/// {1..2n} given by its half-edge labels. An edge whose left half-edge is i
/// and whose right half-edge is j appears as the pair (i, j) with i < j.
/// Pairs are kept sorted by opener; that order is the canonical form, so
/// equality and hashing are plain container comparisons.
struct PlaneTree {
  int n = 0;
  std::vector<Pair> pairs;

  bool operator==(const PlaneTree&) const = default;
};

/// Validating constructor. Accepts pairs in any order and canonicalizes.
/// Throws Error with code ReversedPair, LabelOutOfRange, DuplicateLabel or
/// CrossingPair (naming the two offending pairs).
PlaneTree make_tree(int n, std::vector<Pair> pairs);

/// Rooted view derived from the nesting structure of the matching.
/// Edges are indexed by their position in PlaneTree::pairs.
struct RootedTreeView {
  static constexpr int kRoot = -1;

  std::vector<int> parent;                // edge -> parent edge, or kRoot
  std::vector<std::vector<int>> children; // slot 0 is the root, slot e+1 is edge e
  std::vector<int> depth;                 // depth of the edge's lower vertex; root children are 1

  const std::vector<int>& children_of(int edge) const { return children[edge + 1]; }
};

RootedTreeView tree_view(const PlaneTree& tree);

/// Sum over non-root vertices of their distance to the root.
std::int64_t total_distance(const PlaneTree& tree);

/// Sum over all vertices of their number of proper descendants. Computed
/// from interval widths, independently of the depth sums in total_distance.
std::int64_t total_descendants(const PlaneTree& tree);

/// Reflection (i, j) -> (2n - j + 1, 2n - i + 1). An involution.
PlaneTree mirror(const PlaneTree& tree);

/// True iff mirror(tree) == tree.
bool is_symmetric(const PlaneTree& tree);

/// The tree with all n edges at the root: {(1,2), (3,4), ..., (2n-1,2n)}.
PlaneTree star_tree(int n);

/// The chain {(1,2n), (2,2n-1), ..., (n,n+1)}.
PlaneTree path_tree(int n);

/// Canonical text "n;(a1,b1)(a2,b2)..." with pairs in canonical order.
std::string to_text(const PlaneTree& tree);

/// Parses the canonical encoding. Rejects non-canonical pair order with
/// ParseError; malformed pairs surface the make_tree validation errors.
PlaneTree parse_tree(const std::string& text);

}  // namespace catmoves

#endif  // CATMOVES_PLANE_TREE_HPP
