#ifndef CATMOVES_ENUMERATION_HPP
#define CATMOVES_ENUMERATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catmoves/errors.hpp"
#include "catmoves/plane_tree.hpp"
#include "catmoves/young_tableau.hpp"

namespace catmoves {

/// Soft limits for exhaustive generation. Kept small enough that default
/// runs finish in seconds; CATMOVES_MAX_N raises both.
struct Caps {
  int max_tree_n = 16;
  int max_syt_n = 20;

  /// Default caps, overridden by the CATMOVES_MAX_N environment variable
  /// when it is set to a positive integer.
  static Caps from_env();
};

/// n-th Catalan number, exact. Throws SizeExceedsCap past the width of
/// 64-bit arithmetic (n > 36).
std::uint64_t count_trees(int n);

/// Identifier of a tree inside the fixed enumeration order for its n:
/// ballot words ordered lexicographically with '(' < ')'.
struct TreeIndex {
  int n = 0;
  std::uint64_t rank = 0;

  bool operator==(const TreeIndex&) const = default;
};

TreeIndex rank_tree(const PlaneTree& tree);
PlaneTree unrank_tree(const TreeIndex& index);

/// Restartable stream over all trees with n edges, in rank order.
class TreeStream {
 public:
  explicit TreeStream(int n);

  std::optional<PlaneTree> next();
  void reset() { next_rank_ = 0; }
  std::uint64_t size() const { return count_; }

 private:
  int n_;
  std::uint64_t count_;
  std::uint64_t next_rank_ = 0;
};

/// All trees with n edges, materialized in rank order.
std::vector<PlaneTree> all_trees(int n);

/// Number of standard Young tableaux of the shape, by the hook length
/// formula. Exact for every shape within the SYT cap.
std::uint64_t hook_length_count(const Partition& shape);

/// Restartable stream over all SYT of a shape, ordered lexicographically by
/// row-reading word. Throws ShapeTooLarge when the shape exceeds the cap.
class SytStream {
 public:
  SytStream(Partition shape, const Caps& caps = Caps{});

  std::optional<YoungTableau> next();
  void reset() { cursor_ = 0; }
  std::uint64_t size() const { return tableaux_.size(); }

 private:
  Partition shape_;
  std::vector<std::vector<std::vector<int>>> tableaux_;
  size_t cursor_ = 0;
};

std::vector<YoungTableau> all_syt(const Partition& shape, const Caps& caps = Caps{});

/// All partitions of total, largest part first within each, in lexicographic
/// order. Support plumbing for suites that sweep every shape.
std::vector<Partition> partitions_of(int total);

}  // namespace catmoves

#endif  // CATMOVES_ENUMERATION_HPP
