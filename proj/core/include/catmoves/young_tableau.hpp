#ifndef CATMOVES_YOUNG_TABLEAU_HPP
#define CATMOVES_YOUNG_TABLEAU_HPP

#include <string>
#include <vector>

#include "catmoves/errors.hpp"
#include "catmoves/plane_tree.hpp"

namespace catmoves {

struct Partition {
  std::vector<int> parts;

  int total() const {
    int sum = 0;
    for (int p : parts) sum += p;
    return sum;
  }
  bool operator==(const Partition&) const = default;
};

/// A standard Young tableau: rows of shape `shape` filled with 1..N so that
/// rows increase left-to-right and columns increase top-to-bottom.
struct YoungTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  int size() const { return shape.total(); }
  bool operator==(const YoungTableau&) const = default;
};

/// Cell address of a value inside a tableau.
struct Cell {
  int row = 0;
  int col = 0;
};

/// Validating constructor; throws BadShape, DuplicateEntry, LabelOutOfRange,
/// RowNotIncreasing or ColumnNotIncreasing. Rows are checked before columns.
YoungTableau make_tableau(Partition shape, std::vector<std::vector<int>> rows);

/// Position of each value 1..N; index 0 unused.
std::vector<Cell> cell_index(const YoungTableau& tableau);

/// Canonical text: rows joined by '/', entries comma separated ("1,3/2,4").
std::string to_text(const YoungTableau& tableau);

YoungTableau parse_tableau(const std::string& text);

/// The openers of the tree become the top row, the closers the bottom row.
/// Always a valid tableau of shape (n, n).
YoungTableau phi(const PlaneTree& tree);

/// Inverse of phi: match each bottom-row entry to the nearest unmatched
/// smaller top-row entry. Requires shape exactly (n, n); throws ShapeNotTwoRow.
PlaneTree phi_inverse(const YoungTableau& tableau);

}  // namespace catmoves

#endif  // CATMOVES_YOUNG_TABLEAU_HPP
