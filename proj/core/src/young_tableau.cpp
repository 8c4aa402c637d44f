#include "catmoves/young_tableau.hpp"

#include <algorithm>

namespace catmoves {

YoungTableau make_tableau(Partition shape, std::vector<std::vector<int>> rows) {
  if (shape.parts.empty()) {
    throw Error(ErrorCode::BadShape, "shape has no parts");
  }
  for (size_t r = 0; r < shape.parts.size(); ++r) {
    if (shape.parts[r] < 1) {
      throw Error(ErrorCode::BadShape, "part " + std::to_string(r) + " is not positive");
    }
    if (r > 0 && shape.parts[r] > shape.parts[r - 1]) {
      throw Error(ErrorCode::BadShape, "parts are not weakly decreasing");
    }
  }
  if (rows.size() != shape.parts.size()) {
    throw Error(ErrorCode::BadShape, "row count does not match shape");
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != shape.parts[r]) {
      throw Error(ErrorCode::BadShape, "row " + std::to_string(r) + " length does not match shape");
    }
  }

  const int total = shape.total();
  std::vector<bool> seen(total + 1, false);
  for (const auto& row : rows) {
    for (int value : row) {
      if (value < 1 || value > total) {
        throw Error(ErrorCode::LabelOutOfRange,
                    "entry " + std::to_string(value) + " outside 1.." + std::to_string(total));
      }
      if (seen[value]) {
        throw Error(ErrorCode::DuplicateEntry, "entry " + std::to_string(value) + " appears twice");
      }
      seen[value] = true;
    }
  }

  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 1; c < rows[r].size(); ++c) {
      if (rows[r][c - 1] >= rows[r][c]) {
        throw Error(ErrorCode::RowNotIncreasing, "row " + std::to_string(r) + " is not increasing");
      }
    }
  }
  for (size_t r = 1; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r - 1][c] >= rows[r][c]) {
        throw Error(ErrorCode::ColumnNotIncreasing,
                    "column " + std::to_string(c) + " is not increasing");
      }
    }
  }

  YoungTableau tableau;
  tableau.shape = std::move(shape);
  tableau.rows = std::move(rows);
  return tableau;
}

std::vector<Cell> cell_index(const YoungTableau& tableau) {
  std::vector<Cell> cells(tableau.size() + 1);
  for (size_t r = 0; r < tableau.rows.size(); ++r) {
    for (size_t c = 0; c < tableau.rows[r].size(); ++c) {
      cells[tableau.rows[r][c]] = Cell{static_cast<int>(r), static_cast<int>(c)};
    }
  }
  return cells;
}

std::string to_text(const YoungTableau& tableau) {
  std::string out;
  for (size_t r = 0; r < tableau.rows.size(); ++r) {
    if (r > 0) out += '/';
    for (size_t c = 0; c < tableau.rows[r].size(); ++c) {
      if (c > 0) out += ',';
      out += std::to_string(tableau.rows[r][c]);
    }
  }
  return out;
}

YoungTableau parse_tableau(const std::string& text) {
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, why + " in \"" + text + "\"");
  };
  if (text.empty()) fail("empty tableau");

  std::vector<std::vector<int>> rows(1);
  std::string token;
  const auto flush = [&]() {
    if (token.empty()) fail("missing entry");
    try {
      rows.back().push_back(std::stoi(token));
    } catch (const std::exception&) {
      fail("bad entry \"" + token + "\"");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch == '/') {
      flush();
      rows.emplace_back();
    } else if (ch >= '0' && ch <= '9') {
      token += ch;
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }
  flush();

  Partition shape;
  for (const auto& row : rows) shape.parts.push_back(static_cast<int>(row.size()));
  return make_tableau(std::move(shape), std::move(rows));
}

YoungTableau phi(const PlaneTree& tree) {
  std::vector<int> openers, closers;
  openers.reserve(tree.n);
  closers.reserve(tree.n);
  for (const Pair& p : tree.pairs) {
    openers.push_back(p.first);
    closers.push_back(p.second);
  }
  std::sort(closers.begin(), closers.end());  // openers already sorted
  return make_tableau(Partition{{tree.n, tree.n}}, {std::move(openers), std::move(closers)});
}

PlaneTree phi_inverse(const YoungTableau& tableau) {
  if (tableau.rows.size() != 2 || tableau.shape.parts[0] != tableau.shape.parts[1]) {
    throw Error(ErrorCode::ShapeNotTwoRow, "phi_inverse needs shape (n,n), got " +
                                               to_text(tableau));
  }
  const int n = tableau.shape.parts[0];
  std::vector<bool> is_opener(2 * n + 1, false);
  for (int value : tableau.rows[0]) is_opener[value] = true;

  std::vector<Pair> pairs;
  pairs.reserve(n);
  std::vector<int> stack;
  for (int label = 1; label <= 2 * n; ++label) {
    if (is_opener[label]) {
      stack.push_back(label);
    } else {
      pairs.emplace_back(stack.back(), label);
      stack.pop_back();
    }
  }
  return make_tree(n, std::move(pairs));
}

}  // namespace catmoves
